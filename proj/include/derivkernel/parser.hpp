#pragma once

#include <string>

#include "derivkernel/polynomial.hpp"
#include "derivkernel/rational_function.hpp"

namespace dk {

// Grammar (whitespace ignored):
//   expr     := '-'? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-int)?
//   base     := rational | ident | '(' expr ')'
//   rational := int ('/' posint)?
//   ident    := letter (letter|digit|'_')*
// Every identifier must belong to `vars`. Throws ParseError with the byte
// position of the offending token.
Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars);

// Same grammar plus one optional top-level '/' splitting numerator and
// denominator, e.g. "(a0*a2-a1^2)^5 / a0^8". A '/' between two integer
// literals still reads as a rational coefficient.
RationalFunction parse_rational_function(const std::string& text, const VarSetPtr& vars);

}  // namespace dk
