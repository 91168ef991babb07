#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derivkernel/rational.hpp"
#include "derivkernel/varset.hpp"

namespace dk {

// Dense per-varset exponent vector; entry i is the exponent of variable i.
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no stored coefficient is zero, every exponent vector has
// length |varset|. Two polynomials over the same varset are equal iff their
// term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(VarSetPtr vars);

    static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarSetPtr vars, Rational c);
    static Polynomial variable(VarSetPtr vars, std::size_t index);
    static Polynomial monomial(VarSetPtr vars, Monomial m, Rational c);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Max total degree over all terms; 0 for the zero polynomial.
    unsigned total_degree() const;

    // Constant value; throws DomainError unless is_constant().
    Rational constant_value() const;

    // Adds c * m in place, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact value under a full assignment of the occurring variables.
    // Throws DomainError when a variable occurring in the polynomial is
    // missing from the assignment.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    // Partial derivative with respect to variable `index`.
    Polynomial derivative(std::size_t index) const;

    // Substitutes images[i] (over `target`) for variable i.
    Polynomial substitute(const VarSetPtr& target, const std::vector<Polynomial>& images) const;

    // Re-expresses the polynomial over a superset varset, matching by name.
    Polynomial lift(const VarSetPtr& target) const;

    // Collects terms by the exponent of variable `index`: result[e] is the
    // coefficient polynomial (over the same varset, exponent of `index`
    // zeroed) of `var^e`.
    std::map<unsigned, Polynomial> collect(std::size_t index) const;

    // Weight of the polynomial under per-variable weights w: returns the
    // common value of sum_i m_i * w_i when all terms agree (isobaric),
    // nullopt otherwise and for the zero polynomial.
    std::optional<long> weight(const std::vector<long>& w) const;

    // Parser-compatible canonical text; "0" for the zero polynomial.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void check_same_vars(const Polynomial& o) const;

    VarSetPtr vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace dk
