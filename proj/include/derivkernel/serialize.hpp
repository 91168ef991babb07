#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "derivkernel/derivation.hpp"
#include "derivkernel/invariants.hpp"
#include "derivkernel/kernelsearch.hpp"
#include "derivkernel/polynomial.hpp"

namespace dk {

using Json = nlohmann::json;

// {"vars": [names], "terms": [{"coeff": "p/q", "exps": {name: int, ...}}]}
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"name": str, "vars": [...], "images": {var: polynomial-text}}
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

// {"d": int, "coeffs": ["p/q", ...]}
Json curve_to_json(const HyperCurve& c);
HyperCurve curve_from_json(const Json& j);

// {"d": int, "j": ["p/q", ...]}
Json moduli_to_json(const ModuliVector& m);
ModuliVector moduli_from_json(const Json& j);

// {"basis": [poly-text], "in_kernel": {name: bool}, "jacobian_rank": int,
//  "bound": int|null}
Json report_to_json(const KernelReport& r);

}  // namespace dk
