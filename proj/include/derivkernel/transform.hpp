#pragma once

#include <string>
#include <variant>
#include <vector>

#include "derivkernel/curves.hpp"
#include "derivkernel/polynomial.hpp"
#include "derivkernel/rational_function.hpp"

namespace dk {

// One coefficient of an affine plane map: a rational constant or a symbolic
// parameter (an ordinary variable of the working varset).
struct MapParam {
    std::variant<Rational, std::string> v;

    static MapParam constant(Rational c) { return {std::move(c)}; }
    static MapParam symbol(std::string name) { return {std::move(name)}; }
    bool symbolic() const { return std::holds_alternative<std::string>(v); }
};

// x -> alpha x + beta y + b,  y -> gamma x + delta y + a.
struct AffineMap2 {
    MapParam alpha, beta, b, gamma, delta, a;

    static AffineMap2 identity();
    // x -> alpha x + b, y -> y.
    static AffineMap2 x_affine(MapParam alpha, MapParam b);
    static AffineMap2 translation_x(MapParam b) { return x_affine(MapParam::constant(1), std::move(b)); }
    static AffineMap2 scaling_x(MapParam alpha) { return x_affine(std::move(alpha), MapParam::constant(0)); }

    bool fixes_y() const;
};

// Transformed coefficients of the hyperelliptic family: substitutes the map
// into y^2 = sum C(d,i) coeffs[i] x^(d-i), expands, collects by powers of x
// and divides the binomial multipliers back out. `coeffs` live over a varset
// that must not contain "x" and must contain every symbolic parameter of the
// map. Throws DomainError when the map does not fix y (shape violation).
std::vector<Polynomial> transform_coeffs_hyper(int d, const std::vector<Polynomial>& coeffs,
                                               const AffineMap2& map);

// Numeric path of the same computation.
std::vector<Rational> transform_coeff_values(int d, const std::vector<Rational>& coeffs,
                                             const Rational& alpha, const Rational& b);

// Transformed coefficients of a ternary form under X -> alpha X + beta Y + b Z,
// Y -> gamma X + delta Y + a Z, Z -> Z. Result is indexed like space.vars.
std::vector<Polynomial> transform_coeffs_ternary(const TernaryCoeffSpace& space,
                                                 const std::vector<Polynomial>& coeffs,
                                                 const AffineMap2& map);

// Composite map: apply `first`, then `second` (substitution order: the body
// of `first` is substituted into the result, so the composite sends
// x -> first(second(x)) as a function of the new coordinates).
AffineMap2 compose(const AffineMap2& first, const AffineMap2& second);

// Varset {a0..ad, alpha, b} of the closed-form transformed coefficients.
VarSetPtr affine_x_vars(int d);

// Closed form for the i-th transformed coefficient under x -> alpha x + b:
//   alpha^(d-i) * sum_{k=0}^{i} C(i,k) b^k a_{i-k},
// over affine_x_vars(d). Agrees with transform_coeffs_hyper symbolically.
Polynomial translation_formula(int d, int i);

enum class GroupFamily {
    Translations,  // x -> x + b
    Scalings,      // x -> alpha x
    AffineX,       // x -> alpha x + b
    CaseI,         // full affine (X, Y) with Z fixed, on the ternary space
    CaseII,        // X -> alpha X + b Z, Y -> gamma X + delta Y + a Z
    CPrime,        // x -> alpha x + a, y -> beta y + b, on the C' family
    CPrimeG0,      // x -> x + a, y -> y + b, on the normalized C' family
};

GroupFamily family_from_name(const std::string& name);
std::string family_name(GroupFamily f);

// Substitutes the symbolically transformed coefficients into phi and tests
// phi(transformed) == phi(original) as a cross-multiplied polynomial identity
// in all variables including the group parameters. phi must live over the
// family's coefficient varset (hyperelliptic a0..ad, the full ternary
// variables, or the C' free variables).
bool check_invariance(const RationalFunction& phi, GroupFamily family, int d);

}  // namespace dk
