#pragma once

#include <string>
#include <vector>

#include "derivkernel/derivation.hpp"
#include "derivkernel/polynomial.hpp"

namespace dk {

// Coefficient space of the hyperelliptic family
//   y^2 = sum_{i=0..d} C(d,i) * a_i * x^(d-i),
// variables a0..a{d}, weight grading w(a_i) = d - i.
struct HyperCoeffSpace {
    int d;
    VarSetPtr vars;

    static HyperCoeffSpace make(int d);

    long var_weight(std::size_t i) const { return d - static_cast<long>(i); }
    std::vector<long> weights() const;
};

// The down-shifting derivation a_0 -> 0, a_i -> i a_{i-1} induced by
// x-translations (the basic Weitzenboeck derivation).
Derivation weitzenbock(int d);

// The diagonal weight derivation a_i -> (d-i) a_i induced by x-scalings.
Derivation euler_weight(int d);

// Weight sum_i m_i * (d - i) of a monomial over HyperCoeffSpace(d).
long monomial_weight(const Monomial& m, int d);

// Coefficient space of ternary forms of degree d:
//   u = sum_{i+j<=d} d!/(i! j! (d-i-j)!) * a{i}_{j} * x^(d-i-j) y^i z^j,
// variables named a{i}_{j}, ordered by (i, j).
struct TernaryCoeffSpace {
    int d;
    VarSetPtr vars;

    static TernaryCoeffSpace make(int d);

    std::size_t index(int i, int j) const;
    // Recovers (i, j) from a variable index.
    std::pair<int, int> exponents(std::size_t index) const;
    Rational multiplier(int i, int j) const { return trinomial(d, i, j); }

    // The generic form u over `universe`, which must contain this space's
    // variables and x, y, z.
    Polynomial generic_form(const VarSetPtr& universe) const;
};

// A linear vector field P d/dx + Q d/dy + R d/dz with P, Q, R polynomials
// over the fixed varset {x, y, z}.
struct VectorField3 {
    Polynomial px, py, pz;

    static VarSetPtr xyz_vars();
    // Builds c * v * d/dw from variable names, e.g. (-1, "y", "x") = -y d/dx.
    static VectorField3 linear(long c, const std::string& from, const std::string& to);
};

// The unique derivation D on the a{i}_{j} such that D + vf annihilates the
// generic form u: expand vf(u), collect by monomials in x, y, z, divide by
// the trinomial multipliers, negate.
Derivation induce_coefficient_derivation(const VectorField3& vf, const TernaryCoeffSpace& space);

// The nine coefficient derivations induced by the basis vector fields
// -y dx, -z dy, -z dx, -x dy, -y dz, -x dz, -x dx, -y dy, -z dz,
// named D1, D2, D3, DH1, DH2, DH3, E1, E2, E3.
struct Gl3Derivations {
    TernaryCoeffSpace space;
    std::vector<Derivation> all;  // in the order above
    std::vector<VectorField3> fields;

    const Derivation& by_name(const std::string& name) const;
};
Gl3Derivations gl3_derivations(int d);

// How each ternary coefficient maps into a specialized curve family:
// a constant pin or a signed free variable.
struct CoeffEmbedding {
    TernaryCoeffSpace space;
    VarSetPtr free_vars;
    std::vector<VarBinding> bindings;  // indexed like space.vars

    // The embedded coefficient as a polynomial over `target`, which must
    // contain free_vars (used by the substitution oracle).
    Polynomial coefficient(std::size_t ternary_index, const VarSetPtr& target) const;
};

enum class CurveCase {
    GeneralI,            // a_{d,0} != 0, a_{0,0} != 0: {D1, D2, DH1, E1, E2}
    GeneralII,           // a_{d,0} == 0, a_{0,0} != 0: {D2, D3, DH1, E1, E2}
    CPrimeFull,          // C'_d family, full scaling+translation group
    CPrimeTranslations,  // C'_d family normalized, translations only: {D2, D3}
};

CurveCase curve_case_from_name(const std::string& name);  // "i", "ii", "cprime", "cprime-g0"
std::string curve_case_name(CurveCase c);

struct CurveDerivationSet {
    CurveCase curve_case;
    int d;
    VarSetPtr vars;                      // space the derivations act on
    std::vector<Derivation> derivations;
    CoeffEmbedding embedding;            // identity for the general cases
};

// The derivation set of each curve case. The C' cases act on the family
//   m(2,d-2) * a2_{d-2} * y^2 + sum_i m(1,i) * a1_i * x^(d-1-i) * y
//     = a0_0 * x^d + sum_{i>=1} C(d,i) * a0_i * x^(d-i),
// i.e. the ternary coefficients embed as c_{2,d-2} = a2_{d-2},
// c_{1,i} = a1_i, c_{0,i} = -a0_i, everything with i >= 3 or other i = 2
// rows pinned to zero. CPrimeTranslations additionally pins a0_0 = 1 and
// a2_{d-2} = 1. Throws DomainError when a specialization is inconsistent.
CurveDerivationSet curve_derivation_set(int d, CurveCase c);

}  // namespace dk
