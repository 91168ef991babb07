#pragma once

#include <optional>
#include <vector>

#include "derivkernel/curves.hpp"
#include "derivkernel/polynomial.hpp"
#include "derivkernel/rational_function.hpp"

namespace dk {

// The closed-form kernel generators of the down-shifting derivation:
//   z_i = sum_{k=0}^{i-2} (-1)^k C(i,k) a_{i-k} a_1^k a_0^{i-k-1}
//         + (i-1) (-1)^{i+1} a_1^i,           2 <= i <= d,
// isobaric of weight i(d-1), over HyperCoeffSpace(d).
Polynomial z_invariant(int d, int i);

// Generators of the rational invariant field of the scaling+translation
// group: z_i^d / a0^(i(d-1)) for i = 2..d (each of weight zero).
std::vector<RationalFunction> rational_invariant_generators(int d);

// The j-invariant of y^2 + a0 x^3 + 3 a1 x^2 + 3 a2 x + a3 = 0 as a rational
// function of the coefficients: 6912 (a0 a2 - a1^2)^3 over
// a0^2 (4 a1^3 a3 - 6 a3 a0 a1 a2 - 3 a1^2 a2^2 + a3^2 a0^2 + 4 a0 a2^3).
RationalFunction j_invariant_c3();

// A numeric member of the hyperelliptic family; coeffs[i] multiplies
// C(d,i) x^(d-i). Moduli operations require a monic curve (a0 = 1).
struct HyperCurve {
    int d;
    std::vector<Rational> coeffs;  // a0..ad

    static HyperCurve make(int d, std::vector<Rational> coeffs);
    bool is_monic() const { return coeffs.at(0) == Rational(1); }
};

// The translation-classifying values (j_2, ..., j_d) of a monic curve.
struct ModuliVector {
    int d;
    std::vector<Rational> j;  // j_2..j_d

    friend bool operator==(const ModuliVector& a, const ModuliVector& b) = default;
};

// j_i = z_i evaluated at the curve's coefficients. Throws on non-monic input.
ModuliVector moduli_vector(const HyperCurve& c);

// The monic curve with a1 = 0 and a_i = j_i; a section of moduli_vector.
HyperCurve curve_from_moduli(const ModuliVector& m);

struct NormalizedCurve {
    HyperCurve curve;   // a1 = 0
    Rational shift;     // x -> x + shift maps the input onto `curve`
};

// Translates a monic curve so that a1 = 0 (shift = -a1); moduli unchanged.
NormalizedCurve normalize(const HyperCurve& c);

// When the two monic curves are translation-isomorphic, the shift b with
// transform(c1, x -> x + b) == c2; nullopt exactly when moduli differ.
std::optional<Rational> isomorphic(const HyperCurve& c1, const HyperCurve& c2);

}  // namespace dk
