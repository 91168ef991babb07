#include "derivkernel/invariants.hpp"

#include <map>

#include "derivkernel/errors.hpp"
#include "derivkernel/transform.hpp"

namespace dk {

Polynomial z_invariant(int d, int i) {
    if (i < 2 || i > d) throw DomainError("z_i needs 2 <= i <= d");
    HyperCoeffSpace space = HyperCoeffSpace::make(d);
    auto var = [&](int k) { return Polynomial::variable(space.vars, k); };
    Polynomial z(space.vars);
    for (int k = 0; k <= i - 2; ++k) {
        Rational sign((k % 2 == 0) ? 1 : -1);
        z += var(i - k) * var(1).pow(static_cast<unsigned>(k)) *
             var(0).pow(static_cast<unsigned>(i - k - 1)) * (binomial(i, k) * sign);
    }
    Rational tail_sign(((i + 1) % 2 == 0) ? 1 : -1);
    z += var(1).pow(static_cast<unsigned>(i)) * (Rational(i - 1) * tail_sign);
    return z;
}

std::vector<RationalFunction> rational_invariant_generators(int d) {
    if (d < 2) throw DomainError("need d >= 2");
    HyperCoeffSpace space = HyperCoeffSpace::make(d);
    Polynomial a0 = Polynomial::variable(space.vars, 0);
    std::vector<RationalFunction> gens;
    gens.reserve(d - 1);
    for (int i = 2; i <= d; ++i)
        gens.emplace_back(z_invariant(d, i).pow(static_cast<unsigned>(d)),
                          a0.pow(static_cast<unsigned>(i * (d - 1))));
    return gens;
}

RationalFunction j_invariant_c3() {
    HyperCoeffSpace space = HyperCoeffSpace::make(3);
    auto a = [&](int k) { return Polynomial::variable(space.vars, k); };
    Polynomial z2 = a(0) * a(2) - a(1) * a(1);
    Polynomial quartic = a(1).pow(3) * a(3) * Rational(4) -
                         a(3) * a(0) * a(1) * a(2) * Rational(6) -
                         a(1).pow(2) * a(2).pow(2) * Rational(3) +
                         a(3).pow(2) * a(0).pow(2) + a(0) * a(2).pow(3) * Rational(4);
    return RationalFunction(z2.pow(3) * Rational(6912), a(0).pow(2) * quartic);
}

HyperCurve HyperCurve::make(int d, std::vector<Rational> coeffs) {
    if (d < 1) throw DomainError("degree must be >= 1");
    if (coeffs.size() != static_cast<std::size_t>(d) + 1)
        throw DomainError("expected d + 1 coefficients");
    return HyperCurve{d, std::move(coeffs)};
}

namespace {

std::map<std::string, Rational> assignment(const HyperCurve& c) {
    std::map<std::string, Rational> a;
    for (int i = 0; i <= c.d; ++i) a["a" + std::to_string(i)] = c.coeffs[i];
    return a;
}

}  // namespace

ModuliVector moduli_vector(const HyperCurve& c) {
    if (!c.is_monic()) throw DomainError("moduli are defined for monic curves only");
    auto point = assignment(c);
    ModuliVector m{c.d, {}};
    m.j.reserve(c.d - 1);
    for (int i = 2; i <= c.d; ++i) m.j.push_back(z_invariant(c.d, i).evaluate(point));
    return m;
}

HyperCurve curve_from_moduli(const ModuliVector& m) {
    if (m.d < 2 || m.j.size() != static_cast<std::size_t>(m.d) - 1)
        throw DomainError("moduli vector must hold j_2..j_d");
    std::vector<Rational> coeffs;
    coeffs.reserve(m.d + 1);
    coeffs.push_back(Rational(1));
    coeffs.push_back(Rational(0));
    for (const auto& j : m.j) coeffs.push_back(j);
    return HyperCurve::make(m.d, std::move(coeffs));
}

NormalizedCurve normalize(const HyperCurve& c) {
    if (!c.is_monic()) throw DomainError("normalize requires a monic curve");
    Rational shift = -c.coeffs[1];
    auto moved = transform_coeff_values(c.d, c.coeffs, Rational(1), shift);
    return NormalizedCurve{HyperCurve::make(c.d, std::move(moved)), shift};
}

std::optional<Rational> isomorphic(const HyperCurve& c1, const HyperCurve& c2) {
    if (c1.d != c2.d) throw DomainError("degree mismatch");
    if (!c1.is_monic() || !c2.is_monic())
        throw DomainError("translation isomorphism is defined for monic curves");
    if (moduli_vector(c1) != moduli_vector(c2)) return std::nullopt;
    return c2.coeffs[1] - c1.coeffs[1];
}

}  // namespace dk
