#include <nlohmann/json.hpp>

#include "derivkernel/curves.hpp"
#include "derivkernel/invariants.hpp"
#include "derivkernel/kernelsearch.hpp"
#include "derivkernel/parser.hpp"
#include "derivkernel/serialize.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dk;
using dktest::Gen;
using dktest::pp;

TEST_CASE("polynomial json round-trip") {
    Gen gen(6001);
    auto vars = VarSet::create({"a0", "a1", "a2", "a3"});
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = gen.poly(vars, 4, 5);
        Json j = polynomial_to_json(p);
        CHECK(polynomial_from_json(j) == p);
    }
    Json j = polynomial_to_json(pp("a0*a2 - 1/2*a1^2", vars));
    CHECK(j["vars"].size() == 4);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "-1/2");
}

TEST_CASE("derivation json round-trip") {
    Derivation d = weitzenbock(4);
    Json j = derivation_to_json(d);
    CHECK(j["name"] == "D4");
    CHECK(j["images"].count("a0") == 0);  // zero images are omitted
    Derivation back = derivation_from_json(j);
    CHECK(same_varset(back.vars(), d.vars()));
    for (std::size_t i = 0; i < d.vars()->size(); ++i) CHECK(back.image(i) == d.image(i));
}

TEST_CASE("curve and moduli json") {
    HyperCurve c = HyperCurve::make(3, {Rational(1), Rational(1, 2), Rational(0), Rational(-3)});
    HyperCurve back = curve_from_json(curve_to_json(c));
    CHECK(back.d == 3);
    CHECK(back.coeffs == c.coeffs);

    ModuliVector m = moduli_vector(curve_from_moduli(ModuliVector{4, {Rational(1), Rational(2), Rational(3)}}));
    ModuliVector mb = moduli_from_json(moduli_to_json(m));
    CHECK(mb == m);
}

TEST_CASE("kernel report json shape") {
    CurveDerivationSet g0 = curve_derivation_set(5, CurveCase::CPrimeTranslations);
    std::vector<std::pair<std::string, Polynomial>> gens;
    gens.emplace_back("g1", pp("a1_0", g0.vars));
    KernelReport r = verify_generator_set(gens, g0.derivations, 7, kDefaultJacobianSeed);
    Json j = report_to_json(r);
    CHECK(j["in_kernel"]["g1"] == true);
    CHECK(j["jacobian_rank"] == 1);
    CHECK(j["bound"] == 7);
    CHECK(j["basis"].size() == 1);

    KernelReport nobound = verify_generator_set(gens, g0.derivations, std::nullopt,
                                                kDefaultJacobianSeed);
    CHECK(report_to_json(nobound)["bound"].is_null());
}
