#include "derivkernel/errors.hpp"
#include "derivkernel/parser.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dk;
using dktest::pp;

namespace {
VarSetPtr vars5() { return VarSet::create({"a0", "a1", "a2", "a3", "a4", "a5"}); }
}  // namespace

TEST_CASE("grammar basics") {
    auto vars = vars5();
    CHECK(pp("a0*a2 - a1^2", vars).term_count() == 2);
    CHECK(pp("  a0 *a2-a1 ^ 2 ", vars) == pp("a0*a2 - a1^2", vars));
    CHECK(pp("0", vars).is_zero());
    CHECK(pp("3/2", vars) == Polynomial::constant(vars, Rational(3, 2)));
    CHECK(pp("3/2*a0", vars) == Polynomial::variable(vars, 0) * Rational(3, 2));
    CHECK(pp("(a0 + a1)^2", vars) == pp("a0^2 + 2*a0*a1 + a1^2", vars));
    CHECK(pp("-a1^2 + a0*a2", vars) == pp("a0*a2 - a1^2", vars));
    CHECK(pp("2^3", vars) == Polynomial::constant(vars, Rational(8)));
}

TEST_CASE("syntax errors report a position") {
    auto vars = vars5();
    CHECK_THROWS_AS(pp("a0 + ", vars), ParseError);
    try {
        pp("a0 + ", vars);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(pp("a0 ++ a1", vars), ParseError);
    CHECK_THROWS_AS(pp("(a0", vars), ParseError);
    CHECK_THROWS_AS(pp("a0^", vars), ParseError);
    CHECK_THROWS_AS(pp("a0 a1", vars), ParseError);
    CHECK_THROWS_AS(pp("a0^-1", vars), ParseError);
}

TEST_CASE("unknown variables are rejected") {
    auto vars = vars5();
    CHECK_THROWS_AS(pp("a0 + q7", vars), ParseError);
    try {
        pp("a0 + q7", vars);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("q7") != std::string::npos);
    }
}

TEST_CASE("rational function input splits on the top-level slash") {
    auto vars = vars5();
    RationalFunction r = parse_rational_function("(a0*a2-a1^2)^5 / a0^8", vars);
    CHECK(r.num() == pp("(a0*a2-a1^2)^5", vars));
    CHECK(r.den() == pp("a0^8", vars));

    // A slash between two integers is still a coefficient.
    RationalFunction half = parse_rational_function("1/2", vars);
    CHECK(half.num() == Polynomial::constant(vars, Rational(1, 2)));
    CHECK(half.den() == Polynomial::constant(vars, Rational(1)));

    RationalFunction q = parse_rational_function("a0 / 2", vars);
    CHECK(rf_equal(q, RationalFunction(Polynomial::variable(vars, 0) * Rational(1, 2))));

    CHECK_THROWS_AS(parse_rational_function("a0 / 0", vars), DomainError);
    CHECK_THROWS_AS(parse_rational_function("a0 / a1 / a2", vars), ParseError);
}
