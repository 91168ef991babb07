#include "derivkernel/matrix.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dk;
using dktest::Gen;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

bool is_in_nullspace(const ExactMatrix& m, const std::vector<Rational>& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s(0);
        for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rank-1 system") {
    auto basis = nullspace(from_rows({{1, 1}, {2, 2}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("identity is injective") {
    CHECK(nullspace(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
    CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
}

TEST_CASE("wide system with fractions") {
    ExactMatrix m(1, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(0, 2) = Rational(0);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(is_in_nullspace(m, v));
}

TEST_CASE("zero-row matrix has a full nullspace") {
    ExactMatrix m(0, 3);
    auto basis = nullspace(m);
    CHECK(basis.size() == 3);
    CHECK(rank(m) == 0);
}

TEST_CASE("nullspace properties on random matrices") {
    Gen gen(2001);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = static_cast<std::size_t>(gen.integer(1, 6));
        std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
        ExactMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = gen.integer(0, 2) == 0 ? Rational(0) : gen.rational(6, 3);

        auto basis = nullspace(m);
        // m v = 0 exactly, for every returned vector.
        for (const auto& v : basis) CHECK(is_in_nullspace(m, v));
        // rank + nullity = cols.
        CHECK(rank(m) + basis.size() == cols);
        // Returned vectors are linearly independent.
        if (!basis.empty()) {
            ExactMatrix b(basis.size(), cols);
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < cols; ++c) b.at(r, c) = basis[r][c];
            CHECK(rank(b) == basis.size());
        }
        // First nonzero entry of each vector is 1.
        for (const auto& v : basis) {
            for (const auto& x : v) {
                if (x.is_zero()) continue;
                CHECK(x == Rational(1));
                break;
            }
        }
    }
}
