#include "derivkernel/matrix.hpp"

#include <algorithm>

#include "derivkernel/errors.hpp"

namespace dk {

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& r) { return r.is_zero(); });
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
    if (below.cols_ != cols_) throw DomainError("stacked: column count mismatch");
    ExactMatrix r(rows_ + below.rows_, cols_);
    r.a_ = a_;
    r.a_.insert(r.a_.end(), below.a_.begin(), below.a_.end());
    return r;
}

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> u;   // row echelon, fraction-free
    std::vector<std::size_t> pivot_cols;     // one per pivot row, increasing
};

// Fraction-free Bareiss elimination with row swaps. Rows are first scaled
// to integers (per-row denominator lcm), which changes neither nullspace
// nor rank.
Echelon echelon(const ExactMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
            lcm = l;
        }
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m.at(r, c).numerator() * (lcm / m.at(r, c).denominator());
    }

    Echelon e;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // Pivot: smallest nonzero magnitude keeps the growth down.
        std::size_t best = rows;
        for (std::size_t r = row; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            if (best == rows ||
                mpz_cmpabs(a[r][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0)
                best = r;
        }
        if (best == rows) continue;  // free column
        std::swap(a[row], a[best]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class t = a[row][col] * a[r][c] - a[r][col] * a[row][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        e.pivot_cols.push_back(col);
        ++row;
    }
    a.resize(row);
    e.u = std::move(a);
    return e;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m) {
    std::size_t cols = m.cols();
    Echelon e = echelon(m);
    std::size_t npiv = e.pivot_cols.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        // Back-substitute pivot rows bottom-up.
        for (std::size_t k = npiv; k-- > 0;) {
            std::size_t pc = e.pivot_cols[k];
            if (pc > f) continue;  // upper-triangular: no interaction
            Rational s(0);
            for (std::size_t c = pc + 1; c < cols; ++c) {
                if (v[c].is_zero() || e.u[k][c] == 0) continue;
                s += Rational(mpq_class(e.u[k][c])) * v[c];
            }
            v[pc] = -s / Rational(mpq_class(e.u[k][pc]));
        }
        // First nonzero entry normalized to 1.
        for (const Rational& x : v) {
            if (!x.is_zero()) {
                Rational inv = x.inverse();
                for (Rational& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const ExactMatrix& m) { return echelon(m).pivot_cols.size(); }

}  // namespace dk
