#pragma once

#include <cstddef>
#include <vector>

#include "derivkernel/rational.hpp"

namespace dk {

// Dense rectangular matrix with exact rational entries.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;

    // Stacks `below` under this matrix; column counts must agree.
    ExactMatrix stacked(const ExactMatrix& below) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Basis of the right nullspace {v : m v = 0}. Vectors are exact, linearly
// independent, and each is scaled so its first nonzero entry equals 1.
// Empty exactly when the matrix is injective. Uses fraction-free
// Bareiss-style elimination internally.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

}  // namespace dk
