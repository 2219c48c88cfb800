#pragma once

#include "hmsector/rational.hpp"

#include <cstddef>
#include <vector>

namespace hmsector {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& grid);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators, elimination runs over
/// mpz with exact divisions, and the scales are divided back out.
Rational determinant(const RationalMatrix& m);

} // namespace hmsector
