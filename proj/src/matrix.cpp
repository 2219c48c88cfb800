#include "hmsector/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hmsector {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& grid)
    : rows_(grid.size()), cols_(grid.empty() ? 0 : grid.front().size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : grid) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged grid");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs)
{
    if (lhs.cols() != rhs.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            if (lhs(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out(i, j) += lhs(i, k) * rhs(k, j);
        }
    return out;
}

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);

    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }

    Rational det(sign * at(n - 1, n - 1), scale);
    det.canonicalize();
    return det;
}

} // namespace hmsector
