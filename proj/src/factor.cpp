#include "hmsector/factor.hpp"

#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"
#include "hmsector/hurwitz.hpp"

#include <string>

namespace hmsector {

FactorizationResult factor_hm(const RationalPolynomial& f, int M)
{
    const int n = f.degree();
    if (f.is_zero() || n < 1)
        throw RangeError("factorization needs degree >= 1");
    if (M < 2)
        throw RangeError("factorization needs M >= 2");

    FactorizationResult result;
    result.M = M;
    result.n = n;
    if (M <= n)
        result.h = run_generalized_euclid(f, M).leading;
    else
        result.h = f.coeffs();

    for (int i = 0; i <= n; ++i) {
        if (result.h[static_cast<std::size_t>(i)] == 0)
            throw FactorizationInapplicable(i, "factorization inapplicable: h_" + std::to_string(i) + " = 0");
    }
    for (int i = 1; i <= n; ++i)
        result.cs.push_back(result.h[static_cast<std::size_t>(i - 1)] / result.h[static_cast<std::size_t>(i)]);
    result.terminal = f.a(n);
    return result;
}

Rational j_factor_entry(const Rational& c, int M, int row, int col)
{
    if (col == row)
        return (row - 1) % M == 0 ? c : Rational(0);
    if (col == row + 1)
        return 1;
    return 0;
}

RationalMatrix tilde_window(const RationalPolynomial& f, int M, int N)
{
    return HurwitzMatrix(f, M, HurwitzVariant::tilde).leading_block(N, N);
}

RationalMatrix factor_product_window(const FactorizationResult& result, int N)
{
    const int n = result.n;
    const int M = result.M;
    const auto terminal = HurwitzMatrix::from_coefficients({result.terminal}, M, HurwitzVariant::tilde);
    RationalMatrix block = terminal.leading_block(N + n, N);

    for (int idx = n; idx >= 1; --idx) {
        const Rational& c = result.cs[static_cast<std::size_t>(idx - 1)];
        RationalMatrix next(block.rows() - 1, block.cols());
        for (std::size_t r = 0; r < next.rows(); ++r) {
            const bool on_c_row = r % static_cast<std::size_t>(M) == 0;
            for (std::size_t s = 0; s < next.cols(); ++s) {
                next(r, s) = block(r + 1, s);
                if (on_c_row)
                    next(r, s) += c * block(r, s);
            }
        }
        block = std::move(next);
    }
    return block;
}

bool verify_factorization(const RationalPolynomial& f, int M, const FactorizationResult& result, int N)
{
    const int n = f.degree();
    if (N < n + M)
        throw RangeError("verification window " + std::to_string(N) + " below n + M = " + std::to_string(n + M));
    if (result.M != M || result.n != n || static_cast<int>(result.cs.size()) != n)
        return false;
    return factor_product_window(result, N) == tilde_window(f, M, N);
}

std::vector<Rational> c_from_special_minors(const RationalPolynomial& f, int M)
{
    const int n = f.degree();
    if (f.is_zero() || M < 2 || M > n)
        throw RangeError("special-minor ratios need 2 <= M <= n");
    HurwitzMatrix h(f, M);
    auto H = [&](int k, int r) { return hm_special(h, k, r); };

    std::vector<Rational> cs;
    cs.push_back(f.a(0) / f.a(1));
    for (int i = 2; i <= n; ++i) {
        const int r = (i + M - 2) / (M - 1);
        const int k = r * (M - 1) - i;
        if ((i - 1) % (M - 1) != 0)
            cs.push_back(H(k + 2, r) * H(k + 1, r - 1) / (H(k + 2, r - 1) * H(k + 1, r)));
        else
            cs.push_back(H(k - M + 3, r - 1) * H(k + 1, r - 1) / (H(k - M + 3, r - 2) * H(k + 1, r)));
    }
    return cs;
}

} // namespace hmsector
