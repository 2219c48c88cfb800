#include "hmsector/contfrac.hpp"

#include "hmsector/errors.hpp"

#include <cmath>
#include <string>

namespace hmsector {

std::vector<int> ContinuedFraction::exponents() const
{
    std::vector<int> out;
    out.reserve(coefficients.size());
    for (int t = 1; t <= length(); ++t)
        out.push_back(exponent(t));
    return out;
}

ContinuedFraction ContinuedFraction::from_terms(std::vector<Rational> coefficients, int M, int m)
{
    if (M < 1 || m < 0 || m > M)
        throw RangeError("continued fraction exponents need 0 <= m <= M");
    ContinuedFraction cf;
    cf.M = M;
    cf.j = m;
    cf.coefficients = std::move(coefficients);
    cf.exponent_low = m;
    cf.exponent_high = M - m;
    return cf;
}

int pair_remainder_degree(int n, int M, int i, int j, int l)
{
    if (l % 2 == 0)
        return n - i - M * (l / 2);
    return n - j - M * ((l - 1) / 2);
}

PairExpansion try_expand_pair(const RationalPolynomial& f, int M, int i, int j)
{
    const int n = f.degree();
    if (f.is_zero() || M < 2 || M > n)
        throw RangeError("pair expansion needs 2 <= M <= n");
    if (i < 0 || j > M - 1 || i >= j)
        throw RangeError("residue pair must satisfy 0 <= i < j <= M-1");

    const auto parts = split_arithmetic(f, M);
    PairExpansion out;
    out.fraction = ContinuedFraction::from_terms({}, M, j - i);
    out.fraction.i = i;
    out.fraction.j = j;

    auto leading_at = [&](int l) {
        const int d = pair_remainder_degree(n, M, i, j, l);
        return out.remainders[static_cast<std::size_t>(l)].coefficient_of_power(d);
    };

    out.remainders.push_back(parts[static_cast<std::size_t>(i)].poly);
    out.leading.push_back(leading_at(0));
    if (out.leading.back() == 0) {
        out.failed_step = 0;
        return out;
    }
    out.remainders.push_back(parts[static_cast<std::size_t>(j)].poly);
    out.leading.push_back(leading_at(1));
    if (out.leading.back() == 0) {
        out.failed_step = 1;
        return out;
    }

    for (int l = 1;; ++l) {
        const auto& prev = out.remainders[static_cast<std::size_t>(l - 1)];
        const auto& cur = out.remainders[static_cast<std::size_t>(l)];
        const Rational c = out.leading[static_cast<std::size_t>(l - 1)] / out.leading[static_cast<std::size_t>(l)];
        const int e = out.fraction.exponent(l);
        out.fraction.coefficients.push_back(c);
        RationalPolynomial next = prev - RationalPolynomial::monomial(c, e) * cur;
        if (next.is_zero()) {
            out.complete = true;
            return out;
        }
        out.remainders.push_back(std::move(next));
        out.leading.push_back(leading_at(l + 1));
        if (out.leading.back() == 0) {
            out.failed_step = l + 1;
            return out;
        }
    }
}

ContinuedFraction expand_pair_cfrac(const RationalPolynomial& f, int M, int i, int j)
{
    PairExpansion e = try_expand_pair(f, M, i, j);
    if (!e.complete) {
        const int step = *e.failed_step;
        throw DegeneratePairError(step, "degenerate pair (" + std::to_string(i) + "," + std::to_string(j)
                                            + "): leading coefficient vanishes at step " + std::to_string(step));
    }
    return e.fraction;
}

std::complex<double> cfrac_evaluate(const ContinuedFraction& cf, std::complex<double> z)
{
    if (z == std::complex<double>(0.0, 0.0))
        throw EvaluationError("continued fraction evaluated at z = 0");
    if (cf.coefficients.empty())
        throw EvaluationError("empty continued fraction");
    auto term = [&](int t) {
        return to_double(cf.coefficients[static_cast<std::size_t>(t - 1)]) * std::pow(z, cf.exponent(t));
    };
    std::complex<double> v = term(cf.length());
    for (int t = cf.length() - 1; t >= 1; --t) {
        if (std::abs(v) < 1e-300)
            throw EvaluationError("continued fraction denominator vanishes at term " + std::to_string(t + 1));
        v = term(t) + 1.0 / v;
    }
    return v;
}

RationalFunction cfrac_collapse(const ContinuedFraction& cf)
{
    if (cf.coefficients.empty())
        throw std::invalid_argument("empty continued fraction");
    auto term = [&](int t) {
        return RationalPolynomial::monomial(cf.coefficients[static_cast<std::size_t>(t - 1)], cf.exponent(t));
    };
    // value = num / den; stepping up: q + den/num.
    RationalPolynomial num = term(cf.length());
    RationalPolynomial den = RationalPolynomial::constant(1);
    for (int t = cf.length() - 1; t >= 1; --t) {
        RationalPolynomial up = term(t) * num + den;
        den = std::move(num);
        num = std::move(up);
    }
    return {num, den};
}

} // namespace hmsector
