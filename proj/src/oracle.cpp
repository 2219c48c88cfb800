#include "hmsector/oracle.hpp"

#include "hmsector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hmsector {

namespace {

using cd = std::complex<double>;

// p(z) and p'(z) together by Horner.
void horner2(const std::vector<double>& a, cd z, cd& p, cd& dp)
{
    p = a[0];
    dp = 0.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

// Double-double accumulator: Horner in ~106-bit precision keeps the value of
// p near a multiple root meaningful far below the plain-double noise floor.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

DD two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD add(DD x, DD y)
{
    DD s = two_sum(x.hi, y.hi);
    s.lo += x.lo + y.lo;
    return two_sum(s.hi, s.lo);
}

DD mul(DD x, double y)
{
    const double p = x.hi * y;
    const double e = std::fma(x.hi, y, -p);
    return two_sum(p, e + x.lo * y);
}

DD neg(DD x)
{
    return {-x.hi, -x.lo};
}

cd horner_dd(const std::vector<double>& a, cd z)
{
    DD re, im;
    for (double c : a) {
        const DD r = add(add(mul(re, z.real()), neg(mul(im, z.imag()))), DD{c, 0.0});
        const DD i = add(mul(re, z.imag()), mul(im, z.real()));
        re = r;
        im = i;
    }
    return {re.hi + re.lo, im.hi + im.lo};
}

// Rounding level of the double-double evaluation at z.
double horner_noise(const std::vector<double>& a, cd z)
{
    const double r = std::abs(z);
    double acc = 0.0;
    for (double c : a)
        acc = acc * r + std::abs(c);
    const double eps = std::numeric_limits<double>::epsilon();
    return 16.0 * static_cast<double>(a.size()) * eps * eps * acc;
}

double scaled_residual(const std::vector<double>& a, cd z)
{
    double norm = 0.0;
    for (double c : a)
        norm = std::max(norm, std::abs(c));
    const int n = static_cast<int>(a.size()) - 1;
    const cd value = evaluate_complex(std::span<const double>(a), z);
    return std::abs(value) / (norm * std::pow(1.0 + std::abs(z), n));
}

} // namespace

RootReport find_roots(const RationalPolynomial& f, const RootOptions& options)
{
    const int n = f.degree();
    if (f.is_zero() || n < 1)
        throw RangeError("root finding needs degree >= 1");

    std::vector<double> a = f.to_doubles();

    RootReport report;
    std::vector<cd> z(static_cast<std::size_t>(n));

    // Trailing zero coefficients are exact roots at the origin.
    int zeros = 0;
    while (a.size() > 1 && a.back() == 0.0) {
        a.pop_back();
        ++zeros;
    }
    const int m = static_cast<int>(a.size()) - 1;

    if (m >= 1) {
        // Cauchy-style radius from the coefficient geometric mean.
        double radius = std::pow(std::abs(a[static_cast<std::size_t>(m)] / a[0]), 1.0 / m);
        if (!(radius > 0.0) || !std::isfinite(radius))
            radius = 1.0;
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> jitter(-0.5, 0.5);
        const double two_pi = 2.0 * std::numbers::pi;
        std::vector<cd> w(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            const double angle = two_pi * (k + 0.25 + 0.3 * jitter(rng)) / m + 0.4;
            const double r = radius * (1.0 + 0.1 * jitter(rng));
            w[static_cast<std::size_t>(k)] = std::polar(r, angle);
        }

        // A root is frozen once |p| drops to rounding level; iterating further
        // only random-walks inside the noise disk of a multiple root.
        std::vector<char> frozen(static_cast<std::size_t>(m), 0);
        for (int iter = 1; iter <= options.max_iterations; ++iter) {
            double max_step = 0.0;
            for (int k = 0; k < m; ++k) {
                if (frozen[static_cast<std::size_t>(k)])
                    continue;
                cd& zk = w[static_cast<std::size_t>(k)];
                cd p, dp;
                horner2(a, zk, p, dp);
                p = horner_dd(a, zk);
                if (std::abs(p) <= horner_noise(a, zk)) {
                    frozen[static_cast<std::size_t>(k)] = 1;
                    continue;
                }
                cd sum = 0.0;
                for (int l = 0; l < m; ++l) {
                    if (l == k)
                        continue;
                    const cd diff = zk - w[static_cast<std::size_t>(l)];
                    if (diff != cd(0.0, 0.0))
                        sum += 1.0 / diff;
                }
                const cd denom = dp / p - sum;
                cd step = 1.0 / denom;
                if (denom == cd(0.0, 0.0) || !std::isfinite(step.real()) || !std::isfinite(step.imag()))
                    step = zk * cd(1e-7, 1e-7) + cd(1e-12, 0.0); // nudge off a critical point
                zk -= step;
                max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(zk)));
            }
            report.iterations = iter;
            const bool all_frozen = std::all_of(frozen.begin(), frozen.end(), [](char c) { return c != 0; });
            if (max_step < options.tol || all_frozen) {
                report.converged = true;
                break;
            }
        }
        std::copy(w.begin(), w.end(), z.begin());
    } else {
        report.converged = true;
    }
    for (int k = 0; k < zeros; ++k)
        z[static_cast<std::size_t>(m + k)] = 0.0;

    // Real coefficients: snap tiny imaginary parts of real roots.
    for (cd& r : z)
        if (std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r.real())))
            r = cd(r.real(), 0.0);

    std::sort(z.begin(), z.end(), [](cd x, cd y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    report.roots = z;

    const std::vector<double> full = f.to_doubles();
    report.residual = 0.0;
    for (cd r : z)
        report.residual = std::max(report.residual, scaled_residual(full, r));

    // Multiple roots converge slowly and only to ~eps^(1/k); accept them on residual.
    if (!report.converged && report.residual <= options.residual_threshold)
        report.converged = true;

    report.min_arg = std::numbers::pi;
    for (cd r : z)
        if (std::abs(r) > kOriginRadius)
            report.min_arg = std::min(report.min_arg, std::abs(std::arg(r)));

    for (std::size_t p = 0; p < z.size() && !report.clustered; ++p)
        for (std::size_t q = p + 1; q < z.size(); ++q)
            if (std::abs(z[p] - z[q]) < 1e-4) {
                report.clustered = true;
                break;
            }
    return report;
}

SectorClearance sector_clearance(const RootReport& report, int M)
{
    if (M < 1)
        throw RangeError("sector step M must be >= 1");
    SectorClearance out;
    out.M = M;
    out.boundary = std::numbers::pi / M;
    out.boundary_slope = M == 2 ? INFINITY : std::abs(std::tan(out.boundary));
    out.slack = report.clustered ? kClusterSlack : kSectorSlack;
    out.clearance = INFINITY;
    double closest = INFINITY;
    for (const auto& r : report.roots) {
        if (std::abs(r) <= kOriginRadius) {
            ++out.origin_roots;
            continue;
        }
        out.any_nonzero_root = true;
        const double angle = std::abs(std::arg(r));
        out.clearance = std::min(out.clearance, angle - out.boundary);
        if (std::abs(angle - out.boundary) < closest) {
            closest = std::abs(angle - out.boundary);
            out.closest_slope = std::abs(r.imag() / r.real());
        }
    }
    return out;
}

namespace {

Rational cofactor(const std::vector<std::vector<Rational>>& m, std::vector<bool>& used, std::size_t row)
{
    const std::size_t n = m.size();
    if (row == n)
        return 1;
    Rational total = 0;
    int parity = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (used[c])
            continue;
        if (m[row][c] != 0) {
            used[c] = true;
            Rational sub = m[row][c] * cofactor(m, used, row + 1);
            used[c] = false;
            if (parity % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        ++parity;
    }
    return total;
}

} // namespace

Rational minor_bruteforce(const std::vector<std::vector<Rational>>& entries)
{
    const std::size_t n = entries.size();
    if (n == 0)
        throw std::invalid_argument("empty grid");
    if (n > 6)
        throw RangeError("brute-force determinant supports order <= 6");
    for (const auto& row : entries)
        if (row.size() != n)
            throw std::invalid_argument("grid must be square");
    std::vector<bool> used(n, false);
    return cofactor(entries, used, 0);
}

} // namespace hmsector
