#include "hmsector/sector.hpp"

#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hmsector {

namespace {

std::string range_text(int lo, int hi)
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

bool try_all_h(const RationalPolynomial& f, int M, SectorCertificate& cert, MethodAttempt& attempt)
{
    const int n = f.degree();
    if (M < 2 || M > n) {
        attempt.detail = "needs M in " + range_text(2, n);
        return false;
    }
    attempt.applicable = true;
    const EuclidTable table = run_generalized_euclid(f, M);
    for (int i = 0; i <= n; ++i) {
        const Rational& h = table.leading[static_cast<std::size_t>(i)];
        if (h <= 0) {
            attempt.detail = "h_" + std::to_string(i) + " = " + to_string(h)
                             + (table.polys[static_cast<std::size_t>(i)].is_zero() ? " (zero row)" : "");
            return false;
        }
    }
    cert.h = table.leading;
    cert.claim = SectorClaim::exterior;
    if (n == 5 && M == 3) {
        const auto& a = f.coeffs();
        const Rational r3 = a[3] / a[0];
        const Rational r4 = a[4] / a[1];
        const Rational r5 = a[5] / a[2];
        cert.closed_sector_note = a[0] > 0 && a[1] > 0 && a[2] > 0 && r3 > r4 && r4 > r5;
    }
    return true;
}

bool first_nonpositive_delta(const SpecialMinorSet& set, MethodAttempt& attempt)
{
    for (int p = 1; p <= set.n; ++p) {
        if (set.delta(p) <= 0) {
            const auto& idx = set.index[static_cast<std::size_t>(p - 1)];
            attempt.detail = "Delta_" + std::to_string(p) + " = H(" + std::to_string(idx.k) + "," + std::to_string(idx.r)
                             + ") = " + to_string(set.delta(p));
            return true;
        }
    }
    return false;
}

bool try_tn(const RationalPolynomial& f, int M, SectorCertificate& cert, MethodAttempt& attempt)
{
    const int n = f.degree();
    if (M < 2 || M > n) {
        attempt.detail = "needs M in " + range_text(2, n);
        return false;
    }
    attempt.applicable = true;
    const SpecialMinorSet set = special_minors(f, M);
    if (first_nonpositive_delta(set, attempt))
        return false;
    cert.deltas = set.values;
    cert.claim = SectorClaim::open_sector;
    return true;
}

bool try_rh(const RationalPolynomial& f, int M, SectorCertificate& cert, MethodAttempt& attempt)
{
    if (M != 2) {
        attempt.detail = "needs M = 2";
        return false;
    }
    attempt.applicable = true;
    const SpecialMinorSet set = special_minors(f, 2);
    if (first_nonpositive_delta(set, attempt))
        return false;
    cert.deltas = set.values;
    cert.claim = SectorClaim::exterior;
    return true;
}

bool try_ct(const RationalPolynomial& f, int M, SectorCertificate& cert, MethodAttempt& attempt)
{
    const int n = f.degree();
    if (M != n) {
        attempt.detail = "needs M = n = " + std::to_string(n);
        return false;
    }
    attempt.applicable = true;
    const auto& a = f.coeffs();
    for (int k = 0; k <= n; ++k) {
        if (a[static_cast<std::size_t>(k)] <= 0) {
            attempt.detail = "a_" + std::to_string(k) + " = " + to_string(a[static_cast<std::size_t>(k)]);
            return false;
        }
    }
    cert.coefficients = a;
    cert.claim = SectorClaim::exterior;
    return true;
}

bool try_pairwise(const RationalPolynomial& f, int M, SectorCertificate& cert, MethodAttempt& attempt)
{
    const int n = f.degree();
    const int hi = n / 2 + 1;
    if (M < 2 || M > hi) {
        attempt.detail = "needs M in " + range_text(2, hi);
        return false;
    }
    attempt.applicable = true;
    std::vector<PairEvidence> pairs;
    for (int i = 0; i < M; ++i) {
        for (int j = i + 1; j < M; ++j) {
            PairEvidence ev{i, j, pair_degree_case_split(n, M, i, j), {}};
            ev.minors = pair_leading_minors(f, M, i, j, ev.m);
            for (int t = 1; t <= ev.m; ++t) {
                const Rational& v = ev.minors[static_cast<std::size_t>(t - 1)];
                if (v <= 0) {
                    attempt.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") minor of order "
                                     + std::to_string(t) + " = " + to_string(v);
                    return false;
                }
            }
            pairs.push_back(std::move(ev));
        }
    }
    cert.pairs = std::move(pairs);
    cert.claim = SectorClaim::exterior;
    return true;
}

bool run_method(CertMethod method, const RationalPolynomial& f, int M, SectorCertificate& cert)
{
    MethodAttempt attempt{method, false, false, {}};
    bool ok = false;
    switch (method) {
    case CertMethod::all_h_positive:
        ok = try_all_h(f, M, cert, attempt);
        break;
    case CertMethod::tn_special_minors:
        ok = try_tn(f, M, cert, attempt);
        break;
    case CertMethod::pairwise_hurwitz:
        ok = try_pairwise(f, M, cert, attempt);
        break;
    case CertMethod::cowling_thron:
        ok = try_ct(f, M, cert, attempt);
        break;
    case CertMethod::routh_hurwitz:
        ok = try_rh(f, M, cert, attempt);
        break;
    }
    attempt.success = ok;
    if (ok) {
        attempt.detail = "hypothesis holds";
        cert.method = method;
        cert.status = CertStatus::certified;
    }
    cert.attempts.push_back(std::move(attempt));
    return ok;
}

std::vector<CertMethod> plan(MethodChoice choice, int M, int n)
{
    switch (choice) {
    case MethodChoice::h:
        return {CertMethod::all_h_positive};
    case MethodChoice::tn:
        return {CertMethod::tn_special_minors};
    case MethodChoice::pairwise:
        return {CertMethod::pairwise_hurwitz};
    case MethodChoice::ct:
        return {CertMethod::cowling_thron};
    case MethodChoice::rh:
        return {CertMethod::routh_hurwitz};
    case MethodChoice::automatic:
        break;
    }
    // Endpoint criteria first so that M = 2 and M = n report the classical result.
    std::vector<CertMethod> order;
    if (M == 2)
        order.push_back(CertMethod::routh_hurwitz);
    if (M == n)
        order.push_back(CertMethod::cowling_thron);
    order.push_back(CertMethod::all_h_positive);
    order.push_back(CertMethod::tn_special_minors);
    order.push_back(CertMethod::pairwise_hurwitz);
    return order;
}

} // namespace

SectorCertificate certify(const RationalPolynomial& f, int M, MethodChoice choice, const CertifyOptions& options)
{
    const int n = f.degree();
    if (f.is_zero() || n < 1)
        throw RangeError("certification needs degree >= 1");
    if (f.a(0) <= 0)
        throw std::invalid_argument("leading coefficient a_0 must be positive, got " + to_string(f.a(0)));
    if (M < 1 || M > n)
        throw RangeError("step M=" + std::to_string(M) + " outside 1.." + std::to_string(n));

    SectorCertificate cert;
    cert.M = M;
    cert.n = n;
    cert.sector_radians = std::numbers::pi / M;
    cert.sector_degrees = 180.0 / M;

    if (M == 1) {
        cert.status = CertStatus::not_applicable;
        RootReport report = find_roots(f, RootOptions{.seed = options.seed});
        // A root off the axis by more than the sector slack counts as complex,
        // unless it sits in a near-multiple group where double iterates scatter.
        bool real_negative = true;
        for (const auto& r : report.roots) {
            double gap = INFINITY;
            for (const auto& other : report.roots)
                if (&other != &r)
                    gap = std::min(gap, std::abs(other - r));
            const bool near_multiple = report.clustered || gap < kClusterSlack * std::max(1.0, std::abs(r));
            const double slack = near_multiple ? kClusterSlack : kSectorSlack;
            if (std::abs(r) <= kOriginRadius || std::abs(std::arg(r)) < std::numbers::pi - slack)
                real_negative = false;
        }
        cert.all_roots_real_negative = real_negative;
        cert.clearance = sector_clearance(report, M);
        cert.oracle = std::move(report);
        return cert;
    }

    bool any_applicable = false;
    for (CertMethod method : plan(choice, M, n)) {
        if (run_method(method, f, M, cert))
            break;
        any_applicable = any_applicable || cert.attempts.back().applicable;
    }
    if (cert.status != CertStatus::certified)
        cert.status = any_applicable ? CertStatus::unknown : CertStatus::not_applicable;

    if (options.run_oracle) {
        RootReport report = find_roots(f, RootOptions{.seed = options.seed});
        const SectorClearance clearance = sector_clearance(report, M);
        if (cert.status == CertStatus::certified && clearance.any_nonzero_root
            && clearance.clearance < -clearance.slack)
            cert.status = CertStatus::refuted_by_oracle;
        cert.clearance = clearance;
        cert.oracle = std::move(report);
    }
    return cert;
}

ArgumentSumReport argument_sum_bound_check(const RationalPolynomial& f, int M, std::complex<double> z)
{
    const EuclidTable table = run_generalized_euclid(f, M);
    if (!all_leading_positive(table))
        throw std::invalid_argument("argument-sum bound needs every h_i > 0");
    const double angle = std::arg(z);
    if (z == std::complex<double>(0.0, 0.0) || angle < -1e-15 || angle > std::numbers::pi / M + 1e-15)
        throw RangeError("z must satisfy 0 <= arg z <= pi/M");

    ArgumentSumReport out;
    out.bound = std::numbers::pi * (M - 1) / M;
    for (int k = 0; k <= M - 2; ++k) {
        const auto num = evaluate_complex(table.polys[static_cast<std::size_t>(k)], z);
        const auto den = evaluate_complex(table.polys[static_cast<std::size_t>(k + 1)], z);
        if (std::abs(den) < 1e-300)
            throw EvaluationError("f_" + std::to_string(k + 1) + "(z) vanishes numerically");
        const auto ratio = num / den;
        out.ratios.push_back(ratio);
        const double a = std::arg(ratio);
        if (a > 0)
            out.positive_sum += a;
        else
            out.negative_sum += a;
    }
    out.max_abs = std::max(std::abs(out.positive_sum), std::abs(out.negative_sum));
    out.violated = out.max_abs > out.bound + 1e-9;
    return out;
}

const char* to_string(CertStatus status)
{
    switch (status) {
    case CertStatus::certified:
        return "CERTIFIED";
    case CertStatus::not_applicable:
        return "NOT_APPLICABLE";
    case CertStatus::refuted_by_oracle:
        return "REFUTED_BY_ORACLE";
    case CertStatus::unknown:
        return "UNKNOWN";
    }
    return "?";
}

const char* to_string(CertMethod method)
{
    switch (method) {
    case CertMethod::all_h_positive:
        return "ALL_H_POSITIVE";
    case CertMethod::tn_special_minors:
        return "TN_SPECIAL_MINORS";
    case CertMethod::pairwise_hurwitz:
        return "PAIRWISE_HURWITZ";
    case CertMethod::cowling_thron:
        return "COWLING_THRON";
    case CertMethod::routh_hurwitz:
        return "ROUTH_HURWITZ";
    }
    return "?";
}

const char* to_string(SectorClaim claim)
{
    switch (claim) {
    case SectorClaim::exterior:
        return "NO_ROOTS_WITH_ABS_ARG_AT_MOST_PI_OVER_M";
    case SectorClaim::open_sector:
        return "NO_ROOTS_IN_OPEN_SECTOR";
    }
    return "?";
}

std::optional<MethodChoice> parse_method_choice(const std::string& text)
{
    if (text == "auto")
        return MethodChoice::automatic;
    if (text == "h")
        return MethodChoice::h;
    if (text == "tn")
        return MethodChoice::tn;
    if (text == "pairwise")
        return MethodChoice::pairwise;
    if (text == "ct")
        return MethodChoice::ct;
    if (text == "rh")
        return MethodChoice::rh;
    return std::nullopt;
}

} // namespace hmsector
