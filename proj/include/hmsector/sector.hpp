#pragma once

// Sector exclusion certificates for |arg z| < pi/M, each backed by exact
// evidence and cross-checked against the root oracle.

#include "hmsector/hurwitz.hpp"
#include "hmsector/oracle.hpp"
#include "hmsector/poly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hmsector {

enum class CertStatus { certified, not_applicable, refuted_by_oracle, unknown };
enum class CertMethod { all_h_positive, tn_special_minors, pairwise_hurwitz, cowling_thron, routh_hurwitz };
enum class MethodChoice { automatic, h, tn, pairwise, ct, rh };

/// What a certificate licenses.
enum class SectorClaim {
    exterior,    // every root satisfies |arg z| > pi/M
    open_sector, // no root with |arg z| < pi/M; a root at the origin is allowed
};

struct MethodAttempt {
    CertMethod method;
    bool applicable = false;
    bool success = false;
    std::string detail; // failure point, or why the method does not apply
};

struct PairEvidence {
    int i = 0;
    int j = 0;
    int m = 0;
    std::vector<Rational> minors; // leading principal minors of orders 1..m
};

struct SectorCertificate {
    int M = 0;
    int n = 0;
    double sector_radians = 0.0;
    double sector_degrees = 0.0;
    CertStatus status = CertStatus::unknown;
    std::optional<CertMethod> method;
    std::optional<SectorClaim> claim;

    // Exact evidence of the successful method; other fields stay empty.
    std::vector<Rational> h;            // h_0..h_n
    std::vector<Rational> deltas;       // Delta_1..Delta_n
    std::vector<PairEvidence> pairs;    // every residue pair
    std::vector<Rational> coefficients; // a_0..a_n

    // Set when n = 5, M = 3 and a3/a0 > a4/a1 > a5/a2 hold on top of h > 0:
    // the zero-free region then includes the sector boundary.
    bool closed_sector_note = false;

    std::vector<MethodAttempt> attempts;

    std::optional<RootReport> oracle;
    std::optional<SectorClearance> clearance;
    std::optional<bool> all_roots_real_negative; // M = 1 only
};

struct CertifyOptions {
    bool run_oracle = true;
    std::uint64_t seed = 0;
};

/// Requires a_0 > 0 (std::invalid_argument otherwise) and 1 <= M <= n
/// (RangeError). M = 1 yields NOT_APPLICABLE plus the oracle's real-negative flag.
SectorCertificate certify(const RationalPolynomial& f, int M, MethodChoice choice = MethodChoice::automatic,
                          const CertifyOptions& options = {});

struct ArgumentSumReport {
    std::vector<std::complex<double>> ratios; // f_k(z)/f_{k+1}(z), k = 0..M-2
    double positive_sum = 0.0;                // sum of the positive arguments
    double negative_sum = 0.0;                // sum of the negative arguments
    double max_abs = 0.0;
    double bound = 0.0;                       // pi (M-1)/M
    bool violated = false;                    // max_abs > bound + 1e-9
};

/// Requires all h_i > 0 (std::invalid_argument) and 0 <= arg z <= pi/M
/// (RangeError). Throws EvaluationError when a denominator f_{k+1}(z) is
/// numerically zero.
ArgumentSumReport argument_sum_bound_check(const RationalPolynomial& f, int M, std::complex<double> z);

const char* to_string(CertStatus status);
const char* to_string(CertMethod method);
const char* to_string(SectorClaim claim);
/// Parses auto|h|tn|pairwise|ct|rh.
std::optional<MethodChoice> parse_method_choice(const std::string& text);

} // namespace hmsector
