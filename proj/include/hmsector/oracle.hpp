#pragma once

// Floating-point cross-checks: simultaneous root iteration, sector clearance
// of the computed roots, and a cofactor-expansion determinant used to test
// the exact elimination kernel.

#include "hmsector/matrix.hpp"
#include "hmsector/poly.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace hmsector {

struct RootOptions {
    double tol = 1e-13;               // relative step size that counts as converged
    double residual_threshold = 1e-8; // accepted scaled residual
    int max_iterations = 2000;
    std::uint64_t seed = 0;
};

struct RootReport {
    std::vector<std::complex<double>> roots; // with multiplicity, sorted by (real, imag)
    double residual = 0.0;                   // max |f(z)| / (|a|_inf (1+|z|)^n)
    double min_arg = 0.0;                    // min |arg z| over nonzero roots
    bool converged = false;
    bool clustered = false; // two roots closer than 1e-4
    int iterations = 0;
};

/// Aberth-Ehrlich iteration from a randomly perturbed circle. Deterministic
/// for a fixed seed. Requires degree >= 1.
RootReport find_roots(const RationalPolynomial& f, const RootOptions& options = {});

/// Roots with modulus at most this are treated as the origin.
inline constexpr double kOriginRadius = 1e-10;
/// Default sector slack, and the widened slack for clustered roots.
inline constexpr double kSectorSlack = 1e-6;
inline constexpr double kClusterSlack = 1e-2;

struct SectorClearance {
    int M = 0;
    double boundary = 0.0;       // pi / M
    double clearance = 0.0;      // min |arg z| - pi/M over nonzero roots
    double boundary_slope = 0.0; // tan(pi/M), infinite for M = 2
    double closest_slope = 0.0;  // |tan arg z| of the root nearest the boundary
    double slack = kSectorSlack;
    int origin_roots = 0;
    bool any_nonzero_root = false;
};

/// Requires M >= 1.
SectorClearance sector_clearance(const RootReport& report, int M);

/// Determinant by cofactor expansion. Requires a square grid of order <= 6.
Rational minor_bruteforce(const std::vector<std::vector<Rational>>& entries);

} // namespace hmsector
