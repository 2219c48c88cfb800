#pragma once

// Continued fraction of the pair ratio R_ij = f_i / f_j. Terms alternate
// between exponents m = j - i and M - m:
//   R(z) = c_1 z^m + 1 / (c_2 z^{M-m} + 1 / (c_3 z^m + ...)).

#include "hmsector/poly.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace hmsector {

struct ContinuedFraction {
    int M = 0;
    int i = 0;
    int j = 0;
    std::vector<Rational> coefficients; // c_l = h_{l-1} / h_l
    int exponent_low = 0;               // m = j - i, used on odd terms
    int exponent_high = 0;              // M - m, used on even terms

    int length() const noexcept { return static_cast<int>(coefficients.size()); }
    /// Exponent of term t (1-based).
    int exponent(int t) const noexcept { return t % 2 == 1 ? exponent_low : exponent_high; }
    std::vector<int> exponents() const;
    /// Exponent of the last term.
    int final_exponent() const { return exponent(length()); }

    /// Fraction with arbitrary coefficients and exponent pattern (m, M-m).
    /// Requires 0 <= m <= M.
    static ContinuedFraction from_terms(std::vector<Rational> coefficients, int M, int m);
};

/// Result of the remainder sequence f^{ij}_0 = f_i, f^{ij}_1 = f_j, ...
struct PairExpansion {
    ContinuedFraction fraction;
    std::vector<RationalPolynomial> remainders; // f^{ij}_0 .. last computed
    std::vector<Rational> leading;              // h^{ij}_l, coefficient at the expected degree
    bool complete = false;                      // remainder reached zero with every h nonzero
    std::optional<int> failed_step;             // first l with h^{ij}_l = 0
};

/// Expected degree of f^{ij}_l in a nondegenerate expansion:
/// n - i - M*l/2 for even l, n - j - M*(l-1)/2 for odd l.
int pair_remainder_degree(int n, int M, int i, int j, int l);

/// Runs the expansion and stops early on a vanishing leading coefficient,
/// keeping the truncated fraction. Requires 2 <= M <= n and 0 <= i < j <= M-1.
PairExpansion try_expand_pair(const RationalPolynomial& f, int M, int i, int j);

/// Throws DegeneratePairError naming the failing step when the expansion
/// does not terminate cleanly.
ContinuedFraction expand_pair_cfrac(const RationalPolynomial& f, int M, int i, int j);

/// Bottom-up evaluation in double precision. Throws EvaluationError for z = 0
/// or a denominator below 1e-300 in magnitude.
std::complex<double> cfrac_evaluate(const ContinuedFraction& cf, std::complex<double> z);

/// Collapses the fraction to numerator / denominator polynomials, exactly.
struct RationalFunction {
    RationalPolynomial numerator;
    RationalPolynomial denominator;
};
RationalFunction cfrac_collapse(const ContinuedFraction& cf);

} // namespace hmsector
