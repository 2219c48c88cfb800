#pragma once

// Factorization of the tilde Hurwitz matrix into bidiagonal factors:
//   H~_M(f) = J(c_1) J(c_2) ... J(c_n) H~_M(a_n),   c_i = h_{i-1} / h_i.
// J(c) carries c on the diagonal rows r = 1 (mod M), zero on the remaining
// diagonal rows, and 1 on the whole superdiagonal.

#include "hmsector/matrix.hpp"
#include "hmsector/poly.hpp"

#include <vector>

namespace hmsector {

struct FactorizationResult {
    int M = 0;
    int n = 0;
    std::vector<Rational> cs; // c_1..c_n
    Rational terminal;        // a_n
    std::vector<Rational> h;  // h_0..h_n the cs were built from
};

/// Requires M >= 2 and n >= 1. For M > n the residue parts are monomials and
/// h_i = a_i. Throws FactorizationInapplicable naming the first zero h_i.
FactorizationResult factor_hm(const RationalPolynomial& f, int M);

/// J(c) entry at (row, col), 1-based.
Rational j_factor_entry(const Rational& c, int M, int row, int col);

/// Leading N x N block of H~_M(f).
RationalMatrix tilde_window(const RationalPolynomial& f, int M, int N);

/// Leading N x N block of J(c_1)...J(c_n) H~_M(a_n).
///
/// Each J is upper bidiagonal, so row r of J B only reads rows r and r+1 of
/// B. Truncating every factor to N x N would drop row N+1 of the right-hand
/// operand; instead the product is formed on a rectangular block of H~_M(a_n)
/// with N+n rows, and each factor consumes one row.
RationalMatrix factor_product_window(const FactorizationResult& result, int N);

/// Exact entrywise comparison on the N x N window. Throws RangeError when
/// N < n + M.
bool verify_factorization(const RationalPolynomial& f, int M, const FactorizationResult& result, int N);

/// c_1..c_n recomputed from ratios of special minors H_M(k, r). c_1 is a_0/a_1.
/// Requires 2 <= M <= n.
std::vector<Rational> c_from_special_minors(const RationalPolynomial& f, int M);

} // namespace hmsector
