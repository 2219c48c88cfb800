#pragma once

// Generalized Euclidean algorithm with step M: starting from the M residue
// parts f_0..f_{M-1} of f, each step writes f_i = d_i f_{i+1} + f_{i+M}
// until f_n exists.

#include "hmsector/poly.hpp"

#include <optional>
#include <vector>

namespace hmsector {

enum class EuclidRule {
    divide,            // deg f_i >= deg f_{i+1} > -inf: quotient and remainder
    copy_lower_degree, // deg f_i < deg f_{i+1}: d_i = 0, f_{i+M} = f_i
    copy_zero_divisor, // f_{i+1} = 0: d_i = 0, f_{i+M} = f_i
};

struct EuclidTable {
    int M = 0;
    int n = 0;
    std::vector<RationalPolynomial> polys;     // f_0..f_n
    std::vector<RationalPolynomial> quotients; // d_0..d_{n-M}, zero on copy steps
    std::vector<EuclidRule> rules;             // rule applied at step i
    std::vector<Rational> leading;             // h_0..h_n, 0 where f_i = 0
    bool nondegenerate = false;

    /// Group table layout: row j lists the indices j, j+M, j+2M, ... <= n.
    std::vector<std::vector<int>> rows() const;
};

/// Requires 2 <= M <= n = deg f.
EuclidTable run_generalized_euclid(const RationalPolynomial& f, int M);

/// h_0..h_n.
std::vector<Rational> leading_coefficients(const EuclidTable& table);

bool all_leading_positive(const EuclidTable& table);

struct NondegeneracyReport {
    bool nondegenerate = false;
    std::optional<int> first_zero;  // smallest i with f_i = 0
    bool degrees_match = false;     // deg f_k = n - k for every k
    bool quotients_linear = false;  // every d_i = c_i x
};

NondegeneracyReport check_nondegenerate(const EuclidTable& table);

const char* to_string(EuclidRule rule);

} // namespace hmsector
