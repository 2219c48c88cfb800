#pragma once

// Exact-rational univariate polynomials in descending-power order
// (a_0 x^n + a_1 x^{n-1} + ... + a_n), their residue-class split mod M,
// and double-precision complex evaluation.

#include "hmsector/rational.hpp"

#include <complex>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hmsector {

/// Degree of the zero polynomial.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

class RationalPolynomial {
public:
    /// The zero polynomial.
    RationalPolynomial() = default;

    /// Coefficients a_0..a_n, leading first. Leading zeros are dropped; an
    /// empty or all-zero vector gives the zero polynomial.
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial monomial(const Rational& c, int exponent);
    static RationalPolynomial constant(const Rational& c) { return monomial(c, 0); }

    int degree() const noexcept
    {
        return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// a_0..a_n; empty for the zero polynomial.
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Leading coefficient, or 0 for the zero polynomial.
    Rational leading() const;

    /// Coefficient of x^e (0 outside 0..degree).
    Rational coefficient_of_power(int e) const;

    /// a_k in descending indexing, with a_k = 0 for k < 0 or k > n.
    Rational a(int k) const;

    std::vector<double> to_doubles() const;

    /// Human readable form, e.g. "30*x^4 + 48/7*x".
    std::string to_text() const;

    friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs)
    {
        return lhs.coeffs_ == rhs.coeffs_;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);

private:
    std::vector<Rational> coeffs_;
};

struct DivisionResult {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

/// Exact long division; throws std::domain_error on a zero divisor.
DivisionResult divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor);

/// Residue-class component f_j of a polynomial of degree n: the terms a_l x^{n-l}
/// with l = j (mod M). May be the zero polynomial.
struct ArithmeticPart {
    int residue = 0;
    int difference = 1;
    RationalPolynomial poly;
};

/// Parses "a_0,a_1,...,a_n" (integers, p/q, finite decimals) or a JSON array
/// of coefficient strings. A zero leading coefficient is rejected, not stripped.
RationalPolynomial parse_polynomial(std::string_view text);

/// Splits f into its M residue classes. Requires f nonzero and 1 <= M <= deg f.
std::vector<ArithmeticPart> split_arithmetic(const RationalPolynomial& f, int M);

/// True when every monomial x^{n-l} of p has l = residue (mod M), with n the
/// degree of the source polynomial. The zero polynomial qualifies for every residue.
bool has_residue(const RationalPolynomial& p, int n, int M, int residue);

/// True when all exponents of p are congruent mod M (zero polynomial included).
bool is_arithmetic(const RationalPolynomial& p, int M);

std::complex<double> evaluate_complex(const RationalPolynomial& f, std::complex<double> z);

/// Horner evaluation over leading-first double coefficients.
std::complex<double> evaluate_complex(std::span<const double> coeffs, std::complex<double> z);

} // namespace hmsector
