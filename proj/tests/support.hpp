#pragma once

// Shared fixtures and random generators for the unit and acceptance tests.

#include "hmsector/poly.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace hmtest {

using hmsector::Rational;
using hmsector::RationalPolynomial;

inline Rational q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline RationalPolynomial poly(const std::string& text)
{
    return hmsector::parse_polynomial(text);
}

inline RationalPolynomial binomial7()
{
    return poly("1,7,21,35,35,21,7,1");
}

// x^5 + x^4 + x^3 + 1.001x^2 + x + 0.999
inline RationalPolynomial quintic_ratio()
{
    return poly("1,1,1,1001/1000,1,999/1000");
}

// x^6 + 3x^5 + 9x^4 + (3/2)x^3 + 2x^2 + x + 1/9
inline RationalPolynomial sextic_pairwise()
{
    return poly("1,3,9,3/2,2,1,1/9");
}

// x^5 + x^4 + 5x^3 + 2x^2 + 4x + 1/2
inline RationalPolynomial stable_quintic()
{
    return poly("1,1,5,2,4,1/2");
}

inline Rational random_positive(std::mt19937_64& rng, int top = 8, int den = 4)
{
    std::uniform_int_distribution<int> num_d(1, top);
    std::uniform_int_distribution<int> den_d(1, den);
    return q(num_d(rng), den_d(rng));
}

/// Monic polynomial with all roots in the open left half-plane, exact.
inline RationalPolynomial random_stable(std::mt19937_64& rng, int n)
{
    RationalPolynomial f = RationalPolynomial::constant(1);
    std::bernoulli_distribution coin(0.6);
    std::uniform_int_distribution<int> im_d(0, 8);
    while (f.degree() < n) {
        if (n - f.degree() >= 2 && coin(rng)) {
            const Rational a = random_positive(rng);
            const Rational b = q(im_d(rng), 1) / random_positive(rng, 4, 1);
            f = f * RationalPolynomial({Rational(1), 2 * a, a * a + b * b});
        } else {
            f = f * RationalPolynomial({Rational(1), random_positive(rng)});
        }
    }
    return f;
}

/// Monic polynomial whose roots all satisfy |arg z| > pi/M + margin.
inline RationalPolynomial random_sector_free(std::mt19937_64& rng, int n, int M, double margin = 0.05)
{
    RationalPolynomial f = RationalPolynomial::constant(1);
    std::bernoulli_distribution coin(0.7);
    std::uniform_int_distribution<int> num_d(-16, 16);
    std::uniform_int_distribution<int> im_d(1, 16);
    std::uniform_int_distribution<int> den_d(1, 4);
    while (f.degree() < n) {
        if (n - f.degree() >= 2 && coin(rng)) {
            const Rational re = q(num_d(rng), den_d(rng));
            const Rational im = q(im_d(rng), den_d(rng));
            const double angle = std::atan2(im.get_d(), re.get_d());
            if (angle <= std::numbers::pi / M + margin)
                continue;
            f = f * RationalPolynomial({Rational(1), -2 * re, re * re + im * im});
        } else {
            f = f * RationalPolynomial({Rational(1), random_positive(rng)});
        }
    }
    return f;
}

/// Integer coefficients in [lo, hi] with a_0 in [1, hi].
inline RationalPolynomial random_integer_poly(std::mt19937_64& rng, int n, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::uniform_int_distribution<int> lead(1, std::max(1, hi));
    std::vector<Rational> a;
    a.push_back(lead(rng));
    for (int k = 1; k <= n; ++k)
        a.emplace_back(d(rng));
    return RationalPolynomial(a);
}

} // namespace hmtest
