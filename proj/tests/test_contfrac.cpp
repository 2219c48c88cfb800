#include "hmsector/contfrac.hpp"
#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>

using namespace hmsector;
using hmtest::poly;
using hmtest::q;

TEST_CASE("ratio quintic pair (0,1)")
{
    const auto cf = expand_pair_cfrac(hmtest::quintic_ratio(), 3, 0, 1);
    CHECK(cf.coefficients == std::vector<Rational>{1, 1000, q(1, 1000)});
    CHECK(cf.exponents() == std::vector<int>{1, 2, 1});
    CHECK(cf.final_exponent() == 1);
    CHECK(cf.length() == 3);
}

TEST_CASE("remainder degrees follow the parity rule")
{
    std::mt19937_64 rng(41);
    int complete = 0;
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> nd(2, 10);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(2, n);
        const int M = md(rng);
        const auto f = hmtest::random_integer_poly(rng, n, -9, 9);
        for (int i = 0; i < M; ++i)
            for (int j = i + 1; j < M; ++j) {
                const auto e = try_expand_pair(f, M, i, j);
                if (!e.complete)
                    continue;
                ++complete;
                for (std::size_t l = 0; l < e.remainders.size(); ++l)
                    CHECK(e.remainders[l].degree() == pair_remainder_degree(n, M, i, j, static_cast<int>(l)));
            }
    }
    CHECK(complete > 100);
}

TEST_CASE("monomial divisor gives a single term")
{
    // f_0 = 2x^3, f_1 = x^2 for f = 2x^3 + x^2 with M = 2.
    const auto cf = expand_pair_cfrac(poly("2,1,0,0"), 2, 0, 1);
    CHECK(cf.length() == 1);
    CHECK(cf.coefficients.front() == 2);
    CHECK(cf.final_exponent() == 1);
}

TEST_CASE("degenerate pair reports the failing step")
{
    // x^5 + x^4 + x^3 + x^2 + x + 1 at M=3: f_0 - x f_1 = 0 on the first step.
    const auto e = try_expand_pair(poly("1,1,1,1,1,1"), 3, 0, 1);
    CHECK(e.complete);
    // Degree 6: f_0 - x f_1 = 1, so h^{01}_2 (the x^3 coefficient) vanishes.
    const auto g = poly("1,1,1,1,1,1,1");
    const auto d = try_expand_pair(g, 3, 0, 1);
    CHECK_FALSE(d.complete);
    REQUIRE(d.failed_step);
    CHECK(*d.failed_step == 2);
    CHECK(d.fraction.length() == 1);
    try {
        expand_pair_cfrac(g, 3, 0, 1);
        FAIL("expected DegeneratePairError");
    } catch (const DegeneratePairError& err) {
        CHECK(err.step() == 2);
    }
    CHECK_THROWS_AS(try_expand_pair(g, 3, 1, 0), RangeError);
}

TEST_CASE("evaluation")
{
    const auto single = ContinuedFraction::from_terms({Rational(2)}, 2, 1);
    const auto v = cfrac_evaluate(single, {0.0, 1.0});
    CHECK(std::abs(v - std::complex<double>(0.0, 2.0)) < 1e-15);
    CHECK_THROWS_AS(cfrac_evaluate(single, {0.0, 0.0}), EvaluationError);

    const auto cf = expand_pair_cfrac(hmtest::quintic_ratio(), 3, 0, 1);
    const auto real = cfrac_evaluate(cf, {0.7, 0.0});
    CHECK(real.real() > 0.0);
    CHECK(std::abs(real.imag()) < 1e-15);
    const auto w = cfrac_evaluate(cf, std::polar(1.0, std::numbers::pi / 6));
    CHECK(std::arg(w) >= -2 * std::numbers::pi / 6 - 1e-9);
    CHECK(std::arg(w) <= std::numbers::pi / 6 + 1e-9);

    // 1 z + 1/(0 z^1) hits a zero denominator.
    const auto bad = ContinuedFraction::from_terms({Rational(1), Rational(0)}, 2, 1);
    CHECK_THROWS_AS(cfrac_evaluate(bad, {1.0, 0.0}), EvaluationError);
}

TEST_CASE("collapse recovers f_i / f_j exactly and numerically")
{
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 100; ++t) {
        std::uniform_int_distribution<int> nd(2, 9);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(2, n);
        const int M = md(rng);
        const auto f = hmtest::random_integer_poly(rng, n, 1, 9);
        std::uniform_int_distribution<int> id(0, M - 2);
        const int i = id(rng);
        std::uniform_int_distribution<int> jd(i + 1, M - 1);
        const int j = jd(rng);
        const auto e = try_expand_pair(f, M, i, j);
        if (!e.complete)
            continue;
        ++checked;
        const auto parts = split_arithmetic(f, M);
        const auto& fi = parts[static_cast<std::size_t>(i)].poly;
        const auto& fj = parts[static_cast<std::size_t>(j)].poly;
        const auto rf = cfrac_collapse(e.fraction);
        CHECK(rf.numerator * fj == rf.denominator * fi);

        std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
        std::uniform_real_distribution<double> rad(0.2, 3.0);
        int sampled = 0;
        while (sampled < 100) {
            const auto z = std::polar(rad(rng), ang(rng));
            const auto den = evaluate_complex(fj, z);
            if (std::abs(den) < 1e-6 * std::pow(1.0 + std::abs(z), n))
                continue;
            ++sampled;
            const auto expected = evaluate_complex(fi, z) / den;
            std::complex<double> got;
            try {
                got = cfrac_evaluate(e.fraction, z);
            } catch (const EvaluationError&) {
                continue;
            }
            CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("positive h-sequence makes every pair expansion positive")
{
    std::mt19937_64 rng(47);
    int found = 0;
    for (int t = 0; t < 400 && found < 60; ++t) {
        std::uniform_int_distribution<int> nd(3, 9);
        const int n = nd(rng);
        const auto f = hmtest::random_stable(rng, n);
        for (int M = 2; M <= n; ++M) {
            if (!all_leading_positive(run_generalized_euclid(f, M)))
                continue;
            ++found;
            for (int i = 0; i < M; ++i)
                for (int j = i + 1; j < M; ++j) {
                    const auto cf = expand_pair_cfrac(f, M, i, j);
                    for (const auto& c : cf.coefficients)
                        CHECK(c > 0);
                }
        }
    }
    CHECK(found >= 30);
}
