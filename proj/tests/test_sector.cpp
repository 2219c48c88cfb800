#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"
#include "hmsector/hurwitz.hpp"
#include "hmsector/sector.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>

using namespace hmsector;
using hmtest::poly;
using hmtest::q;

TEST_CASE("ratio quintic certified by positive h")
{
    const auto cert = certify(hmtest::quintic_ratio(), 3);
    CHECK(cert.status == CertStatus::certified);
    REQUIRE(cert.method);
    CHECK(*cert.method == CertMethod::all_h_positive);
    CHECK(cert.claim == SectorClaim::exterior);
    CHECK(cert.closed_sector_note);
    CHECK(cert.h[3] == q(1, 1000));
    CHECK(cert.h[4] == q(1, 1000));
    REQUIRE(cert.clearance);
    CHECK(cert.clearance->clearance > 0);
}

TEST_CASE("stable quintic: certified at M = 2, unknown at M = 3")
{
    const auto f = hmtest::stable_quintic();
    const auto c2 = certify(f, 2);
    CHECK(c2.status == CertStatus::certified);
    CHECK(*c2.method == CertMethod::routh_hurwitz);
    CHECK(c2.deltas == std::vector<Rational>{1, 3, q(5, 2), q(17, 4), q(17, 8)});
    const auto c3 = certify(f, 3);
    CHECK(c3.status == CertStatus::unknown);
    CHECK_FALSE(c3.method);
    REQUIRE(c3.attempts.size() == 3);
    for (const auto& a : c3.attempts) {
        CHECK(a.applicable);
        CHECK_FALSE(a.success);
        CHECK_FALSE(a.detail.empty());
    }
    CHECK(certify(f, 3, MethodChoice::tn).status == CertStatus::unknown);
}

TEST_CASE("pairwise sextic is certified only by the pairwise method")
{
    const auto f = hmtest::sextic_pairwise();
    const auto cert = certify(f, 3);
    CHECK(cert.status == CertStatus::certified);
    CHECK(*cert.method == CertMethod::pairwise_hurwitz);
    REQUIRE(cert.pairs.size() == 3);
    CHECK(cert.pairs[0].minors == std::vector<Rational>{3, q(5, 2), 4, q(4, 9)});
    CHECK(cert.pairs[1].minors == std::vector<Rational>{9, q(25, 2), q(7, 2), q(7, 18)});
    CHECK(cert.pairs[2].minors == std::vector<Rational>{9, 15, 15});
    CHECK(tn_verdict(f, 3).status == TNStatus::not_tn);
    CHECK(cert.clearance->clearance > 0);
    // M = 5 is past floor(n/2) + 1.
    CHECK(certify(f, 5, MethodChoice::pairwise).status == CertStatus::not_applicable);
}

TEST_CASE("Cowling-Thron endpoint")
{
    const auto f = poly("2,1,3,5,1");
    const auto cert = certify(f, 4);
    CHECK(cert.status == CertStatus::certified);
    CHECK(*cert.method == CertMethod::cowling_thron);
    CHECK(cert.coefficients.size() == 5);
    CHECK(certify(poly("1,-1,3,5,1"), 4, MethodChoice::ct).status == CertStatus::unknown);
    CHECK(certify(f, 3, MethodChoice::ct).status == CertStatus::not_applicable);
}

TEST_CASE("M = 1 is informational")
{
    const auto real = certify(hmtest::binomial7(), 1);
    CHECK(real.status == CertStatus::not_applicable);
    REQUIRE(real.all_roots_real_negative);
    CHECK(*real.all_roots_real_negative);
    CHECK_FALSE(*certify(poly("1,0,1"), 1).all_roots_real_negative);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(certify(poly("-1,2,3"), 2), std::invalid_argument);
    CHECK_THROWS_AS(certify(poly("1,2,3"), 3), RangeError);
    CHECK_THROWS_AS(certify(poly("1,2,3"), 0), RangeError);
    CHECK(parse_method_choice("pairwise") == MethodChoice::pairwise);
    CHECK_FALSE(parse_method_choice("x"));
}

TEST_CASE("positive h implies positive special minors")
{
    std::mt19937_64 rng(67);
    int found = 0;
    for (int t = 0; t < 500 && found < 100; ++t) {
        std::uniform_int_distribution<int> nd(2, 10);
        const int n = nd(rng);
        const auto f = hmtest::random_sector_free(rng, n, 2);
        for (int M = 2; M <= n; ++M) {
            const auto h = certify(f, M, MethodChoice::h, {.run_oracle = false});
            if (h.status != CertStatus::certified)
                continue;
            ++found;
            CHECK(certify(f, M, MethodChoice::tn, {.run_oracle = false}).status == CertStatus::certified);
        }
    }
    CHECK(found >= 50);
}

TEST_CASE("argument-sum bound")
{
    const auto f = hmtest::quintic_ratio();
    const auto r = argument_sum_bound_check(f, 3, std::polar(1.0, std::numbers::pi / 6));
    CHECK_FALSE(r.violated);
    CHECK(r.ratios.size() == 2);
    CHECK(std::abs(r.bound - 2 * std::numbers::pi / 3) < 1e-15);

    const auto axis = argument_sum_bound_check(f, 3, {0.8, 0.0});
    CHECK(axis.positive_sum == 0.0);
    CHECK(axis.negative_sum == 0.0);

    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> ang(0.0, std::numbers::pi / 3);
    std::uniform_real_distribution<double> rad(0.05, 5.0);
    for (int t = 0; t < 50; ++t)
        CHECK_FALSE(argument_sum_bound_check(hmtest::binomial7(), 3, std::polar(rad(rng), ang(rng))).violated);

    CHECK_THROWS_AS(argument_sum_bound_check(f, 3, std::polar(1.0, 1.2)), RangeError);
    CHECK_THROWS_AS(argument_sum_bound_check(hmtest::stable_quintic(), 3, {1.0, 0.0}), std::invalid_argument);
}
