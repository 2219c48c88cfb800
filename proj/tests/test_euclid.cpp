#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace hmsector;
using hmtest::poly;
using hmtest::q;

namespace {

const RationalPolynomial& at(const EuclidTable& t, int i)
{
    return t.polys.at(static_cast<std::size_t>(i));
}

} // namespace

TEST_CASE("binomial (x+1)^7 with step 3")
{
    const auto t = run_generalized_euclid(hmtest::binomial7(), 3);
    CHECK(at(t, 0) == poly("1,0,0,35,0,0,7,0"));
    CHECK(at(t, 1) == poly("7,0,0,35,0,0,1"));
    CHECK(at(t, 2) == poly("21,0,0,21,0,0"));
    CHECK(at(t, 3) == poly("30,0,0,48/7,0"));
    CHECK(at(t, 4) == poly("28,0,0,1"));
    CHECK(at(t, 5) == poly("81/5,0,0"));
    CHECK(at(t, 6) == poly("81/14,0"));
    CHECK(at(t, 7) == poly("1"));
    const std::vector<RationalPolynomial> d = {poly("1/7,0"), poly("1/3,0"), poly("7/10,0"), poly("15/14,0"),
                                               poly("140/81,0")};
    CHECK(t.quotients == d);
    CHECK(t.leading == std::vector<Rational>{1, 7, 21, 30, 28, q(81, 5), q(81, 14), 1});
    CHECK(t.nondegenerate);
    const auto report = check_nondegenerate(t);
    CHECK(report.nondegenerate);
    CHECK(report.degrees_match);
    CHECK(report.quotients_linear);
    CHECK(all_leading_positive(t));
}

TEST_CASE("all-ones degree 7 produces zero rows")
{
    const auto t = run_generalized_euclid(poly("1,1,1,1,1,1,1,1"), 3);
    CHECK(at(t, 3).is_zero());
    CHECK(at(t, 4) == poly("1"));
    CHECK(at(t, 5) == poly("1,0,0,1,0,0"));
    CHECK(at(t, 6).is_zero());
    CHECK(at(t, 7) == poly("1"));
    CHECK(t.rules == std::vector<EuclidRule>{EuclidRule::divide, EuclidRule::divide, EuclidRule::copy_zero_divisor,
                                             EuclidRule::copy_lower_degree, EuclidRule::copy_lower_degree});
    CHECK_FALSE(t.nondegenerate);
    const auto report = check_nondegenerate(t);
    REQUIRE(report.first_zero);
    CHECK(*report.first_zero == 3);
}

TEST_CASE("monomial-only split x^7+x^6+x^5")
{
    const auto t = run_generalized_euclid(poly("1,1,1,0,0,0,0,0"), 3);
    CHECK(at(t, 3).is_zero());
    CHECK(at(t, 4).is_zero());
    CHECK(at(t, 5) == poly("1,0,0,0,0,0"));
    CHECK(at(t, 6).is_zero());
    CHECK(at(t, 7).is_zero());
    CHECK(t.leading == std::vector<Rational>{1, 1, 1, 0, 0, 1, 0, 0});
}

TEST_CASE("step 4 layout with a zero residue class")
{
    const auto f = poly("1,0,1,1,1,0,1,1,1,0");
    const auto t = run_generalized_euclid(f, 4);
    const auto g0 = poly("1,0,0,0,1,0,0,0,1,0");
    const auto g2 = poly("1,0,0,0,1,0,0,0");
    const auto g3 = poly("1,0,0,0,1,0,0");
    const auto rows = t.rows();
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<int>{0, 4, 8});
    CHECK(rows[1] == std::vector<int>{1, 5, 9});
    CHECK(rows[2] == std::vector<int>{2, 6});
    CHECK(rows[3] == std::vector<int>{3, 7});
    for (int i : {0, 4, 8})
        CHECK(at(t, i) == g0);
    for (int i : {1, 5, 9, 6})
        CHECK(at(t, i).is_zero());
    CHECK(at(t, 2) == g2);
    CHECK(at(t, 3) == g3);
    CHECK(at(t, 7) == g3);
}

TEST_CASE("ratio quintic has h_3 = h_4 = 1/1000")
{
    const auto t = run_generalized_euclid(hmtest::quintic_ratio(), 3);
    CHECK(t.leading == std::vector<Rational>{1, 1, 1, q(1, 1000), q(1, 1000), q(999, 1000)});
}

TEST_CASE("sextic and stable quintic h-sequences")
{
    CHECK(run_generalized_euclid(hmtest::sextic_pairwise(), 3).leading
          == std::vector<Rational>{1, 3, 9, q(5, 6), q(5, 3), q(-1, 5), q(1, 9)});
    CHECK(run_generalized_euclid(hmtest::stable_quintic(), 3).leading
          == std::vector<Rational>{1, 1, 5, -2, q(39, 10), q(1, 2)});
}

TEST_CASE("step range is enforced")
{
    CHECK_THROWS_AS(run_generalized_euclid(hmtest::binomial7(), 1), RangeError);
    CHECK_THROWS_AS(run_generalized_euclid(hmtest::binomial7(), 8), RangeError);
    CHECK_THROWS_AS(run_generalized_euclid(poly("1,1"), 2), RangeError);
}

TEST_CASE("nondegenerate tables satisfy the identities f_i = d_i f_{i+1} + f_{i+M}")
{
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 100) {
        std::uniform_int_distribution<int> nd(2, 10);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(2, n);
        const int M = md(rng);
        const auto f = hmtest::random_integer_poly(rng, n, -6, 6);
        const auto t = run_generalized_euclid(f, M);
        for (int i = 0; i + M <= n; ++i)
            CHECK(at(t, i) == t.quotients[static_cast<std::size_t>(i)] * at(t, i + 1) + at(t, i + M));
        for (int i = 0; i <= n; ++i)
            CHECK(has_residue(at(t, i), n, M, i % M));
        if (t.nondegenerate) {
            const auto report = check_nondegenerate(t);
            CHECK(report.degrees_match);
            CHECK(report.quotients_linear);
            ++checked;
        }
    }
}

TEST_CASE("sextic table is nondegenerate with a negative h")
{
    const auto t = run_generalized_euclid(hmtest::sextic_pairwise(), 3);
    CHECK(check_nondegenerate(t).nondegenerate);
    CHECK_FALSE(all_leading_positive(t));
}

TEST_CASE("structural properties on random tables")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        std::uniform_int_distribution<int> nd(2, 11);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(2, n);
        const int M = md(rng);
        // Sparse coefficients make zero rows common.
        auto f = hmtest::random_integer_poly(rng, n, -2, 2);
        const auto table = run_generalized_euclid(f, M);
        for (int i = 0; i + 1 <= n; ++i) {
            const auto& a = at(table, i);
            const auto& b = at(table, i + 1);
            if (!a.is_zero() && !b.is_zero())
                CHECK(a.degree() != b.degree());
        }
        for (int i = 0; i + M <= n; ++i) {
            const auto& d = table.quotients[static_cast<std::size_t>(i)];
            CHECK(is_arithmetic(d, M));
            if (at(table, i + 1).is_zero())
                for (int k = i + M; k <= n; k += M)
                    CHECK(at(table, k) == at(table, i));
        }
    }
}
