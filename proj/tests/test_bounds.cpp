#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helly/bounds.hpp"
#include "helly/errors.hpp"

using namespace helly;

TEST_CASE("balanced partitions") {
    const BalancedPartition p = BalancedPartition::make(7, 3);
    CHECK(p.q == 2);
    CHECK(p.s == 1);
    CHECK(p.parts == std::vector<long long>{3, 2, 2});
    CHECK(BalancedPartition::make(0, 2).parts == std::vector<long long>{0, 0});
    CHECK_THROWS_AS(BalancedPartition::make(-1, 2), std::invalid_argument);
}

TEST_CASE("fractional helly bound") {
    CHECK(frachel_bound(5, 1, 1) == 4);
    CHECK(frachel_bound(5, 1, 0) == 0);
    CHECK(frachel_bound(6, 1, 2) == 9);  // matches the Eckhoff edge count
    CHECK_THROWS_AS(frachel_bound(4, 2, 2), std::invalid_argument);
}

TEST_CASE("g_d values") {
    CHECK(g_d(5, 2, 1, 1) == 6);
    CHECK(g_d(6, 2, 2, 1) == 11);
    // single factor reduces to the fractional Helly bound
    for (int n = 3; n <= 9; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int r = 1; n > d + r; ++r) CHECK(g_d(n, 1, r, d) == frachel_bound(n, d, r));
    CHECK_THROWS_AS(g_d(5, 3, 1, 1), std::invalid_argument);  // r < (t-1)d
    CHECK_THROWS_AS(g_d(3, 1, 2, 1), std::invalid_argument);  // n <= d+r
    // the permissive form computes outside the theorem hypotheses:
    // x = 6 over 3 parts of 2, so C(5,2) - 3*C(2,2) = 7
    CHECK(g_d_formula(5, 3, 1, 1) == 7);
}

TEST_CASE("g_d is nondecreasing in r") {
    for (int d = 1; d <= 2; ++d)
        for (int t = 1; t <= 3; ++t)
            for (int n = 4; n <= 10; ++n) {
                Int prev = -1;
                for (int r = std::max(1, (t - 1) * d); n > d + r; ++r) {
                    const Int g = g_d(n, t, r, d);
                    CHECK(g >= prev);
                    prev = g;
                }
            }
}

TEST_CASE("partition minimum oracle") {
    CHECK(min_binom_sum_oracle(7, 3, 2) == 5);
    CHECK(min_binom_sum_oracle(4, 4, 2) == 0);
    CHECK(min_binom_sum_oracle(5, 2, 2) == 4);
    CHECK_THROWS_AS(min_binom_sum_oracle(200, 6, 2), resource_error);
}

TEST_CASE("oracle minimum equals the balanced closed form") {
    for (int x = 0; x <= 11; ++x)
        for (int t = 1; t <= 4; ++t)
            for (int k = 1; k <= 4; ++k) {
                const long long q = x / t, s = x % t;
                const Int closed = to_int(s) * binomial(q + 1, k) + to_int(t - s) * binomial(q, k);
                CHECK(min_binom_sum_oracle(x, t, k) == closed);
            }
}

TEST_CASE("turan bound") {
    CHECK(turan_bound(5, 2) == 6);
    for (int n = 1; n <= 8; ++n)
        for (int t = n; t <= n + 3; ++t) CHECK(turan_bound(n, t) == binomial(n, 2));
    // the d = 1 reduction of g_d
    for (int t = 2; t <= 6; ++t)
        for (int n = t + 1; n <= 12; ++n) CHECK(g_d(n, t, t - 1, 1) == turan_bound(n, t));
}

TEST_CASE("beta functions") {
    CHECK(beta_convex(Rat(1), 1) == 1);
    CHECK(beta_convex(make_rat(3, 4), 1) == make_rat(1, 2));
    CHECK_THROWS_AS(beta_convex(Rat(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(beta_convex(Rat(2), 1), std::invalid_argument);

    CHECK(product_threshold(1, 2) == make_rat(1, 2));
    CHECK(product_threshold(2, 2) == make_rat(3, 4));
    CHECK(beta_product(Rat(1), 1, 2) == 1);
    CHECK(beta_product(make_rat(7, 8), 1, 2) == make_rat(1, 2));
    CHECK_THROWS_AS(beta_product(make_rat(1, 2), 1, 2), std::domain_error);

    // monotone increasing in alpha
    Rat prev(-1);
    for (int i = 1; i <= 40; ++i) {
        const Rat beta = beta_convex(make_rat(i, 40), 2);
        CHECK(beta > prev);
        prev = beta;
    }
    // t = 1 product bound coincides with the convex bound
    for (int d = 1; d <= 3; ++d)
        for (int i = 1; i <= 25; ++i)
            CHECK(beta_product(make_rat(i, 25), d, 1) == beta_convex(make_rat(i, 25), d));
}

TEST_CASE("exact counts dominate the beta fraction") {
    // With count = g_d(n,t,r)+1 intersecting tuples, the guaranteed
    // intersecting subfamily of size d+r+1 is at least the beta_product
    // fraction of n (up to the dyadic rounding slack of one part in 2^63).
    const Rat slack = make_rat(Int(1), Int(1) << 63);
    for (int d = 1; d <= 2; ++d)
        for (int t = 1; t <= 3; ++t)
            for (int n = 4; n <= 10; ++n)
                for (int r = std::max(1, (t - 1) * d); n > d + r; ++r) {
                    const Rat alpha = make_rat(g_d(n, t, r, d) + 1, binomial(n, d + 1));
                    if (alpha <= product_threshold(d, t) || alpha > 1) continue;
                    const Rat fraction = beta_product(alpha, d, t) - slack;
                    CHECK(Rat(d + r + 1) >= fraction * Rat(n));
                }
}

TEST_CASE("rank from tuple counts") {
    CHECK(rank_from_count(5, 1, 1, Int(10)) == 3);
    CHECK(rank_from_count(5, 1, 2, Int(7)) == 1);
    CHECK(rank_from_count(5, 1, 2, g_d(5, 2, 2, 1) + 1) == 2);
    CHECK(rank_from_count(5, 1, 1, Int(1)) == 0);
    CHECK_THROWS_AS(rank_from_count(5, 1, 1, Int(11)), std::invalid_argument);
}

TEST_CASE("higher-dimensional face bound") {
    CHECK(fj_bound(5, 1, 1, 1) == 4);
    // at j = d the sum telescopes to the fractional Helly bound
    for (int n = 4; n <= 10; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int r = 1; n > d + r; ++r) CHECK(fj_bound(n, d, r, d) == frachel_bound(n, d, r));
    CHECK_THROWS_AS(fj_bound(5, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("bound specs validate hypotheses") {
    CHECK_FALSE(BoundSpec{1, 2, 1, 5, BoundKind::g_d}.violation().has_value());
    CHECK(BoundSpec{1, 3, 1, 5, BoundKind::g_d}.violation().has_value());
    CHECK(BoundSpec{1, 1, 4, 5, BoundKind::fractional_helly}.violation().has_value());
    CHECK_FALSE(BoundSpec{1, 4, 0, 9, BoundKind::turan}.violation().has_value());
}
