#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/homology.hpp"

using namespace helly;

namespace {

// Independent Eckhoff edge oracle straight from the rule on sorted tuples.
bool eckhoff_edge(const std::vector<int>& verts, int d, int r) {
    return verts[static_cast<std::size_t>(d)] - verts[static_cast<std::size_t>(d - 1)] <= r;
}

long long fd_count(const Complex& k, int j) {
    const FVector fv = k.f_vector();
    return (j >= 0 && j <= fv.dim) ? fv.counts[static_cast<std::size_t>(j)] : 0;
}

}  // namespace

TEST_CASE("block partitions use canonical labels") {
    const BlockPartition p = BlockPartition::make(8, 2, 3, 1);
    CHECK(p.blocks[0] == std::vector<int>{0, 1});        // |V_0| = r - (t-1)d = 2
    CHECK(p.blocks[1] == std::vector<int>{2, 3, 4});     // larger block first
    CHECK(p.blocks[2] == std::vector<int>{5, 6, 7});
    const BlockPartition q = BlockPartition::make(6, 2, 1, 1);
    CHECK(q.blocks[0].empty());
    CHECK(q.blocks[1] == std::vector<int>{0, 1, 2});
    CHECK(q.blocks[2] == std::vector<int>{3, 4, 5});
    CHECK_THROWS_AS(BlockPartition::make(4, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("factor complexes") {
    const BlockPartition p = BlockPartition::make(5, 2, 1, 1);  // V_1 = {0,1,2}, V_2 = {3,4}
    const Complex k1 = factor_complex(p, 1, 1);
    std::set<Mask> expected;
    for (int v : p.blocks[1]) expected.insert(verts_to_mask({3, 4}) | (Mask{1} << v));
    CHECK(std::set<Mask>(k1.maximal_faces().begin(), k1.maximal_faces().end()) == expected);
    // a block of size <= d gives the full simplex
    const BlockPartition tiny = BlockPartition::make(4, 2, 2, 1);  // V_2 = {3}
    CHECK(factor_complex(tiny, 2, 1) == Complex::full_simplex(4));
    CHECK_THROWS_AS(factor_complex(p, 3, 1), std::invalid_argument);
}

TEST_CASE("factor complexes are d-Leray on small parameters") {
    for (int n = 4; n <= 6; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int t = 1; t <= 2; ++t)
                for (int r = std::max(1, (t - 1) * d); n > d + r; ++r) {
                    const BlockPartition p = BlockPartition::make(n, t, r, d);
                    for (int i = 1; i <= t; ++i)
                        CHECK(is_d_leray(factor_complex(p, i, d), d).holds());
                }
}

TEST_CASE("extremal complex equals the intersection of its factors") {
    for (int n = 4; n <= 8; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int t = 1; t <= 3; ++t)
                for (int r = std::max(1, (t - 1) * d); n > d + r; ++r) {
                    const BlockPartition p = BlockPartition::make(n, t, r, d);
                    std::vector<Complex> factors;
                    for (int i = 1; i <= t; ++i) factors.push_back(factor_complex(p, i, d));
                    const Complex k = k_extremal(n, t, r, d);
                    CHECK(k == Complex::intersect(factors));
                    CHECK(k.dim() == d + r - 1);
                    CHECK(to_int(fd_count(k, d)) == g_d(n, t, r, d));
                }
}

TEST_CASE("extremal complex spec values") {
    const Complex k = k_extremal(5, 2, 1, 1);
    CHECK(fd_count(k, 1) == 6);
    CHECK(k.dim() == 1);
    // t = 1: V_0 plus d-subsets of the single block
    const Complex cone = k_extremal(6, 1, 2, 1);
    CHECK(cone.dim() == 2);
    const BlockPartition p = BlockPartition::make(6, 1, 2, 1);
    CHECK(p.blocks[0] == std::vector<int>{0, 1});
    for (Mask m : cone.maximal_faces()) CHECK(subset_of(verts_to_mask(p.blocks[0]), m));
    CHECK_THROWS_AS(k_extremal(4, 2, 1, 2), std::invalid_argument);
}

TEST_CASE("eckhoff hypergraph") {
    const Hypergraph h = h_eckhoff(5, 1, 2);
    CHECK(h.edges().size() == 7);
    const std::set<Mask> non_edges{verts_to_mask({0, 3}), verts_to_mask({0, 4}),
                                   verts_to_mask({1, 4})};
    for (Mask e : k_subsets(5, 2)) CHECK(h.has_edge(e) == (non_edges.count(e) == 0));

    // r >= n-1 makes the gap constraint vacuous
    const Hypergraph complete = h_eckhoff(5, 1, 4);
    CHECK(to_int(static_cast<long long>(complete.edges().size())) == binomial(5, 2));

    // edges follow the sorted-tuple rule exactly
    for (int n = 4; n <= 9; ++n)
        for (int d = 1; d <= 3 && d < n; ++d)
            for (int r = 0; r <= n - d; ++r) {
                const Hypergraph g = h_eckhoff(n, d, r);
                for (Mask e : k_subsets(n, d + 1))
                    CHECK(g.has_edge(e) == eckhoff_edge(mask_to_verts(e), d, r));
            }
}

TEST_CASE("eckhoff statistics match the closed forms") {
    for (int n = 4; n <= 10; ++n)
        for (int d = 1; d <= 3 && d + 1 < n; ++d)
            for (int r = 1; r <= n - d; ++r) {
                const Hypergraph h = h_eckhoff(n, d, r);
                CHECK(to_int(static_cast<long long>(h.edges().size())) ==
                      binomial(n, d + 1) - binomial(n - r, d + 1));
                CHECK(max_clique_size(h).size == d + r);
                CHECK(max_independent_size(h).size == d + (n - d) / (r + 1));
            }
    CHECK(max_independent_size(h_eckhoff(10, 1, 1)).size == 5);
}

TEST_CASE("clique complex of the Eckhoff hypergraph has dimension d+r-1") {
    for (int n = 4; n <= 8; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int r = 1; r <= n - d; ++r) {
                const Hypergraph h = h_eckhoff(n, d, r);
                std::vector<Mask> cliques;
                for (Mask w = 0; w <= full_mask(n); ++w) {
                    bool clique = true;
                    if (popcount(w) > d) {
                        for (Mask e : k_subsets_of(w, d + 1))
                            if (!h.has_edge(e)) {
                                clique = false;
                                break;
                            }
                    }
                    if (clique) cliques.push_back(w);
                }
                CHECK(Complex::from_masks(n, std::move(cliques)).dim() == d + r - 1);
            }
}

TEST_CASE("non-edge bijection") {
    CHECK(bijection_check(5, 1, 2));
    CHECK(bijection_check(5, 1, 0));  // identity on all (d+1)-subsets
    for (int n = 4; n <= 9; ++n)
        for (int d = 1; d <= 3 && d < n; ++d)
            for (int r = 0; r <= n - d; ++r) CHECK(bijection_check(n, d, r));
}

TEST_CASE("product family plans balance sizes and ranks") {
    const ProductFamilyPlan plan = ProductFamilyPlan::make(6, 2, 1, 2);
    CHECK(plan.group_sizes == std::vector<int>{3, 3});
    CHECK(plan.group_ranks == std::vector<int>{0, 1});
    CHECK(plan.group_spans ==
          std::vector<std::pair<int, int>>{{0, 3}, {3, 6}});
    for (int n = 4; n <= 10; ++n)
        for (int t = 2; t <= 3; ++t)
            for (int d = 1; d <= 2; ++d)
                for (int r = (t - 1) * d + 1; r <= n - d; ++r) {
                    const ProductFamilyPlan p = ProductFamilyPlan::make(n, t, d, r);
                    int size_sum = 0, rank_sum = 0, gap_min = n, gap_max = -n;
                    for (int i = 0; i < t; ++i) {
                        size_sum += p.group_sizes[static_cast<std::size_t>(i)];
                        rank_sum += p.group_ranks[static_cast<std::size_t>(i)];
                        const int gap = p.group_sizes[static_cast<std::size_t>(i)] -
                                        p.group_ranks[static_cast<std::size_t>(i)];
                        gap_min = std::min(gap_min, gap);
                        gap_max = std::max(gap_max, gap);
                    }
                    CHECK(size_sum == n);
                    CHECK(rank_sum == r - (t - 1) * d);
                    CHECK(gap_max - gap_min <= 1);
                }
    CHECK_THROWS_AS(ProductFamilyPlan::make(6, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("product family hypergraph statistics") {
    const ProductFamilyPlan plan = ProductFamilyPlan::make(6, 2, 1, 2);
    const auto [h, stats] = product_family_hypergraph(plan);
    CHECK(stats.edges == 11);
    CHECK(stats.edges == g_d(6, 2, 2, 1));
    CHECK(to_int(static_cast<long long>(h.edges().size())) == stats.edges);
    CHECK(stats.max_clique == 3);
    CHECK(stats.expected_clique == 3);
    CHECK(stats.has_zero_rank_group);  // r_1 = 0 is flagged
    REQUIRE(stats.p_cond.has_value());
    CHECK(*stats.p_cond == 4);  // brute force: independent sets live inside one group
    CHECK(stats.p_bound == Rat(8));
    CHECK(Rat(*stats.p_cond) <= stats.p_bound);

    // t = 1 reduces to the Eckhoff hypergraph
    const ProductFamilyPlan single = ProductFamilyPlan::make(6, 1, 1, 2);
    const auto [h1, stats1] = product_family_hypergraph(single);
    CHECK(h1 == h_eckhoff(6, 1, 2));
    CHECK(stats1.max_clique == 3);

    // clique equals d + r across small parameters
    for (int n = 5; n <= 8; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int r = d + 1; r <= n - d; ++r) {
                const auto [hg, st] = product_family_hypergraph(ProductFamilyPlan::make(n, 2, d, r));
                CHECK(st.edges == st.expected_edges);
                CHECK(st.max_clique == d + r);
            }
}

TEST_CASE("turan transversal complex") {
    const TuranComplexResult tc = turan_1leray_complex(5, 2);
    CHECK(fd_count(tc.complex, 1) == 6);
    CHECK(to_int(fd_count(tc.complex, 1)) == turan_bound(5, 2));
    CHECK(tc.complex.dim() == 1);
    CHECK(tc.factors.size() == 2);
    for (const Complex& factor : tc.factors) CHECK(is_d_leray(factor, 1).holds());

    const TuranComplexResult full = turan_1leray_complex(5, 5);
    CHECK(to_int(fd_count(full.complex, 1)) == binomial(5, 2));
    const TuranComplexResult single = turan_1leray_complex(5, 1);
    CHECK(fd_count(single.complex, 1) == 0);

    CHECK(to_int(fd_count(turan_1leray_complex(7, 3).complex, 1)) == 16);

    for (int n = 3; n <= 9; ++n)
        for (int m = 1; m <= n; ++m) {
            const TuranComplexResult t = turan_1leray_complex(n, m);
            CHECK(to_int(fd_count(t.complex, 1)) == turan_bound(n, m));
            CHECK(t.complex.dim() == m - 1);
        }
}
