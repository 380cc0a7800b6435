#include "helly/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "helly/bounds.hpp"

namespace helly {

BlockPartition BlockPartition::make(int n, int t, int r, int d) {
    if (d < 1 || t < 1 || r < 1) throw std::invalid_argument("BlockPartition: d, t, r positive");
    if (r < (t - 1) * d) throw std::invalid_argument("BlockPartition: need r >= (t-1)d");
    if (n <= d + r) throw std::invalid_argument("BlockPartition: need n > d + r");
    BlockPartition p;
    p.n = n;
    p.t = t;
    p.r = r;
    p.d = d;
    const int v0 = r - (t - 1) * d;
    const BalancedPartition rest = BalancedPartition::make(n - v0, t);
    p.blocks.resize(static_cast<std::size_t>(t) + 1);
    int next = 0;
    for (int v = 0; v < v0; ++v) p.blocks[0].push_back(next++);
    for (int i = 1; i <= t; ++i)
        for (long long v = 0; v < rest.parts[static_cast<std::size_t>(i - 1)]; ++v)
            p.blocks[static_cast<std::size_t>(i)].push_back(next++);
    return p;
}

Complex factor_complex(const BlockPartition& partition, int i, int d) {
    if (i < 1 || i > partition.t)
        throw std::invalid_argument("factor_complex: block index must be in [1, t]");
    const Mask all = full_mask(partition.n);
    const Mask vi = partition.block_mask(i);
    if (popcount(vi) <= d) return Complex::full_simplex(partition.n);
    std::vector<Mask> maximal;
    for (Mask s : k_subsets_of(vi, d)) maximal.push_back((all & ~vi) | s);
    return Complex::from_masks(partition.n, std::move(maximal));
}

Complex k_extremal(int n, int t, int r, int d) {
    const BlockPartition partition = BlockPartition::make(n, t, r, d);
    // Maximal faces pick V_0 plus a d-subset of each nonzero block.
    std::vector<Mask> maximal{partition.block_mask(0)};
    for (int i = 1; i <= t; ++i) {
        const Mask vi = partition.block_mask(i);
        const int take = std::min(d, popcount(vi));
        std::vector<Mask> extended;
        for (Mask base : maximal)
            for (Mask s : k_subsets_of(vi, take)) extended.push_back(base | s);
        maximal = std::move(extended);
    }
    return Complex::from_masks(n, std::move(maximal));
}

Hypergraph h_eckhoff(int n, int d, int r) {
    if (d < 1 || r < 0) throw std::invalid_argument("h_eckhoff: need d >= 1, r >= 0");
    if (n < d + r) throw std::invalid_argument("h_eckhoff: need n >= d + r");
    std::vector<Mask> edges;
    for (Mask s : k_subsets(n, d + 1)) {
        const std::vector<int> verts = mask_to_verts(s);
        if (verts[static_cast<std::size_t>(d)] - verts[static_cast<std::size_t>(d - 1)] <= r)
            edges.push_back(s);
    }
    return Hypergraph(n, d + 1, std::move(edges));
}

bool bijection_check(int n, int d, int r) {
    const Hypergraph h = h_eckhoff(n, d, r);
    std::vector<Mask> image;
    const Mask target_ground = full_mask(n - r);
    for (Mask s : k_subsets(n, d + 1)) {
        if (h.has_edge(s)) continue;
        const std::vector<int> verts = mask_to_verts(s);
        const int top = verts.back();
        const Mask mapped = (s & ~(Mask{1} << top)) | (Mask{1} << (top - r));
        if (popcount(mapped) != d + 1) return false;        // collision inside the set
        if (!subset_of(mapped, target_ground)) return false;  // must land in [0, n-r)
        image.push_back(mapped);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    if (Int(static_cast<long>(image.size())) != binomial(n - r, d + 1)) return false;
    // Inverse: lifting the top vertex of any (d+1)-subset of [0, n-r) by r
    // must produce a non-edge that maps back.
    for (Mask b : k_subsets(n - r, d + 1)) {
        const std::vector<int> verts = mask_to_verts(b);
        const int top = verts.back();
        const Mask lifted = (b & ~(Mask{1} << top)) | (Mask{1} << (top + r));
        if (popcount(lifted) != d + 1) return false;
        if (h.has_edge(lifted)) return false;
    }
    return true;
}

ProductFamilyPlan ProductFamilyPlan::make(int n, int t, int d, int r) {
    if (d < 1 || t < 1 || r < 1) throw std::invalid_argument("ProductFamilyPlan: d, t, r positive");
    if (r <= (t - 1) * d) throw std::invalid_argument("ProductFamilyPlan: need r > (t-1)d");
    if (n < d + r) throw std::invalid_argument("ProductFamilyPlan: need n >= d + r");
    ProductFamilyPlan plan;
    plan.n = n;
    plan.t = t;
    plan.d = d;
    plan.r = r;
    const BalancedPartition sizes = BalancedPartition::make(n, t);
    const BalancedPartition ranks = BalancedPartition::make(r - (t - 1) * d, t);
    // Ascending order; matching ascending sizes with ascending ranks keeps
    // n_i - r_i balanced, which the planner verifies below.
    for (int i = t - 1; i >= 0; --i) {
        plan.group_sizes.push_back(static_cast<int>(sizes.parts[static_cast<std::size_t>(i)]));
        plan.group_ranks.push_back(static_cast<int>(ranks.parts[static_cast<std::size_t>(i)]));
    }
    int begin = 0;
    for (int i = 0; i < t; ++i) {
        plan.group_spans.emplace_back(begin, begin + plan.group_sizes[static_cast<std::size_t>(i)]);
        begin += plan.group_sizes[static_cast<std::size_t>(i)];
    }
    int min_gap = plan.n, max_gap = -plan.n;
    long long gap_total = 0;
    for (int i = 0; i < t; ++i) {
        const int gap = plan.group_sizes[static_cast<std::size_t>(i)] -
                        plan.group_ranks[static_cast<std::size_t>(i)];
        if (gap < d) throw std::logic_error("ProductFamilyPlan: group smaller than d + r_i");
        min_gap = std::min(min_gap, gap);
        max_gap = std::max(max_gap, gap);
        gap_total += gap;
    }
    if (max_gap - min_gap > 1 || gap_total != n - r + (t - 1) * d)
        throw std::logic_error("ProductFamilyPlan: n_i - r_i failed to balance");
    return plan;
}

std::pair<Hypergraph, ProductFamilyStats> product_family_hypergraph(const ProductFamilyPlan& plan) {
    const int n = plan.n, t = plan.t, d = plan.d, r = plan.r;
    std::vector<Hypergraph> locals;
    for (int i = 0; i < t; ++i)
        locals.push_back(h_eckhoff(plan.group_sizes[static_cast<std::size_t>(i)], d,
                                   plan.group_ranks[static_cast<std::size_t>(i)]));
    std::vector<Mask> edges;
    for (Mask s : k_subsets(n, d + 1)) {
        bool non_edge = false;
        for (int i = 0; i < t && !non_edge; ++i) {
            const auto [begin, end] = plan.group_spans[static_cast<std::size_t>(i)];
            const Mask span = full_mask(end) & ~full_mask(begin);
            if (subset_of(s, span) && !locals[static_cast<std::size_t>(i)].has_edge(s >> begin))
                non_edge = true;
        }
        if (!non_edge) edges.push_back(s);
    }
    Hypergraph h(n, d + 1, std::move(edges));

    ProductFamilyStats stats;
    stats.edges = Int(static_cast<long>(h.edges().size()));
    // n = d + r is allowed here, so use the unchecked closed form.
    stats.expected_edges = g_d_formula(n, t, r, d);
    const SubsetWitness clique = max_clique_size(h);
    stats.max_clique = clique.size;
    stats.clique_witness = clique.vertices;
    stats.expected_clique = d + r;
    stats.p_cond = p_condition(h);
    stats.p_bound = Rat(d + 1) + make_rat(Int(n - t * (d - 1)), Int(r - (t - 1) * d));
    for (int ri : plan.group_ranks) stats.has_zero_rank_group |= (ri == 0);
    return {std::move(h), std::move(stats)};
}

Complex product_family_nerve(const ProductFamilyPlan& plan) {
    const int n = plan.n;
    std::vector<Complex> lifted;
    for (int i = 0; i < plan.t; ++i) {
        const auto [begin, end] = plan.group_spans[static_cast<std::size_t>(i)];
        const int size = plan.group_sizes[static_cast<std::size_t>(i)];
        const Hypergraph local =
            h_eckhoff(size, plan.d, plan.group_ranks[static_cast<std::size_t>(i)]);
        const Mask outside = full_mask(n) & ~(full_mask(end) & ~full_mask(begin));
        std::vector<Mask> faces;
        for (Mask w = 0; w <= full_mask(size); ++w) {
            bool clique = true;
            if (popcount(w) > plan.d) {
                for (Mask e : k_subsets_of(w, plan.d + 1))
                    if (!local.has_edge(e)) {
                        clique = false;
                        break;
                    }
            }
            if (clique) faces.push_back(outside | (w << begin));
        }
        lifted.push_back(Complex::from_masks(n, std::move(faces)));
    }
    return Complex::intersect(lifted);
}

TuranComplexResult turan_1leray_complex(int n, int m) {
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("turan_1leray_complex: need 1 <= m <= n");
    const BalancedPartition sizes = BalancedPartition::make(n, m);
    TuranComplexResult result;
    int next = 0;
    for (int i = 0; i < m; ++i) {
        result.blocks.emplace_back();
        for (long long v = 0; v < sizes.parts[static_cast<std::size_t>(i)]; ++v)
            result.blocks.back().push_back(next++);
    }
    const Mask all = full_mask(n);
    std::vector<Mask> transversals{0};
    for (const auto& block : result.blocks) {
        std::vector<Mask> extended;
        for (Mask base : transversals)
            for (int v : block) extended.push_back(base | (Mask{1} << v));
        transversals = std::move(extended);
    }
    result.complex = Complex::from_masks(n, std::move(transversals));
    for (const auto& block : result.blocks) {
        const Mask bm = verts_to_mask(block);
        std::vector<Mask> maximal;
        for (int v : block) maximal.push_back((all & ~bm) | (Mask{1} << v));
        result.factors.push_back(Complex::from_masks(n, std::move(maximal)));
    }
    return result;
}

}  // namespace helly
