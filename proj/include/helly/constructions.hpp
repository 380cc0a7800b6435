#ifndef HELLY_CONSTRUCTIONS_HPP
#define HELLY_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "helly/complex.hpp"
#include "helly/hypergraph.hpp"
#include "helly/numeric.hpp"

namespace helly {

// Partition of {0..n-1} into V_0, V_1, ..., V_t with |V_0| = r - (t-1)d and
// the remaining n - r + (t-1)d vertices balanced over V_1..V_t. Blocks take
// consecutive labels: V_0 gets the lowest, then V_1, ..., V_t, larger blocks
// first.
struct BlockPartition {
    int n = 0, t = 1, r = 1, d = 1;
    std::vector<std::vector<int>> blocks;  // blocks[0] = V_0 (possibly empty)

    static BlockPartition make(int n, int t, int r, int d);
    Mask block_mask(int i) const { return verts_to_mask(blocks[static_cast<std::size_t>(i)]); }
};

// The factor complex K_i: U is a face iff |U intersect V_i| <= d. Maximal
// faces are (V \ V_i) together with a d-subset of V_i (all of V once
// |V_i| <= d).
Complex factor_complex(const BlockPartition& partition, int i, int d);

// K_d(n,t,r): faces meet every nonzero block in at most d vertices. Equals the
// intersection of the t factor complexes; f_d = g_d(n,t,r), dim = d+r-1.
Complex k_extremal(int n, int t, int r, int d);

// The (d+1)-uniform hypergraph on [0,n) whose edges are the (d+1)-subsets
// whose two largest elements differ by at most r.
Hypergraph h_eckhoff(int n, int d, int r);

// Verifies that replacing the largest element a of a non-edge by a - r is a
// bijection onto the (d+1)-subsets of {0..n-r-1}, by explicit construction
// and inverse check.
bool bijection_check(int n, int d, int r);

// How Theorem's product construction splits n vertices and the rank budget
// r - (t-1)d over t groups: sizes and ranks both ascending and balanced, with
// n_i - r_i balanced as well (verified).
struct ProductFamilyPlan {
    int n = 0, t = 1, d = 1, r = 1;
    std::vector<int> group_sizes;                  // n_i, ascending
    std::vector<int> group_ranks;                  // r_i, ascending
    std::vector<std::pair<int, int>> group_spans;  // [begin, end) vertex ranges

    static ProductFamilyPlan make(int n, int t, int d, int r);
};

struct ProductFamilyStats {
    Int edges;
    Int expected_edges;  // g_d(n,t,r)
    int max_clique = 0;
    int expected_clique = 0;  // d + r
    std::vector<int> clique_witness;
    std::optional<int> p_cond;
    Rat p_bound;  // d + (n - t(d-1)) / (r - (t-1)d) + 1
    bool has_zero_rank_group = false;
};

// The (d+1)-uniform hypergraph of intersecting tuples of the product family:
// a tuple is a non-edge iff it lies inside one group and is a non-edge of that
// group's Eckhoff hypergraph. Statistics are measured, not assumed.
std::pair<Hypergraph, ProductFamilyStats> product_family_hypergraph(const ProductFamilyPlan& plan);

// The nerve of the product family, built combinatorially: a set is a face iff
// its slice in every group is a clique of that group's Eckhoff hypergraph
// (sets of at most d vertices per group always qualify).
Complex product_family_nerve(const ProductFamilyPlan& plan);

// m balanced blocks; faces are the partial transversals (at most one vertex
// per block). Each factor is 1-Leray and f_1 meets the Turan-type bound.
struct TuranComplexResult {
    Complex complex;
    std::vector<Complex> factors;
    std::vector<std::vector<int>> blocks;
};
TuranComplexResult turan_1leray_complex(int n, int m);

}  // namespace helly

#endif
