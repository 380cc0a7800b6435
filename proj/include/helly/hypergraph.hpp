#ifndef HELLY_HYPERGRAPH_HPP
#define HELLY_HYPERGRAPH_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "helly/subsets.hpp"

namespace helly {

// A k-uniform hypergraph on vertex set {0..n-1}.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, int arity, std::vector<Mask> edges);
    static Hypergraph from_edge_lists(int n, int arity, const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return n_; }
    int arity() const { return arity_; }
    const std::vector<Mask>& edges() const { return edges_; }
    bool has_edge(Mask e) const { return edge_set_.count(e) != 0; }
    bool edgeless() const { return edges_.empty(); }

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && arity_ == other.arity_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int arity_ = 2;
    std::vector<Mask> edges_;  // sorted by mask_lex_less
    std::unordered_set<Mask> edge_set_;
};

struct SubsetWitness {
    int size = 0;
    std::vector<int> vertices;
};

// Largest W such that every arity-subset of W is an edge (any W with fewer
// than arity vertices counts as a clique). Exact branch and bound; the witness
// is the first maximum found when vertices are explored in ascending order,
// include-branch first.
SubsetWitness max_clique_size(const Hypergraph& h);

// Largest W containing no edge. Same search discipline as max_clique_size.
SubsetWitness max_independent_size(const Hypergraph& h);

// Least p such that every p-subset of vertices contains an edge, i.e.
// max_independent_size(h) + 1. Empty when h has no edge (the condition is
// unattainable: no p works).
std::optional<int> p_condition(const Hypergraph& h);

}  // namespace helly

#endif
