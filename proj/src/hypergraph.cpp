#include "helly/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace helly {

Hypergraph::Hypergraph(int n, int arity, std::vector<Mask> edges) : n_(n), arity_(arity) {
    if (n < 0 || n > 63) throw std::invalid_argument("Hypergraph: vertex count out of range");
    if (arity < 2) throw std::invalid_argument("Hypergraph: arity must be at least 2");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (Mask e : edges) {
        if ((e & ~full_mask(n)) != 0)
            throw std::invalid_argument("Hypergraph: edge has vertex index >= n");
        if (popcount(e) != arity)
            throw std::invalid_argument("Hypergraph: edge cardinality differs from arity");
    }
    std::sort(edges.begin(), edges.end(), mask_lex_less);
    edges_ = std::move(edges);
    edge_set_.insert(edges_.begin(), edges_.end());
}

Hypergraph Hypergraph::from_edge_lists(int n, int arity,
                                       const std::vector<std::vector<int>>& edges) {
    std::vector<Mask> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        for (int v : e)
            if (v < 0 || v >= n)
                throw std::invalid_argument("Hypergraph: vertex " + std::to_string(v) +
                                            " out of range");
        masks.push_back(verts_to_mask(e));
    }
    return Hypergraph(n, arity, std::move(masks));
}

namespace {

// Shared include/exclude search. `admits(cur, v)` says whether vertex v may
// join the current set; strict improvement keeps the first-found witness.
template <typename Admits>
void subset_search(int n, const Admits& admits, std::vector<int>& cur, int next,
                   SubsetWitness& best) {
    if (static_cast<int>(cur.size()) + (n - next) <= best.size) return;
    if (next == n) {
        if (static_cast<int>(cur.size()) > best.size) {
            best.size = static_cast<int>(cur.size());
            best.vertices = cur;
        }
        return;
    }
    if (admits(cur, next)) {
        cur.push_back(next);
        subset_search(n, admits, cur, next + 1, best);
        cur.pop_back();
    }
    subset_search(n, admits, cur, next + 1, best);
}

// Every (arity-1)-subset of cur together with v, tested against pred.
template <typename Pred>
bool all_extensions(const Hypergraph& h, const std::vector<int>& cur, int v, const Pred& pred) {
    const int need = h.arity() - 1;
    if (static_cast<int>(cur.size()) < need) return true;
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask e = Mask{1} << v;
        for (int i : idx) e |= Mask{1} << cur[static_cast<std::size_t>(i)];
        if (!pred(e)) return false;
        // next combination of indices into cur
        int i = need - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             static_cast<int>(cur.size()) - need + i)
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace

SubsetWitness max_clique_size(const Hypergraph& h) {
    SubsetWitness best;
    best.size = -1;
    std::vector<int> cur;
    auto admits = [&](const std::vector<int>& c, int v) {
        return all_extensions(h, c, v, [&](Mask e) { return h.has_edge(e); });
    };
    subset_search(h.vertex_count(), admits, cur, 0, best);
    if (best.size < 0) best = SubsetWitness{};
    return best;
}

SubsetWitness max_independent_size(const Hypergraph& h) {
    SubsetWitness best;
    best.size = -1;
    std::vector<int> cur;
    auto admits = [&](const std::vector<int>& c, int v) {
        return all_extensions(h, c, v, [&](Mask e) { return !h.has_edge(e); });
    };
    subset_search(h.vertex_count(), admits, cur, 0, best);
    if (best.size < 0) best = SubsetWitness{};
    return best;
}

std::optional<int> p_condition(const Hypergraph& h) {
    if (h.edgeless()) return std::nullopt;
    return max_independent_size(h).size + 1;
}

}  // namespace helly
