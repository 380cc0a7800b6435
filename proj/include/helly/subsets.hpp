#ifndef HELLY_SUBSETS_HPP
#define HELLY_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace helly {

// Vertex subsets of [0, n) as bitmasks, n <= 63.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }

inline bool contains(Mask m, int v) { return (m >> v) & 1u; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_to_verts(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

template <typename It>
Mask verts_to_mask(It begin, It end) {
    Mask m = 0;
    for (It it = begin; it != end; ++it) m |= Mask{1} << *it;
    return m;
}

inline Mask verts_to_mask(const std::vector<int>& vs) { return verts_to_mask(vs.begin(), vs.end()); }

// Visits every subset of m, including 0 and m itself.
template <typename F>
void for_each_subset(Mask m, F&& f) {
    Mask sub = m;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

// All k-subsets of [0, n) in vertex-list lexicographic order.
std::vector<Mask> k_subsets(int n, int k);

// All k-subsets of the support of `ground`, in vertex-list lexicographic order.
std::vector<Mask> k_subsets_of(Mask ground, int k);

// Lexicographic order on the ascending vertex lists the masks encode
// ({0,1} < {0,1,2} < {0,2}).
inline bool mask_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask x = a ^ b;
    int v = std::countr_zero(x);
    if (contains(a, v)) return (b >> v) != 0;  // b exhausted => prefix => b < a
    return (a >> v) == 0;
}

}  // namespace helly

#endif
