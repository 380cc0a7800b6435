#include "helly/subsets.hpp"

namespace helly {

namespace {

void k_subsets_rec(const std::vector<int>& verts, int k, std::size_t start, Mask acc,
                   std::vector<Mask>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + k <= verts.size() + 1 && i < verts.size(); ++i)
        k_subsets_rec(verts, k - 1, i + 1, acc | (Mask{1} << verts[i]), out);
}

}  // namespace

std::vector<Mask> k_subsets_of(Mask ground, int k) {
    std::vector<Mask> out;
    if (k < 0) return out;
    std::vector<int> verts = mask_to_verts(ground);
    if (k > static_cast<int>(verts.size())) return out;
    k_subsets_rec(verts, k, 0, 0, out);
    return out;
}

std::vector<Mask> k_subsets(int n, int k) { return k_subsets_of(full_mask(n), k); }

}  // namespace helly
