#include "helly/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace helly {

std::vector<Mask> antichain_reduce(std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Mask> keep;
    keep.reserve(faces.size());
    for (Mask f : faces) {
        bool dominated = false;
        for (Mask g : faces) {
            if (g != f && subset_of(f, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end(), mask_lex_less);
    return keep;
}

Complex Complex::from_masks(int n, std::vector<Mask> faces) {
    if (n < 0 || n > 63) throw std::invalid_argument("Complex: vertex count out of range");
    for (Mask f : faces)
        if ((f & ~full_mask(n)) != 0)
            throw std::invalid_argument("Complex: face has vertex index >= n");
    return Complex(n, antichain_reduce(std::move(faces)));
}

Complex Complex::from_maximal_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<Mask> masks;
    masks.reserve(faces.size());
    for (const auto& f : faces) {
        for (int v : f)
            if (v < 0 || v >= n)
                throw std::invalid_argument("Complex: vertex " + std::to_string(v) +
                                            " out of range [0," + std::to_string(n) + ")");
        masks.push_back(verts_to_mask(f));
    }
    return from_masks(n, std::move(masks));
}

int Complex::dim() const {
    int best = -1;
    for (Mask f : maximal_) best = std::max(best, popcount(f) - 1);
    return best;
}

bool Complex::has_face(Mask s) const {
    for (Mask f : maximal_)
        if (subset_of(s, f)) return true;
    return false;
}

bool Complex::has_face(std::span<const int> verts) const {
    for (int v : verts)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Complex::has_face: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    return has_face(verts_to_mask(verts.begin(), verts.end()));
}

Mask Complex::support() const {
    Mask u = 0;
    for (Mask f : maximal_) u |= f;
    return u;
}

std::vector<std::vector<Mask>> Complex::faces_by_card() const {
    std::vector<std::vector<Mask>> by_card;
    if (is_void()) return by_card;
    by_card.resize(static_cast<std::size_t>(dim()) + 2);
    std::unordered_set<Mask> seen;
    for (Mask m : maximal_)
        for_each_subset(m, [&](Mask s) {
            if (seen.insert(s).second) by_card[static_cast<std::size_t>(popcount(s))].push_back(s);
        });
    for (auto& level : by_card) std::sort(level.begin(), level.end(), mask_lex_less);
    return by_card;
}

FVector Complex::f_vector() const {
    FVector fv;
    fv.dim = dim();
    if (fv.dim < 0) return fv;
    auto by_card = faces_by_card();
    fv.counts.resize(static_cast<std::size_t>(fv.dim) + 1);
    for (int j = 0; j <= fv.dim; ++j)
        fv.counts[static_cast<std::size_t>(j)] =
            static_cast<long long>(by_card[static_cast<std::size_t>(j) + 1].size());
    return fv;
}

Complex Complex::induced(Mask w) const {
    if ((w & ~full_mask(n_)) != 0)
        throw std::invalid_argument("Complex::induced: vertex subset not within [0,n)");
    if (is_void()) return *this;
    std::vector<Mask> cut;
    cut.reserve(maximal_.size());
    for (Mask f : maximal_) cut.push_back(f & w);
    return Complex(n_, antichain_reduce(std::move(cut)));
}

Complex Complex::induced(std::span<const int> verts) const {
    for (int v : verts)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Complex::induced: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    return induced(verts_to_mask(verts.begin(), verts.end()));
}

Complex Complex::intersect(std::span<const Complex> complexes) {
    if (complexes.empty()) throw std::invalid_argument("Complex::intersect: empty input");
    const int n = complexes[0].vertex_count();
    for (const Complex& k : complexes)
        if (k.vertex_count() != n)
            throw std::invalid_argument("Complex::intersect: mismatched vertex counts");
    Complex acc = complexes[0];
    for (std::size_t i = 1; i < complexes.size(); ++i) {
        if (acc.is_void() || complexes[i].is_void()) return void_complex(n);
        std::vector<Mask> meets;
        meets.reserve(acc.maximal_.size() * complexes[i].maximal_.size());
        for (Mask a : acc.maximal_)
            for (Mask b : complexes[i].maximal_) meets.push_back(a & b);
        acc = Complex(n, antichain_reduce(std::move(meets)));
    }
    return acc;
}

}  // namespace helly
