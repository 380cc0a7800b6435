#ifndef HELLY_COMPLEX_HPP
#define HELLY_COMPLEX_HPP

#include <span>
#include <vector>

#include "helly/subsets.hpp"

namespace helly {

// f-vector of a complex: counts[j] = number of j-dimensional faces (faces of
// cardinality j+1); dim = -1 when there is no nonempty face.
struct FVector {
    std::vector<long long> counts;
    int dim = -1;
};

// A finite abstract simplicial complex on vertex set {0..n-1}, stored by its
// maximal faces. Two degenerate complexes are kept distinct: the void complex
// has no faces at all (maximal_faces empty), while the complex consisting of
// only the empty face has maximal_faces = {emptyset}. Immutable once built.
class Complex {
public:
    Complex() = default;

    static Complex void_complex(int n) { return Complex(n, {}); }
    static Complex empty_complex(int n) { return Complex(n, {Mask{0}}); }
    static Complex full_simplex(int n) { return Complex(n, {full_mask(n)}); }

    // Validates vertex ranges and reduces the input to an antichain.
    static Complex from_maximal_faces(int n, const std::vector<std::vector<int>>& faces);
    static Complex from_masks(int n, std::vector<Mask> faces);

    int vertex_count() const { return n_; }
    const std::vector<Mask>& maximal_faces() const { return maximal_; }

    bool is_void() const { return maximal_.empty(); }
    // Size of the largest face minus one (-1 for the void complex and for the
    // complex containing only the empty face).
    int dim() const;

    bool has_face(Mask s) const;
    bool has_face(std::span<const int> verts) const;  // throws on out-of-range vertex

    // Union of the maximal faces (the vertices that are actually 0-faces).
    Mask support() const;

    FVector f_vector() const;

    // Every face, grouped by cardinality: result[c] lists the faces with c
    // vertices in vertex-list lexicographic order. result[0] is {emptyset}
    // unless the complex is void.
    std::vector<std::vector<Mask>> faces_by_card() const;

    // The induced subcomplex X[W] = {s in X : s subset of W}, on the original
    // vertex labels.
    Complex induced(Mask w) const;
    Complex induced(std::span<const int> verts) const;

    // Face sets intersect; every input must share the same vertex count.
    static Complex intersect(std::span<const Complex> complexes);

    bool operator==(const Complex& other) const = default;

private:
    Complex(int n, std::vector<Mask> maximal) : n_(n), maximal_(std::move(maximal)) {}

    int n_ = 0;
    std::vector<Mask> maximal_;  // antichain, sorted by mask_lex_less
};

// Keeps the maximal elements, sorted canonically.
std::vector<Mask> antichain_reduce(std::vector<Mask> faces);

}  // namespace helly

#endif
