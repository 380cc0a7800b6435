#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helly/complex.hpp"
#include "helly/hypergraph.hpp"
#include "helly/json_io.hpp"

using namespace helly;

namespace {

// Independent face oracle for K_1(5,2,1): canonical blocks V_1 = {0,1,2},
// V_2 = {3,4}; a set is a face iff it meets each block in at most one vertex.
bool k1_521_face(Mask u) {
    return popcount(u & 0b00111) <= 1 && popcount(u & 0b11000) <= 1;
}

Complex k1_521() {
    std::vector<Mask> faces;
    for (Mask u = 0; u < 32; ++u)
        if (k1_521_face(u)) faces.push_back(u);
    return Complex::from_masks(5, std::move(faces));
}

std::set<Mask> all_faces(const Complex& k) {
    std::set<Mask> faces;
    for (Mask m : k.maximal_faces()) for_each_subset(m, [&](Mask s) { faces.insert(s); });
    return faces;
}

Complex random_complex(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<Mask> face(0, full_mask(n));
    std::vector<Mask> faces;
    for (int i = 0, c = count(rng); i < c; ++i) faces.push_back(face(rng));
    return Complex::from_masks(n, std::move(faces));
}

}  // namespace

TEST_CASE("degenerate complexes stay distinguishable") {
    const Complex void_complex = Complex::void_complex(3);
    const Complex only_empty_face = Complex::empty_complex(3);
    CHECK(void_complex.is_void());
    CHECK_FALSE(only_empty_face.is_void());
    CHECK(void_complex.maximal_faces().empty());
    CHECK(only_empty_face.maximal_faces() == std::vector<Mask>{0});
    CHECK(void_complex.dim() == -1);
    CHECK(only_empty_face.dim() == -1);
    CHECK(void_complex != only_empty_face);
    CHECK_FALSE(void_complex.has_face(0));
    CHECK(only_empty_face.has_face(0));
}

TEST_CASE("face queries") {
    const Complex simplex = Complex::full_simplex(3);
    CHECK(simplex.has_face(std::vector<int>{0, 2}));
    const Complex path = Complex::from_maximal_faces(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(path.has_face(std::vector<int>{0, 2}));
    CHECK_THROWS_AS(path.has_face(std::vector<int>{0, 5}), std::invalid_argument);
    // vertices 0 and 1 share block V_1, so {0,1} is not a face
    CHECK_FALSE(k1_521().has_face(std::vector<int>{0, 1}));
    CHECK(k1_521().has_face(std::vector<int>{0, 3}));
}

TEST_CASE("antichain invariant") {
    const Complex k = Complex::from_maximal_faces(4, {{0}, {0, 1}, {0, 1}, {2, 3}, {3}});
    CHECK(k.maximal_faces() == std::vector<Mask>{verts_to_mask({0, 1}), verts_to_mask({2, 3})});
    CHECK_THROWS_AS(Complex::from_maximal_faces(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("f-vectors") {
    const FVector full = Complex::full_simplex(4).f_vector();
    CHECK(full.counts == std::vector<long long>{4, 6, 4, 1});
    CHECK(full.dim == 3);
    const FVector circle =
        Complex::from_maximal_faces(3, {{0, 1}, {1, 2}, {0, 2}}).f_vector();
    CHECK(circle.counts == std::vector<long long>{3, 3});
    CHECK(circle.dim == 1);
    const FVector k1 = k1_521().f_vector();
    CHECK(k1.counts == std::vector<long long>{5, 6});  // f_1 = 6 = g_1(5,2,1)
    CHECK(k1.dim == 1);
}

TEST_CASE("induced subcomplexes") {
    const Complex penta = Complex::full_simplex(5);
    CHECK(penta.induced(std::vector<int>{0, 1, 2}) ==
          Complex::from_maximal_faces(5, {{0, 1, 2}}));
    const Complex circle = Complex::from_maximal_faces(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(circle.induced(std::vector<int>{0, 1}) == Complex::from_maximal_faces(3, {{0, 1}}));
    // restricting K_1(5,2,1) to block V_1 leaves 3 isolated vertices
    CHECK(k1_521().induced(std::vector<int>{0, 1, 2}) ==
          Complex::from_maximal_faces(5, {{0}, {1}, {2}}));
    CHECK_THROWS_AS(circle.induced(std::vector<int>{4}), std::invalid_argument);
}

TEST_CASE("induced face sets filter exactly") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6;
        const Complex k = random_complex(n, rng);
        const auto faces = all_faces(k);
        for (Mask w = 0; w <= full_mask(n); ++w) {
            const auto induced_faces = all_faces(k.induced(w));
            std::set<Mask> expected;
            for (Mask s : faces)
                if (subset_of(s, w)) expected.insert(s);
            CHECK(induced_faces == expected);
        }
    }
}

TEST_CASE("intersection examples") {
    const Complex k1 = k1_521();
    std::vector<Complex> single{k1};
    CHECK(Complex::intersect(single) == k1);

    // Remark-style factors: faces meet V_i in at most d vertices
    std::vector<Mask> f1, f2;
    for (Mask u = 0; u < 32; ++u) {
        if (popcount(u & 0b00111) <= 1) f1.push_back(u);
        if (popcount(u & 0b11000) <= 1) f2.push_back(u);
    }
    std::vector<Complex> factors{Complex::from_masks(5, f1), Complex::from_masks(5, f2)};
    CHECK(Complex::intersect(factors) == k1);

    std::vector<Complex> absorb{Complex::full_simplex(3),
                                Complex::from_maximal_faces(3, {{0, 1}, {1, 2}, {0, 2}})};
    CHECK(Complex::intersect(absorb) == absorb[1]);

    std::vector<Complex> mismatched{Complex::full_simplex(3), Complex::full_simplex(4)};
    CHECK_THROWS_AS(Complex::intersect(mismatched), std::invalid_argument);
}

TEST_CASE("intersection is idempotent, commutative, and caps f-vectors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6;
        const Complex a = random_complex(n, rng), b = random_complex(n, rng);
        std::vector<Complex> ab{a, b}, ba{b, a}, aa{a, a};
        const Complex meet = Complex::intersect(ab);
        CHECK(meet == Complex::intersect(ba));
        CHECK(Complex::intersect(aa) == a);
        const FVector fm = meet.f_vector(), fa = a.f_vector(), fb = b.f_vector();
        for (int j = 0; j <= fm.dim; ++j) {
            const long long cm = fm.counts[static_cast<std::size_t>(j)];
            CHECK(cm <= (j <= fa.dim ? fa.counts[static_cast<std::size_t>(j)] : 0));
            CHECK(cm <= (j <= fb.dim ? fb.counts[static_cast<std::size_t>(j)] : 0));
        }
    }
}

TEST_CASE("hypergraph cliques and independent sets") {
    // H_eckhoff(5, 1, 2) built directly from the pair rule |a-b| <= 2
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (b - a <= 2) edges.push_back({a, b});
    const Hypergraph h = Hypergraph::from_edge_lists(5, 2, edges);
    CHECK(h.edges().size() == 7);

    const SubsetWitness clique = max_clique_size(h);
    CHECK(clique.size == 3);
    CHECK(clique.vertices == std::vector<int>{0, 1, 2});

    const SubsetWitness indep = max_independent_size(h);
    CHECK(indep.size == 2);
    CHECK(indep.vertices == std::vector<int>{0, 3});

    CHECK(p_condition(h) == 3);

    const Hypergraph edgeless(4, 2, {});
    CHECK(max_clique_size(edgeless).size == 1);
    CHECK(max_independent_size(edgeless).size == 4);
    CHECK_FALSE(p_condition(edgeless).has_value());

    std::vector<Mask> complete;
    for (Mask e : k_subsets(6, 2)) complete.push_back(e);
    const Hypergraph k6(6, 2, std::move(complete));
    CHECK(max_clique_size(k6).size == 6);
    CHECK(p_condition(k6) == 2);
}

TEST_CASE("p-condition matches direct enumeration") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> edge_count(1, 12);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 7;
        const auto triples = k_subsets(n, 3);
        std::vector<Mask> edges;
        std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
        for (int i = 0, c = edge_count(rng); i < c; ++i) edges.push_back(triples[pick(rng)]);
        const Hypergraph h(n, 3, std::move(edges));
        const int p = *p_condition(h);
        // every p-subset contains an edge, some (p-1)-subset does not
        for (Mask w : k_subsets(n, p)) {
            bool contains_edge = false;
            for (Mask e : h.edges())
                if (subset_of(e, w)) contains_edge = true;
            CHECK(contains_edge);
        }
        bool witness_found = false;
        for (Mask w : k_subsets(n, p - 1)) {
            bool contains_edge = false;
            for (Mask e : h.edges())
                if (subset_of(e, w)) contains_edge = true;
            if (!contains_edge) witness_found = true;
        }
        CHECK(witness_found);
    }
}

TEST_CASE("clique of a hypergraph with an edge is at least the arity") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 7;
        const auto triples = k_subsets(n, 3);
        std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
        const Hypergraph h(n, 3, {triples[pick(rng)], triples[pick(rng)]});
        CHECK(max_clique_size(h).size >= 3);
        CHECK(*p_condition(h) == max_independent_size(h).size + 1);
    }
}

TEST_CASE("json round trips") {
    const Complex k = k1_521();
    CHECK(complex_from_json(complex_to_json(k)) == k);
    const Json j = complex_to_json(k);
    CHECK(j.at("n") == 5);
    CHECK(j.at("maximal_faces").front() == Json::array({0, 3}));

    std::vector<std::vector<int>> edges{{0, 1, 2}, {1, 2, 3}};
    const Hypergraph h = Hypergraph::from_edge_lists(4, 3, edges);
    CHECK(hypergraph_from_json(hypergraph_to_json(h)) == h);
    CHECK_THROWS_AS(Hypergraph::from_edge_lists(4, 3, {{0, 1}}), std::invalid_argument);
}
