#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helly/constructions.hpp"
#include "helly/errors.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/json_io.hpp"

using namespace helly;

namespace {

std::vector<Rat> rvec(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<LinearConstraint> random_system(int dim, int rows, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-4, 4), kind(0, 5);
    std::vector<LinearConstraint> out;
    for (int i = 0; i < rows; ++i) {
        LinearConstraint c;
        c.normal.resize(static_cast<std::size_t>(dim));
        bool nonzero = false;
        for (auto& v : c.normal) {
            v = entry(rng);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) c.normal[0] = 1;
        c.offset = entry(rng);
        c.rel = kind(rng) == 0 ? Rel::eq : Rel::le;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("lp basics") {
    // the point (1, 2) as two equalities
    std::vector<LinearConstraint> point{{rvec({1, 0}), Rat(1), Rel::eq},
                                        {rvec({0, 1}), Rat(2), Rel::eq}};
    std::vector<Rat> obj{Rat(0), Rat(1)};
    const LPResult at_point = lp_solve(2, point, obj);
    CHECK(at_point.status == LPResult::Status::optimal);
    CHECK(at_point.value == 2);
    CHECK(at_point.point == std::vector<Rat>{Rat(1), Rat(2)});

    // unbounded upward
    std::vector<LinearConstraint> half{{rvec({0, -1}), Rat(0), Rel::le}};
    CHECK(lp_solve(2, half, obj).status == LPResult::Status::unbounded);

    // infeasible: x = 0 and x = 1
    std::vector<LinearConstraint> clash{{rvec({1}), Rat(0), Rel::eq},
                                        {rvec({1}), Rat(1), Rel::eq}};
    std::vector<Rat> obj1{Rat(1)};
    CHECK(lp_solve(1, clash, obj1).status == LPResult::Status::infeasible);
}

TEST_CASE("feasibility of polyhedra") {
    const HPolyhedron h0 = HPolyhedron::hyperplane(rvec({1, 0}), Rat(0));
    const HPolyhedron h1 = HPolyhedron::hyperplane(rvec({1, 0}), Rat(1));
    std::vector<HPolyhedron> parallel{h0, h1};
    CHECK_FALSE(feasible(parallel));

    std::vector<HPolyhedron> slab_only{HPolyhedron::slab(rvec({1, 1}), Rat(0), Rat(2))};
    std::vector<Rat> witness;
    CHECK(feasible(slab_only, &witness));
    Rat dot = witness[0] + witness[1];
    CHECK(dot >= 0);
    CHECK(dot <= 2);

    std::vector<HPolyhedron> mixed{h0, HPolyhedron::full_space(2)};
    CHECK(feasible(mixed));

    std::vector<HPolyhedron> wrong{h0, HPolyhedron::full_space(3)};
    CHECK_THROWS_AS(feasible(wrong), std::invalid_argument);
    CHECK_THROWS_AS(HPolyhedron::hyperplane(rvec({0, 0}), Rat(1)), std::invalid_argument);
}

TEST_CASE("maximize last coordinate") {
    std::vector<HPolyhedron> slab{HPolyhedron::slab(rvec({0, 1}), Rat(0), Rat(1))};
    const MaxCoord top = maximize_last_coordinate(slab);
    CHECK_FALSE(top.unbounded);
    CHECK(top.value == 1);

    // two generic lines meet at (1, 2)
    std::vector<HPolyhedron> lines{HPolyhedron::hyperplane(rvec({1, 1}), Rat(3)),
                                   HPolyhedron::hyperplane(rvec({1, -1}), Rat(-1))};
    CHECK(maximize_last_coordinate(lines).value == 2);

    std::vector<HPolyhedron> empty{HPolyhedron::hyperplane(rvec({1, 0}), Rat(0)),
                                   HPolyhedron::hyperplane(rvec({1, 0}), Rat(1))};
    CHECK_THROWS_AS(maximize_last_coordinate(empty), infeasible_error);

    std::vector<HPolyhedron> free{HPolyhedron::full_space(2)};
    CHECK(maximize_last_coordinate(free).unbounded);
    CHECK(bounded(slab) == false);  // a 2-d slab is unbounded sideways
    std::vector<HPolyhedron> boxed{HPolyhedron::box(rvec({0, 0}), rvec({1, 1}))};
    CHECK(bounded(boxed));
}

TEST_CASE("simplex agrees with the elimination oracle") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> dim_dist(1, 3), rows_dist(1, 12);
    int feasible_seen = 0, bounded_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const int dim = dim_dist(rng);
        const auto rows = random_system(dim, rows_dist(rng), rng);
        std::vector<Rat> obj(static_cast<std::size_t>(dim), Rat(0));
        obj.back() = 1;
        const LPResult lp = lp_solve(dim, rows, obj);
        const fm::Extremum ex = fm::max_coordinate(dim, rows, dim - 1);
        CHECK((lp.status != LPResult::Status::infeasible) == ex.is_feasible);
        CHECK(fm::feasible(dim, rows) == ex.is_feasible);
        if (!ex.is_feasible) continue;
        ++feasible_seen;
        CHECK((lp.status == LPResult::Status::optimal) == ex.bounded);
        // the returned point must satisfy every constraint
        for (const auto& row : rows) {
            Rat dot(0);
            for (int j = 0; j < dim; ++j)
                dot += row.normal[static_cast<std::size_t>(j)] *
                       lp.point[static_cast<std::size_t>(j)];
            if (row.rel == Rel::le)
                CHECK(dot <= row.offset);
            else
                CHECK(dot == row.offset);
        }
        if (ex.bounded) {
            ++bounded_seen;
            CHECK(lp.value == ex.value);
        }
    }
    CHECK(feasible_seen > 50);
    CHECK(bounded_seen > 20);
}

TEST_CASE("determinants") {
    CHECK(determinant({{Rat(2)}}) == 2);
    CHECK(determinant({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 0);
    CHECK(determinant({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == -1);
    CHECK(determinant({{Rat(1), Rat(1), Rat(1)},
                       {Rat(1), Rat(2), Rat(4)},
                       {Rat(1), Rat(3), Rat(9)}}) == 2);  // Vandermonde on 1,2,3
}

TEST_CASE("slab families realize the Eckhoff intersection pattern") {
    for (int d = 1; d <= 3; ++d)
        for (int r = 0; r <= 3; ++r) {
            const int n = std::max(d + r, d + 1) + 1;
            const SlabFamily family = build_slab_family(n, d, r, 5);
            CHECK(family.sets.size() == static_cast<std::size_t>(n));
            const ConditionReport report = check_conditions(family);
            CHECK(report.independence.pass);
            CHECK(report.compactness.pass);
            CHECK(report.tuples.pass);
            CHECK(report.ordering.pass);
        }

    // (4,2,1): the nerve's (d+1)-tuples match the Eckhoff hypergraph
    const SlabFamily family = build_slab_family(4, 2, 1, 7);
    const Complex nv = nerve(family.sets, 2);
    const auto by_card = nv.faces_by_card();
    CHECK(by_card[3] == h_eckhoff(4, 2, 1).edges());

    const SlabFamily line = build_slab_family(5, 1, 2, 9);
    const auto pairs = nerve(line.sets, 1).faces_by_card()[2];
    CHECK(pairs == h_eckhoff(5, 1, 2).edges());
}

TEST_CASE("condition checker reports corruption") {
    SlabFamily family = build_slab_family(5, 2, 1, 3);
    SUBCASE("duplicated normal breaks independence") {
        SlabFamily bad = family;
        bad.normals[3] = bad.normals[2];
        const ConditionReport report = check_conditions(bad);
        CHECK_FALSE(report.independence.pass);
        CHECK(report.independence.detail.find("singular") != std::string::npos);
    }
    SUBCASE("slab stretched past its window breaks the tuple criterion") {
        SlabFamily bad = family;
        for (auto& c : bad.sets.back().constraints)
            if (c.normal.back() < 0) c.offset += 1000;  // lower face pushed far down
        const ConditionReport report = check_conditions(bad);
        CHECK_FALSE(report.tuples.pass);
    }
}

TEST_CASE("nerves of disjoint slabs are isolated vertices") {
    std::vector<HPolyhedron> slabs;
    for (int i = 0; i < 4; ++i)
        slabs.push_back(
            HPolyhedron::slab(rvec({0, 1}), Rat(3 * i), Rat(3 * i + 1)));
    const Complex nv = nerve(slabs, 3);
    CHECK(nv.dim() == 0);
    CHECK(nv.maximal_faces().size() == 4);

    NerveCaps tight;
    tight.max_vertices = 3;
    CHECK_THROWS_AS(nerve(slabs, 3, tight), resource_error);
}

TEST_CASE("random nerves are d-Leray and Helly-consistent") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 12; ++trial) {
        const int d = 1 + (trial % 2), n = 6;
        const auto family = random_family(n, d, rng);
        const Complex nv = nerve(family, n - 1);
        CHECK(is_d_leray(nv, d).holds());
        // any vertex set whose (d+1)-subsets are all faces is itself a face
        for (Mask w = 0; w <= full_mask(n); ++w) {
            if (popcount(w) <= d + 1) continue;
            bool all_tuples = true;
            for (Mask s : k_subsets_of(w, d + 1))
                if (!nv.has_face(s)) {
                    all_tuples = false;
                    break;
                }
            if (all_tuples) CHECK(nv.has_face(w));
        }
    }
}

TEST_CASE("product nerves factor blockwise") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + (trial % 2), t = 2, n = 4;
        // random product bodies, each constraining one block
        std::vector<ProductBody> bodies;
        std::uniform_int_distribution<int> pick_block(0, t - 1);
        for (int i = 0; i < n; ++i) {
            ProductBody body;
            const int active = pick_block(rng);
            auto parts = random_family(t, d, rng);
            for (int b = 0; b < t; ++b)
                body.components.push_back(b == active ? parts[static_cast<std::size_t>(b)]
                                                      : HPolyhedron::full_space(d));
            bodies.push_back(std::move(body));
        }
        // blockwise feasibility must agree with the joint product system
        for (Mask w = 1; w <= full_mask(n); ++w) {
            std::vector<ProductBody> tuple;
            for (int v : mask_to_verts(w)) tuple.push_back(bodies[static_cast<std::size_t>(v)]);
            // embed into R^(t*d)
            std::vector<LinearConstraint> joint;
            for (const auto& body : tuple)
                for (int b = 0; b < t; ++b)
                    for (const auto& c : body.components[static_cast<std::size_t>(b)].constraints) {
                        LinearConstraint wide;
                        wide.normal.assign(static_cast<std::size_t>(t * d), Rat(0));
                        for (int j = 0; j < d; ++j)
                            wide.normal[static_cast<std::size_t>(b * d + j)] =
                                c.normal[static_cast<std::size_t>(j)];
                        wide.offset = c.offset;
                        wide.rel = c.rel;
                        joint.push_back(std::move(wide));
                    }
            std::vector<Rat> zero(static_cast<std::size_t>(t * d), Rat(0));
            const bool joint_ok =
                lp_solve(t * d, joint, zero).status == LPResult::Status::optimal;
            CHECK(feasible(std::span<const ProductBody>(tuple)) == joint_ok);
        }
    }
}

TEST_CASE("lifted product families") {
    const ProductFamilyPlan plan = ProductFamilyPlan::make(6, 2, 1, 2);
    const ProductLift lift = lift_product_family(plan, 21);
    CHECK(lift.bodies.size() == 6);
    CHECK(lift.factors.size() == 2);
    // members 0-2 constrain block 0 only, members 3-5 block 1 only
    for (int i = 0; i < 6; ++i) {
        const auto& body = lift.bodies[static_cast<std::size_t>(i)];
        const int active = i < 3 ? 0 : 1;
        for (int b = 0; b < 2; ++b)
            CHECK(body.components[static_cast<std::size_t>(b)].constraints.empty() ==
                  (b != active));
    }
    const auto [h, stats] = product_family_hypergraph(plan);
    const Complex nv = nerve(std::span<const ProductBody>(lift.bodies), 5);
    CHECK(nv.faces_by_card()[2] == h.edges());
    CHECK(nv.dim() == 1 + 2 - 1);
    // the combinatorial product nerve agrees with the geometric lift, face for face
    CHECK(nv == product_family_nerve(plan));
}

TEST_CASE("combinatorial product nerve matches the geometric lift") {
    for (int d = 1; d <= 2; ++d)
        for (int r = d + 1; r <= d + 2; ++r)
            for (int n = d + r; n <= d + r + 2; ++n) {
                const ProductFamilyPlan plan = ProductFamilyPlan::make(n, 2, d, r);
                const ProductLift lift = lift_product_family(plan, 11);
                const Complex geometric =
                    nerve(std::span<const ProductBody>(lift.bodies), n - 1);
                CHECK(geometric == product_family_nerve(plan));
            }
}

TEST_CASE("slab construction failure names the condition") {
    // retry budget zero forces the constructor to give up immediately
    CHECK_THROWS_AS(build_slab_family(5, 2, 1, 3, 0), construction_error);
}

TEST_CASE("geometry json round trips") {
    const HPolyhedron slab =
        HPolyhedron::slab(rvec({1, -2}), make_rat(-1, 3), make_rat(5, 2));
    const Json j = polyhedron_to_json(slab);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("constraints")[0].at("offset") == "5/2");
    const HPolyhedron back = polyhedron_from_json(j);
    CHECK(back.constraints.size() == 2);
    CHECK(back.constraints[1].normal[1] == Rat(2));

    ProductBody body;
    body.components = {slab, HPolyhedron::full_space(2)};
    const ProductBody body_back = product_body_from_json(product_body_to_json(body));
    CHECK(body_back.blocks() == 2);
    CHECK(body_back.components[1].constraints.empty());

    const SlabFamily family = build_slab_family(4, 1, 1, 17);
    const Json fj = slab_family_to_json(family);
    CHECK(fj.at("seed") == 17);
    CHECK(fj.at("n") == 4);
    CHECK(fj.at("max_coefficient_bits").get<std::size_t>() >= 1);
    CHECK(fj.at("sets").size() == 4);

    CHECK_THROWS_AS(polyhedron_from_json(Json{{"dim", 2},
                                              {"constraints",
                                               Json::array({Json{{"normal", Json::array({"1/1"})},
                                                                 {"offset", "0/1"},
                                                                 {"rel", "le"}}})}}),
                    std::invalid_argument);
}
