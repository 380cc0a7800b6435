#ifndef HELLY_GEOMETRY_HPP
#define HELLY_GEOMETRY_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "helly/complex.hpp"
#include "helly/constructions.hpp"
#include "helly/numeric.hpp"

namespace helly {

enum class Rel { le, eq };

// <normal, x> rel offset, with exact rational coefficients.
struct LinearConstraint {
    std::vector<Rat> normal;
    Rat offset;
    Rel rel = Rel::le;
};

// A convex set in Q^d given by finitely many linear equalities/inequalities.
// An empty constraint list denotes all of R^d.
struct HPolyhedron {
    int dim = 0;
    std::vector<LinearConstraint> constraints;

    static HPolyhedron full_space(int d) { return {d, {}}; }
    static HPolyhedron hyperplane(std::vector<Rat> u, Rat b);
    // lo <= <u, x> <= hi
    static HPolyhedron slab(std::vector<Rat> u, Rat lo, Rat hi);
    static HPolyhedron box(const std::vector<Rat>& lo, const std::vector<Rat>& hi);
};

// A member of the product family: a t-tuple of d-dimensional convex sets,
// modeling their Cartesian product in R^(t*d).
struct ProductBody {
    std::vector<HPolyhedron> components;

    int blocks() const { return static_cast<int>(components.size()); }
    int block_dim() const { return components.empty() ? 0 : components[0].dim; }
};

//---------------------------------------------------------------------------
// Exact rational linear programming (primal simplex, Bland's rule)
//---------------------------------------------------------------------------

struct LPResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rat value;
    std::vector<Rat> point;  // a rational optimum / witness when meaningful
};

// maximize <objective, x> over the constraint set; x ranges over all of R^dim.
LPResult lp_solve(int dim, std::span<const LinearConstraint> rows, std::span<const Rat> objective);

// Exact emptiness test for the intersection; fills `witness` with a rational
// common point when nonempty. All bodies must share the same dimension.
bool feasible(std::span<const HPolyhedron> bodies, std::vector<Rat>* witness = nullptr);

// A tuple of product bodies intersects iff every coordinate block does.
bool feasible(std::span<const ProductBody> bodies);

struct MaxCoord {
    bool unbounded = false;
    Rat value;
};

// Exact supremum of the last coordinate over the intersection; throws
// infeasible_error when the intersection is empty (kept distinct from the
// unbounded outcome).
MaxCoord maximize_last_coordinate(std::span<const HPolyhedron> bodies);

// True when the intersection is bounded in every coordinate direction (an
// empty intersection counts as bounded).
bool bounded(std::span<const HPolyhedron> bodies);

// Small dense rational determinant (used for general-position checks).
Rat determinant(std::vector<std::vector<Rat>> m);

//---------------------------------------------------------------------------
// Fourier-Motzkin elimination: the independent cross-check oracle
//---------------------------------------------------------------------------

namespace fm {

bool feasible(int dim, std::span<const LinearConstraint> rows);

struct Extremum {
    bool is_feasible = false;
    bool bounded = false;
    Rat value;
};

Extremum max_coordinate(int dim, std::span<const LinearConstraint> rows, int coord);

}  // namespace fm

//---------------------------------------------------------------------------
// The inductive slab construction and its certificate
//---------------------------------------------------------------------------

// A_1..A_n in R^d: the first d are hyperplanes through the origin, the rest
// slabs swept downward from a hyperplane by thickness s_i along e_d. Built so
// that a (d+1)-tuple i_1 < ... < i_{d+1} intersects iff i_{d+1} - i_d <= r.
struct SlabFamily {
    int n = 0, d = 1, r = 0;
    std::vector<HPolyhedron> sets;
    std::vector<std::vector<Rat>> normals;
    std::vector<Rat> thicknesses;  // 0 for the first d entries
    std::uint64_t seed = 0;
};

struct ConditionReport {
    struct Item {
        bool pass = true;
        std::string detail;  // first counterexample when failing
    };
    Item independence;  // (i)  every d of {u_1..u_n, e_d} linearly independent
    Item compactness;   // (ii) every d-subset intersection compact and nonempty
    Item tuples;        // (iii) (d+1)-tuples intersect iff i_{d+1} - i_d <= r
    Item ordering;      // (iv) t_sigma increases with max(sigma)

    bool all_pass() const {
        return independence.pass && compactness.pass && tuples.pass && ordering.pass;
    }
};

// Runs the full inductive construction; every condition is re-verified
// exactly before returning. r = 0 is permitted and yields a family with no
// intersecting (d+1)-tuple.
SlabFamily build_slab_family(int n, int d, int r, std::uint64_t seed = 1, int retry_budget = 64);

ConditionReport check_conditions(const SlabFamily& family);

// The product lift: member j of group i constrains coordinate block i to its
// slab and leaves every other block unconstrained.
struct ProductLift {
    std::vector<ProductBody> bodies;
    std::vector<SlabFamily> factors;
};
ProductLift lift_product_family(const ProductFamilyPlan& plan, std::uint64_t seed = 1);

//---------------------------------------------------------------------------
// Nerves and random families
//---------------------------------------------------------------------------

struct NerveCaps {
    int max_vertices = 12;
    static NerveCaps from_env();  // HELLY_NERVE_CAP
};

// Faces up to dimension max_dim are exactly the intersecting tuples; pass
// max_dim = n-1 for the full nerve. The empty family is always a face.
Complex nerve(std::span<const HPolyhedron> bodies, int max_dim, const NerveCaps& caps = {});
Complex nerve(std::span<const ProductBody> bodies, int max_dim, const NerveCaps& caps = {});

// A mix of hyperplanes, slabs, boxes and copies of R^d with small random
// rational coefficients; every body is nonempty, so the nerve is the nerve of
// a convex family in R^d.
std::vector<HPolyhedron> random_family(int n, int d, std::mt19937_64& rng);

}  // namespace helly

#endif
