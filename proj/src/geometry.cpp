#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

void require_nonzero(const std::vector<Rat>& u) {
    for (const Rat& v : u)
        if (v != 0) return;
    throw std::invalid_argument("HPolyhedron: zero normal vector");
}

std::vector<LinearConstraint> gather(std::span<const HPolyhedron> bodies, int* dim_out) {
    if (bodies.empty()) throw std::invalid_argument("geometry: empty body list");
    const int dim = bodies[0].dim;
    std::vector<LinearConstraint> rows;
    for (const auto& body : bodies) {
        if (body.dim != dim) throw std::invalid_argument("geometry: dimension mismatch");
        rows.insert(rows.end(), body.constraints.begin(), body.constraints.end());
    }
    *dim_out = dim;
    return rows;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::atoi(v) : fallback;
}

}  // namespace

HPolyhedron HPolyhedron::hyperplane(std::vector<Rat> u, Rat b) {
    require_nonzero(u);
    HPolyhedron h;
    h.dim = static_cast<int>(u.size());
    h.constraints.push_back({std::move(u), std::move(b), Rel::eq});
    return h;
}

HPolyhedron HPolyhedron::slab(std::vector<Rat> u, Rat lo, Rat hi) {
    require_nonzero(u);
    if (lo > hi) throw std::invalid_argument("HPolyhedron::slab: lo > hi");
    HPolyhedron h;
    h.dim = static_cast<int>(u.size());
    std::vector<Rat> neg(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    h.constraints.push_back({u, std::move(hi), Rel::le});
    h.constraints.push_back({std::move(neg), -lo, Rel::le});
    return h;
}

HPolyhedron HPolyhedron::box(const std::vector<Rat>& lo, const std::vector<Rat>& hi) {
    if (lo.size() != hi.size()) throw std::invalid_argument("HPolyhedron::box: size mismatch");
    HPolyhedron h;
    h.dim = static_cast<int>(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i] > hi[i]) throw std::invalid_argument("HPolyhedron::box: lo > hi");
        std::vector<Rat> up(lo.size(), Rat(0)), down(lo.size(), Rat(0));
        up[i] = 1;
        down[i] = -1;
        h.constraints.push_back({std::move(up), hi[i], Rel::le});
        h.constraints.push_back({std::move(down), -lo[i], Rel::le});
    }
    return h;
}

bool feasible(std::span<const HPolyhedron> bodies, std::vector<Rat>* witness) {
    int dim = 0;
    const auto rows = gather(bodies, &dim);
    const std::vector<Rat> zero(static_cast<std::size_t>(dim), Rat(0));
    const LPResult res = lp_solve(dim, rows, zero);
    if (res.status != LPResult::Status::optimal) return false;
    if (witness) *witness = res.point;
    return true;
}

bool feasible(std::span<const ProductBody> bodies) {
    if (bodies.empty()) throw std::invalid_argument("geometry: empty body list");
    const int t = bodies[0].blocks();
    for (const auto& body : bodies)
        if (body.blocks() != t) throw std::invalid_argument("geometry: block count mismatch");
    for (int block = 0; block < t; ++block) {
        std::vector<HPolyhedron> parts;
        parts.reserve(bodies.size());
        for (const auto& body : bodies) parts.push_back(body.components[static_cast<std::size_t>(block)]);
        if (!feasible(parts)) return false;
    }
    return true;
}

MaxCoord maximize_last_coordinate(std::span<const HPolyhedron> bodies) {
    int dim = 0;
    const auto rows = gather(bodies, &dim);
    if (dim < 1) throw std::invalid_argument("maximize_last_coordinate: dimension 0");
    std::vector<Rat> obj(static_cast<std::size_t>(dim), Rat(0));
    obj.back() = 1;
    const LPResult res = lp_solve(dim, rows, obj);
    if (res.status == LPResult::Status::infeasible)
        throw infeasible_error("maximize_last_coordinate: empty intersection");
    MaxCoord out;
    if (res.status == LPResult::Status::unbounded) {
        out.unbounded = true;
        return out;
    }
    out.value = res.value;
    return out;
}

bool bounded(std::span<const HPolyhedron> bodies) {
    int dim = 0;
    const auto rows = gather(bodies, &dim);
    for (int c = 0; c < dim; ++c) {
        for (int sign : {1, -1}) {
            std::vector<Rat> obj(static_cast<std::size_t>(dim), Rat(0));
            obj[static_cast<std::size_t>(c)] = sign;
            const LPResult res = lp_solve(dim, rows, obj);
            if (res.status == LPResult::Status::infeasible) return true;  // empty set
            if (res.status == LPResult::Status::unbounded) return false;
        }
    }
    return true;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rat f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

NerveCaps NerveCaps::from_env() {
    NerveCaps caps;
    caps.max_vertices = env_int("HELLY_NERVE_CAP", caps.max_vertices);
    return caps;
}

namespace {

// Monotone level-by-level enumeration: a tuple is tested only when all of its
// sub-tuples intersect (the nerve is downward closed by definition).
template <typename FeasibleTest>
Complex nerve_impl(int n, int max_dim, const NerveCaps& caps, const FeasibleTest& intersects) {
    if (n > caps.max_vertices)
        throw resource_error("nerve: " + std::to_string(n) + " bodies exceed the enumeration cap " +
                             std::to_string(caps.max_vertices) + " (HELLY_NERVE_CAP)");
    if (max_dim < 0) max_dim = n - 1;
    std::unordered_set<Mask> faces{0};
    std::vector<Mask> frontier{0};
    for (int card = 1; card <= max_dim + 1 && !frontier.empty(); ++card) {
        std::vector<Mask> next;
        for (Mask f : frontier) {
            const int start = f == 0 ? 0 : 64 - std::countl_zero(f);
            for (int v = start; v < n; ++v) {
                const Mask candidate = f | (Mask{1} << v);
                bool closed = true;
                Mask rest = candidate;
                while (rest && closed) {
                    const int u = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (!faces.count(candidate & ~(Mask{1} << u))) closed = false;
                }
                if (closed && intersects(candidate)) {
                    faces.insert(candidate);
                    next.push_back(candidate);
                }
            }
        }
        frontier = std::move(next);
    }
    return Complex::from_masks(n, std::vector<Mask>(faces.begin(), faces.end()));
}

}  // namespace

Complex nerve(std::span<const HPolyhedron> bodies, int max_dim, const NerveCaps& caps) {
    const int n = static_cast<int>(bodies.size());
    auto intersects = [&](Mask tuple) {
        std::vector<HPolyhedron> parts;
        for (int v : mask_to_verts(tuple)) parts.push_back(bodies[static_cast<std::size_t>(v)]);
        return feasible(parts);
    };
    return nerve_impl(n, max_dim, caps, intersects);
}

Complex nerve(std::span<const ProductBody> bodies, int max_dim, const NerveCaps& caps) {
    const int n = static_cast<int>(bodies.size());
    auto intersects = [&](Mask tuple) {
        std::vector<ProductBody> parts;
        for (int v : mask_to_verts(tuple)) parts.push_back(bodies[static_cast<std::size_t>(v)]);
        return feasible(std::span<const ProductBody>(parts));
    };
    return nerve_impl(n, max_dim, caps, intersects);
}

std::vector<HPolyhedron> random_family(int n, int d, std::mt19937_64& rng) {
    if (n < 0 || d < 1) throw std::invalid_argument("random_family: need n >= 0, d >= 1");
    auto small_rat = [&](int lo, int hi) {
        std::uniform_int_distribution<int> num(lo, hi);
        std::uniform_int_distribution<int> den(1, 2);
        return make_rat(num(rng), den(rng));
    };
    auto normal_vec = [&]() {
        std::vector<Rat> u(static_cast<std::size_t>(d));
        while (true) {
            bool nonzero = false;
            for (auto& v : u) {
                v = small_rat(-4, 4);
                nonzero |= (v != 0);
            }
            if (nonzero) return u;
        }
    };
    std::vector<HPolyhedron> family;
    family.reserve(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> kind_dist(0, 9);
    for (int i = 0; i < n; ++i) {
        const int kind = kind_dist(rng);
        if (kind < 3) {
            family.push_back(HPolyhedron::hyperplane(normal_vec(), small_rat(-6, 6)));
        } else if (kind < 7) {
            std::vector<Rat> u = normal_vec();
            Rat lo = small_rat(-6, 6);
            Rat width = small_rat(0, 4);
            family.push_back(HPolyhedron::slab(std::move(u), lo, lo + width));
        } else if (kind < 9) {
            std::vector<Rat> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                lo[static_cast<std::size_t>(j)] = small_rat(-5, 5);
                hi[static_cast<std::size_t>(j)] =
                    lo[static_cast<std::size_t>(j)] + small_rat(0, 3);
            }
            family.push_back(HPolyhedron::box(lo, hi));
        } else {
            family.push_back(HPolyhedron::full_space(d));
        }
    }
    return family;
}

}  // namespace helly
