#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

std::string mask_str(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int v : mask_to_verts(m)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::vector<Rat> unit_last(int d) {
    std::vector<Rat> e(static_cast<std::size_t>(d), Rat(0));
    e.back() = 1;
    return e;
}

// Vandermonde rows (1, c, c^2, ...) on c = 1..d: every d of these together
// with e_d stay linearly independent.
std::vector<Rat> vandermonde_normal(int d, int c) {
    std::vector<Rat> u(static_cast<std::size_t>(d));
    Int p(1);
    for (int j = 0; j < d; ++j) {
        u[static_cast<std::size_t>(j)] = Rat(p);
        p *= c;
    }
    return u;
}

std::vector<HPolyhedron> pick(const std::vector<HPolyhedron>& sets, Mask indices) {
    std::vector<HPolyhedron> out;
    for (int v : mask_to_verts(indices)) out.push_back(sets[static_cast<std::size_t>(v)]);
    return out;
}

int max_vert(Mask m) { return 63 - std::countl_zero(m); }

// Independence of every d-subset of {normals..., e_d} that includes the last
// normal added; `upto` = how many normals participate.
bool new_normal_independent(const std::vector<std::vector<Rat>>& normals, int d) {
    std::vector<std::vector<Rat>> pool(normals.begin(), normals.end() - 1);
    pool.push_back(unit_last(d));  // e_d joins the candidate pool
    for (Mask rest : k_subsets(static_cast<int>(pool.size()), d - 1)) {
        std::vector<std::vector<Rat>> square;
        for (int v : mask_to_verts(rest)) square.push_back(pool[static_cast<std::size_t>(v)]);
        square.push_back(normals.back());
        if (determinant(square) == 0) return false;
    }
    return true;
}

}  // namespace

SlabFamily build_slab_family(int n, int d, int r, std::uint64_t seed, int retry_budget) {
    if (d < 1 || r < 0 || n < d + r || n < d)
        throw std::invalid_argument("build_slab_family: need n >= max(d, d+r), d >= 1, r >= 0");
    SlabFamily family;
    family.n = n;
    family.d = d;
    family.r = r;
    family.seed = seed;
    std::mt19937_64 rng(seed);

    for (int i = 0; i < d; ++i) {
        family.normals.push_back(vandermonde_normal(d, i + 1));
        family.sets.push_back(HPolyhedron::hyperplane(family.normals.back(), Rat(0)));
        family.thicknesses.push_back(Rat(0));
    }

    // t_sigma per d-subset of the indices built so far.
    std::map<Mask, Rat> tops;
    {
        const Mask sigma0 = full_mask(d);
        const MaxCoord t0 = maximize_last_coordinate(pick(family.sets, sigma0));
        if (t0.unbounded) throw construction_error("build_slab_family: initial point unbounded");
        tops.emplace(sigma0, t0.value);
    }

    for (int m = d; m < n; ++m) {
        const int lower_threshold = m - r;  // tuples {.. i_d, m} intersect iff i_d >= this
        Rat max_top = tops.begin()->second;
        std::optional<Rat> t_min, t_prime;
        for (const auto& [sigma, top] : tops) {
            max_top = std::max(max_top, top);
            if (max_vert(sigma) >= lower_threshold) {
                if (!t_min || top < *t_min) t_min = top;
            } else {
                if (!t_prime || top > *t_prime) t_prime = top;
            }
        }
        const Rat y_height = max_top + 1;
        const Rat window_lo = t_min ? Rat(y_height - *t_min) : Rat(0);
        const Rat window_hi = t_prime ? Rat(y_height - *t_prime) : Rat(window_lo + 2);
        const Rat thickness = (window_lo + window_hi) / 2;

        bool placed = false;
        std::string failure = "no attempt made";
        for (int attempt = 0; attempt < retry_budget && !placed; ++attempt) {
            // epsilon_i uniform over fixed-denominator rationals in (-eta, eta),
            // eta = 2^-8 halving on every failed attempt.
            const int eta_exp = 8 + attempt;
            const long bound = eta_exp < 24 ? (1L << (24 - eta_exp)) : 0;
            std::uniform_int_distribution<long> dist(-bound, bound);
            std::vector<Rat> u = unit_last(d);
            for (int j = 0; j < d; ++j)
                u[static_cast<std::size_t>(j)] += make_rat(Int(dist(rng)), Int(1) << 24);

            const Rat scale = u.back();  // 1 + eps_d > 0
            HPolyhedron candidate =
                HPolyhedron::slab(u, scale * (y_height - thickness), scale * y_height);

            family.normals.push_back(u);
            family.sets.push_back(std::move(candidate));
            family.thicknesses.push_back(thickness);

            auto reject = [&](std::string why) {
                failure = std::move(why);
                family.normals.pop_back();
                family.sets.pop_back();
                family.thicknesses.pop_back();
            };

            if (!new_normal_independent(family.normals, d)) {
                reject("(i) independence: perturbed normal degenerate");
                continue;
            }
            bool ok = true;
            std::map<Mask, Rat> fresh_tops;
            for (Mask sub : k_subsets(m, d - 1)) {
                const Mask sigma = sub | (Mask{1} << m);
                const auto parts = pick(family.sets, sigma);
                if (!feasible(parts)) {
                    reject("(ii) compactness: A_sigma empty for sigma=" + mask_str(sigma));
                    ok = false;
                    break;
                }
                if (!bounded(parts)) {
                    reject("(ii) compactness: A_sigma unbounded for sigma=" + mask_str(sigma));
                    ok = false;
                    break;
                }
                const MaxCoord top = maximize_last_coordinate(parts);
                if (top.value <= max_top) {
                    reject("(iv) ordering: new t_sigma not above older tops, sigma=" +
                           mask_str(sigma));
                    ok = false;
                    break;
                }
                fresh_tops.emplace(sigma, top.value);
            }
            if (!ok) continue;
            for (Mask sigma : k_subsets(m, d)) {
                const bool expect = max_vert(sigma) >= lower_threshold;
                std::vector<HPolyhedron> parts = pick(family.sets, sigma);
                parts.push_back(family.sets.back());
                if (feasible(parts) != expect) {
                    reject("(iii) tuple criterion: " + mask_str(sigma | (Mask{1} << m)) +
                           (expect ? " should intersect" : " should not intersect"));
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            tops.merge(fresh_tops);
            placed = true;
        }
        if (!placed)
            throw construction_error("build_slab_family: retry budget exhausted at set " +
                                     std::to_string(m) + "; last failure: " + failure);
    }

    const ConditionReport report = check_conditions(family);
    if (!report.all_pass()) {
        std::string why = !report.independence.pass   ? report.independence.detail
                          : !report.compactness.pass  ? report.compactness.detail
                          : !report.tuples.pass       ? report.tuples.detail
                                                      : report.ordering.detail;
        throw construction_error("build_slab_family: final verification failed: " + why);
    }
    return family;
}

ConditionReport check_conditions(const SlabFamily& family) {
    ConditionReport report;
    const int n = family.n, d = family.d;

    std::vector<std::vector<Rat>> pool = family.normals;
    pool.push_back(unit_last(d));
    for (Mask sub : k_subsets(n + 1, d)) {
        std::vector<std::vector<Rat>> square;
        for (int v : mask_to_verts(sub)) square.push_back(pool[static_cast<std::size_t>(v)]);
        if (determinant(square) == 0) {
            report.independence = {false, "singular d-subset " + mask_str(sub) +
                                              " of {u_1..u_n, e_d} (index n means e_d)"};
            break;
        }
    }

    std::map<Mask, Rat> tops;
    for (Mask sigma : k_subsets(n, d)) {
        const auto parts = pick(family.sets, sigma);
        if (!feasible(parts)) {
            report.compactness = {false, "A_sigma empty for sigma=" + mask_str(sigma)};
            break;
        }
        if (!bounded(parts)) {
            report.compactness = {false, "A_sigma unbounded for sigma=" + mask_str(sigma)};
            break;
        }
        tops.emplace(sigma, maximize_last_coordinate(parts).value);
    }

    for (Mask tuple : k_subsets(n, d + 1)) {
        const auto verts = mask_to_verts(tuple);
        const bool expect =
            verts[static_cast<std::size_t>(d)] - verts[static_cast<std::size_t>(d - 1)] <=
            family.r;
        if (feasible(pick(family.sets, tuple)) != expect) {
            report.tuples = {false, "tuple " + mask_str(tuple) +
                                        (expect ? " fails to intersect" : " intersects")};
            break;
        }
    }

    if (report.compactness.pass) {
        // group tops by the largest index; maxima must increase strictly.
        std::map<int, std::pair<Rat, Rat>> by_max;  // max index -> (min, max) of tops
        for (const auto& [sigma, top] : tops) {
            const int hi = max_vert(sigma);
            auto it = by_max.find(hi);
            if (it == by_max.end())
                by_max.emplace(hi, std::make_pair(top, top));
            else {
                it->second.first = std::min(it->second.first, top);
                it->second.second = std::max(it->second.second, top);
            }
        }
        const std::pair<const int, std::pair<Rat, Rat>>* prev = nullptr;
        for (const auto& entry : by_max) {
            if (prev && !(prev->second.second < entry.second.first)) {
                report.ordering = {false,
                                   "t_sigma with max index " + std::to_string(prev->first) +
                                       " not below t_tau with max index " +
                                       std::to_string(entry.first)};
                break;
            }
            prev = &entry;
        }
    } else {
        report.ordering = {false, "skipped: compactness failed"};
    }
    return report;
}

ProductLift lift_product_family(const ProductFamilyPlan& plan, std::uint64_t seed) {
    ProductLift lift;
    for (int i = 0; i < plan.t; ++i)
        lift.factors.push_back(build_slab_family(plan.group_sizes[static_cast<std::size_t>(i)],
                                                 plan.d,
                                                 plan.group_ranks[static_cast<std::size_t>(i)],
                                                 seed + static_cast<std::uint64_t>(i)));
    for (int i = 0; i < plan.t; ++i) {
        for (int j = 0; j < plan.group_sizes[static_cast<std::size_t>(i)]; ++j) {
            ProductBody body;
            for (int block = 0; block < plan.t; ++block)
                body.components.push_back(
                    block == i ? lift.factors[static_cast<std::size_t>(i)]
                                     .sets[static_cast<std::size_t>(j)]
                               : HPolyhedron::full_space(plan.d));
            lift.bodies.push_back(std::move(body));
        }
    }
    return lift;
}

}  // namespace helly
