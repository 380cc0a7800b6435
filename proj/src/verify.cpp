#include "helly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/errors.hpp"

namespace helly {

namespace {

int dflt(int value, int fallback) { return value == 0 ? fallback : value; }

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

VerificationReport base_report(const SweepSpec& spec, std::string suite, std::string check) {
    VerificationReport rep;
    rep.suite = std::move(suite);
    rep.check = std::move(check);
    rep.seed = spec.seed;
    rep.flags = spec.flags;
    return rep;
}

void close_report(VerificationReport& rep, bool ok, double started_ms, const SweepSpec& spec) {
    rep.verdict = ok ? "pass" : "fail";
    if (spec.timings) rep.wall_ms = now_ms() - started_ms;
}

void skip_report(VerificationReport& rep, std::string why) {
    rep.verdict = "skip";
    rep.reason = std::move(why);
}

long long f_count(const FVector& fv, int j) {
    if (j < 0 || j > fv.dim) return 0;
    return fv.counts[static_cast<std::size_t>(j)];
}

// Exhaustive certifications of the same labeled complex are reused.
class LerayCache {
public:
    bool certified(const Complex& k, int d, const HomologyCaps& caps) {
        auto key = std::make_tuple(k.vertex_count(), d, k.maximal_faces());
        auto it = done_.find(key);
        if (it != done_.end()) return it->second;
        const bool ok = is_d_leray(k, d, {caps, {}, 0}).holds();
        done_.emplace(std::move(key), ok);
        return ok;
    }

private:
    std::map<std::tuple<int, int, std::vector<Mask>>, bool> done_;
};

bool clique_witness_valid(const Hypergraph& h, const std::vector<int>& witness, int size) {
    if (static_cast<int>(witness.size()) != size) return false;
    if (size < h.arity()) return true;
    const Mask w = verts_to_mask(witness);
    for (Mask e : k_subsets_of(w, h.arity()))
        if (!h.has_edge(e)) return false;
    return true;
}

const std::vector<Mask>& faces_of_card(const std::vector<std::vector<Mask>>& by_card, int card) {
    static const std::vector<Mask> none;
    if (card < 0 || card >= static_cast<int>(by_card.size())) return none;
    return by_card[static_cast<std::size_t>(card)];
}

std::mt19937_64 instance_rng(std::uint64_t seed, int attempt) {
    return std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1));
}

}  // namespace

//---------------------------------------------------------------------------
// Theorem: intersections of t d-Leray complexes, extremal equality and bound
//---------------------------------------------------------------------------

ReportList suite_theorem_1_4(const SweepSpec& spec) {
    ReportList out;
    const int d_lo = dflt(spec.d_min, 1), d_hi = dflt(spec.d_max, 2);
    const int t_lo = dflt(spec.t_min, 1), t_hi = dflt(spec.t_max, 3);
    const int n_hi = dflt(spec.n_max, 9), n_lo = dflt(spec.n_min, 1);
    LerayCache cache;

    auto extremal_check = [&](VerificationReport& rep, const Complex& k, int n, int t, int r,
                              int d, bool corrupted) {
        const double started = now_ms();
        const FVector fv = k.f_vector();
        const Int expected = g_d(n, t, r, d);
        const long long fd = f_count(fv, d);
        bool ok = to_int(fd) == expected && fv.dim == d + r - 1;
        const BlockPartition bp = BlockPartition::make(n, t, r, d);
        Json certs = Json::array();
        for (int i = 1; i <= t && !corrupted; ++i) {
            const bool c = cache.certified(factor_complex(bp, i, d), d, spec.caps);
            certs.push_back(c);
            ok = ok && c;
        }
        rep.measured = Json{{"f_d", fd}, {"dim", fv.dim}, {"factors_d_leray", certs}};
        rep.predicted =
            Json{{"f_d", expected.get_str()}, {"dim", d + r - 1}, {"factors_d_leray", true}};
        close_report(rep, ok, started, spec);
    };

    // (a) the extremal complex K_d(n,t,r) attains the bound exactly
    for (int d = d_lo; d <= d_hi; ++d)
        for (int t = t_lo; t <= t_hi; ++t) {
            const int r_lo = dflt(spec.r_min, std::max(1, (t - 1) * d));
            const int r_hi = dflt(spec.r_max, n_hi - d - 1);
            for (int r = r_lo; r <= r_hi; ++r)
                for (int n = std::max(n_lo, d + r + 1); n <= n_hi; ++n) {
                    VerificationReport rep = base_report(spec, "theorem_1_4", "extremal_equality");
                    rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
                    if (r < std::max(1, (t - 1) * d)) {
                        skip_report(rep, "hypothesis violated: need r >= (t-1)d and r >= 1");
                        out.push_back(std::move(rep));
                        continue;
                    }
                    extremal_check(rep, k_extremal(n, t, r, d), n, t, r, d, false);
                    out.push_back(std::move(rep));
                }
        }

    // negative control: one extra d-face breaks the equality
    {
        const int n = 5, t = 2, r = 1, d = 1;
        VerificationReport rep = base_report(spec, "theorem_1_4", "extremal_equality");
        rep.negative_control = true;
        rep.reason = "negative control: extremal complex corrupted with one extra d-face";
        rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
        const BlockPartition bp = BlockPartition::make(n, t, r, d);
        std::vector<Mask> faces = k_extremal(n, t, r, d).maximal_faces();
        const auto& v1 = bp.blocks[1];
        faces.push_back(verts_to_mask(std::vector<int>(v1.begin(), v1.begin() + d + 1)));
        extremal_check(rep, Complex::from_masks(n, std::move(faces)), n, t, r, d, true);
        out.push_back(std::move(rep));
    }

    // negative control for the upper-bound class: the corrupted complex beats
    // g_d at an admissible r
    {
        const int n = 5, t = 2, r = 1, d = 1;
        VerificationReport rep = base_report(spec, "theorem_1_4", "random_upper_bound");
        rep.negative_control = true;
        rep.reason = "negative control: complex with one extra d-face exceeds g_d";
        rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
        const double started = now_ms();
        const BlockPartition bp = BlockPartition::make(n, t, r, d);
        std::vector<Mask> faces = k_extremal(n, t, r, d).maximal_faces();
        const auto& v1 = bp.blocks[1];
        faces.push_back(verts_to_mask(std::vector<int>(v1.begin(), v1.begin() + d + 1)));
        const FVector fv = Complex::from_masks(n, std::move(faces)).f_vector();
        bool ok = fv.dim < d + r;  // hypothesis still holds on the corrupted complex
        const Int bound = g_d(n, t, r, d);
        ok = ok && to_int(f_count(fv, d)) <= bound;
        rep.measured = Json{{"f_d", f_count(fv, d)}, {"dim", fv.dim}};
        rep.predicted = Json{{"f_d_at_most", bound.get_str()}};
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
    }

    // (b) randomized instances: intersections of nerves of random geometric
    // families never exceed g_d when the dimension hypothesis holds
    std::vector<std::pair<int, int>> combos;
    for (int d = d_lo; d <= d_hi; ++d)
        for (int t = t_lo; t <= t_hi; ++t)
            if (d + std::max(1, (t - 1) * d) + 1 <= n_hi) combos.emplace_back(d, t);
    int asserted = 0;
    for (int attempt = 0; !combos.empty() && asserted < spec.instances &&
                          attempt < spec.instances * 6;
         ++attempt) {
        const auto [d, t] = combos[static_cast<std::size_t>(attempt) % combos.size()];
        std::mt19937_64 rng = instance_rng(spec.seed, attempt);
        const int n_min_bt = d + std::max(1, (t - 1) * d) + 1;
        std::uniform_int_distribution<int> pick_n(std::max(4, n_min_bt), n_hi);
        const int n = pick_n(rng);

        VerificationReport rep = base_report(spec, "theorem_1_4", "random_upper_bound");
        rep.params = Json{{"n", n}, {"t", t}, {"d", d}, {"instance", attempt}};
        const double started = now_ms();

        std::vector<Complex> nerves;
        for (int i = 0; i < t; ++i) {
            const auto family = random_family(n, d, rng);
            nerves.push_back(nerve(family, n - 1, spec.nerve_caps));
        }
        const Complex k = Complex::intersect(nerves);
        const FVector fv = k.f_vector();

        std::vector<int> admissible;
        for (int r = std::max(1, (t - 1) * d); n > d + r; ++r)
            if (fv.dim < d + r) admissible.push_back(r);
        if (admissible.empty()) {
            skip_report(rep, "hypothesis violated: dim K = " + std::to_string(fv.dim) +
                                 " admits no r with dim K < d+r < n-d");
            out.push_back(std::move(rep));
            continue;
        }

        bool ok = true;
        Json certs = Json::array();
        for (const Complex& factor : nerves) {
            const bool c = is_d_leray(factor, d, {spec.caps, {}, 0}).holds();
            certs.push_back(c);
            ok = ok && c;
        }
        const long long fd = f_count(fv, d);
        Json bounds_json = Json::array();
        for (int r : admissible) {
            const Int bound = g_d(n, t, r, d);
            bounds_json.push_back(Json{{"r", r}, {"g_d", bound.get_str()}});
            ok = ok && to_int(fd) <= bound;
        }
        rep.measured = Json{{"f_d", fd}, {"dim", fv.dim}, {"factors_d_leray", certs}};
        rep.predicted = Json{{"f_d_at_most", bounds_json}, {"factors_d_leray", true}};
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
        ++asserted;
    }
    return out;
}

//---------------------------------------------------------------------------
// Theorem: the Eckhoff-style family (combinatorial and geometric)
//---------------------------------------------------------------------------

namespace {

bool eckhoff_stats_ok(const Hypergraph& h, int n, int d, int r, Json& measured, Json& predicted) {
    const Int expected_edges = binomial(n, d + 1) - binomial(n - r, d + 1);
    const SubsetWitness clique = max_clique_size(h);
    const SubsetWitness indep = max_independent_size(h);
    const auto pcond = p_condition(h);
    const bool bij = bijection_check(n, d, r);
    const int expected_indep = d + (n - d) / (r + 1);
    measured = Json{{"edges", h.edges().size()},
                    {"max_clique", clique.size},
                    {"clique_witness", clique.vertices},
                    {"max_independent", indep.size},
                    {"independent_witness", indep.vertices},
                    {"p_condition", pcond ? Json(*pcond) : Json(nullptr)},
                    {"bijection", bij}};
    predicted = Json{{"edges", expected_edges.get_str()},
                     {"max_clique", d + r},
                     {"max_independent", expected_indep},
                     {"p_condition", expected_indep + 1},
                     {"bijection", true}};
    return Int(static_cast<long>(h.edges().size())) == expected_edges &&
           clique.size == d + r && clique_witness_valid(h, clique.vertices, clique.size) &&
           indep.size == expected_indep && pcond && *pcond == expected_indep + 1 && bij;
}

}  // namespace

ReportList suite_theorem_1_5(const SweepSpec& spec) {
    ReportList out;
    const int d_lo = dflt(spec.d_min, 1), d_hi = dflt(spec.d_max, 3);
    const int n_lo = dflt(spec.n_min, 2), n_hi = dflt(spec.n_max, 12);
    const int geo_n_hi = std::min(n_hi, 8);

    for (int d = d_lo; d <= d_hi; ++d)
        for (int n = std::max(n_lo, d + 1); n <= n_hi; ++n) {
            const int r_lo = dflt(spec.r_min, 1);
            const int r_hi = std::min(dflt(spec.r_max, n - d), n_hi);
            for (int r = r_lo; r <= r_hi; ++r) {
                VerificationReport rep = base_report(spec, "theorem_1_5", "eckhoff_hypergraph");
                rep.params = Json{{"n", n}, {"d", d}, {"r", r}};
                if (n < d + r) {
                    skip_report(rep, "hypothesis violated: need n >= d + r");
                    out.push_back(std::move(rep));
                    continue;
                }
                const double started = now_ms();
                const Hypergraph h = h_eckhoff(n, d, r);
                const bool ok = eckhoff_stats_ok(h, n, d, r, rep.measured, rep.predicted);
                close_report(rep, ok, started, spec);
                out.push_back(std::move(rep));

                if (n <= geo_n_hi && d <= 3) {
                    VerificationReport geo =
                        base_report(spec, "theorem_1_5", "geometric_realization");
                    geo.params = Json{{"n", n}, {"d", d}, {"r", r}};
                    const double geo_started = now_ms();
                    try {
                        const SlabFamily family = build_slab_family(
                            n, d, r,
                            spec.seed + static_cast<std::uint64_t>(((n * 17 + d) * 31 + r)));
                        const ConditionReport conditions = check_conditions(family);
                        const Complex nv = nerve(family.sets, n - 1, spec.nerve_caps);
                        const bool tuples_match =
                            faces_of_card(nv.faces_by_card(), d + 1) == h.edges();
                        // the largest intersecting subfamily is the largest clique
                        const bool dim_match = nv.dim() == d + r - 1;
                        geo.measured = Json{{"conditions", condition_report_to_json(conditions)},
                                            {"nerve_matches_hypergraph", tuples_match},
                                            {"nerve_dim", nv.dim()}};
                        geo.predicted = Json{{"conditions_all_pass", true},
                                             {"nerve_matches_hypergraph", true},
                                             {"nerve_dim", d + r - 1}};
                        close_report(geo, conditions.all_pass() && tuples_match && dim_match,
                                     geo_started, spec);
                    } catch (const construction_error& e) {
                        close_report(geo, false, geo_started, spec);
                        geo.reason = e.what();
                    }
                    out.push_back(std::move(geo));
                }
            }
        }

    // negative control: an edge removed from the hypergraph
    {
        const int n = 5, d = 1, r = 2;
        VerificationReport rep = base_report(spec, "theorem_1_5", "eckhoff_hypergraph");
        rep.negative_control = true;
        rep.reason = "negative control: one edge removed from the Eckhoff hypergraph";
        rep.params = Json{{"n", n}, {"d", d}, {"r", r}};
        const double started = now_ms();
        const Hypergraph h = h_eckhoff(n, d, r);
        std::vector<Mask> edges(h.edges().begin() + 1, h.edges().end());
        const Hypergraph corrupted(n, d + 1, std::move(edges));
        const bool ok = eckhoff_stats_ok(corrupted, n, d, r, rep.measured, rep.predicted);
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
    }
    // negative control: a slab stretched past its window
    {
        const int n = 5, d = 1, r = 2;
        VerificationReport rep = base_report(spec, "theorem_1_5", "geometric_realization");
        rep.negative_control = true;
        rep.reason = "negative control: last slab stretched far below its window";
        rep.params = Json{{"n", n}, {"d", d}, {"r", r}};
        const double started = now_ms();
        SlabFamily family = build_slab_family(n, d, r, spec.seed);
        HPolyhedron& last = family.sets.back();
        // widen the final slab downward so forbidden tuples start intersecting
        for (auto& c : last.constraints)
            if (c.normal.back() < 0) c.offset += 1000;
        const ConditionReport conditions = check_conditions(family);
        const Complex nv = nerve(family.sets, d, spec.nerve_caps);
        const bool tuples_match = faces_of_card(nv.faces_by_card(), d + 1) ==
                                  h_eckhoff(n, d, r).edges();
        rep.measured = Json{{"conditions", condition_report_to_json(conditions)},
                            {"nerve_matches_hypergraph", tuples_match}};
        rep.predicted = Json{{"conditions_all_pass", true}, {"nerve_matches_hypergraph", true}};
        close_report(rep, conditions.all_pass() && tuples_match, started, spec);
        out.push_back(std::move(rep));
    }
    return out;
}

//---------------------------------------------------------------------------
// Theorem: product families
//---------------------------------------------------------------------------

namespace {

bool product_stats_ok(const ProductFamilyStats& stats, const Hypergraph& h, Json& measured,
                      Json& predicted) {
    measured = product_stats_to_json(stats);
    predicted = Json{{"edges", stats.expected_edges.get_str()},
                     {"max_clique", stats.expected_clique},
                     {"p_at_most", rat_to_string(stats.p_bound)}};
    return stats.edges == stats.expected_edges && stats.max_clique == stats.expected_clique &&
           clique_witness_valid(h, stats.clique_witness, stats.max_clique) && stats.p_cond &&
           Rat(*stats.p_cond) <= stats.p_bound;
}

}  // namespace

ReportList suite_theorem_1_6(const SweepSpec& spec) {
    ReportList out;
    const int d_lo = dflt(spec.d_min, 1), d_hi = dflt(spec.d_max, 2);
    const int t_lo = dflt(spec.t_min, 2), t_hi = dflt(spec.t_max, 2);
    const int n_lo = dflt(spec.n_min, 2), n_hi = dflt(spec.n_max, 8);

    for (int d = d_lo; d <= d_hi; ++d)
        for (int t = t_lo; t <= t_hi; ++t) {
            const int r_lo = dflt(spec.r_min, (t - 1) * d + 1);
            const int r_hi = dflt(spec.r_max, n_hi - d);
            for (int r = r_lo; r <= r_hi; ++r)
                for (int n = std::max(n_lo, d + r); n <= n_hi; ++n) {
                    VerificationReport rep =
                        base_report(spec, "theorem_1_6", "product_family_stats");
                    rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
                    if (r <= (t - 1) * d) {
                        skip_report(rep, "hypothesis violated: need r > (t-1)d");
                        out.push_back(std::move(rep));
                        continue;
                    }
                    const double started = now_ms();
                    const ProductFamilyPlan plan = ProductFamilyPlan::make(n, t, d, r);
                    const auto [h, stats] = product_family_hypergraph(plan);
                    const bool ok = product_stats_ok(stats, h, rep.measured, rep.predicted);
                    rep.witness = plan_to_json(plan);
                    close_report(rep, ok, started, spec);
                    out.push_back(std::move(rep));

                    VerificationReport geo = base_report(spec, "theorem_1_6", "geometric_lift");
                    geo.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
                    const double geo_started = now_ms();
                    try {
                        const ProductLift lift = lift_product_family(
                            plan,
                            spec.seed + static_cast<std::uint64_t>(((n * 17 + d) * 31 + r)));
                        const Complex nv = nerve(std::span<const ProductBody>(lift.bodies),
                                                 n - 1, spec.nerve_caps);
                        const bool tuples_match =
                            faces_of_card(nv.faces_by_card(), d + 1) == h.edges();
                        const bool dim_match = nv.dim() == d + r - 1;
                        geo.measured = Json{{"nerve_matches_hypergraph", tuples_match},
                                            {"nerve_dim", nv.dim()}};
                        geo.predicted =
                            Json{{"nerve_matches_hypergraph", true}, {"nerve_dim", d + r - 1}};
                        close_report(geo, tuples_match && dim_match, geo_started, spec);
                    } catch (const construction_error& e) {
                        close_report(geo, false, geo_started, spec);
                        geo.reason = e.what();
                    }
                    out.push_back(std::move(geo));
                }
        }

    // negative control: the lifted nerve compared against a corrupted hypergraph
    {
        const int n = 6, t = 2, d = 1, r = 2;
        VerificationReport rep = base_report(spec, "theorem_1_6", "geometric_lift");
        rep.negative_control = true;
        rep.reason = "negative control: lifted nerve compared against a corrupted hypergraph";
        rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
        const double started = now_ms();
        const ProductFamilyPlan plan = ProductFamilyPlan::make(n, t, d, r);
        const auto [h, stats] = product_family_hypergraph(plan);
        std::vector<Mask> edges(h.edges().begin() + 1, h.edges().end());
        const Hypergraph corrupted(n, d + 1, std::move(edges));
        const ProductLift lift = lift_product_family(plan, spec.seed);
        const Complex nv =
            nerve(std::span<const ProductBody>(lift.bodies), n - 1, spec.nerve_caps);
        const bool tuples_match = faces_of_card(nv.faces_by_card(), d + 1) == corrupted.edges();
        rep.measured = Json{{"nerve_matches_hypergraph", tuples_match}};
        rep.predicted = Json{{"nerve_matches_hypergraph", true}};
        close_report(rep, tuples_match, started, spec);
        out.push_back(std::move(rep));
    }

    // negative control: an edge removed before the statistics comparison
    {
        const int n = 6, t = 2, d = 1, r = 2;
        VerificationReport rep = base_report(spec, "theorem_1_6", "product_family_stats");
        rep.negative_control = true;
        rep.reason = "negative control: one intersecting tuple removed";
        rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
        const double started = now_ms();
        const ProductFamilyPlan plan = ProductFamilyPlan::make(n, t, d, r);
        auto [h, stats] = product_family_hypergraph(plan);
        std::vector<Mask> edges(h.edges().begin() + 1, h.edges().end());
        const Hypergraph corrupted(n, d + 1, std::move(edges));
        stats.edges = Int(static_cast<long>(corrupted.edges().size()));
        const bool ok = product_stats_ok(stats, corrupted, rep.measured, rep.predicted);
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
    }
    return out;
}

//---------------------------------------------------------------------------
// The Karamata-type partition inequality
//---------------------------------------------------------------------------

ReportList suite_prop_2_1(const SweepSpec& spec) {
    ReportList out;
    const int x_lo = dflt(spec.n_min, 1) - 1, x_hi = dflt(spec.n_max, 14);
    const int t_lo = dflt(spec.t_min, 1), t_hi = dflt(spec.t_max, 5);
    const int k_lo = dflt(spec.d_min, 1), k_hi = dflt(spec.d_max, 4);

    auto closed_form = [](int x, int t, int k) -> Int {
        const long long q = x / t, s = x % t;
        return to_int(s) * binomial(q + 1, k) + to_int(t - s) * binomial(q, k);
    };

    for (int x = std::max(0, x_lo); x <= x_hi; ++x)
        for (int t = t_lo; t <= t_hi; ++t)
            for (int k = k_lo; k <= k_hi; ++k) {
                VerificationReport rep = base_report(spec, "prop_2_1", "partition_minimum");
                rep.params = Json{{"x", x}, {"t", t}, {"k", k}};
                const double started = now_ms();
                const Int oracle = min_binom_sum_oracle(x, t, k);
                const Int expected = closed_form(x, t, k);
                rep.measured = Json{{"minimum", oracle.get_str()}};
                rep.predicted = Json{{"minimum", expected.get_str()}};
                close_report(rep, oracle == expected, started, spec);
                out.push_back(std::move(rep));
            }

    {
        VerificationReport rep = base_report(spec, "prop_2_1", "partition_minimum");
        rep.negative_control = true;
        rep.reason = "negative control: closed form shifted by one";
        rep.params = Json{{"x", 7}, {"t", 3}, {"k", 2}};
        const double started = now_ms();
        const Int oracle = min_binom_sum_oracle(7, 3, 2);
        const Int shifted = closed_form(7, 3, 2) + 1;
        rep.measured = Json{{"minimum", oracle.get_str()}};
        rep.predicted = Json{{"minimum", shifted.get_str()}};
        close_report(rep, oracle == shifted, started, spec);
        out.push_back(std::move(rep));
    }
    return out;
}

//---------------------------------------------------------------------------
// The 1-Leray Turan-type bound
//---------------------------------------------------------------------------

ReportList suite_theorem_4_4(const SweepSpec& spec) {
    ReportList out;
    const int n_lo = dflt(spec.n_min, 1), n_hi = dflt(spec.n_max, 12);
    LerayCache cache;

    for (int n = n_lo; n <= n_hi; ++n) {
        const int m_lo = dflt(spec.t_min, 1), m_hi = std::min(dflt(spec.t_max, n), n);
        for (int m = m_lo; m <= m_hi; ++m) {
            VerificationReport rep = base_report(spec, "theorem_4_4", "turan_equality");
            rep.params = Json{{"n", n}, {"m", m}};
            const double started = now_ms();
            const TuranComplexResult tc = turan_1leray_complex(n, m);
            const FVector fv = tc.complex.f_vector();
            const Int expected = turan_bound(n, m);
            bool ok = to_int(f_count(fv, 1)) == expected && fv.dim == m - 1;
            Json certs = Json::array();
            if (n <= std::min(9, spec.caps.leray_cap)) {
                for (const Complex& factor : tc.factors) {
                    const bool c = cache.certified(factor, 1, spec.caps);
                    certs.push_back(c);
                    ok = ok && c;
                }
            }
            rep.measured = Json{{"f_1", f_count(fv, 1)},
                                {"dim", fv.dim},
                                {"factors_1_leray", certs}};
            rep.predicted = Json{{"f_1", expected.get_str()}, {"dim", m - 1}};
            close_report(rep, ok, started, spec);
            out.push_back(std::move(rep));
        }
    }

    // randomized instances: intersections of t random 1-Leray nerves
    const int instances = std::max(1, spec.instances / 4);
    int asserted = 0;
    for (int attempt = 0; asserted < instances && attempt < instances * 6; ++attempt) {
        std::mt19937_64 rng = instance_rng(spec.seed ^ 0x44, attempt);
        std::uniform_int_distribution<int> pick_t(2, 4), pick_n(4, std::min(9, n_hi));
        const int t = pick_t(rng), n = pick_n(rng);
        VerificationReport rep = base_report(spec, "theorem_4_4", "random_upper_bound");
        rep.params = Json{{"n", n}, {"t", t}, {"instance", attempt}};
        const double started = now_ms();
        std::vector<Complex> nerves;
        for (int i = 0; i < t; ++i) {
            const auto family = random_family(n, 1, rng);
            nerves.push_back(nerve(family, n - 1, spec.nerve_caps));
        }
        const Complex k = Complex::intersect(nerves);
        const FVector fv = k.f_vector();
        if (fv.dim >= t) {
            skip_report(rep, "hypothesis violated: dim K = " + std::to_string(fv.dim) +
                                 " admits no m with dim K < m <= t = " + std::to_string(t));
            out.push_back(std::move(rep));
            continue;
        }
        bool ok = true;
        Json certs = Json::array();
        for (const Complex& factor : nerves) {
            const bool c = is_d_leray(factor, 1, {spec.caps, {}, 0}).holds();
            certs.push_back(c);
            ok = ok && c;
        }
        Json bounds_json = Json::array();
        for (int m = std::max(1, fv.dim + 1); m <= t; ++m) {
            const Int bound = turan_bound(n, m);
            bounds_json.push_back(Json{{"m", m}, {"bound", bound.get_str()}});
            ok = ok && to_int(f_count(fv, 1)) <= bound;
        }
        rep.measured = Json{{"f_1", f_count(fv, 1)}, {"dim", fv.dim}, {"factors_1_leray", certs}};
        rep.predicted = Json{{"f_1_at_most", bounds_json}, {"factors_1_leray", true}};
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
        ++asserted;
    }

    // hypothesis-violation logging: a complex with a triangle claimed at m = 2
    {
        VerificationReport rep = base_report(spec, "theorem_4_4", "random_upper_bound");
        rep.params = Json{{"n", 3}, {"m", 2}};
        const Complex simplex = Complex::full_simplex(3);
        skip_report(rep, "hypothesis violated: dim K = " + std::to_string(simplex.dim()) +
                             " is not below m = 2");
        out.push_back(std::move(rep));
    }

    // negative control: equality compared against a lowered bound
    {
        const int n = 5, m = 2;
        VerificationReport rep = base_report(spec, "theorem_4_4", "turan_equality");
        rep.negative_control = true;
        rep.reason = "negative control: bound lowered by one";
        rep.params = Json{{"n", n}, {"m", m}};
        const double started = now_ms();
        const TuranComplexResult tc = turan_1leray_complex(n, m);
        const FVector fv = tc.complex.f_vector();
        const Int lowered = turan_bound(n, m) - 1;
        rep.measured = Json{{"f_1", f_count(fv, 1)}};
        rep.predicted = Json{{"f_1", lowered.get_str()}};
        close_report(rep, to_int(f_count(fv, 1)) == lowered, started, spec);
        out.push_back(std::move(rep));
    }
    // negative control: an extra in-block edge pushes f_1 past the bound
    {
        const int n = 5, m = 2;
        VerificationReport rep = base_report(spec, "theorem_4_4", "random_upper_bound");
        rep.negative_control = true;
        rep.reason = "negative control: transversal complex corrupted with an in-block edge";
        rep.params = Json{{"n", n}, {"m", m}};
        const double started = now_ms();
        std::vector<Mask> faces = turan_1leray_complex(n, m).complex.maximal_faces();
        faces.push_back(verts_to_mask({0, 1}));  // both inside the first block
        const FVector fv = Complex::from_masks(n, std::move(faces)).f_vector();
        const Int bound = turan_bound(n, m);
        const bool ok = fv.dim < m && to_int(f_count(fv, 1)) <= bound;
        rep.measured = Json{{"f_1", f_count(fv, 1)}, {"dim", fv.dim}};
        rep.predicted = Json{{"f_1_at_most", bound.get_str()}};
        close_report(rep, ok, started, spec);
        out.push_back(std::move(rep));
    }
    return out;
}

//---------------------------------------------------------------------------
// Higher-dimensional face counts (observational)
//---------------------------------------------------------------------------

ReportList report_f_j(const SweepSpec& spec) {
    ReportList out;
    const int d_lo = dflt(spec.d_min, 1), d_hi = dflt(spec.d_max, 2);
    const int t_lo = dflt(spec.t_min, 1), t_hi = dflt(spec.t_max, 2);
    const int n_hi = dflt(spec.n_max, 8);

    auto face_rows = [](const FVector& fv, int n, int d, int r) {
        Json rows = Json::array();
        for (int j = d; j <= fv.dim + 1; ++j)
            rows.push_back(Json{{"j", j},
                                {"measured", f_count(fv, j)},
                                {"upper_bound", fj_bound(n, d, r, j).get_str()}});
        return rows;
    };

    for (int d = d_lo; d <= d_hi; ++d)
        for (int t = t_lo; t <= t_hi; ++t) {
            const int r_lo = std::max(1, (t - 1) * d);
            for (int r = r_lo; r <= n_hi - d - 1; ++r)
                for (int n = d + r + 1; n <= n_hi; ++n) {
                    VerificationReport rep = base_report(spec, "f_j_report", "extremal_f_j");
                    rep.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
                    const FVector fv = k_extremal(n, t, r, d).f_vector();
                    rep.measured = Json{{"faces", face_rows(fv, n, d, r)}, {"dim", fv.dim}};
                    rep.verdict = "info";
                    out.push_back(std::move(rep));

                    if (t >= 2 && r > (t - 1) * d) {
                        VerificationReport prod =
                            base_report(spec, "f_j_report", "product_family_f_j");
                        prod.params = Json{{"n", n}, {"t", t}, {"r", r}, {"d", d}};
                        const FVector pf =
                            product_family_nerve(ProductFamilyPlan::make(n, t, d, r)).f_vector();
                        prod.measured = Json{{"faces", face_rows(pf, n, d, r)}, {"dim", pf.dim}};
                        prod.verdict = "info";
                        out.push_back(std::move(prod));
                    }
                }
        }
    return out;
}

//---------------------------------------------------------------------------
// Harness
//---------------------------------------------------------------------------

ReportList run_suite(const std::string& name, const SweepSpec& spec) {
    if (name == "theorem-1-4") return suite_theorem_1_4(spec);
    if (name == "theorem-1-5") return suite_theorem_1_5(spec);
    if (name == "theorem-1-6") return suite_theorem_1_6(spec);
    if (name == "prop-2-1") return suite_prop_2_1(spec);
    if (name == "theorem-4-4") return suite_theorem_4_4(spec);
    if (name == "f-j") return report_f_j(spec);
    if (name == "all") {
        ReportList all;
        for (const char* suite :
             {"prop-2-1", "theorem-1-5", "theorem-1-6", "theorem-4-4", "theorem-1-4", "f-j"}) {
            ReportList part = run_suite(suite, spec);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

bool reports_pass(const ReportList& reports) {
    for (const auto& rep : reports) {
        if (rep.verdict == "skip" || rep.verdict == "info") continue;
        if (rep.negative_control) {
            if (rep.verdict != "fail") return false;
        } else if (rep.verdict != "pass") {
            return false;
        }
    }
    return true;
}

Json report_to_json(const VerificationReport& rep, bool timings) {
    Json j{{"suite", rep.suite},
           {"check", rep.check},
           {"params", rep.params},
           {"measured", rep.measured},
           {"predicted", rep.predicted},
           {"verdict", rep.verdict},
           {"negative_control", rep.negative_control},
           {"seed", rep.seed},
           {"flags", rep.flags}};
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (!rep.witness.is_null()) j["witness"] = rep.witness;
    if (timings && rep.wall_ms >= 0) j["wall_ms"] = rep.wall_ms;
    return j;
}

void write_ndjson(std::ostream& out, const ReportList& reports, bool timings) {
    for (const auto& rep : reports) out << report_to_json(rep, timings).dump() << "\n";
}

namespace {

void flatten(const std::string& prefix, const Json& j, std::map<std::string, std::string>& row) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(prefix + "." + key, value, row);
    } else if (j.is_string()) {
        row[prefix] = j.get<std::string>();
    } else {
        row[prefix] = j.dump();
    }
}

}  // namespace

void write_csv(std::ostream& out, const ReportList& reports) {
    std::vector<std::map<std::string, std::string>> rows;
    std::set<std::string> keys;
    for (const auto& rep : reports) {
        std::map<std::string, std::string> row;
        row["suite"] = rep.suite;
        row["check"] = rep.check;
        row["verdict"] = rep.verdict;
        row["negative_control"] = rep.negative_control ? "1" : "0";
        row["reason"] = rep.reason;
        flatten("params", rep.params, row);
        flatten("measured", rep.measured, row);
        flatten("predicted", rep.predicted, row);
        for (const auto& [k, v] : row) keys.insert(k);
        rows.push_back(std::move(row));
    }
    bool first = true;
    for (const auto& k : keys) {
        if (!first) out << ",";
        out << k;
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& k : keys) {
            if (!first) out << ",";
            auto it = row.find(k);
            if (it != row.end()) {
                std::string cell = it->second;
                if (cell.find_first_of(",\"\n") != std::string::npos) {
                    std::string quoted = "\"";
                    for (char c : cell) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
                    quoted += "\"";
                    cell = quoted;
                }
                out << cell;
            }
            first = false;
        }
        out << "\n";
    }
}

}  // namespace helly
