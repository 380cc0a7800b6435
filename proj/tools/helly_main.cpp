// Command-line workbench: generators, bound tables, homology queries, and
// theorem-verification suites with machine-readable reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/errors.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/json_io.hpp"
#include "helly/verify.hpp"

namespace {

using helly::Json;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << j.dump(2) << "\n";
}

Json predicted_stats(int n, int t, int r, int d) {
    // Cliques of the d-face hypergraph of K_d(n,t,r) are exactly its faces;
    // independent sets live inside a single nonzero block.
    const auto partition = helly::BlockPartition::make(n, t, r, d);
    const int largest_block = static_cast<int>(partition.blocks[1].size());
    return Json{{"f_d", helly::g_d(n, t, r, d).get_str()},
                {"dim", d + r - 1},
                {"max_clique", d + r},
                {"max_independent", std::max(d, largest_block)}};
}

struct ConstructArgs {
    std::string object;
    int n = 6, d = 1, t = 2, r = 2, m = 2, block = 1;
    std::uint64_t seed = 1;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    Json result;
    if (args.object == "k-extremal") {
        const helly::Complex k = helly::k_extremal(args.n, args.t, args.r, args.d);
        result = Json{{"object", helly::complex_to_json(k)},
                      {"predicted", predicted_stats(args.n, args.t, args.r, args.d)}};
    } else if (args.object == "factor") {
        const auto partition = helly::BlockPartition::make(args.n, args.t, args.r, args.d);
        const helly::Complex k = helly::factor_complex(partition, args.block, args.d);
        result = Json{{"object", helly::complex_to_json(k)},
                      {"partition", helly::block_partition_to_json(partition)},
                      {"predicted", Json{{"d_leray", args.d}}}};
    } else if (args.object == "eckhoff") {
        const helly::Hypergraph h = helly::h_eckhoff(args.n, args.d, args.r);
        const helly::Int edges =
            helly::binomial(args.n, args.d + 1) - helly::binomial(args.n - args.r, args.d + 1);
        result = Json{
            {"object", helly::hypergraph_to_json(h)},
            {"predicted",
             Json{{"edges", edges.get_str()},
                  {"max_clique", args.d + args.r},
                  {"max_independent", args.d + (args.n - args.d) / (args.r + 1)}}}};
    } else if (args.object == "product-hypergraph") {
        const auto plan = helly::ProductFamilyPlan::make(args.n, args.t, args.d, args.r);
        const auto [h, stats] = helly::product_family_hypergraph(plan);
        result = Json{{"object", helly::hypergraph_to_json(h)},
                      {"plan", helly::plan_to_json(plan)},
                      {"statistics", helly::product_stats_to_json(stats)}};
    } else if (args.object == "turan-complex") {
        const auto tc = helly::turan_1leray_complex(args.n, args.m);
        Json factors = Json::array();
        for (const auto& f : tc.factors) factors.push_back(helly::complex_to_json(f));
        result = Json{{"object", helly::complex_to_json(tc.complex)},
                      {"factors", factors},
                      {"blocks", tc.blocks},
                      {"predicted",
                       Json{{"f_1", helly::turan_bound(args.n, args.m).get_str()},
                            {"dim", args.m - 1}}}};
    } else if (args.object == "slab-family") {
        const helly::SlabFamily family =
            helly::build_slab_family(args.n, args.d, args.r, args.seed);
        const helly::Int tuples =
            helly::binomial(args.n, args.d + 1) - helly::binomial(args.n - args.r, args.d + 1);
        result = Json{{"object", helly::slab_family_to_json(family)},
                      {"conditions",
                       helly::condition_report_to_json(helly::check_conditions(family))},
                      {"predicted", Json{{"intersecting_tuples", tuples.get_str()}}}};
    } else if (args.object == "product-family") {
        const auto plan = helly::ProductFamilyPlan::make(args.n, args.t, args.d, args.r);
        const auto lift = helly::lift_product_family(plan, args.seed);
        Json bodies = Json::array();
        for (const auto& b : lift.bodies) bodies.push_back(helly::product_body_to_json(b));
        Json factors = Json::array();
        for (const auto& f : lift.factors) factors.push_back(helly::slab_family_to_json(f));
        result = Json{{"object", bodies},
                      {"factors", factors},
                      {"plan", helly::plan_to_json(plan)},
                      {"predicted",
                       Json{{"intersecting_tuples", helly::g_d(args.n, args.t, args.r, args.d).get_str()},
                            {"max_intersecting", args.d + args.r}}}};
    } else {
        std::cerr << "unknown object '" << args.object << "'\n";
        return 2;
    }
    result["seed"] = args.seed;
    emit(result, args.out);
    return 0;
}

struct TableArgs {
    std::string bound = "bounds";
    int n_min = 3, n_max = 9, d_min = 1, d_max = 2, t_min = 1, t_max = 3, r_min = 1, r_max = 8;
    bool csv = false;
    std::string out;
};

int run_table(const TableArgs& args) {
    std::ostringstream body;
    if (args.bound == "bounds" || args.bound == "g_d" || args.bound == "frachel" ||
        args.bound == "turan") {
        body << "n,t,d,r,g_d,frachel,turan\n";
        for (int n = args.n_min; n <= args.n_max; ++n)
            for (int t = args.t_min; t <= args.t_max; ++t)
                for (int d = args.d_min; d <= args.d_max; ++d)
                    for (int r = args.r_min; r <= args.r_max; ++r) {
                        helly::BoundSpec spec{d, t, r, n, helly::BoundKind::g_d};
                        if (spec.violation()) continue;
                        body << n << "," << t << "," << d << "," << r << ","
                             << helly::g_d(n, t, r, d).get_str() << ","
                             << helly::frachel_bound(n, d, r).get_str() << ","
                             << helly::turan_bound(n, t).get_str() << "\n";
                    }
    } else if (args.bound == "beta") {
        body << "alpha,d,t,threshold,beta_convex,beta_product\n";
        for (int d = args.d_min; d <= args.d_max; ++d)
            for (int t = args.t_min; t <= args.t_max; ++t) {
                const helly::Rat threshold = helly::product_threshold(d, t);
                for (int i = 1; i <= 20; ++i) {
                    const helly::Rat alpha = helly::make_rat(i, 20);
                    body << helly::rat_to_string(alpha) << "," << d << "," << t << ","
                         << helly::rat_to_string(threshold) << ","
                         << helly::rat_to_string(helly::beta_convex(alpha, d));
                    body << ",";
                    if (alpha > threshold)
                        body << helly::rat_to_string(helly::beta_product(alpha, d, t));
                    body << "\n";
                }
            }
    } else {
        std::cerr << "unknown bound '" << args.bound << "'\n";
        return 2;
    }
    if (args.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.out);
        out << body.str();
    }
    return 0;
}

struct HomologyArgs {
    std::string in;
    int leray_d = -1;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    std::string out;
};

int run_homology(const HomologyArgs& args) {
    std::ifstream in(args.in);
    if (!in) {
        std::cerr << "cannot open " << args.in << "\n";
        return 2;
    }
    Json parsed = Json::parse(in);
    if (parsed.contains("object")) parsed = parsed["object"];  // accept construct output
    const helly::Complex k = helly::complex_from_json(parsed);
    const helly::HomologyCaps caps = helly::HomologyCaps::from_env();
    Json result{{"n", k.vertex_count()}, {"f_vector", helly::fvector_to_json(k.f_vector())}};
    if (args.leray_d >= 0) {
        helly::LerayOptions opts{caps, args.sample, args.seed};
        result["leray"] = helly::leray_to_json(helly::is_d_leray(k, args.leray_d, opts));
    } else {
        result["betti"] = helly::betti_to_json(helly::reduced_betti(k, caps));
    }
    emit(result, args.out);
    return 0;
}

struct VerifyArgs {
    std::string suite;
    helly::SweepSpec spec;
    std::string out;
    bool csv = false;
};

int run_verify(VerifyArgs& args) {
    args.spec.caps = helly::HomologyCaps::from_env();
    args.spec.nerve_caps = helly::NerveCaps::from_env();
    args.spec.flags = Json{{"suite", args.suite},
                           {"n_min", args.spec.n_min},
                           {"n_max", args.spec.n_max},
                           {"d_min", args.spec.d_min},
                           {"d_max", args.spec.d_max},
                           {"t_min", args.spec.t_min},
                           {"t_max", args.spec.t_max},
                           {"r_min", args.spec.r_min},
                           {"r_max", args.spec.r_max},
                           {"instances", args.spec.instances},
                           {"seed", args.spec.seed},
                           {"betti_cap", args.spec.caps.betti_cap},
                           {"leray_cap", args.spec.caps.leray_cap},
                           {"nerve_cap", args.spec.nerve_caps.max_vertices}};
    const helly::ReportList reports = helly::run_suite(args.suite, args.spec);
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) {
            std::cerr << "cannot open " << args.out << "\n";
            return 2;
        }
        if (args.csv)
            helly::write_csv(out, reports);
        else
            helly::write_ndjson(out, reports, args.spec.timings);
    } else if (args.csv) {
        helly::write_csv(std::cout, reports);
    } else {
        helly::write_ndjson(std::cout, reports, args.spec.timings);
    }
    int pass = 0, fail = 0, skip = 0, info = 0, controls = 0;
    for (const auto& rep : reports) {
        if (rep.negative_control) ++controls;
        if (rep.verdict == "pass") ++pass;
        else if (rep.verdict == "fail") ++fail;
        else if (rep.verdict == "skip") ++skip;
        else ++info;
    }
    std::cerr << "suite " << args.suite << ": " << pass << " pass, " << fail << " fail ("
              << controls << " negative controls), " << skip << " skip, " << info << " info\n";
    return helly::reports_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for intersections of d-Leray complexes"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    CLI::App* construct = app.add_subcommand(
        "construct", "generate an extremal object with its predicted statistics");
    construct->add_option("object", cargs.object,
                          "k-extremal | factor | eckhoff | product-hypergraph | turan-complex | "
                          "slab-family | product-family")
        ->required();
    construct->add_option("--n", cargs.n, "vertex count");
    construct->add_option("--d", cargs.d, "dimension parameter");
    construct->add_option("--t", cargs.t, "number of factors");
    construct->add_option("--r", cargs.r, "rank parameter");
    construct->add_option("--m", cargs.m, "block count (turan-complex)");
    construct->add_option("--block", cargs.block, "factor index in [1, t]");
    construct->add_option("--seed", cargs.seed, "RNG seed (geometric constructions)");
    construct->add_option("--out", cargs.out, "output file (default stdout)");

    TableArgs targs;
    CLI::App* table = app.add_subcommand("table", "emit bound tables as CSV");
    table->add_option("bound", targs.bound, "bounds | g_d | frachel | turan | beta");
    table->add_option("--n-min", targs.n_min);
    table->add_option("--n-max", targs.n_max);
    table->add_option("--d-min", targs.d_min);
    table->add_option("--d-max", targs.d_max);
    table->add_option("--t-min", targs.t_min);
    table->add_option("--t-max", targs.t_max);
    table->add_option("--r-min", targs.r_min);
    table->add_option("--r-max", targs.r_max);
    table->add_flag("--csv", targs.csv, "(tables are always CSV; accepted for symmetry)");
    table->add_option("--out", targs.out, "output file (default stdout)");

    HomologyArgs hargs;
    CLI::App* homology =
        app.add_subcommand("homology", "Betti numbers / d-Leray certificate of a complex");
    homology->add_option("--in", hargs.in, "complex JSON file")->required();
    homology->add_option("--leray", hargs.leray_d, "certify d-Lerayness for this d");
    std::uint64_t sample_count = 0;
    CLI::Option* sample_opt = homology->add_option(
        "--sample", sample_count, "sampling mode: check this many random subsets only");
    homology->add_option("--seed", hargs.seed, "RNG seed for sampling mode");
    homology->add_option("--out", hargs.out, "output file (default stdout)");

    VerifyArgs vargs;
    CLI::App* verify =
        app.add_subcommand("verify", "run a theorem-verification suite over a parameter sweep");
    verify->add_option("suite", vargs.suite,
                       "theorem-1-4 | theorem-1-5 | theorem-1-6 | prop-2-1 | theorem-4-4 | f-j | all")
        ->required();
    verify->add_option("--n-min", vargs.spec.n_min, "0 = suite default");
    verify->add_option("--n-max", vargs.spec.n_max, "0 = suite default");
    verify->add_option("--d-min", vargs.spec.d_min);
    verify->add_option("--d-max", vargs.spec.d_max);
    verify->add_option("--t-min", vargs.spec.t_min);
    verify->add_option("--t-max", vargs.spec.t_max);
    verify->add_option("--r-min", vargs.spec.r_min);
    verify->add_option("--r-max", vargs.spec.r_max);
    verify->add_option("--instances", vargs.spec.instances, "randomized-instance count");
    verify->add_option("--seed", vargs.spec.seed, "RNG seed (echoed into reports)");
    verify->add_flag("--timings", vargs.spec.timings, "include wall_ms in reports");
    verify->add_flag("--csv", vargs.csv, "flatten reports to CSV instead of NDJSON");
    verify->add_option("--out", vargs.out, "report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return run_construct(cargs);
        if (*table) return run_table(targs);
        if (*homology) {
            if (*sample_opt) hargs.sample = sample_count;
            return run_homology(hargs);
        }
        if (*verify) return run_verify(vargs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
