#ifndef HELLY_VERIFY_HPP
#define HELLY_VERIFY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/json_io.hpp"

namespace helly {

// Parameter windows for a suite run. Zero means "use the suite's default".
// Tuples inside the window that violate a theorem hypothesis are reported as
// skips naming the violated hypothesis, never silently passed.
struct SweepSpec {
    int n_min = 0, n_max = 0;
    int d_min = 0, d_max = 0;
    int t_min = 0, t_max = 0;
    int r_min = 0, r_max = 0;
    int instances = 120;  // randomized-instance suites
    std::uint64_t seed = 1;
    HomologyCaps caps;
    NerveCaps nerve_caps;
    bool timings = false;
    Json flags = Json::object();  // CLI flags echoed into every report
};

// One theorem check on one parameter tuple. Negative controls are
// deliberately corrupted inputs: they count as expected only when they fail.
struct VerificationReport {
    std::string suite;
    std::string check;
    Json params = Json::object();
    Json measured = Json::object();
    Json predicted = Json::object();
    std::string verdict;  // "pass" | "fail" | "skip" | "info"
    std::string reason;
    bool negative_control = false;
    Json witness;
    std::uint64_t seed = 0;
    double wall_ms = -1.0;
    Json flags = Json::object();
};

using ReportList = std::vector<VerificationReport>;

ReportList suite_theorem_1_4(const SweepSpec& spec);
ReportList suite_theorem_1_5(const SweepSpec& spec);
ReportList suite_theorem_1_6(const SweepSpec& spec);
ReportList suite_prop_2_1(const SweepSpec& spec);
ReportList suite_theorem_4_4(const SweepSpec& spec);
ReportList report_f_j(const SweepSpec& spec);

// Suite names use dashes: theorem-1-4, theorem-1-5, theorem-1-6, prop-2-1,
// theorem-4-4, f-j; "all" runs everything.
ReportList run_suite(const std::string& name, const SweepSpec& spec);

// True iff every plain check passed and every negative control failed; skip
// and info rows are neutral.
bool reports_pass(const ReportList& reports);

// Wall time is emitted only when `timings` is set, so default reruns are
// byte-identical.
Json report_to_json(const VerificationReport& report, bool timings);
void write_ndjson(std::ostream& out, const ReportList& reports, bool timings);
// Flattens params/measured/predicted scalars into dotted columns.
void write_csv(std::ostream& out, const ReportList& reports);

}  // namespace helly

#endif
