#ifndef HELLY_HOMOLOGY_HPP
#define HELLY_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "helly/complex.hpp"

namespace helly {

// Reduced rational Betti numbers: betti[i] = dim H~_i(K; Q) for 0 <= i <= dim.
struct BettiProfile {
    std::vector<long long> betti;
};

struct HomologyCaps {
    int betti_cap = 16;  // reduced_betti refuses larger vertex counts
    int leray_cap = 14;  // is_d_leray / leray_number refuse larger vertex counts
    // Reads HELLY_BETTI_CAP / HELLY_LERAY_CAP when set.
    static HomologyCaps from_env();
};

struct LerayOptions {
    HomologyCaps caps;
    // When set, only `sample` random subsets are checked and a true verdict is
    // reported as "not falsified" instead of certified.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
};

struct LerayCertificate {
    enum class Verdict { certified, refuted, not_falsified };
    int d = 0;
    Verdict verdict = Verdict::certified;
    // Present iff refuted: (W, i) with H~_i(K[W]) != 0 and i >= d.
    std::optional<std::pair<std::vector<int>, int>> counterexample;
    std::uint64_t subsets_checked = 0;

    bool holds() const { return verdict == Verdict::certified; }
};

// The signed boundary operator from k-faces to (k-1)-faces, rows and columns
// ordered by sorted vertex lists. Entry for (sigma \ {v_j}, sigma) is (-1)^j
// where j is the position of v_j in sigma's ascending vertex list.
std::vector<std::vector<long long>> boundary_matrix(const std::vector<Mask>& rows,
                                                    const std::vector<Mask>& cols);

// Exact reduced rational Betti numbers; checks the Euler-Poincare identity on
// every call. Deterministic.
BettiProfile reduced_betti(const Complex& k, const HomologyCaps& caps = {});

// Exhaustive d-Leray check: every induced subcomplex K[W] must have trivial
// reduced homology in all dimensions >= d. Subsets whose induced dimension is
// below d cannot carry such homology and are skipped. Counterexamples are
// reported for the lexicographically first W (as a sorted vertex list).
LerayCertificate is_d_leray(const Complex& k, int d, const LerayOptions& opts = {});

// Least d for which is_d_leray holds (always exists; one exhaustive sweep).
int leray_number(const Complex& k, const LerayOptions& opts = {});

}  // namespace helly

#endif
