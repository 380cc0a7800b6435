#include "helly/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "helly/errors.hpp"
#include "helly/rank.hpp"

namespace helly {

namespace {

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

// Faces of one complex grouped by cardinality; by_card[c] sorted canonically.
struct FaceLevels {
    std::vector<std::vector<Mask>> by_card;
    int dim = -1;

    long long f(int i) const {  // number of i-dimensional faces
        const std::size_t c = static_cast<std::size_t>(i) + 1;
        return c < by_card.size() ? static_cast<long long>(by_card[c].size()) : 0;
    }
};

FaceLevels levels_from_complex(const Complex& k) {
    FaceLevels lv;
    lv.by_card = k.faces_by_card();
    lv.dim = k.dim();
    return lv;
}

// Faces of K[W] gathered from a precomputed face set of K.
FaceLevels levels_induced(const std::unordered_set<Mask>& faces, Mask w, int max_card) {
    FaceLevels lv;
    lv.by_card.resize(static_cast<std::size_t>(max_card) + 1);
    for_each_subset(w, [&](Mask s) {
        if (faces.count(s)) lv.by_card[static_cast<std::size_t>(popcount(s))].push_back(s);
    });
    if (!faces.count(0)) lv.by_card.clear();  // void complex has no faces at all
    for (auto& level : lv.by_card) std::sort(level.begin(), level.end(), mask_lex_less);
    while (!lv.by_card.empty() && lv.by_card.back().empty()) lv.by_card.pop_back();
    lv.dim = static_cast<int>(lv.by_card.size()) - 2;
    return lv;
}

long long boundary_rank(const FaceLevels& lv, int i) {
    if (i <= 0) return lv.f(0) > 0 ? 1 : 0;  // augmentation map
    if (lv.f(i) == 0) return 0;
    const auto& rows = lv.by_card[static_cast<std::size_t>(i)];
    const auto& cols = lv.by_card[static_cast<std::size_t>(i) + 1];
    return matrix_rank(boundary_matrix(rows, cols));
}

// betti[i - from] for i in [from, dim].
std::vector<long long> betti_tail(const FaceLevels& lv, int from) {
    std::vector<long long> out;
    if (lv.dim < from) return out;
    long long rank_lo = boundary_rank(lv, from);
    for (int i = from; i <= lv.dim; ++i) {
        long long rank_hi = boundary_rank(lv, i + 1);
        const long long betti = lv.f(i) - rank_lo - rank_hi;
        if (betti < 0) throw std::logic_error("betti_tail: negative Betti number");
        out.push_back(betti);
        rank_lo = rank_hi;
    }
    return out;
}

}  // namespace

HomologyCaps HomologyCaps::from_env() {
    HomologyCaps caps;
    caps.betti_cap = env_cap("HELLY_BETTI_CAP", caps.betti_cap);
    caps.leray_cap = env_cap("HELLY_LERAY_CAP", caps.leray_cap);
    return caps;
}

std::vector<std::vector<long long>> boundary_matrix(const std::vector<Mask>& rows,
                                                    const std::vector<Mask>& cols) {
    std::unordered_map<Mask, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Mask rest = cols[j];
        int position = 0;
        while (rest) {
            const int v = std::countr_zero(rest);
            const Mask face = cols[j] & ~(Mask{1} << v);
            auto it = row_index.find(face);
            if (it == row_index.end())
                throw std::logic_error("boundary_matrix: missing facet (complex not closed)");
            m[it->second][j] = (position % 2 == 0) ? 1 : -1;
            ++position;
            rest &= rest - 1;
        }
    }
    return m;
}

BettiProfile reduced_betti(const Complex& k, const HomologyCaps& caps) {
    if (k.vertex_count() > caps.betti_cap)
        throw resource_error("reduced_betti: vertex count " + std::to_string(k.vertex_count()) +
                             " exceeds betti cap " + std::to_string(caps.betti_cap) +
                             " (HELLY_BETTI_CAP)");
    BettiProfile profile;
    const FaceLevels lv = levels_from_complex(k);
    if (lv.dim < 0) return profile;  // void complex or the empty face alone
    profile.betti = betti_tail(lv, 0);

    // Euler-Poincare: sum (-1)^j f_j - 1 = sum (-1)^i betti_i for a complex
    // with at least one vertex.
    long long lhs = -1, rhs = 0;
    for (int j = 0; j <= lv.dim; ++j) lhs += (j % 2 == 0 ? 1 : -1) * lv.f(j);
    for (int i = 0; i <= lv.dim; ++i)
        rhs += (i % 2 == 0 ? 1 : -1) * profile.betti[static_cast<std::size_t>(i)];
    if (lhs != rhs) throw std::logic_error("reduced_betti: Euler-Poincare identity violated");
    return profile;
}

namespace {

std::unordered_set<Mask> face_set(const Complex& k) {
    std::unordered_set<Mask> faces;
    for (Mask m : k.maximal_faces()) for_each_subset(m, [&](Mask s) { faces.insert(s); });
    return faces;
}

}  // namespace

LerayCertificate is_d_leray(const Complex& k, int d, const LerayOptions& opts) {
    if (d < 0) throw std::invalid_argument("is_d_leray: d must be nonnegative");
    if (k.vertex_count() > opts.caps.leray_cap)
        throw resource_error("is_d_leray: vertex count " + std::to_string(k.vertex_count()) +
                             " exceeds exhaustive cap " + std::to_string(opts.caps.leray_cap) +
                             " (HELLY_LERAY_CAP)");
    LerayCertificate cert;
    cert.d = d;
    const auto faces = face_set(k);
    const int n = k.vertex_count();
    const int max_card = k.dim() + 1;

    auto check_subset = [&](Mask w) -> bool {  // true if w stays clean
        const FaceLevels lv = levels_induced(faces, w, max_card);
        if (lv.dim < d) return true;
        ++cert.subsets_checked;
        const std::vector<long long> tail = betti_tail(lv, d);
        for (std::size_t i = 0; i < tail.size(); ++i) {
            if (tail[i] != 0) {
                cert.verdict = LerayCertificate::Verdict::refuted;
                cert.counterexample = {mask_to_verts(w), d + static_cast<int>(i)};
                return false;
            }
        }
        return true;
    };

    if (opts.sample) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<Mask> dist(0, full_mask(n));
        for (std::uint64_t s = 0; s < *opts.sample; ++s)
            if (!check_subset(dist(rng))) return cert;
        cert.verdict = LerayCertificate::Verdict::not_falsified;
        return cert;
    }

    // Counterexamples are reported for the lexicographically first W.
    std::vector<Mask> order;
    order.reserve(std::size_t{1} << n);
    for (Mask w = 0;; ++w) {
        order.push_back(w);
        if (w == full_mask(n)) break;
    }
    std::sort(order.begin(), order.end(), mask_lex_less);
    for (Mask w : order)
        if (!check_subset(w)) return cert;
    cert.verdict = LerayCertificate::Verdict::certified;
    return cert;
}

int leray_number(const Complex& k, const LerayOptions& opts) {
    if (k.vertex_count() > opts.caps.leray_cap)
        throw resource_error("leray_number: vertex count " + std::to_string(k.vertex_count()) +
                             " exceeds exhaustive cap " + std::to_string(opts.caps.leray_cap) +
                             " (HELLY_LERAY_CAP)");
    const auto faces = face_set(k);
    const int n = k.vertex_count();
    const int max_card = k.dim() + 1;
    int max_nonzero = -1;
    const Mask all = full_mask(n);
    for (Mask w = 0;; ++w) {
        const FaceLevels lv = levels_induced(faces, w, max_card);
        // Homology above dim K[W] vanishes, so small subsets cannot improve.
        if (lv.dim > max_nonzero) {
            const std::vector<long long> tail = betti_tail(lv, 0);
            for (int i = lv.dim; i >= 0; --i) {
                if (tail[static_cast<std::size_t>(i)] != 0) {
                    max_nonzero = std::max(max_nonzero, i);
                    break;
                }
            }
        }
        if (w == all) break;
    }
    return max_nonzero + 1;
}

}  // namespace helly
