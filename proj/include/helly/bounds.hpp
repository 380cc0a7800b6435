#ifndef HELLY_BOUNDS_HPP
#define HELLY_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "helly/numeric.hpp"

namespace helly {

// x split into t nonnegative parts as evenly as possible: with x = tq + s,
// 0 <= s < t, exactly s parts equal q+1 and t-s parts equal q. Parts are
// listed larger-first.
struct BalancedPartition {
    long long total = 0;
    int t = 1;
    long long q = 0;
    long long s = 0;
    std::vector<long long> parts;

    static BalancedPartition make(long long x, int t);
};

enum class BoundKind { fractional_helly, g_d, turan, product_threshold };

// Parameter tuple for one of the closed-form bounds, with the hypothesis
// checks of the theorem it comes from.
struct BoundSpec {
    long long d = 1, t = 1, r = 1, n = 2;
    BoundKind kind = BoundKind::g_d;

    // Empty when the tuple satisfies the hypotheses, else names the violation.
    std::optional<std::string> violation() const;
};

// C(n, d+1) - C(n-r, d+1). Requires n > d + r >= 1.
Int frachel_bound(long long n, long long d, long long r);

// C(n, d+1) minus the balanced-partition minimum of sum C(n_i, d+1) over
// nonnegative n_1..n_t summing to n - r + (t-1)d. Requires the Theorem
// hypotheses: d, t, r positive, r >= (t-1)d, n > d + r.
Int g_d(long long n, long long t, long long r, long long d);

// The same closed form with no hypothesis check (non-theorem territory; the
// caller is responsible for flagging it as such).
Int g_d_formula(long long n, long long t, long long r, long long d);

// Minimum of sum C(x_i, k) over ALL compositions of x into t nonnegative
// parts, by exhaustive enumeration. The independent oracle for the
// Karamata-type partition inequality.
Int min_binom_sum_oracle(int x, int t, int k);

// C(n,2) - s*C(q+1,2) - (t-s)*C(q,2) with n = tq + s.
Int turan_bound(long long n, long long t);

// 1 - (1-alpha)^(1/(d+1)) as a dyadic rational with `bits` fractional bits.
Rat beta_convex(const Rat& alpha, int d, unsigned bits = 64);

// 1 - (t^d (1-alpha))^(1/(d+1)); defined only for alpha above the product
// threshold.
Rat beta_product(const Rat& alpha, int d, int t, unsigned bits = 64);

// 1 - 1/t^d, exact.
Rat product_threshold(int d, int t);

// Largest r with g_d(n,t,r) < count (so `count` intersecting (d+1)-tuples
// force an intersecting subfamily of size >= d+r+1); 0 when no admissible r
// qualifies. Requires count <= C(n, d+1).
long long rank_from_count(long long n, long long d, long long t, const Int& count);

// The higher-dimensional face bound sum_{i=0}^{d} C(n-r, i) * C(r, j+1-i),
// reported alongside measurements but never asserted tight.
Int fj_bound(long long n, long long d, long long r, long long j);

}  // namespace helly

#endif
