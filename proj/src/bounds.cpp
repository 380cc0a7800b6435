#include "helly/bounds.hpp"

#include <stdexcept>

#include "helly/errors.hpp"

namespace helly {

BalancedPartition BalancedPartition::make(long long x, int t) {
    if (x < 0 || t < 1) throw std::invalid_argument("BalancedPartition: need x >= 0, t >= 1");
    BalancedPartition p;
    p.total = x;
    p.t = t;
    p.q = x / t;
    p.s = x % t;
    p.parts.assign(static_cast<std::size_t>(t), p.q);
    for (long long i = 0; i < p.s; ++i) p.parts[static_cast<std::size_t>(i)] = p.q + 1;
    return p;
}

std::optional<std::string> BoundSpec::violation() const {
    switch (kind) {
        case BoundKind::fractional_helly:
            if (d < 1) return "d must be positive";
            if (r < 0) return "r must be nonnegative";
            if (n <= d + r) return "need n > d + r";
            return std::nullopt;
        case BoundKind::g_d:
            if (d < 1 || t < 1 || r < 1) return "d, t, r must be positive";
            if (r < (t - 1) * d) return "need r >= (t-1)d";
            if (n <= d + r) return "need n > d + r";
            return std::nullopt;
        case BoundKind::turan:
            if (n < 1 || t < 1) return "n, t must be positive";
            return std::nullopt;
        case BoundKind::product_threshold:
            if (d < 1 || t < 1) return "d, t must be positive";
            return std::nullopt;
    }
    return "unknown bound kind";
}

Int frachel_bound(long long n, long long d, long long r) {
    if (d < 1 || r < 0 || n <= d + r)
        throw std::invalid_argument("frachel_bound: need n > d + r >= 1");
    return binomial(n, d + 1) - binomial(n - r, d + 1);
}

Int g_d_formula(long long n, long long t, long long r, long long d) {
    const long long x = n - r + (t - 1) * d;
    if (x < 0 || t < 1) throw std::invalid_argument("g_d_formula: negative partition total");
    const BalancedPartition parts = BalancedPartition::make(x, static_cast<int>(t));
    Int sum = 0;
    for (long long ni : parts.parts) sum += binomial(ni, d + 1);
    return binomial(n, d + 1) - sum;
}

Int g_d(long long n, long long t, long long r, long long d) {
    BoundSpec spec{d, t, r, n, BoundKind::g_d};
    if (auto why = spec.violation()) throw std::invalid_argument("g_d: " + *why);
    return g_d_formula(n, t, r, d);
}

namespace {

void min_composition_rec(int remaining, int parts_left, int k, const Int& acc, Int& best) {
    if (parts_left == 1) {
        Int total = acc + binomial(remaining, k);
        if (best < 0 || total < best) best = total;
        return;
    }
    for (int x = 0; x <= remaining; ++x)
        min_composition_rec(remaining - x, parts_left - 1, k, acc + binomial(x, k), best);
}

}  // namespace

Int min_binom_sum_oracle(int x, int t, int k) {
    if (x < 0 || t < 1 || k < 1)
        throw std::invalid_argument("min_binom_sum_oracle: need x >= 0, t >= 1, k >= 1");
    if (binomial(x + t - 1, t - 1) > 2000000)
        throw resource_error("min_binom_sum_oracle: " + binomial(x + t - 1, t - 1).get_str() +
                             " compositions exceed the brute-force cap of 2000000");
    Int best = -1;
    min_composition_rec(x, t, k, Int(0), best);
    return best;
}

Int turan_bound(long long n, long long t) {
    if (n < 1 || t < 1) throw std::invalid_argument("turan_bound: need n, t >= 1");
    const long long q = n / t, s = n % t;
    return binomial(n, 2) - to_int(s) * binomial(q + 1, 2) - to_int(t - s) * binomial(q, 2);
}

Rat beta_convex(const Rat& alpha, int d, unsigned bits) {
    if (d < 1) throw std::invalid_argument("beta_convex: d must be positive");
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("beta_convex: need 0 < alpha <= 1");
    return Rat(1) - dyadic_root(Rat(1) - alpha, static_cast<unsigned long>(d) + 1, bits);
}

Rat product_threshold(int d, int t) {
    if (d < 1 || t < 1) throw std::invalid_argument("product_threshold: need d, t >= 1");
    return Rat(1) - make_rat(Int(1), ipow(Int(t), static_cast<unsigned long>(d)));
}

Rat beta_product(const Rat& alpha, int d, int t, unsigned bits) {
    if (d < 1 || t < 1) throw std::invalid_argument("beta_product: need d, t >= 1");
    if (alpha > 1) throw std::invalid_argument("beta_product: need alpha <= 1");
    if (alpha <= product_threshold(d, t))
        throw std::domain_error("beta_product: alpha at or below the threshold 1 - 1/t^d");
    const Rat radicand = ipow(Int(t), static_cast<unsigned long>(d)) * (Rat(1) - alpha);
    return Rat(1) - dyadic_root(radicand, static_cast<unsigned long>(d) + 1, bits);
}

long long rank_from_count(long long n, long long d, long long t, const Int& count) {
    if (count > binomial(n, d + 1))
        throw std::invalid_argument("rank_from_count: count exceeds C(n, d+1)");
    long long best = 0;
    for (long long r = std::max<long long>(1, (t - 1) * d); n > d + r; ++r)
        if (g_d(n, t, r, d) < count) best = r;
    return best;
}

Int fj_bound(long long n, long long d, long long r, long long j) {
    if (j < d) throw std::invalid_argument("fj_bound: need j >= d");
    Int sum = 0;
    for (long long i = 0; i <= d; ++i) sum += binomial(n - r, i) * binomial(r, j + 1 - i);
    return sum;
}

}  // namespace helly
