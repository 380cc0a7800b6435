#ifndef HELLY_NUMERIC_HPP
#define HELLY_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace helly {

// All integer quantities are exact arbitrary-precision integers; all geometry
// runs on exact rationals. No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

// mpz_class has no long long constructor; 64-bit long covers desk scale.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// num/den with canonicalization (gmp requires it for raw construction).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Serialized form is always "p/q" with q > 0 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& r);

// Accepts "p/q" and bare "p".
Rat rat_from_string(const std::string& s);

std::size_t rat_bit_size(const Rat& r);

// floor(a^(1/k)) for a >= 0.
Int kth_root_floor(const Int& a, unsigned long k);

// (num/den)^(1/k) rounded to `bits` fractional bits (round to nearest, ties to
// even, computed with 16 guard bits; the result is within half an ulp plus a
// 2^-16 ulp slack of the exact root). Returned as the exact dyadic rational.
Rat dyadic_root(const Rat& x, unsigned long k, unsigned bits);

}  // namespace helly

#endif
