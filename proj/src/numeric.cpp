#include "helly/numeric.hpp"

#include <stdexcept>

namespace helly {

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::size_t rat_bit_size(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) + mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

Int kth_root_floor(const Int& a, unsigned long k) {
    if (a < 0) throw std::domain_error("kth_root_floor: negative radicand");
    Int r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

Rat dyadic_root(const Rat& x, unsigned long k, unsigned bits) {
    if (x < 0) throw std::domain_error("dyadic_root: negative radicand");
    const unsigned guard = 16;
    // floor(((p << k*(bits+guard)) / q) ^ (1/k)), then round away the guard bits.
    Int scaled = x.get_num() << (k * (bits + guard));
    scaled /= x.get_den();
    Int root = kth_root_floor(scaled, k);
    // Round to nearest at `bits`, ties to even.
    Int half(1);
    half <<= (guard - 1);
    Int head = root >> guard;
    Int tail = root - (head << guard);
    if (tail > half || (tail == half && mpz_odd_p(head.get_mpz_t())))
        head += 1;
    return make_rat(head, Int(1) << bits);
}

}  // namespace helly
