#include "pcalc/field.hpp"

namespace pcalc::gf {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(uint32_t p) {
    if (p >= (1u << 15) || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime < 2^15, got " +
                                    std::to_string(p));
}

uint32_t inv(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("inverse of 0 in GF(p)");
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

} // namespace pcalc::gf
