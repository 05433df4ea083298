#pragma once

#include <cstdint>
#include <stdexcept>

namespace pcalc {

// Arithmetic in GF(p) for a prime p < 2^15. Residues are stored as uint32_t
// in [0, p); intermediate products fit in uint64_t.
namespace gf {

bool is_prime(uint32_t p);

// Throws std::invalid_argument unless p is a prime < 2^15.
void require_prime(uint32_t p);

inline uint32_t reduce(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t inv(uint32_t a, uint32_t p);

} // namespace gf
} // namespace pcalc
