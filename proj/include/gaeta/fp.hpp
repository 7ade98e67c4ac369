#pragma once

#include <cstdint>

#include "gaeta/error.hpp"
#include "gaeta/rng.hpp"

namespace gaeta {

/// Arithmetic in the prime field F_p, elements as canonical representatives
/// in [0, p). The default prime 32003 keeps single products inside 64 bits
/// with lots of headroom.
struct Fp {
    uint32_t p;

    explicit Fp(uint32_t prime) : p(prime) {
        require(prime > 2 && is_prime(prime), errc::out_of_range,
                "field characteristic must be an odd prime");
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t inv(uint32_t a) const {
        require(a % p != 0, errc::internal_inconsistency, "inverse of zero");
        // extended Euclid
        int64_t t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += p;
        return static_cast<uint32_t>(t);
    }
    uint32_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<uint32_t>(m);
    }
    uint32_t random(Rng& rng) const { return static_cast<uint32_t>(rng.below(p)); }
    uint32_t random_nonzero(Rng& rng) const {
        return 1 + static_cast<uint32_t>(rng.below(p - 1));
    }
};

} // namespace gaeta
