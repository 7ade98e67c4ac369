#pragma once

#include <cstdint>

namespace gaeta {

/// splitmix64 stream; fixed algorithm so seeded runs are reproducible across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) {
        // rejection keeps the distribution exact
        uint64_t lim = ~0ULL - ~0ULL % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Derive an independent stream (for per-trial seeds).
    Rng fork(uint64_t salt) {
        return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    }

private:
    uint64_t state_;
};

} // namespace gaeta
