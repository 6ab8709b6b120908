#pragma once

#include <cstdint>

namespace fibrato {

// SplitMix64. Byte-identical output on every platform; std:: distributions
// are not portable across standard libraries, so sampling goes through this.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

    int64_t range(int64_t lo, int64_t hi) {  // inclusive
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // independent stream for trial i of a master seed
    static Rng for_trial(uint64_t master, uint64_t trial) {
        Rng mix(master ^ (0x517cc1b727220a95ull * (trial + 1)));
        mix.next();
        return mix;
    }
};

}  // namespace fibrato
