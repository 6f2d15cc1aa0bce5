#pragma once

#include <cstdint>

namespace sclift {

/// splitmix64; fixed algorithm so seeded runs reproduce across platforms.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

/// Stream-splitting rule: substream i of a seed is seeded with
/// seed ^ (0x51a2b3c4d5e6f708 * (i+1)), then splitmix64. Documented in README.
inline SplitMix64 seed_stream(uint64_t seed, uint64_t index) {
    return SplitMix64(seed ^ (0x51a2b3c4d5e6f708ULL * (index + 1)));
}

} // namespace sclift
