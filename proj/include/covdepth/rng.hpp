#pragma once

#include <cstdint>

namespace covdepth {

/// Fixed-increment SplitMix64.  Cheap to seed, so every stream or search
/// iteration gets its own instance sub-seeded from a master sequence;
/// results then depend only on the master seed, never on thread count.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d4a049bb133111ULL;
        return z ^ (z >> 31);
    }
};

/// Unbiased uniform draw from [0, n) by rejection on the top of the range.
inline int draw_index(SplitMix64& rng, uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r = rng.next();
    while (r >= limit) r = rng.next();
    return static_cast<int>(r % n);
}

}  // namespace covdepth
