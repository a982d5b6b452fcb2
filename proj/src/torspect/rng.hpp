#pragma once

#include <cstdint>

namespace torspect {

inline uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/* xoshiro256** seeded through SplitMix64.  Self-contained so that runs are
 * reproducible byte for byte across compilers and platforms. */
class Rng {
public:
    explicit Rng(uint64_t seed)
    {
        uint64_t x = seed;
        for (auto& word : state_) {
            x = splitmix64(x);
            word = x;
        }
    }

    uint64_t next()
    {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    uint32_t below(uint32_t bound)
    {
        const uint64_t span = bound;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x = next();
        while (x >= limit)
            x = next();
        return static_cast<uint32_t>(x % span);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

// Per-trial seed derivation; trials may then run in any order or in parallel.
inline uint64_t derive_seed(uint64_t seed, uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed2701ULL));
}

}  // namespace torspect
