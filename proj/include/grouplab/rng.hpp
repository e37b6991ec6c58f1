#pragma once
// Deterministic random streams.  One master seed fans out into independent
// per-trial streams keyed by (row, trial), so results are bit-identical no
// matter how trials are scheduled across threads.

#include "grouplab/bigint.hpp"

#include <cstdint>

namespace grouplab {

// SplitMix64 finalizer: the standard 64-bit avalanche mix.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Combine a seed with a stream key; chaining mix64 keeps streams decorrelated.
inline uint64_t mix_stream(uint64_t master, uint64_t a, uint64_t b) {
    return mix64(mix64(mix64(master) ^ a) ^ b);
}

// xoshiro256** by Blackman & Vigna, seeded through SplitMix64.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) {
        uint64_t z = seed;
        for (auto& w : s_) {
            z += 0x9e3779b97f4a7c15ULL;
            uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
            t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
            w = t ^ (t >> 31);
        }
    }

    using result_type = uint64_t;
    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~0ULL; }

    uint64_t operator()() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) by rejection on the top bits.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
        for (;;) {
            uint64_t v = (*this)() & mask;
            if (v < bound) return v;
        }
    }

    // Unbiased BigInt in [0, bound) by masked rejection on the bit length.
    BigInt below_big(const BigInt& bound) {
        if (bound <= 1) return 0;
        unsigned long long bits = boost::multiprecision::msb(bound - 1) + 1;
        for (;;) {
            BigInt v = 0;
            unsigned long long got = 0;
            while (got < bits) {
                v <<= 64;
                v |= (*this)();
                got += 64;
            }
            v >>= (got - bits);
            if (v < bound) return v;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return (double)((*this)() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace grouplab
