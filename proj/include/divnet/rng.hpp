#pragma once

// Explicit, seedable random number generation with reproducible substreams.
//
// Bootstrap replicates and property tests must produce identical results for
// identical seeds on every platform and thread count, so all distributions
// are built directly on raw 64-bit outputs rather than on <random>
// distribution adaptors (whose results are implementation-defined).

#include <array>
#include <cstdint>

#include "divnet/common.hpp"

namespace divnet {

inline u64 splitmix64_next(u64& state) {
    u64 z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** by Blackman & Vigna (public domain reference implementation).
class Xoshiro256 {
public:
    explicit Xoshiro256(u64 seed) {
        u64 sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    u64 next() {
        const u64 result = rotl(state_[1] * 5, 7) * 9;
        const u64 t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 significant bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). Widening-multiply map; bias is < bound/2^64.
    u64 next_below(u64 bound) {
        return static_cast<u64>((static_cast<u128>(next()) * bound) >> 64);
    }

private:
    static u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<u64, 4> state_{};
};

// Derives the generator for substream `index` of a run keyed by `seed`.
// Each (seed, index) pair yields an independent, reproducible stream, so
// parallel replicates do not depend on scheduling order.
inline Xoshiro256 substream(u64 seed, u64 index) {
    u64 sm = seed;
    u64 base = splitmix64_next(sm);
    return Xoshiro256(base ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

}  // namespace divnet
