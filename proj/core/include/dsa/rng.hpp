#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace dsa {

// All randomness flows through std::mt19937_64 raw draws plus the conversions
// below. The raw mt19937_64 sequence is fully specified by the standard, and
// the conversions avoid std::uniform_*_distribution, whose output is
// implementation-defined. Same seed, same results, on every platform.

// Uniform double in [0, 1), 53 random mantissa bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound). bound must be >= 1. Rejection sampling,
// no modulo bias.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t v = gen();
        if (v < limit) return v % bound;
    }
}

// splitmix64 finalizer; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for a named sub-stream (deployment, dissemination, query, ...) of one
// trial instance.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

inline constexpr std::uint64_t kDeployStream = 1;
inline constexpr std::uint64_t kDisseminationStream = 2;
inline constexpr std::uint64_t kQueryStream = 3;

// Large odd stride separating trial indices in the instance-seed schedule:
// instance = base + trial * stride + point. Odd stride means distinct
// (trial, point) pairs collide only at astronomically unlikely offsets.
inline constexpr std::uint64_t kTrialSeedStride = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t point_index,
                                   std::uint64_t trial_index) {
    return base_seed + trial_index * kTrialSeedStride + point_index;
}

}  // namespace dsa
