#pragma once

#include <cstdint>

namespace lqsp {

// Counter-based deterministic random stream. Draw index i of stream `seed` is
// a pure function of (seed, i), so generation order, threading and platform
// cannot change the values.

inline uint64_t splitmix64_mix(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t random_bits(uint64_t seed, uint64_t index) {
    return splitmix64_mix(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// Uniform in [0, 1), 53 significant bits.
inline double random_uniform01(uint64_t seed, uint64_t index) {
    return static_cast<double>(random_bits(seed, index) >> 11) * 0x1.0p-53;
}

// Uniform in [-1, 1).
inline double random_symmetric(uint64_t seed, uint64_t index) {
    return 2.0 * random_uniform01(seed, index) - 1.0;
}

}  // namespace lqsp
