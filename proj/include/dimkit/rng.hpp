#pragma once

#include <cstdint>

namespace dimkit {

// Counter-based randomness: every draw is a pure function of a 64-bit key,
// so percolation cells can be decided independently of evaluation order and
// of how deep the realization is taken.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix_keys(uint64_t a, uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Uniform draw in [0,1) keyed by `key`; 53 mantissa bits.
inline double unit_uniform(uint64_t key) {
    return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

}  // namespace dimkit
