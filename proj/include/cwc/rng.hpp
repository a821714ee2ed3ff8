// rng.hpp -- seeded, reproducible randomness.  Child streams are derived with
// splitmix64 over (master seed, stream index); draws come from mt19937_64.

#pragma once

#include <cstdint>
#include <random>

namespace cwc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream r of a master seed; documented derivation rule for restarts/samples.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 1));
}

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] via rejection-free std::uniform_int_distribution.
inline int uniform_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

}  // namespace cwc
