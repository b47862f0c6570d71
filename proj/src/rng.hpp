#pragma once

#include <cstdint>
#include <random>

namespace qx {

// Deterministic stream selector. Same seed + same parameters => same output
// for every randomized operation in the library.
struct Seed {
    std::uint64_t value = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based split: stream `index` of a base seed. Serial and parallel
// consumers of the same (seed, index) pair see identical streams.
inline Seed derive(Seed base, std::uint64_t index) {
    return Seed{splitmix64(base.value ^ splitmix64(index + 1))};
}

inline std::mt19937_64 make_rng(Seed seed) {
    return std::mt19937_64(splitmix64(seed.value));
}

}  // namespace qx
