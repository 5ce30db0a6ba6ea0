#pragma once

#include <cstdint>
#include <random>

namespace entdj {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Engine seed for the index-th stream derived from a base seed. Streams for
// distinct indices stay decorrelated even when base seeds are adjacent.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) + index);
}

// Uniform double in [0, 1) built from the top 53 bits of the engine output.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace entdj
