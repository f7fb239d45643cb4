#pragma once

#include <cstdint>
#include <random>

namespace topogen {

// mt19937_64 output is pinned by the standard, so a seed determines the same
// stream on every platform. The std::*_distribution adaptors are not pinned;
// the helpers below replace them.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Multiply-shift reduction; the bias of n / 2^64
// is far below anything observable at the scales used here.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(rng()) * n) >> 64);
}

} // namespace topogen
