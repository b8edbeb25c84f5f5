#pragma once

#include <cstdint>
#include <random>

namespace remspec {

// All randomized routines draw raw 64-bit outputs from std::mt19937_64,
// whose sequence is fixed by the standard; derived values below therefore
// reproduce bit-for-bit across platforms for a given seed.
using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] via rejection-free modular mapping. The tiny
// modulo bias is irrelevant here (draws only pick sample points);
// determinism across platforms is what matters.
inline long rng_range(Rng& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<long>(rng() % span);
}

} // namespace remspec
