#ifndef SPARSEMULT_RANDOM_HPP
#define SPARSEMULT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sparsemult {

/// All randomness comes from this engine, seeded from the request seed.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Uniform integer in [lo, hi] via modular reduction of one engine draw;
/// the slight bias is irrelevant here and the mapping is fixed for replay.
inline long draw_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Non-zero integer in [-10, 10].
inline long draw_nonzero_coefficient(Rng& rng) {
    for (;;)
        if (const long c = draw_int(rng, -10, 10); c != 0) return c;
}

}  // namespace sparsemult

#endif  // SPARSEMULT_RANDOM_HPP
