#ifndef CSPCD_RNG_HPP
#define CSPCD_RNG_HPP

#include <cstdint>

namespace cspcd {

/// SplitMix64 finalizer; also used to derive stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Small, fast generator with a 64-bit state. Good enough statistically for
/// the Monte Carlo drivers here and trivially seedable per replicate.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double strictly inside (0,1): (k + 1/2) / 2^53.
    double next_open01() {
        return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }
};

/// Counter-based replicate stream: depends only on (seed, replicate), so
/// serial and parallel schedules draw identical numbers.
inline SplitMix64 replicate_stream(std::uint64_t seed, std::uint64_t replicate) {
    return SplitMix64(mix64(mix64(seed) ^ (0xD1B54A32D192ED03ull * (replicate + 1))));
}

} // namespace cspcd

#endif
