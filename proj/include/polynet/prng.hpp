#pragma once

#include <cstdint>

#include "polynet/rational.hpp"

namespace polynet {

/// SplitMix64. Used instead of <random> engines + distributions because the
/// standard distributions are implementation-defined; this generator gives
/// byte-identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], rejection-sampled so the draw is exactly
    /// uniform. Requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next()); // full 64-bit span
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % range);
    }

    /// Uniform rational with numerator in [-num_bound, num_bound] and
    /// denominator in [1, den_bound].
    Rational rational(std::int64_t num_bound, std::int64_t den_bound) {
        const std::int64_t n = uniform(-num_bound, num_bound);
        const std::int64_t d = uniform(1, den_bound);
        return Rational(n, d);
    }

    /// Derives an independent substream (seed mixing for per-trial streams).
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

} // namespace polynet
