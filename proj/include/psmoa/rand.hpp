// Deterministic random helpers on top of std::mt19937_64.
//
// std::uniform_*_distribution output is implementation-defined, so every
// draw that feeds a reproducibility contract goes through these helpers
// instead. Same seed, same sequence, on any conforming toolchain.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace psmoa {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [lo, hi] inclusive. Unbiased via rejection.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

// Index drawn from a discrete distribution given non-negative weights.
// Falls back to the last positive-weight index on rounding spill.
inline std::size_t discrete(Rng& rng, const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform01(rng) * total;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        last = i;
        r -= weights[i];
        if (r < 0.0) return i;
    }
    return last;
}

}  // namespace psmoa
