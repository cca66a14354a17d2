#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mbf {

/// 64-bit finalizer used for every deterministic mixing step in the
/// scheme (table keystream, walk updates).  Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl64(std::uint64_t v, int r) noexcept {
    return (v << r) | (v >> (64 - r));
}

constexpr std::uint64_t GOLDEN_GAMMA = 0x9e3779b97f4a7c15ULL;

/// Counter-based generator: state advances by GOLDEN_GAMMA, output is
/// mix64 of the state.  Used for simulation sampling, never for the
/// proof-of-effort primitives themselves.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += GOLDEN_GAMMA;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 bits of precision.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform draw from [0, bound) via rejection.
    std::uint64_t bounded(std::uint64_t bound) noexcept {
        if (bound < 2) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

/// k distinct values from [0, n), ascending.  Partial Fisher-Yates over
/// an index vector; fine for the audit-sized draws this library makes.
inline std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n,
                                                             std::uint64_t k,
                                                             SplitMix64& rng) {
    if (k > n) k = n;
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + rng.bounded(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace mbf
