#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "mbf/table.hpp"

namespace mbf {

using Nonce = std::array<std::uint8_t, 16>;

struct WalkParams {
    std::uint32_t path_len = 0;  ///< table fetches per walk (l)
};

/// Number of trailing zero bits; 64 when v == 0.
inline int trailing_zero_count(std::uint64_t v) noexcept {
    return std::countr_zero(v);
}

/// A0 for start index s: first 8 bytes, little endian, of
/// SHA-256(nonce || le64(s)).
std::uint64_t initial_accumulator(const Nonce& nonce, std::uint64_t start);

/// Runs the accumulator walk for params.path_len steps and returns the
/// final accumulator.  Each step fetches one table entry at an index
/// taken from the accumulator's high bits, then mixes the entry in:
///
///   idx = (A >> 32) & (len - 1)
///   A   = mix64(A ^ rotl64(A, 23) ^ entry[idx])
///
/// counter, when non-null, is bumped once per fetch.
std::uint64_t walk(const PublicTable& table, const Nonce& nonce,
                   std::uint64_t start, const WalkParams& params,
                   AccessCounter* counter = nullptr);

/// Deterministic nonce for tests and CLI defaults: 16 bytes of the
/// mix64 keystream seeded by `seed`.
Nonce nonce_from_seed(std::uint64_t seed);

/// Fresh nonce derived from a base nonce and a counter, for senders
/// that discard a challenge and retry with new randomness.  First 16
/// bytes of SHA-256(base || le64(counter)).
Nonce derive_nonce(const Nonce& base, std::uint64_t counter);

}  // namespace mbf
