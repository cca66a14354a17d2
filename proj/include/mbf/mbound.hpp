#pragma once

#include <cstdint>
#include <optional>

#include "mbf/table.hpp"
#include "mbf/walk.hpp"

namespace mbf {

/// Proof-of-effort challenge: find a start index whose walk value ends
/// in at least effort_bits zero bits.  Success probability per trial is
/// 2^{-e}, so the expected trial count is 2^e.
struct MboundChallenge {
    Nonce nonce{};
    std::uint8_t effort_bits = 0;   ///< e
    std::uint32_t path_len = 0;     ///< l, table fetches per trial
    std::uint64_t max_trials = 0;   ///< generator abandons after this many starts
};

/// 2^{2e}: the verifier's rejection bound, reused as the honest
/// generator's give-up point.
std::uint64_t default_max_trials(unsigned effort_bits);

/// Validates and fills a challenge.  max_trials == 0 selects the
/// default.  Throws std::invalid_argument for effort_bits > 24 or
/// path_len == 0.  effort_bits == 0 is admitted as the degenerate
/// accept-everything challenge.
MboundChallenge make_mbound_challenge(const Nonce& nonce, unsigned effort_bits,
                                      std::uint32_t path_len,
                                      std::uint64_t max_trials = 0);

struct MboundProof {
    std::uint64_t index = 0;        ///< the successful start index i
    std::uint64_t trials_used = 0;  ///< index + 1; stays local, never transmitted
};

struct GenerationOutcome {
    std::optional<MboundProof> proof;  ///< empty when max_trials exhausted
    std::uint64_t trials_run = 0;      ///< equals max_trials when exhausted
};

/// Walks s = 0, 1, 2, ... and returns the first s whose walk value has
/// at least effort_bits trailing zeros, or an exhausted outcome.
GenerationOutcome generate(const PublicTable& table, const MboundChallenge& ch,
                           AccessCounter* counter = nullptr);

enum class MboundVerdict { Accept, TooLarge, BadZeros };

const char* to_string(MboundVerdict v) noexcept;

/// Rejects TooLarge when index >= 2^{2e} without touching the table;
/// otherwise re-walks the single index (exactly path_len fetches) and
/// accepts iff the trailing-zero requirement holds.
MboundVerdict verify(const PublicTable& table, const MboundChallenge& ch,
                     std::uint64_t proof_index, AccessCounter* counter = nullptr);

}  // namespace mbf
