#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbf/table.hpp"
#include "mbf/walk.hpp"

namespace mbf {

/// Fixed-cost alternative: enumerate every start in [0, range_len) and
/// report all of them whose walk value ends in at least `zeros` zero
/// bits.  Generation cost is exactly range_len * path_len fetches.
struct RangeChallenge {
    Nonce nonce{};
    std::uint64_t range_len = 0;  ///< R
    std::uint8_t zeros = 0;       ///< required trailing zero bits
    std::uint32_t path_len = 0;   ///< l
};

/// Validates and fills a challenge.  Throws std::invalid_argument for
/// range_len == 0, zeros > 24, or path_len == 0.  zeros == 0 is the
/// degenerate everything-qualifies challenge.
RangeChallenge make_range_challenge(const Nonce& nonce, std::uint64_t range_len,
                                    unsigned zeros, std::uint32_t path_len);

/// Ascending list of every qualifying start index.  May be empty.
struct RangeProof {
    std::vector<std::uint64_t> indices;
};

/// Scans the whole range.  n_threads > 1 partitions [0, range_len)
/// into contiguous chunks; the merged result is identical to the
/// sequential scan.  counter, when non-null, receives the combined
/// fetch count (exactly range_len * path_len).
RangeProof generate_range_proof(const PublicTable& table, const RangeChallenge& ch,
                                unsigned n_threads = 1,
                                AccessCounter* counter = nullptr);

/// Audit policy: re-walk sample_count listed indices and exhaustively
/// re-search gap_count intervals, both drawn without replacement from
/// a generator seeded with audit_seed.  Gaps include the boundary
/// intervals before the first and after the last listed index, so a
/// proof with n indices has n + 1 auditable gaps.  Counts larger than
/// the population are clamped.
struct AuditPlan {
    std::uint32_t sample_count = 8;
    std::uint32_t gap_count = 4;
    std::uint64_t audit_seed = 0;
};

/// sample_count = min(8, proof_len), gap_count = 4.
AuditPlan default_audit_plan(std::size_t proof_len, std::uint64_t audit_seed = 0);

enum class RangeVerdict { Accept, EmptyProof, Malformed, BogusIndex, OmittedIndex };

const char* to_string(RangeVerdict v) noexcept;

/// Checks run in order and short-circuit:
///   EmptyProof    - empty lists are rejected outright by policy
///   Malformed     - unsorted, duplicated, out-of-range, or longer than
///                   8x the expected hit count
///   BogusIndex    - a sampled index lacks the required zeros
///   OmittedIndex  - a sampled gap contains a qualifying index
RangeVerdict verify_range_proof(const PublicTable& table, const RangeChallenge& ch,
                                const RangeProof& proof, const AuditPlan& plan,
                                AccessCounter* counter = nullptr);

/// range_len * 2^{-zeros}.
double expected_hits(const RangeChallenge& ch) noexcept;

/// Probability the honest proof is empty: (1 - 2^{-zeros})^{range_len},
/// evaluated in log space.
double empty_proof_prob(const RangeChallenge& ch) noexcept;

/// Expected verifier fetch count for the plan against this proof:
/// (min(k, n) + min(g, n+1) * (R - n)/(n + 1)) * l.  For an empty proof
/// it instead returns the expected cost of auditing emptiness, i.e.
/// walking until the first counterexample: l * (1 - (1-p)^R)/p with
/// p = 2^{-zeros}, about 2^zeros * l for large R.
double verification_effort(const RangeChallenge& ch, const RangeProof& proof,
                           const AuditPlan& plan) noexcept;

}  // namespace mbf
