#pragma once

#include <cstdint>

namespace mbf {

enum class Scheme { MBound, Range };

/// Deployment-facing figures for one parameter choice.  Access counts
/// are table fetches; proof sizes are bytes.  expected_proof_bytes uses
/// the wire rendering (8-byte indices, 4-byte count prefix for range
/// proofs); expected_proof_bytes_compact shows the same list packed as
/// 4-byte indices with no prefix.
struct SchemePlan {
    Scheme scheme = Scheme::MBound;
    int e = 0;
    int m = 0;      ///< range plans derived from (e, m); zeros = e - m
    int zeros = 0;  ///< range only
    std::uint32_t path_len = 0;
    std::uint64_t range_len = 0;  ///< range only
    double expected_accesses = 0.0;
    double verify_accesses_min = 0.0;
    double verify_accesses_max = 0.0;
    double expected_indices = 1.0;
    double expected_proof_bytes = 0.0;
    double expected_proof_bytes_compact = 0.0;
    double empty_proof_prob = 0.0;  ///< range only
};

/// e in [1, 24], l >= 1.  expected_accesses = 2^e * l; verification is
/// a single re-walk, so verify_accesses_min == verify_accesses_max == l.
SchemePlan plan_mbound(int e, std::uint32_t l);

/// 0 <= m < e <= 24.  range_len = 2^e, zeros = e - m, expected hits
/// 2^m.  Verification spans one sampled re-walk up to a full replay.
SchemePlan plan_range(int e, int m, std::uint32_t l);

/// Range plan for an arbitrary range length; zeros in [0, 24].
SchemePlan plan_range_raw(std::uint64_t range_len, int zeros, std::uint32_t l);

/// Probability that the honest range proof at (e, m) is empty:
/// (1 - 2^{-(e-m)})^{2^e}.  uncorrected=true evaluates
/// (1 - 2^{-m})^{2^e} instead, an erroneous form of the same quantity
/// kept only so reports can show the two side by side.
double empty_proof_probability(int e, int m, bool uncorrected = false);

/// Two ways to give a range plan the same intent as an MBound plan:
/// cost_preserving keeps l and matches expected_accesses exactly;
/// halved_path_len uses l/2 (shrinking the proof's walk length and the
/// total cost with it).
struct RangeEquivalents {
    SchemePlan cost_preserving;
    SchemePlan halved_path_len;
};

RangeEquivalents equivalent_range_params(const SchemePlan& mbound_plan, int m);

/// Completion-time window combining trial-count dispersion (MBound
/// only; the range scheme's trial count is fixed) with the fast/slow
/// memory speed spread.
struct DeadlineWindow {
    double access_time_fast = 0.0;  ///< seconds per fetch, fast memory
    double access_time_slow = 0.0;
    double speed_ratio = 0.0;       ///< slow/fast, default 5
    double earliest_s = 0.0;        ///< q_low quantile on fast memory
    double latest_s = 0.0;          ///< q_high quantile on slow memory
};

/// access_time_fast > 0, speed_ratio >= 1, 0 < q_low <= q_high < 1.
DeadlineWindow deadline_window(const SchemePlan& plan, double access_time_fast,
                               double speed_ratio, double q_low, double q_high);

}  // namespace mbf
