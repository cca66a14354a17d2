#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbf/mbound.hpp"
#include "mbf/range_proof.hpp"
#include "mbf/table.hpp"
#include "mbf/walk.hpp"

namespace mbf {

enum class PolicyKind { EarlyAbort, PerturbRetry, SelectiveFailure };

struct AdversaryPolicy {
    PolicyKind kind = PolicyKind::EarlyAbort;
    std::uint64_t abort_threshold = 0;  ///< trials before giving up on one search
    std::uint64_t retry_budget = 1;     ///< perturbations per message (PerturbRetry)
    std::uint64_t cheapness_bound = 0;  ///< trials per perturbation (PerturbRetry)
};

struct StrategyOutcome {
    std::uint64_t attempts = 0;           ///< messages or challenges handled
    std::uint64_t delivered = 0;
    std::uint64_t total_trials_spent = 0; ///< walks run, including failed searches
    double trials_per_delivered = 0.0;    ///< 0 when nothing was delivered
    double delivery_rate = 0.0;
};

/// Simulation result with its closed-form prediction alongside.
/// Standard errors come from the run itself: binomial for the delivery
/// rate, ratio-estimator for trials_per_delivered.
struct ExperimentReport {
    AdversaryPolicy policy;
    StrategyOutcome outcome;
    double predicted_delivery_rate = 0.0;
    double predicted_trials_per_attempt = 0.0;
    double predicted_trials_per_delivered = 0.0;
    double delivery_rate_se = 0.0;
    double trials_per_delivered_se = 0.0;
    double latency_bound_accesses = 0.0;    ///< PerturbRetry: parallel wall-clock bound
    double serial_expected_accesses = 0.0;  ///< honest expected cost, for contrast
    std::string note;
};

/// One fresh nonce per message, search capped at policy.abort_threshold
/// trials.  Real walks against the table; the challenge supplies e and l.
ExperimentReport run_early_abort(const PublicTable& table, const MboundChallenge& base,
                                 const AdversaryPolicy& policy,
                                 std::uint64_t n_messages, std::uint64_t rng_seed);

/// Spammer model: per message, derive up to retry_budget perturbed
/// nonces and search each for at most cheapness_bound trials, stopping
/// at the first success.  Total work per delivery stays 2^e trials
/// (memorylessness); what the retries buy is latency, bounded by
/// cheapness_bound * l accesses when the perturbations run in parallel.
ExperimentReport run_perturb_retry(const PublicTable& table, const Nonce& base_nonce,
                                   int e, std::uint32_t l, const AdversaryPolicy& policy,
                                   std::uint64_t n_messages, std::uint64_t rng_seed);

/// Abandons any challenge whose search exceeds abort_threshold trials;
/// the spend up to the threshold is lost.
ExperimentReport run_selective_failure(const PublicTable& table,
                                       const std::vector<MboundChallenge>& challenges,
                                       const AdversaryPolicy& policy,
                                       std::uint64_t rng_seed);

/// Range-scheme variant: the cost of a challenge is known upfront
/// (range_len trials, fixed), so the adversary either pays it in full
/// or walks away at zero spend.  There is no partial-cost delivery to
/// exploit.
ExperimentReport run_selective_failure(const PublicTable& table,
                                       const std::vector<RangeChallenge>& challenges,
                                       const AdversaryPolicy& policy,
                                       std::uint64_t rng_seed);

}  // namespace mbf
