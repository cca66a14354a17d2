#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mbf {

/// Log2-binned model of the trial count X needed to find one proof at
/// effort e (success probability p = 2^{-e} per trial).  Support is
/// truncated at max_tries = 2^{e+8}; bin b holds trials in
/// [2^b, 2^{b+1}).
///
/// The accumulation applies the (1-p) survival factor before the first
/// trial, so the modeled P(X = 1) is p(1-p) rather than p.  That
/// convention is kept deliberately: the emitted histogram files must
/// stay bit-compatible with the established reference data.  The
/// closed-form helpers below (quantile, cdf_trials, tail_cost_fraction,
/// abort_analysis) use the exact geometric law P(X = 1) = p instead;
/// the difference is far below any stated tolerance.
struct TrialHistogram {
    int e = 0;
    double p = 0.0;
    std::uint64_t max_tries = 0;
    std::vector<double> bins_tries;  ///< e+8 percentages, share of proofs per bin
    std::vector<double> bins_cost;   ///< e+8 percentages, share of total cost per bin
    double total_cost = 0.0;         ///< expected trials over the truncated support
};

/// e in [1, 24]; throws std::invalid_argument otherwise.
TrialHistogram trial_distribution(int e);

/// P(X <= trials) = 1 - (1-p)^trials, exact geometric.
double cdf_trials(int e, std::uint64_t trials) noexcept;

/// Smallest trial count t with cdf_trials(e, t) >= q; q in (0, 1).
std::uint64_t quantile(int e, double q);

/// Fraction of total expected cost contributed by proofs needing more
/// than multiple * 2^e trials, by direct summation over the truncated
/// support.  multiple > 0.
double tail_cost_fraction(int e, double multiple);

/// Early-abort economics at threshold t trials per attempt.
/// cost_per_delivered is 2^e for every threshold: the geometric law is
/// memoryless, so giving up early never lowers the price of the proofs
/// actually delivered.
struct AbortReport {
    int e = 0;
    std::uint64_t threshold = 0;
    double delivery_rate = 0.0;      ///< 1 - (1-p)^t
    double cost_per_attempt = 0.0;   ///< E[min(X, t)] = delivery_rate / p
    double cost_per_delivered = 0.0; ///< 2^e
    std::uint64_t mc_draws = 0;      ///< 0 when no simulation was attached
    double mc_delivery_rate = 0.0;
    double mc_cost_per_attempt = 0.0;
    double mc_delivery_se = 0.0;
    double mc_cost_se = 0.0;
};

/// Closed forms, plus a Monte Carlo cross-check over mc_draws geometric
/// draws when mc_draws > 0.  threshold >= 1.
AbortReport abort_analysis(int e, std::uint64_t threshold,
                           std::uint64_t mc_draws = 0,
                           std::uint64_t rng_seed = 0);

/// Writes dir/e{e}/tries.dat and dir/e{e}/cost.dat, creating the
/// directories.  Each file has e+8 lines "bin<TAB>percent" with the
/// percent rendered to exactly two fraction digits, '.' separator, no
/// grouping.  Files are truncated on every run.
void emit_histogram_files(const TrialHistogram& h, const std::string& dir);

/// Self-describing JSON summary: bins, total_cost, quantiles
/// (0.001/0.25/0.5/0.75/0.999), tail cost fractions at multiples 2 and
/// 4, CDF checkpoints, and a note on reading medians out of
/// octave-granular bins.
std::string histogram_summary_json(const TrialHistogram& h);

}  // namespace mbf
