#include "mbf/cost_model.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <stdexcept>

#include <json.hpp>

#include "mbf/rng.hpp"

namespace mbf {

namespace {

void check_e(int e) {
    if (e < 1 || e > 24)
        throw std::invalid_argument("e must be in [1, 24]");
}

inline void kahan_add(double& sum, double& comp, double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

inline int bin_of(std::uint64_t i) {
    return static_cast<int>(std::bit_width(i)) - 1;  // floor(log2 i)
}

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};

void write_bins(const std::filesystem::path& path, const std::vector<double>& bins) {
    std::unique_ptr<std::FILE, FileCloser> f(std::fopen(path.c_str(), "wb"));
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (std::size_t b = 0; b < bins.size(); ++b)
        if (std::fprintf(f.get(), "%zu\t%.2f\n", b, bins[b]) < 0)
            throw std::runtime_error("write failed for " + path.string());
    if (std::fflush(f.get()) != 0)
        throw std::runtime_error("flush failed for " + path.string());
}

}  // namespace

TrialHistogram trial_distribution(int e) {
    check_e(e);
    TrialHistogram h;
    h.e = e;
    h.p = std::ldexp(1.0, -e);
    h.max_tries = std::uint64_t{1} << (e + 8);

    const int nbins = e + 8;
    std::vector<double> tries(nbins, 0.0);
    std::vector<double> cost(nbins, 0.0);
    double prob_so_far = 1.0;
    double total = 0.0;
    // Sequential accumulation, survival factor applied before the first
    // trial; both are load-bearing for file compatibility.
    for (std::uint64_t i = 1; i < h.max_tries; ++i) {
        prob_so_far *= 1.0 - h.p;
        double prob_here = h.p * prob_so_far;
        int b = bin_of(i);
        tries[b] += prob_here;
        double c = static_cast<double>(i) * prob_here;
        cost[b] += c;
        total += c;
    }

    h.total_cost = total;
    h.bins_tries.resize(nbins);
    h.bins_cost.resize(nbins);
    for (int b = 0; b < nbins; ++b) {
        h.bins_tries[b] = tries[b] * 100.0;
        h.bins_cost[b] = cost[b] / total * 100.0;
    }
    return h;
}

double cdf_trials(int e, std::uint64_t trials) noexcept {
    double lq = std::log1p(-std::ldexp(1.0, -e));
    return -std::expm1(static_cast<double>(trials) * lq);
}

std::uint64_t quantile(int e, double q) {
    check_e(e);
    if (!(q > 0.0) || !(q < 1.0))
        throw std::invalid_argument("q must be in (0, 1)");
    double lq = std::log1p(-std::ldexp(1.0, -e));
    double t = std::log1p(-q) / lq;
    std::uint64_t tau = t <= 1.0 ? 1 : static_cast<std::uint64_t>(std::ceil(t));
    while (tau > 1 && cdf_trials(e, tau - 1) >= q) --tau;
    while (cdf_trials(e, tau) < q) ++tau;
    return tau;
}

double tail_cost_fraction(int e, double multiple) {
    check_e(e);
    if (!(multiple > 0.0))
        throw std::invalid_argument("multiple must be positive");
    const double p = std::ldexp(1.0, -e);
    const std::uint64_t max_tries = std::uint64_t{1} << (e + 8);
    const double threshold = multiple * std::ldexp(1.0, e);

    double num = 0.0, num_c = 0.0, den = 0.0, den_c = 0.0;
    double surv = 1.0;  // (1-p)^{i-1}
    for (std::uint64_t i = 1; i < max_tries; ++i) {
        double term = static_cast<double>(i) * p * surv;
        kahan_add(den, den_c, term);
        if (static_cast<double>(i) > threshold) kahan_add(num, num_c, term);
        surv *= 1.0 - p;
    }
    return num / den;
}

AbortReport abort_analysis(int e, std::uint64_t threshold,
                           std::uint64_t mc_draws, std::uint64_t rng_seed) {
    check_e(e);
    if (threshold == 0)
        throw std::invalid_argument("threshold must be positive");

    AbortReport r;
    r.e = e;
    r.threshold = threshold;
    const double p = std::ldexp(1.0, -e);
    const double lq = std::log1p(-p);
    r.delivery_rate = -std::expm1(static_cast<double>(threshold) * lq);
    r.cost_per_attempt = r.delivery_rate / p;
    r.cost_per_delivered = std::ldexp(1.0, e);

    if (mc_draws > 0) {
        SplitMix64 rng(rng_seed);
        std::uint64_t delivered = 0;
        double spend_sum = 0.0, spend_sq = 0.0;
        for (std::uint64_t i = 0; i < mc_draws; ++i) {
            double x = std::ceil(std::log1p(-rng.next_double()) / lq);
            std::uint64_t draw = x < 1.0 ? 1 : static_cast<std::uint64_t>(x);
            std::uint64_t spend = std::min(draw, threshold);
            if (draw <= threshold) ++delivered;
            spend_sum += static_cast<double>(spend);
            spend_sq += static_cast<double>(spend) * static_cast<double>(spend);
        }
        const double n = static_cast<double>(mc_draws);
        r.mc_draws = mc_draws;
        r.mc_delivery_rate = static_cast<double>(delivered) / n;
        r.mc_cost_per_attempt = spend_sum / n;
        r.mc_delivery_se =
            std::sqrt(r.mc_delivery_rate * (1.0 - r.mc_delivery_rate) / n);
        double var = (spend_sq - spend_sum * spend_sum / n) / (n - 1.0);
        r.mc_cost_se = std::sqrt(var / n);
    }
    return r;
}

void emit_histogram_files(const TrialHistogram& h, const std::string& dir) {
    std::filesystem::path base = std::filesystem::path(dir) / ("e" + std::to_string(h.e));
    std::filesystem::create_directories(base);
    write_bins(base / "tries.dat", h.bins_tries);
    write_bins(base / "cost.dat", h.bins_cost);
}

std::string histogram_summary_json(const TrialHistogram& h) {
    nlohmann::json j;
    j["e"] = h.e;
    j["p"] = h.p;
    j["max_tries"] = h.max_tries;
    j["total_cost"] = h.total_cost;
    j["bins_tries"] = h.bins_tries;
    j["bins_cost"] = h.bins_cost;

    nlohmann::json q;
    for (double qq : {0.001, 0.25, 0.5, 0.75, 0.999}) {
        char key[16];
        std::snprintf(key, sizeof key, "%g", qq);
        q[key] = quantile(h.e, qq);
    }
    j["quantiles"] = q;
    j["median"] = quantile(h.e, 0.5);

    j["tail_cost_fraction"] = {{"2x", tail_cost_fraction(h.e, 2.0)},
                               {"4x", tail_cost_fraction(h.e, 4.0)}};

    nlohmann::json cdf;
    for (std::uint64_t x : {std::uint64_t{32}, std::uint64_t{4096},
                            std::uint64_t{16384}, std::uint64_t{32768}})
        cdf[std::to_string(x)] = cdf_trials(h.e, x) * 100.0;
    j["cdf_percent"] = cdf;

    const std::uint64_t med = quantile(h.e, 0.5);
    char note[512];
    std::snprintf(note, sizeof note,
                  "Bin b covers trials [2^b, 2^(b+1)), so cumulative readings off the "
                  "histogram are octave-granular. Exact geometric values at e=%d: "
                  "P(X <= 2^%d) = %.1f%%, P(X <= 2^%d) = %.1f%%, median = %llu trials "
                  "(about 0.69 * 2^e, inside bin %d). A cumulative read at bin "
                  "boundaries can place the median a full octave lower than the exact "
                  "value.",
                  h.e, h.e - 1, cdf_trials(h.e, std::uint64_t{1} << (h.e - 1)) * 100.0,
                  h.e, cdf_trials(h.e, std::uint64_t{1} << h.e) * 100.0,
                  static_cast<unsigned long long>(med), bin_of(med));
    j["note"] = note;
    return j.dump(2);
}

}  // namespace mbf
