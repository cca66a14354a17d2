#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mbf/cost_model.hpp"
#include "oracles.hpp"

using namespace mbf;

namespace {
double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("trial_distribution matches the per-term oracle") {
    for (int e : {1, 4, 6, 12}) {
        TrialHistogram h = trial_distribution(e);
        oracle::Histogram ref = oracle::trial_distribution(e);
        REQUIRE(h.bins_tries.size() == static_cast<std::size_t>(e + 8));
        REQUIRE(h.bins_cost.size() == static_cast<std::size_t>(e + 8));
        CHECK(h.p == std::ldexp(1.0, -e));
        CHECK(h.max_tries == std::uint64_t{1} << (e + 8));
        for (int b = 0; b < e + 8; ++b) {
            CHECK(rel_err(h.bins_tries[b], ref.bins_tries[b]) < 1e-9);
            CHECK(rel_err(h.bins_cost[b], ref.bins_cost[b]) < 1e-9);
        }
        CHECK(rel_err(h.total_cost, ref.total_cost) < 1e-9);
    }
}

TEST_CASE("pinned histogram values") {
    TrialHistogram h1 = trial_distribution(1);
    // P(X in [1,2)) = P(X = 1) = p(1-p) = 0.25 under the file convention.
    CHECK(h1.bins_tries[0] == 25.0);

    TrialHistogram h6 = trial_distribution(6);
    CHECK(rel_err(h6.bins_tries[5], 23.915462171779) < 1e-9);
    CHECK(rel_err(h6.bins_cost[5], 17.524000456166) < 1e-9);
    CHECK(h6.total_cost == doctest::Approx(63.0).epsilon(1e-12));

    double tries_sum = 0.0, cost_sum = 0.0;
    for (double v : h6.bins_tries) tries_sum += v;
    for (double v : h6.bins_cost) cost_sum += v;
    // The tries histogram leaks the survival prefactor and the truncated
    // tail; the cost histogram is normalized by construction.
    CHECK(tries_sum == doctest::Approx(98.4375).epsilon(1e-9));
    CHECK(cost_sum == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("total cost approaches 2^e from below as truncation widens") {
    CHECK(trial_distribution(6).total_cost / 64.0 < 0.99);  // e=6 sits outside
    for (int e : {7, 10, 15}) {
        double ratio = trial_distribution(e).total_cost / std::ldexp(1.0, e);
        CHECK(ratio > 0.99);
        CHECK(ratio < 1.01);
    }
}

TEST_CASE("cost mass peaks above the trial-count mass") {
    for (int e : {4, 6, 12, 15}) {
        TrialHistogram h = trial_distribution(e);
        auto mode = [](const std::vector<double>& v) {
            return std::distance(v.begin(), std::max_element(v.begin(), v.end()));
        };
        CHECK(mode(h.bins_tries) < mode(h.bins_cost));
    }
}

TEST_CASE("quantile pins at e = 15") {
    CHECK(quantile(15, 0.001) == 33);
    CHECK(quantile(15, 0.05) == 1681);
    CHECK(quantile(15, 0.25) == 9427);
    CHECK(quantile(15, 0.5) == 22713);
    CHECK(quantile(15, 0.75) == 45426);
    CHECK(quantile(15, 0.95) == 98163);
    CHECK(quantile(15, 0.999) == 226350);
    CHECK(quantile(15, 1e-300) == 1);
}

TEST_CASE("quantile agrees with a CDF scan and is monotone") {
    for (double q : {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999})
        CHECK(quantile(6, q) == oracle::quantile_scan(6, q));

    std::uint64_t prev = 0;
    for (double q = 0.02; q < 1.0; q += 0.02) {
        std::uint64_t t = quantile(15, q);
        CHECK(t >= prev);
        prev = t;
    }

    CHECK_THROWS_AS(quantile(15, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantile(15, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(quantile(15, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(quantile(15, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(quantile(0, 0.5), std::invalid_argument);
}

TEST_CASE("cdf pins at e = 15") {
    CHECK(rel_err(cdf_trials(15, 32), 9.761007049435e-04) < 1e-9);
    CHECK(rel_err(cdf_trials(15, 4096), 0.117504780677) < 1e-9);
    CHECK(rel_err(cdf_trials(15, 16384), 0.393473967826) < 1e-9);
    CHECK(rel_err(cdf_trials(15, 32768), 0.632126172295) < 1e-9);
    CHECK(cdf_trials(15, 0) == 0.0);
    // CDF at the quantile brackets q.
    CHECK(cdf_trials(15, 22712) < 0.5);
    CHECK(cdf_trials(15, 22713) >= 0.5);
}

TEST_CASE("tail cost fractions") {
    CHECK(rel_err(tail_cost_fraction(15, 4.0), 0.091572605011) < 1e-9);
    CHECK(rel_err(tail_cost_fraction(15, 2.0), 0.405993459332) < 1e-9);

    for (double m : {0.5, 1.0, 2.0, 4.0, 8.0})
        CHECK(rel_err(tail_cost_fraction(6, m), oracle::tail_cost_fraction(6, m)) <
              1e-9);

    CHECK(tail_cost_fraction(6, 1e-9) == 1.0);     // threshold below the first trial
    CHECK(tail_cost_fraction(6, 300.0) == 0.0);    // threshold past the truncation
    CHECK_THROWS_AS(tail_cost_fraction(6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tail_cost_fraction(6, -1.0), std::invalid_argument);
}

TEST_CASE("abort_analysis closed forms") {
    AbortReport r = abort_analysis(6, 64);
    CHECK(rel_err(r.delivery_rate, 0.6350134758) < 1e-9);
    CHECK(rel_err(r.cost_per_attempt, 40.6408624484) < 1e-9);
    CHECK(r.cost_per_delivered == 64.0);
    CHECK(r.mc_draws == 0);

    // Memorylessness: the per-delivery price never moves.
    for (std::uint64_t t : {std::uint64_t{1}, std::uint64_t{8}, std::uint64_t{64},
                            std::uint64_t{256}})
        CHECK(abort_analysis(6, t).cost_per_delivered == 64.0);

    // cost_per_attempt = delivery_rate / p holds by construction; check
    // the identity cost_per_delivered = cost_per_attempt / delivery_rate.
    AbortReport r8 = abort_analysis(6, 8);
    CHECK(r8.cost_per_attempt / r8.delivery_rate == doctest::Approx(64.0));

    CHECK_THROWS_AS(abort_analysis(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(abort_analysis(0, 8), std::invalid_argument);
}

TEST_CASE("abort_analysis Monte Carlo brackets the closed forms") {
    AbortReport r = abort_analysis(6, 64, 200000, 12345);
    CHECK(r.mc_draws == 200000);
    CHECK(r.mc_delivery_se > 0.0);
    CHECK(r.mc_cost_se > 0.0);
    CHECK(std::abs(r.mc_delivery_rate - r.delivery_rate) <= 3 * r.mc_delivery_se);
    CHECK(std::abs(r.mc_cost_per_attempt - r.cost_per_attempt) <= 3 * r.mc_cost_se);

    // Same seed reproduces, different seed does not.
    AbortReport again = abort_analysis(6, 64, 200000, 12345);
    CHECK(again.mc_delivery_rate == r.mc_delivery_rate);
    CHECK(again.mc_cost_per_attempt == r.mc_cost_per_attempt);
    AbortReport other = abort_analysis(6, 64, 200000, 54321);
    CHECK(other.mc_cost_per_attempt != r.mc_cost_per_attempt);
}

TEST_CASE("emit_histogram_files writes the documented format") {
    oracle::TempDir dir;
    TrialHistogram h = trial_distribution(6);
    emit_histogram_files(h, dir.path.string());

    auto tries_path = dir.path / "e6" / "tries.dat";
    auto cost_path = dir.path / "e6" / "cost.dat";
    REQUIRE(std::filesystem::exists(tries_path));
    REQUIRE(std::filesystem::exists(cost_path));

    std::string tries = slurp(tries_path);
    std::string cost = slurp(cost_path);

    // 14 lines of "bin<TAB>percent with two fraction digits".
    std::regex line_re(R"(^\d+\t\d+\.\d\d$)");
    int lines = 0;
    std::istringstream ss(tries);
    for (std::string line; std::getline(ss, line); ++lines)
        CHECK(std::regex_match(line, line_re));
    CHECK(lines == 14);
    CHECK(tries.find("5\t23.92\n") != std::string::npos);
    CHECK(std::count(cost.begin(), cost.end(), '\n') == 14);

    double cost_sum = 0.0;
    std::istringstream cs(cost);
    for (std::string line; std::getline(cs, line);) {
        std::size_t tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        cost_sum += std::stod(line.substr(tab + 1));
    }
    CHECK(std::abs(cost_sum - 100.0) < 0.05);  // only rounding residue

    // Rerun truncates and reproduces byte for byte.
    emit_histogram_files(h, dir.path.string());
    CHECK(slurp(tries_path) == tries);
    CHECK(slurp(cost_path) == cost);
}

TEST_CASE("histogram_summary_json is self-describing") {
    TrialHistogram h = trial_distribution(15);
    nlohmann::json j = nlohmann::json::parse(histogram_summary_json(h));

    CHECK(j["e"] == 15);
    CHECK(j["max_tries"] == (std::uint64_t{1} << 23));
    CHECK(j["bins_tries"].size() == 23);
    CHECK(j["bins_cost"].size() == 23);
    CHECK(j["median"] == 22713);
    CHECK(j["quantiles"]["0.001"] == 33);
    CHECK(j["quantiles"]["0.999"] == 226350);
    CHECK(j["cdf_percent"]["32768"].get<double>() == doctest::Approx(63.2126172295));
    CHECK(j["tail_cost_fraction"]["4x"].get<double>() ==
          doctest::Approx(0.091572605011));

    std::string note = j["note"].get<std::string>();
    CHECK(note.find("octave") != std::string::npos);
    CHECK(note.find("median = 22713 trials") != std::string::npos);
}

TEST_CASE("trial_distribution rejects out-of-range e") {
    CHECK_THROWS_AS(trial_distribution(0), std::invalid_argument);
    CHECK_THROWS_AS(trial_distribution(25), std::invalid_argument);
    CHECK_THROWS_AS(trial_distribution(-3), std::invalid_argument);
    CHECK_NOTHROW(quantile(24, 0.5));  // e = 24 is in range (the scan is just slow)
}
