#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "mbf/param_planner.hpp"

using namespace mbf;

TEST_CASE("plan_mbound arithmetic") {
    SchemePlan p = plan_mbound(15, 4096);
    CHECK(p.scheme == Scheme::MBound);
    CHECK(p.e == 15);
    CHECK(p.path_len == 4096);
    CHECK(p.expected_accesses == 134217728.0);  // 2^15 * 2^12 = 2^27
    CHECK(p.verify_accesses_min == 4096.0);
    CHECK(p.verify_accesses_max == 4096.0);
    CHECK(p.expected_indices == 1.0);
    CHECK(p.expected_proof_bytes == 8.0);
    CHECK(p.expected_proof_bytes_compact == 4.0);

    SchemePlan tiny = plan_mbound(1, 1);
    CHECK(tiny.expected_accesses == 2.0);

    CHECK_THROWS_AS(plan_mbound(0, 16), std::invalid_argument);
    CHECK_THROWS_AS(plan_mbound(25, 16), std::invalid_argument);
    CHECK_THROWS_AS(plan_mbound(15, 0), std::invalid_argument);
}

TEST_CASE("plan_range arithmetic at (15, 4)") {
    SchemePlan p = plan_range(15, 4, 2048);
    CHECK(p.scheme == Scheme::Range);
    CHECK(p.e == 15);
    CHECK(p.m == 4);
    CHECK(p.zeros == 11);
    CHECK(p.range_len == 32768);
    CHECK(p.expected_accesses == 67108864.0);  // 2^15 * 2^11 = 2^26
    CHECK(p.expected_indices == 16.0);
    CHECK(p.expected_proof_bytes == 16.0 * 8.0 + 4.0);
    CHECK(p.expected_proof_bytes_compact == 16.0 * 4.0);
    CHECK(p.empty_proof_prob >= 1.0e-7);
    CHECK(p.empty_proof_prob <= 1.2e-7);
    // Verifier effort never exceeds a full replay.
    CHECK(p.verify_accesses_min == 2048.0);
    CHECK(p.verify_accesses_max == 67108864.0);

    CHECK_THROWS_AS(plan_range(15, 15, 2048), std::invalid_argument);
    CHECK_THROWS_AS(plan_range(15, -1, 2048), std::invalid_argument);
    CHECK_THROWS_AS(plan_range(25, 4, 2048), std::invalid_argument);
}

TEST_CASE("plan_range edge shapes") {
    // m = 0: one expected hit, empty-proof probability near 1/e.
    SchemePlan lone = plan_range(10, 0, 16);
    CHECK(lone.expected_indices == 1.0);
    CHECK(lone.empty_proof_prob == doctest::Approx(std::exp(-1.0)).epsilon(1e-3));

    // e = 1, m = 0: two slots, one zero bit required.
    SchemePlan coin = plan_range(1, 0, 16);
    CHECK(coin.range_len == 2);
    CHECK(coin.zeros == 1);
    CHECK(coin.empty_proof_prob == doctest::Approx(0.25));

    // Raising m (more expected hits) makes empties strictly rarer.
    double prev = 1.0;
    for (int m = 0; m < 10; ++m) {
        double pe = plan_range(10, m, 16).empty_proof_prob;
        CHECK(pe < prev);
        prev = pe;
    }
}

TEST_CASE("plan_range_raw accepts arbitrary lengths") {
    SchemePlan p = plan_range_raw(1000, 3, 8);
    CHECK(p.range_len == 1000);
    CHECK(p.zeros == 3);
    CHECK(p.expected_indices == doctest::Approx(125.0));
    CHECK(p.expected_accesses == 8000.0);
    CHECK_THROWS_AS(plan_range_raw(0, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(plan_range_raw(1000, 25, 8), std::invalid_argument);
}

TEST_CASE("empty_proof_probability and its uncorrected form") {
    double good = empty_proof_probability(15, 4);
    CHECK(good >= 1.0e-7);
    CHECK(good <= 1.2e-7);
    CHECK(good == doctest::Approx(1.12096299061e-7).epsilon(1e-9));

    CHECK(empty_proof_probability(10, 2) == doctest::Approx(0.018172735).epsilon(1e-6));

    // The uncorrected variant keys the exponent off m instead of e - m;
    // at (15, 4) that is (1 - 2^-4)^(2^15), which underflows.
    CHECK(empty_proof_probability(15, 4, true) < 1e-300);
    // Where e - m == m the two coincide.
    CHECK(empty_proof_probability(10, 5, true) ==
          doctest::Approx(empty_proof_probability(10, 5)).epsilon(1e-12));
}

TEST_CASE("equivalent_range_params preserves cost or halves the walk") {
    SchemePlan base = plan_mbound(15, 4096);
    RangeEquivalents eq = equivalent_range_params(base, 4);

    CHECK(eq.cost_preserving.scheme == Scheme::Range);
    CHECK(eq.cost_preserving.path_len == 4096);
    CHECK(eq.cost_preserving.expected_accesses == base.expected_accesses);

    CHECK(eq.halved_path_len.path_len == 2048);
    CHECK(eq.halved_path_len.expected_accesses == base.expected_accesses / 2);

    // Both keep the (e, m) shape.
    CHECK(eq.cost_preserving.expected_indices == 16.0);
    CHECK(eq.halved_path_len.expected_indices == 16.0);

    // l = 1 cannot halve below 1.
    RangeEquivalents floor_eq = equivalent_range_params(plan_mbound(4, 1), 2);
    CHECK(floor_eq.halved_path_len.path_len == 1);

    CHECK_THROWS_AS(equivalent_range_params(eq.cost_preserving, 4),
                    std::invalid_argument);
}

TEST_CASE("range effort dial moves continuously, mbound in octaves") {
    // Range: with l = 16, costs R * 16 for R = 1..64 cover every multiple
    // of 16 up to 1024.
    std::set<double> range_costs;
    for (std::uint64_t R = 1; R <= 64; ++R)
        range_costs.insert(plan_range_raw(R, 3, 16).expected_accesses);
    CHECK(range_costs.size() == 64);
    double want = 16.0;
    for (double c : range_costs) {
        CHECK(c == want);
        want += 16.0;
    }

    // MBound: only power-of-two trial counts are reachable.
    std::set<double> mbound_costs;
    for (int e = 1; e <= 6; ++e)
        mbound_costs.insert(plan_mbound(e, 16).expected_accesses);
    CHECK(mbound_costs == std::set<double>{32, 64, 128, 256, 512, 1024});
    CHECK(mbound_costs.count(48 * 16) == 0);  // no setting lands between octaves
}

TEST_CASE("deadline_window spreads") {
    SchemePlan mb = plan_mbound(15, 16);

    // Range plans have no trial dispersion: the spread is the speed ratio.
    SchemePlan rg = plan_range(15, 4, 16);
    DeadlineWindow wr = deadline_window(rg, 1e-7, 5.0, 0.05, 0.95);
    CHECK(wr.latest_s / wr.earliest_s == doctest::Approx(5.0));
    CHECK(wr.earliest_s == doctest::Approx(rg.expected_accesses * 1e-7));
    CHECK(wr.access_time_slow == doctest::Approx(5e-7));

    // MBound adds the quantile ratio: 5 * q95/q05 = 5 * 98163/1681.
    DeadlineWindow wm = deadline_window(mb, 1e-7, 5.0, 0.05, 0.95);
    double spread = wm.latest_s / wm.earliest_s;
    CHECK(spread == doctest::Approx(5.0 * 98163.0 / 1681.0).epsilon(1e-9));
    CHECK(std::abs(spread - 292.0) < 1.0);

    // Degenerate point window: q_low == q_high, ratio 1.
    DeadlineWindow point = deadline_window(mb, 1e-7, 1.0, 0.5, 0.5);
    CHECK(point.earliest_s == point.latest_s);
    CHECK(point.earliest_s == doctest::Approx(22713.0 * 16.0 * 1e-7));

    CHECK_THROWS_AS(deadline_window(mb, 0.0, 5.0, 0.05, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(deadline_window(mb, 1e-7, 0.5, 0.05, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(deadline_window(mb, 1e-7, 5.0, 0.95, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(deadline_window(mb, 1e-7, 5.0, 0.0, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(deadline_window(mb, 1e-7, 5.0, 0.05, 1.0), std::invalid_argument);
}
