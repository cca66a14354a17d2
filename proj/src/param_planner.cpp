#include "mbf/param_planner.hpp"

#include <cmath>
#include <stdexcept>

#include "mbf/cost_model.hpp"

namespace mbf {

namespace {

void check_l(std::uint32_t l) {
    if (l == 0) throw std::invalid_argument("l must be positive");
}

}  // namespace

SchemePlan plan_mbound(int e, std::uint32_t l) {
    if (e < 1 || e > 24) throw std::invalid_argument("e must be in [1, 24]");
    check_l(l);
    SchemePlan plan;
    plan.scheme = Scheme::MBound;
    plan.e = e;
    plan.path_len = l;
    plan.expected_accesses = std::ldexp(static_cast<double>(l), e);
    plan.verify_accesses_min = l;
    plan.verify_accesses_max = l;
    plan.expected_indices = 1.0;
    plan.expected_proof_bytes = 8.0;
    plan.expected_proof_bytes_compact = 4.0;
    plan.empty_proof_prob = 0.0;
    return plan;
}

SchemePlan plan_range_raw(std::uint64_t range_len, int zeros, std::uint32_t l) {
    if (range_len == 0) throw std::invalid_argument("range_len must be positive");
    if (zeros < 0 || zeros > 24) throw std::invalid_argument("zeros must be in [0, 24]");
    check_l(l);
    SchemePlan plan;
    plan.scheme = Scheme::Range;
    plan.zeros = zeros;
    plan.path_len = l;
    plan.range_len = range_len;
    plan.expected_accesses = static_cast<double>(range_len) * static_cast<double>(l);
    plan.verify_accesses_min = l;
    plan.verify_accesses_max = plan.expected_accesses;
    plan.expected_indices = static_cast<double>(range_len) * std::ldexp(1.0, -zeros);
    plan.expected_proof_bytes = plan.expected_indices * 8.0 + 4.0;
    plan.expected_proof_bytes_compact = plan.expected_indices * 4.0;
    plan.empty_proof_prob =
        std::exp(static_cast<double>(range_len) * std::log1p(-std::ldexp(1.0, -zeros)));
    return plan;
}

SchemePlan plan_range(int e, int m, std::uint32_t l) {
    if (e < 1 || e > 24) throw std::invalid_argument("e must be in [1, 24]");
    if (m < 0 || m >= e) throw std::invalid_argument("m must satisfy 0 <= m < e");
    SchemePlan plan = plan_range_raw(std::uint64_t{1} << e, e - m, l);
    plan.e = e;
    plan.m = m;
    return plan;
}

double empty_proof_probability(int e, int m, bool uncorrected) {
    if (e < 1 || e > 24) throw std::invalid_argument("e must be in [1, 24]");
    if (m < 0 || m >= e) throw std::invalid_argument("m must satisfy 0 <= m < e");
    const double range_len = std::ldexp(1.0, e);
    const int exponent = uncorrected ? m : e - m;
    return std::exp(range_len * std::log1p(-std::ldexp(1.0, -exponent)));
}

RangeEquivalents equivalent_range_params(const SchemePlan& mbound_plan, int m) {
    if (mbound_plan.scheme != Scheme::MBound)
        throw std::invalid_argument("equivalent_range_params needs an MBound plan");
    RangeEquivalents eq;
    eq.cost_preserving = plan_range(mbound_plan.e, m, mbound_plan.path_len);
    std::uint32_t half = mbound_plan.path_len / 2;
    eq.halved_path_len = plan_range(mbound_plan.e, m, half ? half : 1);
    return eq;
}

DeadlineWindow deadline_window(const SchemePlan& plan, double access_time_fast,
                               double speed_ratio, double q_low, double q_high) {
    if (!(access_time_fast > 0.0))
        throw std::invalid_argument("access_time_fast must be positive");
    if (!(speed_ratio >= 1.0))
        throw std::invalid_argument("speed_ratio must be at least 1");
    if (!(q_low > 0.0) || !(q_high < 1.0) || q_low > q_high)
        throw std::invalid_argument("need 0 < q_low <= q_high < 1");

    DeadlineWindow w;
    w.access_time_fast = access_time_fast;
    w.speed_ratio = speed_ratio;
    w.access_time_slow = access_time_fast * speed_ratio;
    const double l = plan.path_len;
    if (plan.scheme == Scheme::MBound) {
        w.earliest_s = static_cast<double>(quantile(plan.e, q_low)) * l * w.access_time_fast;
        w.latest_s = static_cast<double>(quantile(plan.e, q_high)) * l * w.access_time_slow;
    } else {
        const double r = static_cast<double>(plan.range_len);
        w.earliest_s = r * l * w.access_time_fast;
        w.latest_s = r * l * w.access_time_slow;
    }
    return w;
}

}  // namespace mbf
