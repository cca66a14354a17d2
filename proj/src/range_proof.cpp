#include "mbf/range_proof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mbf/rng.hpp"

namespace mbf {

namespace {

void validate(const RangeChallenge& ch) {
    if (ch.range_len == 0)
        throw std::invalid_argument("range_len must be positive");
    if (ch.zeros > 24)
        throw std::invalid_argument("zeros must be at most 24");
    if (ch.path_len == 0)
        throw std::invalid_argument("path_len must be positive");
}

void scan_chunk(const PublicTable& table, const RangeChallenge& ch,
                std::uint64_t begin, std::uint64_t end,
                std::vector<std::uint64_t>& hits, AccessCounter* counter) {
    const WalkParams params{ch.path_len};
    for (std::uint64_t s = begin; s < end; ++s) {
        std::uint64_t a = walk(table, ch.nonce, s, params, counter);
        if (trailing_zero_count(a) >= ch.zeros) hits.push_back(s);
    }
}

}  // namespace

RangeChallenge make_range_challenge(const Nonce& nonce, std::uint64_t range_len,
                                    unsigned zeros, std::uint32_t path_len) {
    RangeChallenge ch;
    ch.nonce = nonce;
    ch.range_len = range_len;
    ch.zeros = static_cast<std::uint8_t>(zeros);
    ch.path_len = path_len;
    if (zeros > 24) throw std::invalid_argument("zeros must be at most 24");
    validate(ch);
    return ch;
}

RangeProof generate_range_proof(const PublicTable& table, const RangeChallenge& ch,
                                unsigned n_threads, AccessCounter* counter) {
    validate(ch);
    RangeProof proof;
    if (n_threads <= 1 || ch.range_len < 2 * n_threads) {
        scan_chunk(table, ch, 0, ch.range_len, proof.indices, counter);
        return proof;
    }

    std::vector<std::vector<std::uint64_t>> hits(n_threads);
    std::vector<AccessCounter> counters(n_threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = ch.range_len / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        std::uint64_t begin = t * chunk;
        std::uint64_t end = (t + 1 == n_threads) ? ch.range_len : begin + chunk;
        workers.emplace_back([&, t, begin, end] {
            scan_chunk(table, ch, begin, end, hits[t],
                       counter ? &counters[t] : nullptr);
        });
    }
    for (auto& w : workers) w.join();

    for (unsigned t = 0; t < n_threads; ++t) {
        proof.indices.insert(proof.indices.end(), hits[t].begin(), hits[t].end());
        if (counter) counter->fetches += counters[t].fetches;
    }
    return proof;
}

AuditPlan default_audit_plan(std::size_t proof_len, std::uint64_t audit_seed) {
    AuditPlan plan;
    plan.sample_count = static_cast<std::uint32_t>(std::min<std::size_t>(8, proof_len));
    plan.gap_count = 4;
    plan.audit_seed = audit_seed;
    return plan;
}

const char* to_string(RangeVerdict v) noexcept {
    switch (v) {
        case RangeVerdict::Accept: return "Accept";
        case RangeVerdict::EmptyProof: return "EmptyProof";
        case RangeVerdict::Malformed: return "Malformed";
        case RangeVerdict::BogusIndex: return "BogusIndex";
        case RangeVerdict::OmittedIndex: return "OmittedIndex";
    }
    return "?";
}

RangeVerdict verify_range_proof(const PublicTable& table, const RangeChallenge& ch,
                                const RangeProof& proof, const AuditPlan& plan,
                                AccessCounter* counter) {
    validate(ch);
    const auto& idx = proof.indices;
    const std::uint64_t n = idx.size();

    if (n == 0) return RangeVerdict::EmptyProof;

    for (std::uint64_t i = 0; i < n; ++i) {
        if (idx[i] >= ch.range_len) return RangeVerdict::Malformed;
        if (i > 0 && idx[i] <= idx[i - 1]) return RangeVerdict::Malformed;
    }
    if (static_cast<double>(n) > 8.0 * expected_hits(ch))
        return RangeVerdict::Malformed;

    SplitMix64 rng(plan.audit_seed);
    const WalkParams params{ch.path_len};

    const std::uint64_t k = std::min<std::uint64_t>(plan.sample_count, n);
    for (std::uint64_t pos : sample_without_replacement(n, k, rng)) {
        std::uint64_t a = walk(table, ch.nonce, idx[pos], params, counter);
        if (trailing_zero_count(a) < ch.zeros) return RangeVerdict::BogusIndex;
    }

    const std::uint64_t g = std::min<std::uint64_t>(plan.gap_count, n + 1);
    for (std::uint64_t gap : sample_without_replacement(n + 1, g, rng)) {
        std::uint64_t begin = gap == 0 ? 0 : idx[gap - 1] + 1;
        std::uint64_t end = gap == n ? ch.range_len : idx[gap];
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t a = walk(table, ch.nonce, s, params, counter);
            if (trailing_zero_count(a) >= ch.zeros) return RangeVerdict::OmittedIndex;
        }
    }
    return RangeVerdict::Accept;
}

double expected_hits(const RangeChallenge& ch) noexcept {
    return static_cast<double>(ch.range_len) * std::ldexp(1.0, -static_cast<int>(ch.zeros));
}

double empty_proof_prob(const RangeChallenge& ch) noexcept {
    double log_miss = std::log1p(-std::ldexp(1.0, -static_cast<int>(ch.zeros)));
    return std::exp(static_cast<double>(ch.range_len) * log_miss);
}

double verification_effort(const RangeChallenge& ch, const RangeProof& proof,
                           const AuditPlan& plan) noexcept {
    const double l = ch.path_len;
    const double r = static_cast<double>(ch.range_len);
    const double n = static_cast<double>(proof.indices.size());
    if (proof.indices.empty()) {
        const double p = std::ldexp(1.0, -static_cast<int>(ch.zeros));
        double hit_within = -std::expm1(r * std::log1p(-p));  // 1 - (1-p)^R
        return l * hit_within / p;
    }
    const double k = std::min<double>(plan.sample_count, n);
    const double g = std::min<double>(plan.gap_count, n + 1);
    return (k + g * (r - n) / (n + 1)) * l;
}

}  // namespace mbf
