#include "mbf/mbound.hpp"

#include <stdexcept>

namespace mbf {

namespace {

void validate(const MboundChallenge& ch) {
    if (ch.effort_bits > 24)
        throw std::invalid_argument("effort_bits must be at most 24");
    if (ch.path_len == 0)
        throw std::invalid_argument("path_len must be positive");
    if (ch.max_trials == 0)
        throw std::invalid_argument("max_trials must be positive");
}

}  // namespace

std::uint64_t default_max_trials(unsigned effort_bits) {
    if (effort_bits > 24)
        throw std::invalid_argument("effort_bits must be at most 24");
    return std::uint64_t{1} << (2 * effort_bits);
}

MboundChallenge make_mbound_challenge(const Nonce& nonce, unsigned effort_bits,
                                      std::uint32_t path_len,
                                      std::uint64_t max_trials) {
    if (effort_bits > 24)
        throw std::invalid_argument("effort_bits must be at most 24");
    MboundChallenge ch;
    ch.nonce = nonce;
    ch.effort_bits = static_cast<std::uint8_t>(effort_bits);
    ch.path_len = path_len;
    ch.max_trials = max_trials ? max_trials : default_max_trials(effort_bits);
    validate(ch);
    return ch;
}

GenerationOutcome generate(const PublicTable& table, const MboundChallenge& ch,
                           AccessCounter* counter) {
    validate(ch);
    const WalkParams params{ch.path_len};
    GenerationOutcome out;
    for (std::uint64_t s = 0; s < ch.max_trials; ++s) {
        std::uint64_t a = walk(table, ch.nonce, s, params, counter);
        ++out.trials_run;
        if (trailing_zero_count(a) >= ch.effort_bits) {
            out.proof = MboundProof{s, s + 1};
            return out;
        }
    }
    return out;
}

const char* to_string(MboundVerdict v) noexcept {
    switch (v) {
        case MboundVerdict::Accept: return "Accept";
        case MboundVerdict::TooLarge: return "TooLarge";
        case MboundVerdict::BadZeros: return "BadZeros";
    }
    return "?";
}

MboundVerdict verify(const PublicTable& table, const MboundChallenge& ch,
                     std::uint64_t proof_index, AccessCounter* counter) {
    validate(ch);
    const std::uint64_t bound = std::uint64_t{1} << (2 * ch.effort_bits);
    if (proof_index >= bound) return MboundVerdict::TooLarge;
    std::uint64_t a = walk(table, ch.nonce, proof_index, WalkParams{ch.path_len}, counter);
    return trailing_zero_count(a) >= ch.effort_bits ? MboundVerdict::Accept
                                                    : MboundVerdict::BadZeros;
}

}  // namespace mbf
