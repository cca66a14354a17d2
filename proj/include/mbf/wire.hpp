#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "mbf/mbound.hpp"
#include "mbf/range_proof.hpp"

namespace mbf::wire {

/// Challenge and proof files open with a 4-byte scheme tag: "MBP1" for
/// mbound, "RGP1" for range.  Payloads are little endian:
///   mbound challenge: nonce[16] e[1] l[4] max_trials[8]
///   range  challenge: nonce[16] range_len[8] zeros[1] l[4]
///   mbound proof:     index[8]
///   range  proof:     count[4] then count ascending indices[8]
/// Readers demand exact framing; anything else throws
/// std::runtime_error.

struct MboundProofWire {
    std::uint64_t index = 0;
};

using Challenge = std::variant<MboundChallenge, RangeChallenge>;
using Proof = std::variant<MboundProofWire, RangeProof>;

void write_challenge(const std::string& path, const MboundChallenge& ch);
void write_challenge(const std::string& path, const RangeChallenge& ch);
Challenge read_challenge(const std::string& path);

void write_proof(const std::string& path, const MboundProofWire& proof);
void write_proof(const std::string& path, const RangeProof& proof);
Proof read_proof(const std::string& path);

/// Table files in a cache directory are keyed by their parameters:
/// "table-<seed>-<len>.mbt".
std::string table_cache_filename(std::uint64_t seed, std::uint64_t len);

}  // namespace mbf::wire
