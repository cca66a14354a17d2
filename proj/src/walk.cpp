#include "mbf/walk.hpp"

#include <openssl/sha.h>

#include <cstring>

#include "mbf/rng.hpp"

namespace mbf {

namespace {

void put_le64(unsigned char* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_le64(const unsigned char* in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return v;
}

}  // namespace

std::uint64_t initial_accumulator(const Nonce& nonce, std::uint64_t start) {
    unsigned char msg[24];
    std::memcpy(msg, nonce.data(), 16);
    put_le64(msg + 16, start);
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(msg, sizeof msg, digest);
    return get_le64(digest);
}

std::uint64_t walk(const PublicTable& table, const Nonce& nonce,
                   std::uint64_t start, const WalkParams& params,
                   AccessCounter* counter) {
    const std::uint64_t mask = table.len() - 1;
    std::uint64_t a = initial_accumulator(nonce, start);
    for (std::uint32_t step = 0; step < params.path_len; ++step) {
        std::uint64_t idx = (a >> 32) & mask;
        std::uint32_t entry = table.fetch(idx, counter);
        a = mix64(a ^ rotl64(a, 23) ^ entry);
    }
    return a;
}

Nonce nonce_from_seed(std::uint64_t seed) {
    Nonce nonce;
    std::uint64_t lo = mix64(seed + GOLDEN_GAMMA);
    std::uint64_t hi = mix64(seed + 2 * GOLDEN_GAMMA);
    for (int i = 0; i < 8; ++i) {
        nonce[i] = static_cast<std::uint8_t>(lo >> (8 * i));
        nonce[8 + i] = static_cast<std::uint8_t>(hi >> (8 * i));
    }
    return nonce;
}

Nonce derive_nonce(const Nonce& base, std::uint64_t counter) {
    unsigned char msg[24];
    std::memcpy(msg, base.data(), 16);
    put_le64(msg + 16, counter);
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(msg, sizeof msg, digest);
    Nonce out;
    std::memcpy(out.data(), digest, 16);
    return out;
}

}  // namespace mbf
