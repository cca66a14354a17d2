#include "mbf/wire.hpp"

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

namespace mbf::wire {

namespace {

constexpr char MBOUND_TAG[4] = {'M', 'B', 'P', '1'};
constexpr char RANGE_TAG[4] = {'R', 'G', 'P', '1'};

constexpr std::size_t MBOUND_CHALLENGE_SIZE = 4 + 16 + 1 + 4 + 8;
constexpr std::size_t RANGE_CHALLENGE_SIZE = 4 + 16 + 8 + 1 + 4;
constexpr std::size_t MBOUND_PROOF_SIZE = 4 + 8;

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void put_le(std::vector<unsigned char>& out, std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i)
        out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

std::uint64_t get_le(const unsigned char* in, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i)
        v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return v;
}

void write_file(const std::string& path, const std::vector<unsigned char>& bytes) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    if (std::fwrite(bytes.data(), 1, bytes.size(), f.get()) != bytes.size())
        throw std::runtime_error("short write to " + path);
    if (std::fflush(f.get()) != 0)
        throw std::runtime_error("flush failed for " + path);
}

std::vector<unsigned char> read_file(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<unsigned char> bytes;
    unsigned char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f.get())) > 0)
        bytes.insert(bytes.end(), buf, buf + got);
    if (std::ferror(f.get())) throw std::runtime_error("read failed for " + path);
    return bytes;
}

}  // namespace

void write_challenge(const std::string& path, const MboundChallenge& ch) {
    std::vector<unsigned char> bytes;
    bytes.insert(bytes.end(), MBOUND_TAG, MBOUND_TAG + 4);
    bytes.insert(bytes.end(), ch.nonce.begin(), ch.nonce.end());
    bytes.push_back(ch.effort_bits);
    put_le(bytes, ch.path_len, 4);
    put_le(bytes, ch.max_trials, 8);
    write_file(path, bytes);
}

void write_challenge(const std::string& path, const RangeChallenge& ch) {
    std::vector<unsigned char> bytes;
    bytes.insert(bytes.end(), RANGE_TAG, RANGE_TAG + 4);
    bytes.insert(bytes.end(), ch.nonce.begin(), ch.nonce.end());
    put_le(bytes, ch.range_len, 8);
    bytes.push_back(ch.zeros);
    put_le(bytes, ch.path_len, 4);
    write_file(path, bytes);
}

Challenge read_challenge(const std::string& path) {
    const std::vector<unsigned char> bytes = read_file(path);
    if (bytes.size() < 4) throw std::runtime_error(path + ": missing scheme tag");

    if (std::memcmp(bytes.data(), MBOUND_TAG, 4) == 0) {
        if (bytes.size() != MBOUND_CHALLENGE_SIZE)
            throw std::runtime_error(path + ": bad mbound challenge size");
        Nonce nonce;
        std::memcpy(nonce.data(), bytes.data() + 4, 16);
        unsigned e = bytes[20];
        auto l = static_cast<std::uint32_t>(get_le(bytes.data() + 21, 4));
        std::uint64_t max_trials = get_le(bytes.data() + 25, 8);
        try {
            return make_mbound_challenge(nonce, e, l, max_trials);
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error(path + ": " + err.what());
        }
    }
    if (std::memcmp(bytes.data(), RANGE_TAG, 4) == 0) {
        if (bytes.size() != RANGE_CHALLENGE_SIZE)
            throw std::runtime_error(path + ": bad range challenge size");
        Nonce nonce;
        std::memcpy(nonce.data(), bytes.data() + 4, 16);
        std::uint64_t range_len = get_le(bytes.data() + 20, 8);
        unsigned zeros = bytes[28];
        auto l = static_cast<std::uint32_t>(get_le(bytes.data() + 29, 4));
        try {
            return make_range_challenge(nonce, range_len, zeros, l);
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error(path + ": " + err.what());
        }
    }
    throw std::runtime_error(path + ": unknown scheme tag");
}

void write_proof(const std::string& path, const MboundProofWire& proof) {
    std::vector<unsigned char> bytes;
    bytes.insert(bytes.end(), MBOUND_TAG, MBOUND_TAG + 4);
    put_le(bytes, proof.index, 8);
    write_file(path, bytes);
}

void write_proof(const std::string& path, const RangeProof& proof) {
    std::vector<unsigned char> bytes;
    bytes.insert(bytes.end(), RANGE_TAG, RANGE_TAG + 4);
    put_le(bytes, proof.indices.size(), 4);
    for (std::uint64_t idx : proof.indices) put_le(bytes, idx, 8);
    write_file(path, bytes);
}

Proof read_proof(const std::string& path) {
    const std::vector<unsigned char> bytes = read_file(path);
    if (bytes.size() < 4) throw std::runtime_error(path + ": missing scheme tag");

    if (std::memcmp(bytes.data(), MBOUND_TAG, 4) == 0) {
        if (bytes.size() != MBOUND_PROOF_SIZE)
            throw std::runtime_error(path + ": bad mbound proof size");
        return MboundProofWire{get_le(bytes.data() + 4, 8)};
    }
    if (std::memcmp(bytes.data(), RANGE_TAG, 4) == 0) {
        if (bytes.size() < 8) throw std::runtime_error(path + ": truncated range proof");
        std::uint64_t count = get_le(bytes.data() + 4, 4);
        if (bytes.size() != 8 + count * 8)
            throw std::runtime_error(path + ": range proof size disagrees with count");
        RangeProof proof;
        proof.indices.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i)
            proof.indices.push_back(get_le(bytes.data() + 8 + i * 8, 8));
        return proof;
    }
    throw std::runtime_error(path + ": unknown scheme tag");
}

std::string table_cache_filename(std::uint64_t seed, std::uint64_t len) {
    return "table-" + std::to_string(seed) + "-" + std::to_string(len) + ".mbt";
}

}  // namespace mbf::wire
