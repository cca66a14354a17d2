#include "mbf/table.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "mbf/rng.hpp"

namespace mbf {

namespace {

constexpr std::uint64_t MIN_TABLE_LEN = 1024;
constexpr std::array<unsigned char, 16> TABLE_MAGIC = {
    'M', 'B', 'F', 'T', 'A', 'B', 'L', 'E', 0, 0, 0, 0, 0, 0, 0, 1};

void put_le64(unsigned char* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_le64(const unsigned char* in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return v;
}

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

PublicTable build_table(std::uint64_t seed, std::uint64_t len) {
    if (!std::has_single_bit(len))
        throw std::invalid_argument("table length must be a power of two");
    if (len < MIN_TABLE_LEN)
        throw std::invalid_argument("table length must be at least 1024");

    PublicTable table;
    table.seed = seed;
    table.entries.resize(len);
    for (std::uint64_t i = 0; i < len; ++i)
        table.entries[i] = static_cast<std::uint32_t>(mix64(seed + (i + 1) * GOLDEN_GAMMA));
    return table;
}

void save_table(const PublicTable& table, const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");

    unsigned char header[32];
    std::memcpy(header, TABLE_MAGIC.data(), 16);
    put_le64(header + 16, table.seed);
    put_le64(header + 24, table.len());
    if (std::fwrite(header, 1, sizeof header, f.get()) != sizeof header)
        throw std::runtime_error("short write to " + path);

    std::vector<unsigned char> buf(table.len() * 4);
    for (std::uint64_t i = 0; i < table.len(); ++i) {
        std::uint32_t v = table.entries[i];
        for (int b = 0; b < 4; ++b)
            buf[i * 4 + b] = static_cast<unsigned char>(v >> (8 * b));
    }
    if (std::fwrite(buf.data(), 1, buf.size(), f.get()) != buf.size())
        throw std::runtime_error("short write to " + path);
    if (std::fflush(f.get()) != 0)
        throw std::runtime_error("flush failed for " + path);
}

PublicTable load_table(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw std::runtime_error("cannot open " + path);

    unsigned char header[32];
    if (std::fread(header, 1, sizeof header, f.get()) != sizeof header)
        throw std::runtime_error(path + ": truncated header");
    if (std::memcmp(header, TABLE_MAGIC.data(), 16) != 0)
        throw std::runtime_error(path + ": bad table magic");

    std::uint64_t seed = get_le64(header + 16);
    std::uint64_t len = get_le64(header + 24);
    if (!std::has_single_bit(len) || len < MIN_TABLE_LEN)
        throw std::runtime_error(path + ": bad table length");

    PublicTable table;
    table.seed = seed;
    table.entries.resize(len);
    std::vector<unsigned char> buf(len * 4);
    if (std::fread(buf.data(), 1, buf.size(), f.get()) != buf.size())
        throw std::runtime_error(path + ": truncated entries");
    for (std::uint64_t i = 0; i < len; ++i) {
        std::uint32_t v = 0;
        for (int b = 0; b < 4; ++b)
            v |= static_cast<std::uint32_t>(buf[i * 4 + b]) << (8 * b);
        table.entries[i] = v;
    }
    unsigned char extra;
    if (std::fread(&extra, 1, 1, f.get()) == 1)
        throw std::runtime_error(path + ": trailing bytes after entries");
    return table;
}

}  // namespace mbf
