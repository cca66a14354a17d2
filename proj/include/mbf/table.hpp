#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mbf {

/// Counts table fetches.  Thread one through walk/generate/verify to
/// measure effort in table accesses; pass nullptr to skip counting.
struct AccessCounter {
    std::uint64_t fetches = 0;
};

/// Public random table T.  len is a power of two so walk indices can be
/// masked.  Entries are 32-bit; the table is meant to be much larger
/// than cache, so each fetch is a memory access.
struct PublicTable {
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> entries;

    std::uint64_t len() const noexcept { return entries.size(); }

    std::uint32_t fetch(std::uint64_t idx, AccessCounter* counter) const noexcept {
        if (counter) ++counter->fetches;
        return entries[idx];
    }
};

/// Fills the table from a seeded keystream: entry[i] is the low 32 bits
/// of mix64(seed + (i+1)*GOLDEN_GAMMA).  Throws std::invalid_argument
/// unless len is a power of two and at least 2^10.
PublicTable build_table(std::uint64_t seed, std::uint64_t len);

/// Binary table file round-trip.  Throws std::runtime_error on IO
/// failure or a malformed file.
void save_table(const PublicTable& table, const std::string& path);
PublicTable load_table(const std::string& path);

}  // namespace mbf
