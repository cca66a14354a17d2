#include <doctest.h>

#include <cstdint>
#include <unordered_set>

#include "mbf/rng.hpp"

using namespace mbf;

TEST_CASE("SplitMix64 reproduces the reference stream for seed 0") {
    SplitMix64 rng(0);
    std::uint64_t first = rng.next();
    std::uint64_t second = rng.next();
    std::uint64_t third = rng.next();
    CHECK(first == 0xe220a8397b1dcdafULL);
    CHECK(second == 0x6e789e6aa1b965f4ULL);
    CHECK(third == 0x06c45d188009454fULL);
}

TEST_CASE("mix64 is injective on a large sample") {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(200000);
    for (std::uint64_t i = 0; i < 100000; ++i)
        CHECK(seen.insert(mix64(i)).second);
    SplitMix64 rng(42);
    for (int i = 0; i < 100000; ++i)
        CHECK(seen.insert(mix64(rng.next())).second);
}

TEST_CASE("rotl64 rotates through the word") {
    CHECK(rotl64(1, 1) == 2);
    CHECK(rotl64(0x8000000000000000ULL, 1) == 1);
    CHECK(rotl64(0x0123456789abcdefULL, 16) == 0x456789abcdef0123ULL);
}

TEST_CASE("bounded draws stay in range and are unbiased enough") {
    SplitMix64 rng(7);
    for (std::uint64_t bound : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                                std::uint64_t{10}, std::uint64_t{1000}}) {
        for (int i = 0; i < 2000; ++i) CHECK(rng.bounded(bound) < bound);
    }
    CHECK(rng.bounded(1) == 0);
    CHECK(rng.bounded(0) == 0);

    // Rough uniformity for a bound that does not divide 2^64.
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 30000; ++i) ++counts[rng.bounded(3)];
    for (int c : counts) {
        CHECK(c > 9500);
        CHECK(c < 10500);
    }
}

TEST_CASE("next_double lands in [0, 1)") {
    SplitMix64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("sample_without_replacement yields sorted distinct values") {
    SplitMix64 rng(3);
    for (int round = 0; round < 200; ++round) {
        auto sample = sample_without_replacement(50, 12, rng);
        REQUIRE(sample.size() == 12);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            CHECK(sample[i] < 50);
            if (i > 0) CHECK(sample[i] > sample[i - 1]);
        }
    }

    auto all = sample_without_replacement(10, 10, rng);
    REQUIRE(all.size() == 10);
    for (std::uint64_t i = 0; i < 10; ++i) CHECK(all[i] == i);

    CHECK(sample_without_replacement(10, 0, rng).empty());
    CHECK(sample_without_replacement(5, 99, rng).size() == 5);
}

TEST_CASE("sample_without_replacement picks uniformly") {
    SplitMix64 rng(5);
    int counts[5] = {0, 0, 0, 0, 0};
    const int rounds = 20000;
    for (int i = 0; i < rounds; ++i)
        for (std::uint64_t v : sample_without_replacement(5, 2, rng)) ++counts[v];
    // Each element appears with probability 2/5; 8000 expected, sd ~69.
    for (int c : counts) {
        CHECK(c > 7700);
        CHECK(c < 8300);
    }
}
