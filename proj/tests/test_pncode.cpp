#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "dsradar/pncode.hpp"

using namespace dsradar;

namespace {

// Independent oracle: plain O(n^2) circular autocorrelation over int chips.
long long brute_force_autocorr(const std::vector<int>& chips, int lag) {
    long long acc = 0;
    const int n = static_cast<int>(chips.size());
    for (int i = 0; i < n; ++i) {
        acc += static_cast<long long>(chips[static_cast<std::size_t>(i)]) *
               chips[static_cast<std::size_t>((i + lag) % n)];
    }
    return acc;
}

}  // namespace

TEST_CASE("width 3 taps {3,2} produces the balanced length-7 sequence") {
    const PnCode code = generate_msequence(3, {3, 2}, 0b001);
    REQUIRE(code.length() == 7);
    int plus = 0, minus = 0;
    for (int c : code.chips) {
        REQUIRE((c == 1 || c == -1));
        (c == 1 ? plus : minus)++;
    }
    // m-sequence balance: counts differ by exactly one chip.
    CHECK(plus + minus == 7);
    CHECK(std::abs(plus - minus) == 1);
}

TEST_CASE("width 7 gives the full 127-chip period") {
    const PnCode code = generate_msequence(7, {7, 6}, 1);
    CHECK(code.length() == 127);
}

TEST_CASE("every table entry is maximal and two-valued for widths 2..12") {
    for (int width = 2; width <= 12; ++width) {
        for (const auto& taps : primitive_taps_for_width(width)) {
            const PnCode code = generate_msequence(width, taps, 1);
            CHECK(code.length() == (1 << width) - 1);
            int plus = 0, minus = 0;
            for (int c : code.chips) (c == 1 ? plus : minus)++;
            CHECK(std::abs(plus - minus) == 1);
        }
    }
}

TEST_CASE("autocorrelation peak is the length, off-peak exactly -1") {
    for (int width : {3, 7, 10}) {
        const auto taps = primitive_taps_for_width(width).front();
        const PnCode code = generate_msequence(width, taps, 1);
        CHECK(circular_autocorrelation(code, 0) == static_cast<double>(code.length()));
        for (int lag = 1; lag < code.length(); ++lag) {
            CHECK(circular_autocorrelation(code, lag) == -1.0);
            CHECK(brute_force_autocorr(code.chips, lag) == -1);
        }
    }
}

TEST_CASE("length-127 code at lag 63 reads -1") {
    const PnCode code = generate_msequence(7, {7, 3}, 5);
    CHECK(circular_autocorrelation(code, 63) == -1.0);
}

TEST_CASE("regeneration is chip-identical") {
    const PnCode a = generate_msequence(10, {10, 3}, 0x2AB);
    const PnCode b = generate_msequence(10, {10, 3}, 0x2AB);
    CHECK(a.chips == b.chips);
}

TEST_CASE("different seeds rotate the same sequence") {
    const PnCode a = generate_msequence(5, {5, 3}, 1);
    const PnCode b = generate_msequence(5, {5, 3}, 7);
    CHECK(a.chips != b.chips);
    // Same period and autocorrelation structure regardless of seed.
    for (int lag = 1; lag < a.length(); ++lag) {
        CHECK(circular_autocorrelation(b, lag) == -1.0);
    }
}

TEST_CASE("spreading twice restores any data sequence exactly") {
    const PnCode code = generate_msequence(7, {7, 6}, 19);
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<int> data(static_cast<std::size_t>(code.length()));
    for (auto& d : data) d = bit(rng) ? 1 : -1;
    std::vector<int> twice(data);
    for (std::size_t i = 0; i < twice.size(); ++i) {
        twice[i] *= code.chips[i] * code.chips[i];
    }
    CHECK(twice == data);
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(generate_msequence(3, {3, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_msequence(3, {3, 2}, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(generate_msequence(1, {1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_msequence(17, {17, 3}, 1), std::invalid_argument);
    // x^4 + x^2 + 1 = (x^2+x+1)^2 is not primitive; the message names it.
    try {
        generate_msequence(4, {4, 2}, 1);
        FAIL("expected a configuration error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("x^4 + x^2 + 1") != std::string::npos);
    }
}

TEST_CASE("lag bounds are enforced") {
    const PnCode code = generate_msequence(3, {3, 2}, 1);
    CHECK_THROWS_AS(circular_autocorrelation(code, -1), std::out_of_range);
    CHECK_THROWS_AS(circular_autocorrelation(code, 7), std::out_of_range);
}
