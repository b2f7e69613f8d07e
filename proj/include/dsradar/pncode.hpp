// Maximal-length pseudo-noise sequences for the DSSS transmit and reference
// correlator paths.
//
// Register convention (Fibonacci LFSR): stages are numbered 1..r with stage i
// stored at bit (i-1). Each step emits stage r as the output bit, computes the
// feedback as the XOR of the tapped stages, shifts every stage up by one and
// inserts the feedback at stage 1. Output bits map to chips as 0 -> +1 and
// 1 -> -1, so correlation arithmetic stays exact integer math.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsradar {

struct PnCode {
    std::vector<int> chips;  // each exactly +1 or -1
    int register_width = 0;
    std::vector<int> taps;   // feedback stage numbers, descending, includes register_width
    std::uint32_t seed = 0;  // initial register state, nonzero

    int length() const { return static_cast<int>(chips.size()); }
};

// Generates the full period (2^width - 1 chips) of the m-sequence defined by
// (taps, seed). Taps must appear in the built-in primitive table for the
// width; the seed must be a nonzero state that fits the register.
// Regeneration with identical arguments is chip-identical.
PnCode generate_msequence(int register_width, std::vector<int> taps, std::uint32_t seed);

// Periodic autocorrelation sum_n chips[n] * chips[(n + lag) mod length].
// Exactly length at lag 0 and exactly -1 at every other lag for any
// maximal-length code. Lag must lie in [0, length).
double circular_autocorrelation(const PnCode& code, int lag);

// Verified maximal-length tap sets for register widths 2..16.
const std::vector<std::vector<int>>& primitive_taps_for_width(int register_width);

// True when (width, taps) matches a table entry (tap order is irrelevant).
bool is_known_primitive(int register_width, std::vector<int> taps);

// "x^10 + x^3 + 1" style rendering, used in diagnostics.
std::string polynomial_string(const std::vector<int>& taps);

}  // namespace dsradar
