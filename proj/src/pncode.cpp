#include "dsradar/pncode.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dsradar {

namespace {

// Tap sets verified to produce period 2^r - 1 under the register convention
// in the header. Validation is table membership, not runtime irreducibility
// testing.
const std::map<int, std::vector<std::vector<int>>>& tap_table() {
    static const std::map<int, std::vector<std::vector<int>>> table = {
        {2, {{2, 1}}},
        {3, {{3, 2}, {3, 1}}},
        {4, {{4, 3}, {4, 1}}},
        {5, {{5, 3}, {5, 2}, {5, 4, 3, 2}, {5, 4, 2, 1}}},
        {6, {{6, 5}, {6, 1}, {6, 5, 2, 1}}},
        {7, {{7, 6}, {7, 3}, {7, 1}, {7, 4}, {7, 6, 5, 4}}},
        {8, {{8, 6, 5, 4}, {8, 4, 3, 2}, {8, 7, 6, 1}, {8, 5, 3, 1}}},
        {9, {{9, 5}, {9, 4}, {9, 6, 4, 3}}},
        {10, {{10, 7}, {10, 3}, {10, 9, 8, 5}}},
        {11, {{11, 9}, {11, 2}, {11, 8, 5, 2}}},
        {12, {{12, 11, 10, 4}, {12, 6, 4, 1}, {12, 11, 8, 6}}},
        {13, {{13, 4, 3, 1}, {13, 12, 10, 9}, {13, 12, 11, 8}}},
        {14, {{14, 13, 12, 2}, {14, 5, 3, 1}, {14, 13, 11, 9}}},
        {15, {{15, 14}, {15, 1}, {15, 4}, {15, 14, 13, 11}}},
        {16, {{16, 15, 13, 4}, {16, 12, 3, 1}, {16, 14, 13, 11}, {16, 15, 12, 10}}},
    };
    return table;
}

std::vector<int> normalized_taps(std::vector<int> taps) {
    std::sort(taps.begin(), taps.end(), std::greater<int>());
    taps.erase(std::unique(taps.begin(), taps.end()), taps.end());
    return taps;
}

}  // namespace

std::string polynomial_string(const std::vector<int>& taps) {
    std::ostringstream out;
    for (int t : normalized_taps(taps)) out << "x^" << t << " + ";
    out << "1";
    return out.str();
}

const std::vector<std::vector<int>>& primitive_taps_for_width(int register_width) {
    auto it = tap_table().find(register_width);
    if (it == tap_table().end()) {
        throw std::invalid_argument("register width " + std::to_string(register_width) +
                                    " outside the supported range 2..16");
    }
    return it->second;
}

bool is_known_primitive(int register_width, std::vector<int> taps) {
    auto it = tap_table().find(register_width);
    if (it == tap_table().end()) return false;
    const auto norm = normalized_taps(std::move(taps));
    return std::find(it->second.begin(), it->second.end(), norm) != it->second.end();
}

PnCode generate_msequence(int register_width, std::vector<int> taps, std::uint32_t seed) {
    if (register_width < 2 || register_width > 16) {
        throw std::invalid_argument("register width " + std::to_string(register_width) +
                                    " outside the supported range 2..16");
    }
    const auto norm = normalized_taps(std::move(taps));
    if (!is_known_primitive(register_width, norm)) {
        throw std::invalid_argument("taps " + polynomial_string(norm) +
                                    " are not a known primitive polynomial for width " +
                                    std::to_string(register_width));
    }
    if (seed == 0) {
        throw std::invalid_argument("seed must be a nonzero register state");
    }
    const std::uint32_t mask = (1u << register_width) - 1u;
    if ((seed & ~mask) != 0) {
        throw std::invalid_argument("seed does not fit a " + std::to_string(register_width) +
                                    "-bit register");
    }

    const int period = (1 << register_width) - 1;
    PnCode code;
    code.chips.reserve(static_cast<std::size_t>(period));
    code.register_width = register_width;
    code.taps = norm;
    code.seed = seed;

    std::uint32_t reg = seed;
    for (int n = 0; n < period; ++n) {
        const int bit = static_cast<int>((reg >> (register_width - 1)) & 1u);
        code.chips.push_back(bit == 0 ? +1 : -1);
        std::uint32_t feedback = 0;
        for (int t : norm) feedback ^= (reg >> (t - 1)) & 1u;
        reg = ((reg << 1) & mask) | feedback;
    }
    return code;
}

double circular_autocorrelation(const PnCode& code, int lag) {
    const int n = code.length();
    if (n == 0) throw std::invalid_argument("empty code");
    if (lag < 0 || lag >= n) {
        throw std::out_of_range("lag " + std::to_string(lag) + " outside [0, " +
                                std::to_string(n) + ")");
    }
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += static_cast<long long>(code.chips[static_cast<std::size_t>(i)]) *
               code.chips[static_cast<std::size_t>((i + lag) % n)];
    }
    return static_cast<double>(acc);
}

}  // namespace dsradar
