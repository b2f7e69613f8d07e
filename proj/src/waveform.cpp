#include "dsradar/waveform.hpp"

#include <stdexcept>

namespace dsradar {

BasebandSignal chips_to_baseband(const PnCode& code, double chip_rate_hz,
                                 int samples_per_chip, int repetitions) {
    if (code.length() == 0) throw std::invalid_argument("empty code");
    if (!(chip_rate_hz > 0.0)) throw std::invalid_argument("chip rate must be positive");
    if (samples_per_chip < 1) throw std::invalid_argument("samples_per_chip must be >= 1");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    BasebandSignal signal;
    signal.sample_rate_hz = chip_rate_hz * samples_per_chip;
    signal.samples.reserve(static_cast<std::size_t>(code.length()) * samples_per_chip * repetitions);
    for (int rep = 0; rep < repetitions; ++rep) {
        for (int chip : code.chips) {
            for (int s = 0; s < samples_per_chip; ++s) {
                signal.samples.emplace_back(static_cast<double>(chip), 0.0);
            }
        }
    }
    return signal;
}

FrequencyPlan make_frequency_plan(double start_hz, double bandwidth_hz, int steps) {
    if (!(start_hz > 0.0)) throw std::invalid_argument("start frequency must be positive");
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be positive");
    if (steps < 2) throw std::invalid_argument("a frequency plan needs at least 2 steps");

    FrequencyPlan plan;
    plan.start_hz = start_hz;
    plan.step_hz = bandwidth_hz / steps;
    plan.steps = steps;
    return plan;
}

}  // namespace dsradar
