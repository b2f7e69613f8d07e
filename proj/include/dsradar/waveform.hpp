// Complex baseband signals and the carrier / stepped-frequency bookkeeping
// shared by the channel, receiver and imaging paths. All processing happens
// at baseband; the carrier only enters as wavelength and per-step phase.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dsradar/pncode.hpp"
#include "dsradar/units.hpp"

namespace dsradar {

struct BasebandSignal {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz = 0.0;
    double start_time_s = 0.0;

    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

struct CarrierConfig {
    double carrier_hz = 2.4e9;
    // When set, wavelength bookkeeping uses this value instead of the exact
    // c/carrier (e.g. the round 0.125 m at 2.4 GHz).
    std::optional<double> nominal_wavelength_m;

    double wavelength_m() const {
        return nominal_wavelength_m ? *nominal_wavelength_m : kSpeedOfLight / carrier_hz;
    }
};

// Evenly stepped carrier grid: step n carries start_hz + n * step_hz.
struct FrequencyPlan {
    double start_hz = 2.4e9;
    double step_hz = 0.0;
    int steps = 0;

    double bandwidth_hz() const { return step_hz * steps; }
    double unambiguous_range_m() const { return kSpeedOfLight / step_hz; }
    double bin_spacing_m() const { return kSpeedOfLight / (step_hz * steps); }
    double frequency_at(int n) const { return start_hz + n * step_hz; }
};

// Sample-and-hold BPSK mapping of the code: each chip held for
// samples_per_chip samples, the whole code repeated `repetitions` times.
// Amplitude is exactly +/-1, so mean power is exactly 1.
BasebandSignal chips_to_baseband(const PnCode& code, double chip_rate_hz,
                                 int samples_per_chip, int repetitions);

// step_hz = bandwidth_hz / steps, so bin_spacing * steps = unambiguous range
// holds exactly.
FrequencyPlan make_frequency_plan(double start_hz, double bandwidth_hz, int steps);

}  // namespace dsradar
