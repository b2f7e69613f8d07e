// Scenario configuration: a flat sectioned key=value file that pins every
// input of a run. A config plus a seed determines every output byte, so the
// parser rejects anything it does not recognize.
//
// Top level      rng_seed, floor_cap_db, integration_time_s, detection_min_ratio
// [carrier]      carrier_hz, nominal_wavelength_cm
// [code]         width, taps, seed, chip_rate_hz, samples_per_chip, repetitions
// [scene]        propagation (one_way|two_way), scatterer (repeatable)
//                scatterer syntax: atten_db=<v> [phase_deg=<v>] [doppler_hz=<v>]
//                                  [range_m=<v> | grid_ft=<x>,<y>] [absent=<0|1>]
// [noise]        snr_db  -or-  power
// [plan]         start_hz, bandwidth_hz, steps, window (rectangular|hann),
//                peak_min_separation_bins, peak_threshold_db
// [sweep]        d_min_cm, d_max_cm, step_cm
// [map]          x_min_ft, x_max_ft, y_min_ft, y_max_ft, cell_ft,
//                path_exponent, ref_power_dbm, ref_distance_ft, floor_dbm
// [output]       dir, svg

#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>

#include "dsradar/imaging.hpp"
#include "dsradar/scene.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CodeConfig {
    int width = 10;
    std::vector<int> taps = {10, 3};
    std::uint32_t seed = 1;
    double chip_rate_hz = 1.0e6;
    int samples_per_chip = 1;
    int repetitions = 2;
};

struct SweepGrid {
    double d_min_cm = 0.0;
    double d_max_cm = 300.0;
    double step_cm = 1.0;
};

struct MapConfig {
    MapGrid grid;
    PathLossModel model;
};

struct OutputConfig {
    std::string dir = "out";
    bool svg = false;
};

struct ScenarioConfig {
    std::uint64_t rng_seed = 1;
    double floor_cap_db = kDefaultFloorCapDb;
    double integration_time_s = 0.01;
    double detection_min_ratio = 6.0;

    CarrierConfig carrier;
    CodeConfig code;
    Scene scene;
    FrequencyPlan plan{2.4e9, 3.0e9 / 128.0, 128};
    Window window = Window::kRectangular;
    int peak_min_separation_bins = 1;
    double peak_threshold_db = 30.0;
    SweepGrid sweep;
    MapConfig map;
    OutputConfig output;
};

// Parses and validates; throws ConfigError with a line reference on any
// unknown section/key or malformed value.
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace dsradar
