// Point-scatterer targets and the channel they impose on a baseband signal.
// Each target is a cascade of attenuation, phase change and Doppler shift;
// placement adds the range-dependent phase and (sample-rounded) delay.

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dsradar/units.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

struct GridPointFt {
    double x_ft = 0.0;
    double y_ft = 0.0;
};

struct Scatterer {
    double attenuation_db = 0.0;  // >= 0
    double phase_deg = 0.0;       // intrinsic phase change, (-180, 180]
    double doppler_hz = 0.1;
    // Either a direct range or rooftop-style grid coordinates (radar at the
    // origin); grid placement resolves to the Euclidean distance.
    std::variant<double, GridPointFt> placement = 0.0;
    // Keeps the slot in the scene but contributes nothing to the channel;
    // used by noise-only detection runs.
    bool absent = false;

    double range_m() const;
    double gain() const { return attenuation_db_to_gain(attenuation_db); }
};

enum class Propagation { kOneWay, kTwoWay };

struct NoiseSpec {
    enum class Kind {
        kSnrDb,  // relative to the noiseless received power
        kPower,  // absolute complex noise power
    };
    Kind kind = Kind::kSnrDb;
    double value = 0.0;
};

struct Scene {
    std::vector<Scatterer> scatterers;
    std::optional<NoiseSpec> noise;
    Propagation propagation = Propagation::kOneWay;
};

// output[n] = sum_k g_k * exp(j*phi_k) * exp(j*2*pi*f_dk*t_n) * x[n - d_k] (+ noise)
// with g_k = 10^(-A_k/20), phi_k = intrinsic + placement phase (360 d/lambda
// one-way, 720 d/lambda two-way) and d_k the propagation delay rounded to the
// nearest sample. Noiseless when the scene carries no noise spec; otherwise
// bit-reproducible for a fixed rng_seed.
BasebandSignal apply_channel(const BasebandSignal& signal, const Scene& scene,
                             const CarrierConfig& carrier, std::uint64_t rng_seed);

// Euclidean distance between two grid coordinates. The feet value is
// truncated to 4 decimal places before metric conversion, matching how
// distances are quoted on the 1 ft survey grid.
double relative_distance_cm(GridPointFt a, GridPointFt b);

// Phase accumulated over a one-way path of the given length, raw [0, 360).
double placement_phase_raw_deg(double distance_cm, double wavelength_cm);

// Same, normalized to (-180, 180] for use as a phase.
double placement_phase_deg(double distance_cm, double wavelength_cm);

// Log-distance path model for the radio contour map. The map is a
// qualitative tool: exponent and reference level are model inputs, not
// measurements.
struct PathLossModel {
    double exponent = 2.0;
    double reference_dbm = -40.0;
    double reference_distance_ft = 1.0;
    double floor_dbm = -78.0;  // background level; no cell reads below it
};

struct MapGrid {
    double x_min_ft = -10.0;
    double x_max_ft = 10.0;
    double y_min_ft = 0.0;
    double y_max_ft = 25.0;
    double cell_ft = 1.0;
};

struct ContourMap {
    std::vector<double> x_ft;       // nx grid coordinates
    std::vector<double> y_ft;       // ny grid coordinates
    std::vector<double> power_dbm;  // row-major, y outer: power_dbm[iy * nx + ix]

    std::size_t nx() const { return x_ft.size(); }
    std::size_t ny() const { return y_ft.size(); }
    double at(std::size_t ix, std::size_t iy) const { return power_dbm[iy * nx() + ix]; }
};

// Received power per cell for a copy of cell_target placed there. A cell at
// exactly the radar origin is assigned the reference power (convention).
ContourMap generate_contour_map(const MapGrid& grid, const Scatterer& cell_target,
                                const PathLossModel& model, const CarrierConfig& carrier);

}  // namespace dsradar
