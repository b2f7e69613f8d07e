#include "dsradar/scene.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dsradar {

namespace {

// Deterministic standard-normal pairs via Box-Muller over mt19937_64.
// Avoids std::normal_distribution so seeded output is identical across
// standard libraries.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    std::complex<double> next_complex(double sigma_per_component) {
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * kInv53;  // (0, 1]
        const double u2 = static_cast<double>(rng_() >> 11) * kInv53;          // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {sigma_per_component * r * std::cos(2.0 * kPi * u2),
                sigma_per_component * r * std::sin(2.0 * kPi * u2)};
    }

private:
    static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    std::mt19937_64 rng_;
};

double propagation_factor(Propagation p) {
    return p == Propagation::kTwoWay ? 2.0 : 1.0;
}

}  // namespace

double Scatterer::range_m() const {
    if (std::holds_alternative<double>(placement)) return std::get<double>(placement);
    const auto& g = std::get<GridPointFt>(placement);
    return std::hypot(g.x_ft, g.y_ft) * kFeetToMeters;
}

double relative_distance_cm(GridPointFt a, GridPointFt b) {
    const double dist_ft = std::hypot(a.x_ft - b.x_ft, a.y_ft - b.y_ft);
    const double quantized_ft = std::trunc(dist_ft * 1e4) / 1e4;
    return quantized_ft * kFeetToCentimeters;
}

double placement_phase_raw_deg(double distance_cm, double wavelength_cm) {
    if (!(wavelength_cm > 0.0)) throw std::invalid_argument("wavelength must be positive");
    double frac = std::fmod(distance_cm, wavelength_cm);
    if (frac < 0.0) frac += wavelength_cm;
    double deg = 360.0 * frac / wavelength_cm;
    if (deg >= 360.0) deg -= 360.0;
    return deg;
}

double placement_phase_deg(double distance_cm, double wavelength_cm) {
    return normalize_phase_deg(placement_phase_raw_deg(distance_cm, wavelength_cm));
}

BasebandSignal apply_channel(const BasebandSignal& signal, const Scene& scene,
                             const CarrierConfig& carrier, std::uint64_t rng_seed) {
    if (scene.scatterers.empty()) throw std::invalid_argument("scene has no scatterers");
    if (signal.samples.empty()) throw std::invalid_argument("empty input signal");
    if (!(signal.sample_rate_hz > 0.0)) throw std::invalid_argument("invalid sample rate");

    const std::size_t n = signal.samples.size();
    const double fs = signal.sample_rate_hz;
    const double wavelength_cm = carrier.wavelength_m() * 100.0;
    const double prop = propagation_factor(scene.propagation);

    BasebandSignal out;
    out.sample_rate_hz = fs;
    out.start_time_s = signal.start_time_s;
    out.samples.assign(n, {0.0, 0.0});

    for (std::size_t k = 0; k < scene.scatterers.size(); ++k) {
        const Scatterer& sc = scene.scatterers[k];
        if (sc.absent) continue;
        if (!(sc.attenuation_db >= 0.0) || !std::isfinite(sc.attenuation_db)) {
            throw std::invalid_argument("scatterer " + std::to_string(k) +
                                        " has invalid attenuation");
        }
        const double range = sc.range_m();
        const double delay_s = prop * range / kSpeedOfLight;
        const long long delay_samples = std::llround(delay_s * fs);
        if (delay_samples >= static_cast<long long>(n)) {
            throw std::domain_error("scatterer " + std::to_string(k) + " at range " +
                                    std::to_string(range) + " m has a delay beyond the signal");
        }

        const double phase_deg =
            sc.phase_deg + prop * placement_phase_raw_deg(range * 100.0, wavelength_cm);
        const std::complex<double> static_gain =
            sc.gain() * std::complex<double>(std::cos(deg_to_rad(phase_deg)),
                                             std::sin(deg_to_rad(phase_deg)));

        for (std::size_t i = static_cast<std::size_t>(delay_samples); i < n; ++i) {
            const double t = signal.start_time_s + static_cast<double>(i) / fs;
            const double doppler_rad = 2.0 * kPi * sc.doppler_hz * t;
            const std::complex<double> rotator(std::cos(doppler_rad), std::sin(doppler_rad));
            out.samples[i] += static_gain * rotator *
                              signal.samples[i - static_cast<std::size_t>(delay_samples)];
        }
    }

    if (scene.noise) {
        double noise_power = 0.0;
        if (scene.noise->kind == NoiseSpec::Kind::kPower) {
            noise_power = scene.noise->value;
            if (!(noise_power >= 0.0)) throw std::invalid_argument("noise power must be >= 0");
        } else {
            double received_power = 0.0;
            for (const auto& s : out.samples) received_power += std::norm(s);
            received_power /= static_cast<double>(n);
            if (!(received_power > 0.0)) {
                throw std::invalid_argument(
                    "SNR-relative noise needs a nonzero noiseless received power; "
                    "use an absolute noise power instead");
            }
            noise_power = received_power / std::pow(10.0, scene.noise->value / 10.0);
        }
        const double sigma = std::sqrt(noise_power / 2.0);
        GaussianSource gauss(rng_seed);
        for (auto& s : out.samples) s += gauss.next_complex(sigma);
    }

    return out;
}

ContourMap generate_contour_map(const MapGrid& grid, const Scatterer& cell_target,
                                const PathLossModel& model, const CarrierConfig& carrier) {
    (void)carrier;  // the log-distance model carries its own reference level
    if (!(grid.cell_ft > 0.0)) throw std::invalid_argument("cell size must be positive");
    if (!(grid.x_max_ft >= grid.x_min_ft) || !(grid.y_max_ft >= grid.y_min_ft)) {
        throw std::invalid_argument("empty map grid");
    }
    if (!(model.reference_distance_ft > 0.0)) {
        throw std::invalid_argument("reference distance must be positive");
    }

    ContourMap map;
    const auto axis = [](double lo, double hi, double cell) {
        std::vector<double> v;
        const int count = static_cast<int>(std::floor((hi - lo) / cell + 1e-9)) + 1;
        v.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) v.push_back(lo + i * cell);
        return v;
    };
    map.x_ft = axis(grid.x_min_ft, grid.x_max_ft, grid.cell_ft);
    map.y_ft = axis(grid.y_min_ft, grid.y_max_ft, grid.cell_ft);
    map.power_dbm.reserve(map.nx() * map.ny());

    for (double y : map.y_ft) {
        for (double x : map.x_ft) {
            const double dist_ft = std::hypot(x, y);
            double power;
            if (dist_ft == 0.0) {
                power = model.reference_dbm;
            } else {
                power = model.reference_dbm -
                        10.0 * model.exponent * std::log10(dist_ft / model.reference_distance_ft) -
                        cell_target.attenuation_db;
            }
            map.power_dbm.push_back(std::max(power, model.floor_dbm));
        }
    }
    return map;
}

}  // namespace dsradar
