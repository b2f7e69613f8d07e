#include "dsradar/analytic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dsradar/scene.hpp"

namespace dsradar {

TwoTargetCase TwoTargetCase::from_relative_distance(double a_db, double distance_cm,
                                                    double wavelength_cm) {
    TwoTargetCase c;
    c.a1_db = a_db;
    c.a2_db = a_db;
    c.phi1_deg = 0.0;
    c.phi2_deg = placement_phase_deg(distance_cm, wavelength_cm);
    return c;
}

double resultant_attenuation_db(const TwoTargetCase& c, double floor_cap_db) {
    if (!std::isfinite(c.a1_db) || !std::isfinite(c.a2_db) || !std::isfinite(c.phi1_deg) ||
        !std::isfinite(c.phi2_deg)) {
        throw std::invalid_argument("two-target case must be finite");
    }
    const std::complex<double> g1 =
        attenuation_db_to_gain(c.a1_db) *
        std::complex<double>(std::cos(deg_to_rad(c.phi1_deg)), std::sin(deg_to_rad(c.phi1_deg)));
    const std::complex<double> g2 =
        attenuation_db_to_gain(c.a2_db) *
        std::complex<double>(std::cos(deg_to_rad(c.phi2_deg)), std::sin(deg_to_rad(c.phi2_deg)));
    return gain_to_attenuation_db(std::abs(g1 + g2), floor_cap_db);
}

double received_power_example(double tx_db, double attenuation_db) {
    return tx_db - attenuation_db;
}

std::vector<SweepPoint> sweep_curve(double a_db, double wavelength_cm, double d_max_cm,
                                    double step_cm, double floor_cap_db) {
    if (!(step_cm > 0.0)) throw std::invalid_argument("step must be positive");
    if (!(wavelength_cm > 0.0)) throw std::invalid_argument("wavelength must be positive");

    std::vector<SweepPoint> curve;
    const int count = static_cast<int>(std::floor(d_max_cm / step_cm + 1e-9)) + 1;
    curve.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double d = i * step_cm;
        const auto c = TwoTargetCase::from_relative_distance(a_db, d, wavelength_cm);
        curve.push_back({d, resultant_attenuation_db(c, floor_cap_db)});
    }
    return curve;
}

}  // namespace dsradar
