// Closed-form two-target interference law. Serves both as a public API and
// as the independent cross-check for the signal-domain measurements.

#pragma once

#include <vector>

#include "dsradar/units.hpp"

namespace dsradar {

struct TwoTargetCase {
    double a1_db = 0.0;
    double a2_db = 0.0;
    double phi1_deg = 0.0;
    double phi2_deg = 0.0;

    // Equal-attenuation pair with target 2 displaced by distance_cm: the
    // displacement enters purely as relative phase.
    static TwoTargetCase from_relative_distance(double a_db, double distance_cm,
                                                double wavelength_cm);
};

// -20*log10|g1*e^(j*phi1) + g2*e^(j*phi2)|, floor-capped. For equal gains this
// reduces to A - 20*log10(2|cos(dphi/2)|).
double resultant_attenuation_db(const TwoTargetCase& c,
                                double floor_cap_db = kDefaultFloorCapDb);

// Link-budget arithmetic: received level = transmitted level - attenuation.
double received_power_example(double tx_db, double attenuation_db);

struct SweepPoint {
    double distance_cm = 0.0;
    double attenuation_db = 0.0;
};

// Resultant attenuation of an equal-A pair over distances 0..d_max_cm.
// Minima of A - 6.0206 dB appear wherever the displacement is a whole number
// of wavelengths; the curve is periodic in the wavelength.
std::vector<SweepPoint> sweep_curve(double a_db, double wavelength_cm, double d_max_cm,
                                    double step_cm, double floor_cap_db = kDefaultFloorCapDb);

}  // namespace dsradar
