// Shared physical constants and scalar conversions used across the simulator.

#pragma once

#include <cmath>

namespace dsradar {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s, exact
inline constexpr double kFeetToMeters = 0.3048;
inline constexpr double kFeetToCentimeters = 30.48;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Attenuations below the cap read as exactly the cap, never inf/NaN.
inline constexpr double kDefaultFloorCapDb = 200.0;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

// Maps any angle to (-180, 180].
inline double normalize_phase_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r <= -180.0) r += 360.0;
    if (r > 180.0) r -= 360.0;
    return r;
}

// Voltage-style attenuation: A dB -> gain in (0, 1] for A >= 0.
inline double attenuation_db_to_gain(double attenuation_db) {
    return std::pow(10.0, -attenuation_db / 20.0);
}

// Inverse of the above with a hard floor: gains at or below the cap's
// equivalent magnitude report exactly floor_cap_db.
inline double gain_to_attenuation_db(double gain, double floor_cap_db = kDefaultFloorCapDb) {
    const double floor_gain = std::pow(10.0, -floor_cap_db / 20.0);
    if (!(gain > floor_gain)) return floor_cap_db;
    return -20.0 * std::log10(gain);
}

}  // namespace dsradar
