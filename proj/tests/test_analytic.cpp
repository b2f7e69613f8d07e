#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dsradar/analytic.hpp"
#include "dsradar/receiver.hpp"
#include "dsradar/scene.hpp"

using namespace dsradar;

TEST_CASE("in-phase equal pair loses exactly 20log10(2) relative to one target") {
    const double att = resultant_attenuation_db({10.0, 10.0, 0.0, 0.0});
    CHECK(att == doctest::Approx(3.979400086720376).epsilon(1e-12));
}

TEST_CASE("244 cm displacement under the nominal wavelength reads 28.02 dB") {
    const auto c = TwoTargetCase::from_relative_distance(10.0, 244.0, 12.5);
    CHECK(c.phi2_deg == doctest::Approx(normalize_phase_deg(187.2)).epsilon(1e-9));
    CHECK(resultant_attenuation_db(c) == doctest::Approx(28.0215185581285).epsilon(1e-9));
}

TEST_CASE("perfect cancellation reports the floor cap") {
    CHECK(resultant_attenuation_db({10.0, 10.0, 0.0, 180.0}) == kDefaultFloorCapDb);
    CHECK(resultant_attenuation_db({10.0, 10.0, -90.0, 90.0}, 150.0) == 150.0);
}

TEST_CASE("worked link-budget rows") {
    CHECK(received_power_example(5.0, 10.0) == -5.0);
    CHECK(received_power_example(5.0, 4.0) == 1.0);
    CHECK(received_power_example(5.0, 15.0) == -10.0);
}

TEST_CASE("law is symmetric under target swap and phase reflection") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> atten(0.0, 40.0);
    std::uniform_real_distribution<double> phase(-180.0, 180.0);
    for (int trial = 0; trial < 100; ++trial) {
        TwoTargetCase c{atten(rng), atten(rng), phase(rng), phase(rng)};
        const double base = resultant_attenuation_db(c);
        CHECK(resultant_attenuation_db({c.a2_db, c.a1_db, c.phi2_deg, c.phi1_deg}) ==
              doctest::Approx(base).epsilon(1e-12));
        CHECK(resultant_attenuation_db({c.a1_db, c.a2_db, -c.phi1_deg, -c.phi2_deg}) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("resultant never beats the aligned equal pair by more than 6.0206 dB") {
    // the combined gain is at most twice the stronger one, i.e. twice the
    // gain of the *less* attenuating target
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> atten(0.0, 40.0);
    std::uniform_real_distribution<double> phase(-180.0, 180.0);
    for (int trial = 0; trial < 200; ++trial) {
        TwoTargetCase c{atten(rng), atten(rng), phase(rng), phase(rng)};
        const double bound = std::min(c.a1_db, c.a2_db) - 20.0 * std::log10(2.0);
        CHECK(resultant_attenuation_db(c) >= bound - 1e-9);
    }
    // equality exactly at matched gains and phases
    CHECK(resultant_attenuation_db({17.0, 17.0, 42.0, 42.0}) ==
          doctest::Approx(17.0 - 20.0 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("sweep curve minima sit at whole wavelengths and the period is exact") {
    const auto curve = sweep_curve(10.0, 12.5, 300.0, 0.5);
    REQUIRE(curve.size() == 601);
    const double minimum = 3.979400086720376;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].attenuation_db >= minimum - 1e-9);
        const double d = curve[i].distance_cm;
        if (std::fmod(d, 12.5) == 0.0) {
            CHECK(curve[i].attenuation_db == doctest::Approx(minimum).epsilon(1e-9));
        }
    }
    // exact wavelength periodicity: 12.5 cm = 25 grid steps
    for (std::size_t i = 0; i + 25 < curve.size(); ++i) {
        CHECK(curve[i + 25].attenuation_db ==
              doctest::Approx(curve[i].attenuation_db).epsilon(1e-9));
    }
}

TEST_CASE("zone boundary sits exactly at 120 degrees of relative phase") {
    CHECK(resultant_attenuation_db({10.0, 10.0, 0.0, 120.0}) ==
          doctest::Approx(10.0).epsilon(1e-12));
    CHECK(resultant_attenuation_db({10.0, 10.0, 0.0, -120.0}) ==
          doctest::Approx(10.0).epsilon(1e-12));
    CHECK(resultant_attenuation_db({10.0, 10.0, 0.0, 119.0}) < 10.0);
    CHECK(resultant_attenuation_db({10.0, 10.0, 0.0, 121.0}) > 10.0);
    const auto call = classify_interference(resultant_attenuation_db({10.0, 10.0, 0.0, 119.0}),
                                            10.0);
    CHECK(call.zone == Interference::kAdditive);
}

TEST_CASE("curve depends only on the distance/wavelength ratio") {
    const auto base = sweep_curve(10.0, 12.5, 100.0, 0.5);
    const auto scaled = sweep_curve(10.0, 25.0, 200.0, 1.0);
    REQUIRE(base.size() == scaled.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(scaled[i].attenuation_db ==
              doctest::Approx(base[i].attenuation_db).epsilon(1e-12));
    }
}

TEST_CASE("curve points match the signal-domain measurement") {
    CarrierConfig carrier;
    carrier.nominal_wavelength_m = 0.125;
    const PnCode code = generate_msequence(7, {7, 6}, 1);
    const BasebandSignal ref = chips_to_baseband(code, 1.0e6, 1, 1);
    const auto curve = sweep_curve(10.0, 12.5, 50.0, 5.0);
    for (const auto& point : curve) {
        Scatterer fixed, moved;
        fixed.attenuation_db = moved.attenuation_db = 10.0;
        fixed.doppler_hz = moved.doppler_hz = 0.0;
        moved.phase_deg = placement_phase_deg(point.distance_cm, 12.5);
        Scene scene;
        scene.scatterers = {fixed, moved};
        const double measured =
            measure_composite_attenuation(apply_channel(ref, scene, carrier, 1), ref);
        CHECK(std::abs(measured - point.attenuation_db) <= 0.05);
    }
}
