#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "dsradar/receiver.hpp"
#include "dsradar/scene.hpp"

using namespace dsradar;

namespace {

BasebandSignal spread_reference(int width = 7, int samples_per_chip = 1, int repetitions = 1,
                                double chip_rate = 1.0e6) {
    const PnCode code = generate_msequence(width, primitive_taps_for_width(width).front(), 1);
    return chips_to_baseband(code, chip_rate, samples_per_chip, repetitions);
}

// Independent oracle: direct correlation without normalization tricks.
std::complex<double> brute_corr_at(const BasebandSignal& received,
                                   const BasebandSignal& reference, std::size_t lag) {
    double energy = 0.0;
    for (const auto& r : reference.samples) energy += std::norm(r);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < reference.samples.size() && lag + i < received.samples.size();
         ++i) {
        acc += received.samples[lag + i] * std::conj(reference.samples[i]);
    }
    return acc / energy;
}

Scatterer still_target(double atten_db, double phase_deg, double range_m = 0.0) {
    Scatterer sc;
    sc.attenuation_db = atten_db;
    sc.phase_deg = phase_deg;
    sc.doppler_hz = 0.0;
    sc.placement = range_m;
    return sc;
}

const CarrierConfig kCarrier{};

}  // namespace

TEST_CASE("matched identity peaks at lag 0 with value 1") {
    const BasebandSignal ref = spread_reference();
    const CorrelationResult corr = correlate(ref, ref);
    CHECK(corr.peak_lag == 0);
    CHECK(std::abs(corr.peak_value - std::complex<double>(1.0, 0.0)) <= 1e-12);
}

TEST_CASE("correlation is linear in the channel gain") {
    const BasebandSignal ref = spread_reference();
    const std::complex<double> gain =
        0.31622776601683794 * std::exp(std::complex<double>(0.0, deg_to_rad(30.0)));
    BasebandSignal received = ref;
    for (auto& s : received.samples) s *= gain;
    const CorrelationResult corr = correlate(received, ref);
    CHECK(std::abs(std::abs(corr.peak_value) - 0.31622776601683794) <= 1e-12);
    CHECK(rad_to_deg(std::arg(corr.peak_value)) == doctest::Approx(30.0).epsilon(1e-9));
}

TEST_CASE("a 5-sample delay moves the peak to lag 5") {
    const BasebandSignal ref = spread_reference();
    BasebandSignal received = ref;
    received.samples.assign(ref.samples.size(), {0.0, 0.0});
    for (std::size_t i = 5; i < ref.samples.size(); ++i) {
        received.samples[i] = ref.samples[i - 5];
    }
    const CorrelationResult corr = correlate(received, ref);
    CHECK(corr.peak_lag == 5);
    // cross-check every lag against the brute-force oracle
    for (std::size_t lag = 0; lag < corr.values.size(); ++lag) {
        CHECK(std::abs(corr.values[lag] - brute_corr_at(received, ref, lag)) <= 1e-12);
    }
}

TEST_CASE("sample-rate mismatch is rejected") {
    const BasebandSignal ref = spread_reference();
    BasebandSignal received = ref;
    received.sample_rate_hz *= 2.0;
    CHECK_THROWS_AS(correlate(received, ref), std::invalid_argument);
}

TEST_CASE("noiseless loopback recovers injected phase and attenuation to 1e-6") {
    const BasebandSignal ref = spread_reference(7, 1, 1, 12.7e3);  // 10 ms period
    const double t_int = 0.01;
    const std::pair<double, double> table_pairs[] = {
        {1.0, 2.0},  {10.0, 4.0}, {15.0, 6.0},  {18.0, 7.0},  {20.0, 8.0},
        {25.0, 9.0}, {30.0, 10.0}, {40.0, 11.0}, {45.0, 12.0},
    };
    for (const auto& [phase, atten] : table_pairs) {
        Scene scene;
        scene.scatterers = {still_target(atten, phase)};
        const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
        const auto report = estimate_single_target(received, ref, t_int);
        REQUIRE(report.has_value());
        CHECK(report->phase_deg == doctest::Approx(phase).epsilon(1e-8));
        CHECK(std::abs(report->phase_deg - phase) <= 1e-6);
        CHECK(std::abs(report->attenuation_db - atten) <= 1e-6);
        CHECK(report->n_fingers_used == 1);
    }
}

TEST_CASE("estimator is exact over the full attenuation/phase domain") {
    const BasebandSignal ref = spread_reference();
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> atten(0.0, 60.0);
    std::uniform_real_distribution<double> phase(-179.999, 180.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = atten(rng);
        const double p = phase(rng);
        Scene scene;
        scene.scatterers = {still_target(a, p)};
        const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
        const auto report = estimate_single_target(received, ref, ref.duration_s());
        REQUIRE(report.has_value());
        CHECK(std::abs(report->attenuation_db - a) <= 1e-6);
        CHECK(std::abs(report->phase_deg - p) <= 1e-6);
        CHECK(report->phase_deg > -180.0);
        CHECK(report->phase_deg <= 180.0);
    }
}

TEST_CASE("0.1 Hz doppler over a 10 ms window biases the phase by half the ramp") {
    // 127 chips at 12.7 kchip/s = exactly 10 ms
    const BasebandSignal ref = spread_reference(7, 1, 1, 12.7e3);
    Scatterer sc = still_target(10.0, 0.0);
    sc.doppler_hz = 0.1;
    Scene scene;
    scene.scatterers = {sc};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
    const auto report = estimate_single_target(received, ref, 0.01, 0.1);
    REQUIRE(report.has_value());
    CHECK(report->doppler_bias_deg == doctest::Approx(0.18).epsilon(1e-12));
    CHECK(std::abs(report->phase_deg - 0.18) <= 0.02);
    // numeric cross-check: mean of the sampled ramp
    CHECK(report->phase_deg == doctest::Approx(360.0 * 0.1 * 126.0 / (2.0 * 12.7e3)).epsilon(1e-6));
    CHECK(std::abs(report->attenuation_db - 10.0) <= 0.01);
}

TEST_CASE("pure-noise input yields a detection failure instead of an estimate") {
    const BasebandSignal ref = spread_reference(7, 1, 4);
    Scatterer ghost = still_target(0.0, 0.0);
    ghost.absent = true;
    Scene scene;
    scene.scatterers = {ghost};
    scene.noise = NoiseSpec{NoiseSpec::Kind::kPower, 1.0};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 99);
    const auto report = estimate_single_target(received, ref, ref.duration_s() / 4.0);
    CHECK_FALSE(report.has_value());
}

TEST_CASE("composite attenuation matches the equal-gain two-target law") {
    CarrierConfig carrier;
    carrier.nominal_wavelength_m = 0.125;
    const BasebandSignal ref = spread_reference();
    for (double d_cm : {0.0, 20.0, 40.0, 134.0, 172.0, 244.0}) {
        const double dphi = placement_phase_raw_deg(d_cm, 12.5);
        Scene scene;
        scene.scatterers = {still_target(10.0, 0.0), still_target(10.0, dphi)};
        const BasebandSignal received = apply_channel(ref, scene, carrier, 1);
        const double measured = measure_composite_attenuation(received, ref);
        const double expected =
            10.0 - 20.0 * std::log10(2.0 * std::abs(std::cos(deg_to_rad(dphi / 2.0))));
        CHECK(measured == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("180 degrees out of phase hits the floor cap") {
    const BasebandSignal ref = spread_reference();
    Scene scene;
    scene.scatterers = {still_target(10.0, 0.0), still_target(10.0, 180.0)};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
    CHECK(measure_composite_attenuation(received, ref) == kDefaultFloorCapDb);
    CHECK(measure_composite_attenuation(received, ref, 150.0) == 150.0);
}

TEST_CASE("interference classification against the 10 dB reference") {
    CHECK(classify_interference(4.006, 10.0).zone == Interference::kAdditive);
    CHECK(classify_interference(27.94, 10.0).zone == Interference::kSubtractive);
    const InterferenceCall tie = classify_interference(10.0, 10.0);
    CHECK(tie.zone == Interference::kAdditive);
    CHECK(tie.boundary);
    CHECK_FALSE(classify_interference(9.99, 10.0).boundary);
    CHECK_THROWS_AS(classify_interference(std::nan(""), 10.0), std::invalid_argument);
}

TEST_CASE("classifier agrees with the equal-gain criterion 2|cos| > 1") {
    for (double dphi = 0.0; dphi <= 360.0; dphi += 1.0) {
        const double envelope = 2.0 * std::abs(std::cos(deg_to_rad(dphi / 2.0)));
        if (envelope == 1.0) continue;  // boundary handled above
        const double composite = 10.0 - 20.0 * std::log10(std::max(envelope, 1e-30));
        const InterferenceCall call = classify_interference(composite, 10.0);
        CHECK((call.zone == Interference::kAdditive) == (envelope > 1.0));
    }
}

TEST_CASE("rake degenerates to the single peak for a one-path channel") {
    const BasebandSignal ref = spread_reference(7, 4, 1);
    Scene scene;
    scene.scatterers = {still_target(10.0, 40.0)};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
    const auto rake = rake_combine(correlate(received, ref), 4, 20.0);
    REQUIRE(rake.has_value());
    CHECK(rake->fingers.size() == 1);
    CHECK(rake->combined_gain == doctest::Approx(0.31622776601683794).epsilon(1e-9));
}

TEST_CASE("two paths a couple of chips apart resolve into two fingers") {
    const BasebandSignal ref = spread_reference(7, 4, 1);
    const double fs = ref.sample_rate_hz;
    // ranges chosen so the delays round to exactly 0 and 8 samples (2 chips)
    const double range_b = 8.0 / fs * kSpeedOfLight;
    Scene scene;
    scene.scatterers = {still_target(10.0, 0.0, 0.0), still_target(10.0, 90.0, range_b)};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
    const CorrelationResult corr = correlate(received, ref);
    const auto rake = rake_combine(corr, 4, 12.0);
    REQUIRE(rake.has_value());
    REQUIRE(rake->fingers.size() == 2);
    CHECK(rake->fingers[0].lag == 0);
    CHECK(rake->fingers[1].lag == 8);

    // oracle: each path alone
    Scene only_a, only_b;
    only_a.scatterers = {scene.scatterers[0]};
    only_b.scatterers = {scene.scatterers[1]};
    const double single_a =
        std::abs(correlate(apply_channel(ref, only_a, kCarrier, 1), ref).peak_value);
    const double single_b =
        std::abs(correlate(apply_channel(ref, only_b, kCarrier, 1), ref).peak_value);
    CHECK(rake->combined_gain == doctest::Approx(single_a + single_b).epsilon(0.02));
    CHECK(rake->combined_gain == doctest::Approx(2.0 * single_a).epsilon(0.02));
}

TEST_CASE("paths closer than a chip merge into one finger") {
    const BasebandSignal ref = spread_reference(7, 4, 1);
    const double fs = ref.sample_rate_hz;
    const double range_b = 1.0 / fs * kSpeedOfLight;  // one sample = quarter chip
    Scene scene;
    scene.scatterers = {still_target(10.0, 0.0, 0.0), still_target(10.0, 60.0, range_b)};
    const BasebandSignal received = apply_channel(ref, scene, kCarrier, 1);
    const auto rake = rake_combine(correlate(received, ref), 4, 6.0);
    REQUIRE(rake.has_value());
    CHECK(rake->fingers.size() == 1);
}

TEST_CASE("an all-zero correlation reports detection failure") {
    const BasebandSignal ref = spread_reference();
    BasebandSignal silent = ref;
    silent.samples.assign(ref.samples.size(), {0.0, 0.0});
    const auto rake = rake_combine(correlate(silent, ref), 4, 20.0);
    CHECK_FALSE(rake.has_value());
}

TEST_CASE("floor cap is reported exactly, never inf or nan") {
    for (double gain : {0.0, 1e-30, 1e-11}) {
        const double att = gain_to_attenuation_db(gain, 200.0);
        CHECK(att == 200.0);
        CHECK(std::isfinite(att));
    }
    CHECK(gain_to_attenuation_db(1e-9, 200.0) == doctest::Approx(180.0).epsilon(1e-12));
}
