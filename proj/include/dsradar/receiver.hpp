// Correlation receiver: despread against the reference waveform, read the
// channel's composite complex gain off the peak, combine multipath fingers.
// Correlations are normalized by reference energy so a unit-gain zero-delay
// channel reads exactly 1+0j at the peak.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dsradar/units.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

struct CorrelationResult {
    std::vector<int> lags;                      // 0 .. len(received)-1
    std::vector<std::complex<double>> values;   // per-lag correlation / E_ref
    int peak_lag = 0;
    std::complex<double> peak_value{0.0, 0.0};  // == values[peak_lag]
};

// values[l] = (1/E_ref) * sum_n received[n+l] * conj(reference[n]) over the
// overlap, E_ref = sum |reference|^2. Both signals must share a sample rate.
CorrelationResult correlate(const BasebandSignal& received, const BasebandSignal& reference);

struct EstimateReport {
    double attenuation_db = 0.0;   // -20*log10|peak|, floor-capped
    double phase_deg = 0.0;        // (-180, 180]
    double doppler_bias_deg = 0.0; // predicted mean-ramp bias 360*f_d*T/2
    int n_fingers_used = 1;
};

struct ReceiverOptions {
    double floor_cap_db = kDefaultFloorCapDb;
    // Peak magnitude must exceed this multiple of the median correlation
    // magnitude to count as a detection.
    double min_peak_to_floor = 6.0;
};

// Estimates the target's (attenuation, phase) from the correlation peak over
// the first integration_time_s of the reference. Under a Doppler shift f_d
// the correlator integrates a linear phase ramp, so the reported phase picks
// up the ramp's mean, 360*f_d*T/2 degrees; known_doppler_hz documents that
// prediction in the report. Returns nullopt when no peak clears the noise
// threshold.
std::optional<EstimateReport> estimate_single_target(const BasebandSignal& received,
                                                     const BasebandSignal& reference,
                                                     double integration_time_s,
                                                     double known_doppler_hz = 0.0,
                                                     const ReceiverOptions& options = {});

// Composite attenuation of whatever channel produced `received`:
// -20*log10|peak_value|, floor-capped.
double measure_composite_attenuation(const BasebandSignal& received,
                                     const BasebandSignal& reference,
                                     double floor_cap_db = kDefaultFloorCapDb);

enum class Interference { kAdditive, kSubtractive };

struct InterferenceCall {
    Interference zone = Interference::kAdditive;
    bool boundary = false;  // composite exactly equals the single-target level
};

// Additive when the composite attenuation is below the single-target level,
// subtractive when above; exact equality reports Additive with the boundary
// flag set.
InterferenceCall classify_interference(double composite_db, double single_target_db);

struct RakeFinger {
    int lag = 0;
    std::complex<double> value{0.0, 0.0};
};

struct RakeResult {
    double combined_gain = 0.0;  // sum of finger magnitudes (maximal-ratio style)
    std::vector<RakeFinger> fingers;
};

// Picks up to max_fingers local maxima of |values| within
// relative_threshold_db of the global peak, aligns each by its own conjugate
// phase and sums magnitudes. Paths closer than one chip merge into a single
// finger. Returns nullopt when the strongest peak is indistinguishable from
// zero.
std::optional<RakeResult> rake_combine(const CorrelationResult& corr, int max_fingers,
                                       double relative_threshold_db,
                                       double floor_cap_db = kDefaultFloorCapDb);

}  // namespace dsradar
