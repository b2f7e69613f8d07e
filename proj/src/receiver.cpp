#include "dsradar/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsradar {

namespace {

double median_magnitude(const std::vector<std::complex<double>>& values) {
    std::vector<double> mags(values.size());
    std::transform(values.begin(), values.end(), mags.begin(),
                   [](const std::complex<double>& v) { return std::abs(v); });
    const std::size_t mid = mags.size() / 2;
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid), mags.end());
    return mags[mid];
}

CorrelationResult correlate_window(const BasebandSignal& received,
                                   const BasebandSignal& reference, std::size_t ref_len) {
    if (reference.samples.empty() || ref_len == 0) {
        throw std::invalid_argument("empty reference");
    }
    if (received.samples.empty()) throw std::invalid_argument("empty received signal");
    if (received.sample_rate_hz != reference.sample_rate_hz) {
        throw std::invalid_argument("received and reference sample rates differ");
    }
    ref_len = std::min(ref_len, reference.samples.size());

    double ref_energy = 0.0;
    for (std::size_t i = 0; i < ref_len; ++i) ref_energy += std::norm(reference.samples[i]);
    if (!(ref_energy > 0.0)) throw std::invalid_argument("reference has zero energy");

    const std::size_t n_recv = received.samples.size();
    CorrelationResult result;
    result.lags.resize(n_recv);
    result.values.resize(n_recv);

    double best_mag = -1.0;
    for (std::size_t lag = 0; lag < n_recv; ++lag) {
        const std::size_t overlap = std::min(ref_len, n_recv - lag);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < overlap; ++i) {
            acc += received.samples[lag + i] * std::conj(reference.samples[i]);
        }
        acc /= ref_energy;
        result.lags[lag] = static_cast<int>(lag);
        result.values[lag] = acc;
        const double mag = std::abs(acc);
        if (mag > best_mag) {
            best_mag = mag;
            result.peak_lag = static_cast<int>(lag);
            result.peak_value = acc;
        }
    }
    return result;
}

}  // namespace

CorrelationResult correlate(const BasebandSignal& received, const BasebandSignal& reference) {
    return correlate_window(received, reference, reference.samples.size());
}

std::optional<EstimateReport> estimate_single_target(const BasebandSignal& received,
                                                     const BasebandSignal& reference,
                                                     double integration_time_s,
                                                     double known_doppler_hz,
                                                     const ReceiverOptions& options) {
    if (!(integration_time_s > 0.0)) {
        throw std::invalid_argument("integration time must be positive");
    }
    const double fs = reference.sample_rate_hz;
    const auto window = static_cast<std::size_t>(std::llround(integration_time_s * fs));
    if (window < 1 || window > reference.samples.size() || window > received.samples.size()) {
        throw std::invalid_argument("integration time exceeds the signal duration");
    }

    const CorrelationResult corr = correlate_window(received, reference, window);
    const double peak_mag = std::abs(corr.peak_value);
    const double floor = median_magnitude(corr.values);
    if (!(peak_mag > 0.0) || peak_mag < options.min_peak_to_floor * floor) {
        return std::nullopt;  // nothing rises above the correlation noise
    }

    EstimateReport report;
    report.attenuation_db = gain_to_attenuation_db(peak_mag, options.floor_cap_db);
    report.phase_deg = normalize_phase_deg(rad_to_deg(std::arg(corr.peak_value)));
    report.doppler_bias_deg = 360.0 * known_doppler_hz * integration_time_s / 2.0;
    report.n_fingers_used = 1;
    return report;
}

double measure_composite_attenuation(const BasebandSignal& received,
                                     const BasebandSignal& reference, double floor_cap_db) {
    const CorrelationResult corr = correlate(received, reference);
    return gain_to_attenuation_db(std::abs(corr.peak_value), floor_cap_db);
}

InterferenceCall classify_interference(double composite_db, double single_target_db) {
    if (!std::isfinite(composite_db) || !std::isfinite(single_target_db)) {
        throw std::invalid_argument("attenuations must be finite");
    }
    InterferenceCall call;
    if (composite_db < single_target_db) {
        call.zone = Interference::kAdditive;
    } else if (composite_db > single_target_db) {
        call.zone = Interference::kSubtractive;
    } else {
        call.zone = Interference::kAdditive;  // documented tie-break
        call.boundary = true;
    }
    return call;
}

std::optional<RakeResult> rake_combine(const CorrelationResult& corr, int max_fingers,
                                       double relative_threshold_db, double floor_cap_db) {
    if (max_fingers < 1) throw std::invalid_argument("max_fingers must be >= 1");
    if (corr.values.empty()) throw std::invalid_argument("empty correlation");

    const double peak_mag = std::abs(corr.peak_value);
    if (!(peak_mag > std::pow(10.0, -floor_cap_db / 20.0))) {
        return std::nullopt;  // nothing to lock onto
    }
    const double threshold = peak_mag * std::pow(10.0, -relative_threshold_db / 20.0);

    // Local maxima with plateau handling: strictly above the left neighbor,
    // at least the right neighbor, so a flat run yields exactly one finger.
    std::vector<RakeFinger> candidates;
    const std::size_t n = corr.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double mag = std::abs(corr.values[i]);
        if (mag < threshold) continue;
        const double left = i > 0 ? std::abs(corr.values[i - 1]) : -1.0;
        const double right = i + 1 < n ? std::abs(corr.values[i + 1]) : -1.0;
        if (mag > left && mag >= right) {
            candidates.push_back({corr.lags[i], corr.values[i]});
        }
    }
    if (candidates.empty()) return std::nullopt;

    std::sort(candidates.begin(), candidates.end(), [](const RakeFinger& a, const RakeFinger& b) {
        const double ma = std::abs(a.value), mb = std::abs(b.value);
        if (ma != mb) return ma > mb;
        return a.lag < b.lag;
    });
    if (static_cast<int>(candidates.size()) > max_fingers) {
        candidates.resize(static_cast<std::size_t>(max_fingers));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const RakeFinger& a, const RakeFinger& b) { return a.lag < b.lag; });

    RakeResult result;
    result.fingers = std::move(candidates);
    for (const auto& finger : result.fingers) result.combined_gain += std::abs(finger.value);
    return result;
}

}  // namespace dsradar
