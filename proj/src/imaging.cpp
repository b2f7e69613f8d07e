#include "dsradar/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dsradar {

SweepResponse sweep_scene(const Scene& scene, const FrequencyPlan& plan) {
    if (scene.scatterers.empty()) throw std::invalid_argument("scene has no scatterers");
    if (plan.steps < 2 || !(plan.step_hz > 0.0)) throw std::invalid_argument("invalid plan");

    const double prop = scene.propagation == Propagation::kTwoWay ? 2.0 : 1.0;

    struct Path {
        std::complex<double> gain;
        double delay_s;
    };
    std::vector<Path> paths;
    paths.reserve(scene.scatterers.size());
    for (std::size_t k = 0; k < scene.scatterers.size(); ++k) {
        const Scatterer& sc = scene.scatterers[k];
        if (sc.absent) continue;
        if (!std::holds_alternative<double>(sc.placement)) {
            throw std::invalid_argument("scatterer " + std::to_string(k) +
                                        " needs a direct range for a frequency sweep");
        }
        const double phi = deg_to_rad(sc.phase_deg);
        paths.push_back({sc.gain() * std::complex<double>(std::cos(phi), std::sin(phi)),
                         prop * sc.range_m() / kSpeedOfLight});
    }

    SweepResponse response;
    response.plan = plan;
    response.samples.resize(static_cast<std::size_t>(plan.steps));
    for (int n = 0; n < plan.steps; ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (const Path& p : paths) {
            // Phase of the n-th step relative to the first, kept modular so
            // large range/step products do not lose precision.
            const double cycles = std::fmod(n * plan.step_hz * p.delay_s, 1.0);
            const double angle = -2.0 * kPi * cycles;
            acc += p.gain * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        response.samples[static_cast<std::size_t>(n)] = acc;
    }
    return response;
}

RangeProfile range_profile(const SweepResponse& response, Window window) {
    const std::size_t n = response.samples.size();
    if (n == 0) throw std::invalid_argument("empty sweep response");

    std::vector<double> weights(n, 1.0);
    if (window == Window::kHann) {
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) /
                                              static_cast<double>(n));
        }
    }
    double weight_mean = 0.0;
    for (double w : weights) weight_mean += w;
    weight_mean /= static_cast<double>(n);

    std::vector<std::complex<double>> windowed(n);
    for (std::size_t i = 0; i < n; ++i) windowed[i] = response.samples[i] * weights[i];

    RangeProfile profile;
    profile.bin_spacing_m = response.plan.bin_spacing_m();
    profile.window = window;
    profile.bins.resize(n);
    // Direct IDFT; the scale 1/(n * mean window gain) puts an on-bin
    // scatterer's linear gain straight into its bin.
    const double scale = 1.0 / (static_cast<double>(n) * weight_mean);
    for (std::size_t b = 0; b < n; ++b) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            const double angle = 2.0 * kPi * static_cast<double>(b) * static_cast<double>(i) /
                                 static_cast<double>(n);
            acc += windowed[i] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        profile.bins[b] = std::abs(acc) * scale;
    }
    return profile;
}

std::vector<RangePeak> extract_peaks(const RangeProfile& profile, int min_separation_bins,
                                     double relative_threshold_db) {
    if (profile.bins.empty()) throw std::invalid_argument("empty profile");
    if (min_separation_bins < 0) throw std::invalid_argument("min separation must be >= 0");

    const std::size_t n = profile.bins.size();
    const double global_max = *std::max_element(profile.bins.begin(), profile.bins.end());
    if (!(global_max > 0.0)) return {};
    const double threshold = global_max * std::pow(10.0, -relative_threshold_db / 20.0);

    // The profile is circular (ranges alias modulo the unambiguous range), so
    // neighbors wrap.
    std::vector<std::size_t> maxima;
    for (std::size_t b = 0; b < n; ++b) {
        const double mag = profile.bins[b];
        if (mag < threshold) continue;
        const double left = profile.bins[(b + n - 1) % n];
        const double right = profile.bins[(b + 1) % n];
        if (mag > left && mag >= right) maxima.push_back(b);
    }

    std::sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) {
        if (profile.bins[a] != profile.bins[b]) return profile.bins[a] > profile.bins[b];
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t candidate : maxima) {
        const bool shadowed = std::any_of(kept.begin(), kept.end(), [&](std::size_t winner) {
            const std::size_t direct =
                candidate > winner ? candidate - winner : winner - candidate;
            const std::size_t circular = std::min(direct, n - direct);
            return circular <= static_cast<std::size_t>(min_separation_bins);
        });
        if (!shadowed) kept.push_back(candidate);
    }
    std::sort(kept.begin(), kept.end());

    std::vector<RangePeak> peaks;
    peaks.reserve(kept.size());
    for (std::size_t b : kept) {
        RangePeak peak;
        peak.range_m = static_cast<double>(b) * profile.bin_spacing_m;
        peak.magnitude = profile.bins[b];
        peak.attenuation_db = gain_to_attenuation_db(peak.magnitude);
        peaks.push_back(peak);
    }
    return peaks;
}

}  // namespace dsradar
