// Stepped-frequency sweep and the 1D range profile that separates co-channel
// targets. The sweep records the scene's composite complex gain at each
// carrier step; the inverse transform turns phase slope across steps into
// range. Phases are referenced to the first step, so profiles do not depend
// on the absolute carrier.

#pragma once

#include <complex>
#include <vector>

#include "dsradar/scene.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

struct SweepResponse {
    FrequencyPlan plan;
    std::vector<std::complex<double>> samples;  // one complex gain per step
};

enum class Window { kRectangular, kHann };

struct RangeProfile {
    std::vector<double> bins;  // linear magnitude; bin b covers range b * bin_spacing_m
    double bin_spacing_m = 0.0;
    Window window = Window::kRectangular;
};

// samples[n] = sum_k g_k * exp(j*phi_k) * exp(-j*2*pi*n*step_hz*tau_k) with
// tau_k the scene-convention delay (d/c one-way, 2d/c two-way) and phi_k the
// scatterer's intrinsic phase. Every scatterer must carry a direct range.
SweepResponse sweep_scene(const Scene& scene, const FrequencyPlan& plan);

// bins = |IDFT(window . samples)|, scaled so a unit-gain scatterer exactly on
// a bin reads its linear gain under the rectangular window.
RangeProfile range_profile(const SweepResponse& response, Window window = Window::kRectangular);

struct RangePeak {
    double range_m = 0.0;
    double magnitude = 0.0;       // linear
    double attenuation_db = 0.0;  // -20*log10(magnitude), floor-capped
};

// Circular local maxima above (global peak - relative_threshold_db), with
// weaker maxima inside min_separation_bins of a stronger one suppressed.
// Sorted by range; empty for an all-zero profile.
std::vector<RangePeak> extract_peaks(const RangeProfile& profile, int min_separation_bins,
                                     double relative_threshold_db);

}  // namespace dsradar
