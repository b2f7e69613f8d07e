// Scenario-driven experiment commands behind the CLI. Each command reads one
// ScenarioConfig, runs its experiment and writes CSV (and optional SVG)
// artifacts into the configured output directory. Outputs are a pure
// function of (config, seed).

#pragma once

#include <string>

#include "dsradar/scenario.hpp"

namespace dsradar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDetection = 3;
inline constexpr int kExitIo = 4;

// Single-target detection: every scatterer is run as its own single-target
// scene and contributes one row of injected vs measured phase/attenuation.
// Fails with kExitDetection (and writes nothing) if any run has no peak
// above the noise threshold.
int cmd_detect(const ScenarioConfig& config);

// Two-target interference sweep: target 1 fixed, target 2 swept over the
// distance grid, with the displacement applied as placement phase. Emits
// measured vs closed-form attenuation and the zone call per distance.
int cmd_interfere(const ScenarioConfig& config);

// Pairwise zone prediction for grid-placed scatterers: relative distance,
// distance-induced phase, interference classification.
int cmd_geometry(const ScenarioConfig& config);

// Stepped-frequency sweep, range profile and extracted peaks.
int cmd_image(const ScenarioConfig& config);

// Radio contour map over the configured grid.
int cmd_map(const ScenarioConfig& config);

// Full command line: <tool> detect|interfere|geometry|image|map
//   --config <path> [--out <dir>] [--seed <u64>] [--svg]
// Returns the process exit code (0 ok, 2 config, 3 detection, 4 I/O).
int run(int argc, const char* const* argv);

}  // namespace dsradar::cli
