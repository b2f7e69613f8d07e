#include "dsradar/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dsradar {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& text, int line) {
    const std::string t = trim(text);
    if (t.empty()) fail(line, "empty numeric value");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &consumed);
    } catch (const std::exception&) {
        fail(line, "not a number: '" + t + "'");
    }
    if (consumed != t.size()) fail(line, "trailing characters in number: '" + t + "'");
    return value;
}

long long parse_int(const std::string& text, int line) {
    const std::string t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        fail(line, "not an integer: '" + t + "'");
    }
    return value;
}

bool parse_bool(const std::string& text, int line) {
    const std::string t = trim(text);
    if (t == "1" || t == "true" || t == "yes") return true;
    if (t == "0" || t == "false" || t == "no") return false;
    fail(line, "not a boolean: '" + t + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

Scatterer parse_scatterer(const std::string& value, int line) {
    Scatterer sc;
    bool have_atten = false;
    bool have_placement = false;

    std::stringstream ss(value);
    std::string token;
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) fail(line, "scatterer token '" + token + "' needs key=value");
        const std::string key = token.substr(0, eq);
        const std::string val = token.substr(eq + 1);
        if (key == "atten_db") {
            sc.attenuation_db = parse_double(val, line);
            have_atten = true;
        } else if (key == "phase_deg") {
            sc.phase_deg = normalize_phase_deg(parse_double(val, line));
        } else if (key == "doppler_hz") {
            sc.doppler_hz = parse_double(val, line);
        } else if (key == "range_m") {
            if (have_placement) fail(line, "scatterer has more than one placement");
            sc.placement = parse_double(val, line);
            have_placement = true;
        } else if (key == "grid_ft") {
            if (have_placement) fail(line, "scatterer has more than one placement");
            const auto coords = split(val, ',');
            if (coords.size() != 2) fail(line, "grid_ft needs x,y");
            sc.placement = GridPointFt{parse_double(coords[0], line), parse_double(coords[1], line)};
            have_placement = true;
        } else if (key == "absent") {
            sc.absent = parse_bool(val, line);
        } else {
            fail(line, "unknown scatterer key '" + key + "'");
        }
    }
    if (!have_atten) fail(line, "scatterer needs atten_db");
    if (sc.attenuation_db < 0.0) fail(line, "atten_db must be >= 0");
    if (std::holds_alternative<double>(sc.placement) && std::get<double>(sc.placement) < 0.0) {
        fail(line, "range_m must be >= 0");
    }
    return sc;
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& in) {
    ScenarioConfig cfg;
    std::string section;
    std::string raw;
    int line = 0;

    double plan_start = cfg.plan.start_hz;
    double plan_bandwidth = cfg.plan.bandwidth_hz();
    int plan_steps = cfg.plan.steps;

    while (std::getline(in, raw)) {
        ++line;
        const auto comment = raw.find_first_of("#;");
        std::string text = trim(comment == std::string::npos ? raw : raw.substr(0, comment));
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text.back() != ']') fail(line, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (section != "carrier" && section != "code" && section != "scene" &&
                section != "noise" && section != "plan" && section != "sweep" &&
                section != "map" && section != "output") {
                fail(line, "unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");

        if (section.empty()) {
            if (key == "rng_seed") {
                const long long v = parse_int(value, line);
                if (v < 0) fail(line, "rng_seed must be >= 0");
                cfg.rng_seed = static_cast<std::uint64_t>(v);
            } else if (key == "floor_cap_db") {
                cfg.floor_cap_db = parse_double(value, line);
                if (!(cfg.floor_cap_db > 0.0)) fail(line, "floor_cap_db must be positive");
            } else if (key == "integration_time_s") {
                cfg.integration_time_s = parse_double(value, line);
                if (!(cfg.integration_time_s > 0.0)) fail(line, "integration time must be positive");
            } else if (key == "detection_min_ratio") {
                cfg.detection_min_ratio = parse_double(value, line);
                if (!(cfg.detection_min_ratio >= 1.0)) fail(line, "detection ratio must be >= 1");
            } else {
                fail(line, "unknown top-level key '" + key + "'");
            }
        } else if (section == "carrier") {
            if (key == "carrier_hz") {
                cfg.carrier.carrier_hz = parse_double(value, line);
                if (!(cfg.carrier.carrier_hz > 0.0)) fail(line, "carrier must be positive");
            } else if (key == "nominal_wavelength_cm") {
                const double cm = parse_double(value, line);
                if (!(cm > 0.0)) fail(line, "wavelength must be positive");
                cfg.carrier.nominal_wavelength_m = cm / 100.0;
            } else {
                fail(line, "unknown [carrier] key '" + key + "'");
            }
        } else if (section == "code") {
            if (key == "width") {
                cfg.code.width = static_cast<int>(parse_int(value, line));
            } else if (key == "taps") {
                cfg.code.taps.clear();
                for (const auto& part : split(value, ',')) {
                    cfg.code.taps.push_back(static_cast<int>(parse_int(part, line)));
                }
            } else if (key == "seed") {
                const long long v = parse_int(value, line);
                if (v <= 0) fail(line, "code seed must be positive");
                cfg.code.seed = static_cast<std::uint32_t>(v);
            } else if (key == "chip_rate_hz") {
                cfg.code.chip_rate_hz = parse_double(value, line);
            } else if (key == "samples_per_chip") {
                cfg.code.samples_per_chip = static_cast<int>(parse_int(value, line));
            } else if (key == "repetitions") {
                cfg.code.repetitions = static_cast<int>(parse_int(value, line));
            } else {
                fail(line, "unknown [code] key '" + key + "'");
            }
        } else if (section == "scene") {
            if (key == "propagation") {
                if (value == "one_way") {
                    cfg.scene.propagation = Propagation::kOneWay;
                } else if (value == "two_way") {
                    cfg.scene.propagation = Propagation::kTwoWay;
                } else {
                    fail(line, "propagation must be one_way or two_way");
                }
            } else if (key == "scatterer") {
                cfg.scene.scatterers.push_back(parse_scatterer(value, line));
            } else {
                fail(line, "unknown [scene] key '" + key + "'");
            }
        } else if (section == "noise") {
            if (key == "snr_db") {
                cfg.scene.noise = NoiseSpec{NoiseSpec::Kind::kSnrDb, parse_double(value, line)};
            } else if (key == "power") {
                const double p = parse_double(value, line);
                if (!(p >= 0.0)) fail(line, "noise power must be >= 0");
                cfg.scene.noise = NoiseSpec{NoiseSpec::Kind::kPower, p};
            } else {
                fail(line, "unknown [noise] key '" + key + "'");
            }
        } else if (section == "plan") {
            if (key == "start_hz") {
                plan_start = parse_double(value, line);
            } else if (key == "bandwidth_hz") {
                plan_bandwidth = parse_double(value, line);
            } else if (key == "steps") {
                plan_steps = static_cast<int>(parse_int(value, line));
            } else if (key == "window") {
                if (value == "rectangular") {
                    cfg.window = Window::kRectangular;
                } else if (value == "hann") {
                    cfg.window = Window::kHann;
                } else {
                    fail(line, "window must be rectangular or hann");
                }
            } else if (key == "peak_min_separation_bins") {
                cfg.peak_min_separation_bins = static_cast<int>(parse_int(value, line));
                if (cfg.peak_min_separation_bins < 0) fail(line, "separation must be >= 0");
            } else if (key == "peak_threshold_db") {
                cfg.peak_threshold_db = parse_double(value, line);
                if (!(cfg.peak_threshold_db > 0.0)) fail(line, "threshold must be positive");
            } else {
                fail(line, "unknown [plan] key '" + key + "'");
            }
        } else if (section == "sweep") {
            if (key == "d_min_cm") {
                cfg.sweep.d_min_cm = parse_double(value, line);
            } else if (key == "d_max_cm") {
                cfg.sweep.d_max_cm = parse_double(value, line);
            } else if (key == "step_cm") {
                cfg.sweep.step_cm = parse_double(value, line);
            } else {
                fail(line, "unknown [sweep] key '" + key + "'");
            }
        } else if (section == "map") {
            if (key == "x_min_ft") {
                cfg.map.grid.x_min_ft = parse_double(value, line);
            } else if (key == "x_max_ft") {
                cfg.map.grid.x_max_ft = parse_double(value, line);
            } else if (key == "y_min_ft") {
                cfg.map.grid.y_min_ft = parse_double(value, line);
            } else if (key == "y_max_ft") {
                cfg.map.grid.y_max_ft = parse_double(value, line);
            } else if (key == "cell_ft") {
                cfg.map.grid.cell_ft = parse_double(value, line);
            } else if (key == "path_exponent") {
                cfg.map.model.exponent = parse_double(value, line);
            } else if (key == "ref_power_dbm") {
                cfg.map.model.reference_dbm = parse_double(value, line);
            } else if (key == "ref_distance_ft") {
                cfg.map.model.reference_distance_ft = parse_double(value, line);
            } else if (key == "floor_dbm") {
                cfg.map.model.floor_dbm = parse_double(value, line);
            } else {
                fail(line, "unknown [map] key '" + key + "'");
            }
        } else if (section == "output") {
            if (key == "dir") {
                if (value.empty()) fail(line, "output dir must not be empty");
                cfg.output.dir = value;
            } else if (key == "svg") {
                cfg.output.svg = parse_bool(value, line);
            } else {
                fail(line, "unknown [output] key '" + key + "'");
            }
        }
    }

    // Cross-field validation happens once the whole file is read.
    try {
        cfg.plan = make_frequency_plan(plan_start, plan_bandwidth, plan_steps);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid [plan]: ") + e.what());
    }
    if (cfg.code.width < 2 || cfg.code.width > 16) {
        throw ConfigError("code width must lie in 2..16");
    }
    if (!is_known_primitive(cfg.code.width, cfg.code.taps)) {
        throw ConfigError("code taps " + polynomial_string(cfg.code.taps) +
                          " are not a known primitive polynomial for width " +
                          std::to_string(cfg.code.width));
    }
    if (!(cfg.code.chip_rate_hz > 0.0)) throw ConfigError("chip rate must be positive");
    if (cfg.code.samples_per_chip < 1) throw ConfigError("samples_per_chip must be >= 1");
    if (cfg.code.repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (!(cfg.sweep.step_cm > 0.0)) throw ConfigError("sweep step must be positive");
    if (cfg.sweep.d_max_cm < cfg.sweep.d_min_cm) throw ConfigError("sweep range is empty");
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_scenario(in);
}

}  // namespace dsradar
