#include "dsradar/commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dsradar/analytic.hpp"
#include "dsradar/csv.hpp"
#include "dsradar/receiver.hpp"
#include "dsradar/svg.hpp"

namespace dsradar::cli {

namespace {

namespace fs = std::filesystem;

BasebandSignal reference_from_code(const CodeConfig& code) {
    const PnCode pn = generate_msequence(code.width, code.taps, code.seed);
    return chips_to_baseband(pn, code.chip_rate_hz, code.samples_per_chip, code.repetitions);
}

std::string zone_string(const InterferenceCall& call) {
    if (call.boundary) return "additive_boundary";
    return call.zone == Interference::kAdditive ? "additive" : "subtractive";
}

double propagation_factor(const Scene& scene) {
    return scene.propagation == Propagation::kTwoWay ? 2.0 : 1.0;
}

// Total channel phase a scatterer imposes: intrinsic plus range-induced.
double injected_phase_deg(const Scatterer& sc, const Scene& scene, const CarrierConfig& carrier) {
    const double raw =
        placement_phase_raw_deg(sc.range_m() * 100.0, carrier.wavelength_m() * 100.0);
    return normalize_phase_deg(sc.phase_deg + propagation_factor(scene) * raw);
}

fs::path prepare_output_dir(const ScenarioConfig& config) {
    fs::path dir(config.output.dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::ios_base::failure("cannot create output directory '" + dir.string() + "'");
    return dir;
}

}  // namespace

int cmd_detect(const ScenarioConfig& config) {
    if (config.scene.scatterers.empty()) {
        throw ConfigError("detect needs at least one scatterer");
    }
    const BasebandSignal reference = reference_from_code(config.code);
    const ReceiverOptions options{config.floor_cap_db, config.detection_min_ratio};

    CsvTable table;
    table.header = {"target_index",       "injected_phase_deg",  "injected_attenuation_db",
                    "measured_phase_deg", "measured_attenuation_db", "predicted_doppler_bias_deg"};

    for (std::size_t i = 0; i < config.scene.scatterers.size(); ++i) {
        const Scatterer& sc = config.scene.scatterers[i];
        Scene single;
        single.scatterers = {sc};
        single.noise = config.scene.noise;
        single.propagation = config.scene.propagation;

        const BasebandSignal received =
            apply_channel(reference, single, config.carrier, config.rng_seed + i);
        const auto report = estimate_single_target(received, reference, config.integration_time_s,
                                                   sc.doppler_hz, options);
        if (!report) {
            std::cerr << "detect: no correlation peak above the noise threshold for target " << i
                      << "\n";
            return kExitDetection;
        }
        table.add_row({std::to_string(i), format_sig6(injected_phase_deg(sc, single, config.carrier)),
                       format_sig6(sc.attenuation_db), format_sig6(report->phase_deg),
                       format_sig6(report->attenuation_db), format_sig6(report->doppler_bias_deg)});
    }

    const fs::path dir = prepare_output_dir(config);
    table.write((dir / "detect.csv").string());
    std::cout << "wrote " << (dir / "detect.csv").string() << "\n";
    return kExitOk;
}

int cmd_interfere(const ScenarioConfig& config) {
    if (config.scene.scatterers.size() != 2) {
        throw ConfigError("interfere needs exactly two scatterers");
    }
    const Scatterer& fixed = config.scene.scatterers[0];
    const Scatterer& moved = config.scene.scatterers[1];
    const double wavelength_cm = config.carrier.wavelength_m() * 100.0;
    const double prop = propagation_factor(config.scene);
    const BasebandSignal reference = reference_from_code(config.code);

    // The swept displacement enters purely as phase; both targets sit at
    // zero delay like the fixed-position measurements they extend.
    const double phi_fixed = injected_phase_deg(fixed, config.scene, config.carrier);
    const double phi_moved_base = injected_phase_deg(moved, config.scene, config.carrier);

    CsvTable table;
    table.header = {"relative_distance_cm", "measured_attenuation_db", "analytic_attenuation_db",
                    "zone"};
    std::vector<double> distances, measured_curve, analytic_curve;

    const int count =
        static_cast<int>(std::floor((config.sweep.d_max_cm - config.sweep.d_min_cm) /
                                        config.sweep.step_cm +
                                    1e-9)) +
        1;
    for (int i = 0; i < count; ++i) {
        const double d_cm = config.sweep.d_min_cm + i * config.sweep.step_cm;
        const double phi_moved = normalize_phase_deg(
            phi_moved_base + prop * placement_phase_raw_deg(d_cm, wavelength_cm));

        Scene scene;
        scene.propagation = config.scene.propagation;
        scene.noise = config.scene.noise;
        Scatterer a = fixed;
        a.placement = 0.0;
        a.phase_deg = phi_fixed;
        Scatterer b = moved;
        b.placement = 0.0;
        b.phase_deg = phi_moved;
        scene.scatterers = {a, b};

        const BasebandSignal received =
            apply_channel(reference, scene, config.carrier, config.rng_seed);
        const double measured =
            measure_composite_attenuation(received, reference, config.floor_cap_db);
        const double analytic = resultant_attenuation_db(
            {fixed.attenuation_db, moved.attenuation_db, phi_fixed, phi_moved},
            config.floor_cap_db);
        const InterferenceCall call = classify_interference(measured, fixed.attenuation_db);

        table.add_row({format_sig6(d_cm), format_sig6(measured), format_sig6(analytic),
                       zone_string(call)});
        distances.push_back(d_cm);
        measured_curve.push_back(measured);
        analytic_curve.push_back(analytic);
    }

    const fs::path dir = prepare_output_dir(config);
    table.write((dir / "interfere.csv").string());
    std::cout << "wrote " << (dir / "interfere.csv").string() << "\n";

    if (config.output.svg) {
        LinePlot plot;
        plot.title = "Resultant attenuation vs relative distance";
        plot.x_label = "relative distance (cm)";
        plot.y_label = "attenuation (dB)";
        plot.series = {{distances, measured_curve, "#1f6fb2"},
                       {distances, analytic_curve, "#27863b"}};
        plot.reference_y = fixed.attenuation_db;
        plot.write((dir / "interfere.svg").string());
        std::cout << "wrote " << (dir / "interfere.svg").string() << "\n";
    }
    return kExitOk;
}

int cmd_geometry(const ScenarioConfig& config) {
    std::vector<std::pair<std::size_t, GridPointFt>> points;
    for (std::size_t i = 0; i < config.scene.scatterers.size(); ++i) {
        const auto& placement = config.scene.scatterers[i].placement;
        if (std::holds_alternative<GridPointFt>(placement)) {
            points.emplace_back(i, std::get<GridPointFt>(placement));
        }
    }
    if (points.size() < 2) {
        throw ConfigError("geometry needs at least two grid-placed scatterers");
    }
    const double wavelength_cm = config.carrier.wavelength_m() * 100.0;

    CsvTable table;
    table.header = {"x1_ft", "y1_ft", "x2_ft", "y2_ft", "distance_cm", "predicted_zone"};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Scatterer& si = config.scene.scatterers[points[i].first];
            const Scatterer& sj = config.scene.scatterers[points[j].first];
            const double d_cm = relative_distance_cm(points[i].second, points[j].second);
            // The pair's interference is set by the distance-induced phase
            // alone; the desired target's own attenuation is the reference.
            const double dphi = placement_phase_raw_deg(d_cm, wavelength_cm);
            const double composite = resultant_attenuation_db(
                {si.attenuation_db, sj.attenuation_db, 0.0, dphi}, config.floor_cap_db);
            const InterferenceCall call = classify_interference(composite, si.attenuation_db);
            table.add_row({format_sig6(points[i].second.x_ft), format_sig6(points[i].second.y_ft),
                           format_sig6(points[j].second.x_ft), format_sig6(points[j].second.y_ft),
                           format_sig6(d_cm), zone_string(call)});
        }
    }

    const fs::path dir = prepare_output_dir(config);
    table.write((dir / "geometry.csv").string());
    std::cout << "wrote " << (dir / "geometry.csv").string() << "\n";
    return kExitOk;
}

int cmd_image(const ScenarioConfig& config) {
    const SweepResponse response = sweep_scene(config.scene, config.plan);
    const RangeProfile profile = range_profile(response, config.window);
    const auto peaks =
        extract_peaks(profile, config.peak_min_separation_bins, config.peak_threshold_db);

    CsvTable profile_table;
    profile_table.header = {"bin_index", "range_m", "magnitude", "db"};
    for (std::size_t b = 0; b < profile.bins.size(); ++b) {
        const double mag = profile.bins[b];
        const double level_db = std::max(
            mag > 0.0 ? 20.0 * std::log10(mag) : -config.floor_cap_db, -config.floor_cap_db);
        profile_table.add_row({std::to_string(b),
                               format_sig6(static_cast<double>(b) * profile.bin_spacing_m),
                               format_sig6(mag), format_sig6(level_db)});
    }

    CsvTable peaks_table;
    peaks_table.header = {"range_m", "attenuation_db"};
    for (const auto& peak : peaks) {
        peaks_table.add_row({format_sig6(peak.range_m), format_sig6(peak.attenuation_db)});
    }

    const fs::path dir = prepare_output_dir(config);
    profile_table.write((dir / "profile.csv").string());
    peaks_table.write((dir / "peaks.csv").string());
    std::cout << "wrote " << (dir / "profile.csv").string() << " and "
              << (dir / "peaks.csv").string() << "\n";

    if (config.output.svg) {
        LinePlot plot;
        plot.title = "Range profile";
        plot.x_label = "range (m)";
        plot.y_label = "magnitude (linear)";
        PlotSeries series;
        for (std::size_t b = 0; b < profile.bins.size(); ++b) {
            series.x.push_back(static_cast<double>(b) * profile.bin_spacing_m);
            series.y.push_back(profile.bins[b]);
        }
        plot.series = {series};
        plot.write((dir / "profile.svg").string());
        std::cout << "wrote " << (dir / "profile.svg").string() << "\n";
    }
    return kExitOk;
}

int cmd_map(const ScenarioConfig& config) {
    Scatterer cell_target;
    cell_target.attenuation_db = 0.0;
    cell_target.doppler_hz = 0.0;
    if (!config.scene.scatterers.empty()) cell_target = config.scene.scatterers[0];

    const ContourMap map =
        generate_contour_map(config.map.grid, cell_target, config.map.model, config.carrier);

    CsvTable table;
    table.header = {"x_ft", "y_ft", "power_dbm"};
    for (std::size_t iy = 0; iy < map.ny(); ++iy) {
        for (std::size_t ix = 0; ix < map.nx(); ++ix) {
            table.add_row({format_sig6(map.x_ft[ix]), format_sig6(map.y_ft[iy]),
                           format_sig6(map.at(ix, iy))});
        }
    }

    const fs::path dir = prepare_output_dir(config);
    table.write((dir / "map.csv").string());
    std::cout << "wrote " << (dir / "map.csv").string() << "\n";
    return kExitOk;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Deterministic DSSS radar simulator"};
    app.require_subcommand(1);

    struct SubArgs {
        std::string config_path;
        std::string out_dir;
        std::uint64_t seed = 0;
        bool svg = false;
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"detect", "single-target detection (phase / attenuation estimates)"},
        {"interfere", "two-target interference sweep over relative distance"},
        {"geometry", "zone prediction for grid-placed targets"},
        {"image", "stepped-frequency sweep and 1D range profile"},
        {"map", "radio contour map of the area in front of the radar"},
    };
    std::map<std::string, SubArgs> args;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        SubArgs& a = args[name];
        sub->add_option("--config", a.config_path, "scenario config file")->required();
        sub->add_option("--out", a.out_dir, "override the output directory");
        sub->add_option("--seed", a.seed, "override rng_seed");
        sub->add_flag("--svg", a.svg, "also emit SVG plots");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const SubArgs& a = args[name];

    try {
        ScenarioConfig config = load_scenario(a.config_path);
        if (!a.out_dir.empty()) config.output.dir = a.out_dir;
        if (sub->count("--seed") > 0) config.rng_seed = a.seed;
        if (a.svg) config.output.svg = true;

        if (name == "detect") return cmd_detect(config);
        if (name == "interfere") return cmd_interfere(config);
        if (name == "geometry") return cmd_geometry(config);
        if (name == "image") return cmd_image(config);
        if (name == "map") return cmd_map(config);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace dsradar::cli
