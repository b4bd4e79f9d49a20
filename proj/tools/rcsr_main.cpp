// SPDX-License-Identifier: Apache-2.0
//
// rcsr-toolkit: modulated metasurfaces for wideband radar cross section reduction
// Copyright (C) 2026 rcsr-toolkit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line frontend: cell-sweep, optimize, layout, rcs.

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rcsr/config.hpp>
#include <rcsr/errors.hpp>
#include <rcsr/exportio.hpp>
#include <rcsr/version.hpp>

namespace fs = std::filesystem;

namespace {

struct GlobalArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
};

std::string utc_now_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return std::string(buf);
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

rcsr::RunConfig load_config(const GlobalArgs &g) {
    rcsr::RunConfig cfg =
        g.config_path.empty() ? rcsr::default_run_config() : rcsr::load_run_config(g.config_path);
    if (g.seed) {
        cfg.ga.rng_seed = *g.seed;
        rcsr::validate(cfg);
    }
    return cfg;
}

fs::path prepare_out_dir(const GlobalArgs &g) {
    fs::path dir(g.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw rcsr::io_error("cannot create output directory " + dir.string() + ": " +
                             ec.message());
    return dir;
}

rcsr::RunManifest base_manifest(const GlobalArgs &g, const rcsr::RunConfig &cfg,
                                const std::string &command) {
    rcsr::RunManifest m;
    m.tool_version = rcsr::kVersion;
    m.command = command;
    m.seed = cfg.ga.rng_seed;
    m.config_echo_json = rcsr::config_to_json(cfg);
    m.timestamp_utc = utc_now_iso8601();
    if (!g.config_path.empty())
        m.input_hashes[g.config_path] = rcsr::fnv1a_file_hex(g.config_path);
    if (cfg.phase_table)
        m.input_hashes[cfg.phase_table->string()] = rcsr::fnv1a_file_hex(*cfg.phase_table);
    return m;
}

// Sinusoid field for the configured grid, assignment from explicit weights.
rcsr::SurfaceLayout build_layout(const rcsr::RunConfig &cfg, const rcsr::WeightVector &weights) {
    const auto field = rcsr::sinusoid_field(cfg.rows, cfg.cols, cfg.palette[0].period_mm,
                                            cfg.modulation);
    return rcsr::assign_types(field, cfg.rows, cfg.cols, weights, cfg.palette, cfg.margin_mm);
}

int run_cell_sweep(const GlobalArgs &g, const rcsr::RunConfig &cfg, int type_index, bool all) {
    const fs::path dir = prepare_out_dir(g);
    rcsr::RunManifest manifest = base_manifest(g, cfg, "cell-sweep");

    const int n = static_cast<int>(cfg.palette.size());
    std::vector<int> selection;
    if (all) {
        for (int i = 0; i < n; ++i)
            selection.push_back(i);
    } else {
        if (type_index < 0 || type_index >= n)
            throw rcsr::validation_error("unknown type " + std::to_string(type_index) +
                                         "; palette has types 0.." + std::to_string(n - 1));
        selection.push_back(type_index);
    }

    for (int t : selection) {
        const rcsr::UnitCellSpec &cell = cfg.palette[static_cast<std::size_t>(t)];
        rcsr::PhaseTable table;
        table.type_ids = {t};
        table.freqs_GHz = cfg.grid.frequencies();
        table.gamma.reserve(table.freqs_GHz.size());
        for (double f : table.freqs_GHz)
            table.gamma.push_back(rcsr::reflection(cell, f, cfg.incidence).gamma);

        const fs::path csv = dir / ("cell_type_" + std::to_string(t) + ".csv");
        rcsr::write_phase_table(table, csv);
        manifest.artifacts.push_back(csv.filename().string());

        // Locate a smooth +/- phase descent between grid samples, then
        // refine. A jump of 180 degrees or more is the wrap at the slab
        // resonance pole, not a zero crossing.
        std::optional<double> f0;
        for (std::size_t i = 0; i + 1 < table.freqs_GHz.size(); ++i) {
            const double p0 = rcsr::ReflectionSample{0.0, table.gamma[i]}.phase_deg();
            const double p1 = rcsr::ReflectionSample{0.0, table.gamma[i + 1]}.phase_deg();
            if (p0 > 0.0 && p1 < 0.0 && (p0 - p1) < 180.0) {
                f0 = rcsr::resonance_frequency(cell, cfg.incidence, table.freqs_GHz[i],
                                               table.freqs_GHz[i + 1]);
                break;
            }
        }
        if (f0)
            std::cout << "type " << t << " (g=" << fmt6(cell.gap_mm) << " mm): resonance "
                      << fmt6(*f0) << " GHz\n";
        else
            std::cout << "type " << t << " (g=" << fmt6(cell.gap_mm)
                      << " mm): no zero-phase resonance in [" << fmt6(cfg.grid.f_start_GHz)
                      << ", " << fmt6(cfg.grid.f_stop_GHz) << "] GHz\n";
    }

    rcsr::write_manifest(manifest, dir / "manifest.json");
    return 0;
}

int run_optimize(const GlobalArgs &g, const rcsr::RunConfig &cfg, const std::string &objective) {
    if (cfg.palette.size() < 2)
        throw rcsr::validation_error("optimize needs a palette with at least 2 types");

    const fs::path dir = prepare_out_dir(g);
    rcsr::RunManifest manifest = base_manifest(g, cfg, "optimize");

    const auto provider = rcsr::make_provider(cfg);
    const auto kind = objective == "bandwidth" ? rcsr::SpectrumObjective::Kind::Bandwidth
                                               : rcsr::SpectrumObjective::Kind::WorstCase;
    const rcsr::SpectrumObjective fitness(*provider, cfg.grid, cfg.incidence, kind,
                                          cfg.band_lo_GHz, cfg.band_hi_GHz, cfg.threshold_dB);

    const int n = static_cast<int>(cfg.palette.size());
    rcsr::GaResult result = rcsr::ga_optimize(std::cref(fitness), n, cfg.n_total, cfg.ga);

    // Even-split baseline for the report.
    rcsr::Rng baseline_rng(cfg.ga.rng_seed);
    const rcsr::WeightVector uniform = rcsr::repair(
        std::vector<long long>(static_cast<std::size_t>(n), cfg.n_total / n), cfg.n_total,
        baseline_rng, cfg.ga.min_count);
    const double uniform_fitness = fitness(uniform);

    const fs::path report = dir / "ga_report.json";
    rcsr::write_ga_report_json(result, cfg.ga, objective, uniform_fitness, report);
    manifest.artifacts.push_back(report.filename().string());
    rcsr::write_manifest(manifest, dir / "manifest.json");

    std::cout << "objective " << objective << ", seed " << cfg.ga.rng_seed << "\n";
    std::cout << "best fitness " << fmt6(result.best_fitness) << " (uniform baseline "
              << fmt6(uniform_fitness) << ")\n";
    std::cout << "best weights:";
    for (int c : result.best.counts)
        std::cout << " " << c;
    std::cout << "\n";
    return 0;
}

int run_layout(const GlobalArgs &g, const rcsr::RunConfig &cfg, const std::string &weights_path) {
    const fs::path dir = prepare_out_dir(g);
    rcsr::RunManifest manifest = base_manifest(g, cfg, "layout");

    const rcsr::WeightVector weights = rcsr::read_weights_json(weights_path);
    manifest.input_hashes[weights_path] = rcsr::fnv1a_file_hex(weights_path);

    if (weights.counts.size() != cfg.palette.size())
        throw rcsr::validation_error("weights file has " +
                                     std::to_string(weights.counts.size()) +
                                     " entries but the palette has " +
                                     std::to_string(cfg.palette.size()) + " types");
    if (weights.total() != cfg.n_total)
        throw rcsr::validation_error("weights sum to " + std::to_string(weights.total()) +
                                     " but the " + std::to_string(cfg.rows) + "x" +
                                     std::to_string(cfg.cols) + " grid needs exactly " +
                                     std::to_string(cfg.n_total) + " cells (difference " +
                                     std::to_string(cfg.n_total - weights.total()) + ")");

    const rcsr::SurfaceLayout layout = build_layout(cfg, weights);

    const fs::path json_path = dir / "layout.json";
    const fs::path svg_path = dir / "layout.svg";
    rcsr::write_layout_json(layout, json_path);
    rcsr::write_layout_svg(layout, svg_path);
    manifest.artifacts.push_back(json_path.filename().string());
    manifest.artifacts.push_back(svg_path.filename().string());
    rcsr::write_manifest(manifest, dir / "manifest.json");

    const rcsr::WeightVector hist = rcsr::layout_histogram(layout);
    std::cout << "layout " << cfg.rows << "x" << cfg.cols << ", histogram:";
    for (int c : hist.counts)
        std::cout << " " << c;
    std::cout << "\n";
    return 0;
}

int run_rcs(const GlobalArgs &g, rcsr::RunConfig cfg, const std::string &mode,
            const std::string &layout_path, std::optional<double> theta_inc,
            std::optional<std::string> pol, const std::vector<double> &freqs) {
    if (theta_inc)
        cfg.incidence.theta_deg = *theta_inc;
    if (pol) {
        if (*pol == "TE")
            cfg.incidence.pol = rcsr::Polarization::TE;
        else if (*pol == "TM")
            cfg.incidence.pol = rcsr::Polarization::TM;
        else
            throw rcsr::validation_error("--pol must be TE or TM, got '" + *pol + "'");
    }
    rcsr::validate(cfg.incidence);

    const fs::path dir = prepare_out_dir(g);
    rcsr::RunManifest manifest = base_manifest(g, cfg, "rcs");

    const rcsr::SurfaceLayout layout = rcsr::read_layout_json(layout_path);
    manifest.input_hashes[layout_path] = rcsr::fnv1a_file_hex(layout_path);

    const auto provider = rcsr::make_provider(cfg);
    if (provider->type_count() != layout.palette.size())
        throw rcsr::validation_error("provider has " + std::to_string(provider->type_count()) +
                                     " types but the layout palette has " +
                                     std::to_string(layout.palette.size()));

    if (mode == "mono") {
        const rcsr::RcsSpectrum spec =
            rcsr::monostatic_spectrum(layout, *provider, cfg.grid, cfg.incidence);
        const auto bands = rcsr::threshold_band(spec, cfg.threshold_dB);

        const fs::path csv = dir / "spectrum.csv";
        const fs::path report = dir / "band_report.json";
        rcsr::write_spectrum_csv(spec, csv);
        rcsr::write_band_report_json(bands, cfg.threshold_dB, report);
        manifest.artifacts.push_back(csv.filename().string());
        manifest.artifacts.push_back(report.filename().string());

        if (bands.empty()) {
            std::cout << "no band at " << fmt6(cfg.threshold_dB) << " dB\n";
        } else {
            std::cout << "widest " << fmt6(cfg.threshold_dB) << " dB band: ["
                      << fmt6(bands[0].f_lo_GHz) << ", " << fmt6(bands[0].f_hi_GHz)
                      << "] GHz, fractional bandwidth "
                      << fmt6(bands[0].fractional_bw_percent()) << "%\n";
        }
    } else if (mode == "bistatic") {
        if (freqs.empty())
            throw rcsr::validation_error("bistatic mode needs at least one --freq");
        for (double f : freqs) {
            const rcsr::BistaticPattern pat =
                rcsr::bistatic_cut(layout, *provider, f, cfg.incidence, cfg.scatter);
            const fs::path csv = dir / ("pattern_" + fmt6(f) + "GHz.csv");
            rcsr::write_pattern_csv(pat, csv);
            manifest.artifacts.push_back(csv.filename().string());

            const rcsr::Lobe lobe = rcsr::strongest_nonspecular_lobe(pat);
            std::cout << "f=" << fmt6(f) << " GHz: strongest non-specular lobe at "
                      << fmt6(lobe.theta_deg) << " deg, " << fmt6(lobe.level_dB) << " dB\n";
        }
    } else {
        throw rcsr::validation_error("--mode must be 'mono' or 'bistatic', got '" + mode + "'");
    }

    rcsr::write_manifest(manifest, dir / "manifest.json");
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"rcsr: modulated-metasurface RCS reduction design toolkit"};
    app.set_version_flag("--version", rcsr::kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalArgs g;
    app.add_option("--config", g.config_path, "JSON run configuration (defaults when omitted)");
    app.add_option("--out-dir", g.out_dir, "Output directory (default: out)");
    app.add_option("--seed", g.seed, "Override the GA RNG seed");

    auto *sweep = app.add_subcommand("cell-sweep", "Sweep unit-cell reflection over the grid");
    int sweep_type = -1;
    bool sweep_all = false;
    auto *type_opt = sweep->add_option("--type", sweep_type, "Palette type index to sweep");
    sweep->add_flag("--all", sweep_all, "Sweep every palette type");
    type_opt->excludes("--all");

    auto *opt = app.add_subcommand("optimize", "GA search for the weight vector");
    std::string objective;
    opt->add_option("--objective", objective, "minimax|bandwidth (default from config)")
        ->check(CLI::IsMember({"minimax", "bandwidth"}));

    auto *lay = app.add_subcommand("layout", "Build the modulated layout from weights");
    std::string weights_path;
    lay->add_option("--weights", weights_path, "Weights JSON (array, counts or GA report)")
        ->required();

    auto *rcs = app.add_subcommand("rcs", "Scattering analysis of a layout");
    std::string mode = "mono";
    std::string layout_path;
    std::optional<double> theta_inc;
    std::optional<std::string> pol;
    std::vector<double> freqs;
    rcs->add_option("--mode", mode, "mono|bistatic (default mono)")
        ->check(CLI::IsMember({"mono", "bistatic"}));
    rcs->add_option("--layout", layout_path, "Layout JSON produced by the layout command")
        ->required();
    rcs->add_option("--theta-inc", theta_inc, "Incidence angle in degrees (overrides config)");
    rcs->add_option("--pol", pol, "TE|TM (overrides config)");
    rcs->add_option("--freq", freqs, "Bistatic cut frequency in GHz (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const rcsr::RunConfig cfg = load_config(g);
        if (sweep->parsed()) {
            if (!sweep_all && sweep_type < 0)
                throw rcsr::validation_error("cell-sweep needs --type <i> or --all");
            return run_cell_sweep(g, cfg, sweep_type, sweep_all);
        }
        if (opt->parsed()) {
            const std::string obj = objective.empty() ? cfg.objective : objective;
            return run_optimize(g, cfg, obj);
        }
        if (lay->parsed())
            return run_layout(g, cfg, weights_path);
        if (rcs->parsed())
            return run_rcs(g, cfg, mode, layout_path, theta_inc, pol, freqs);
        return 2;
    } catch (const rcsr::validation_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rcsr::numeric_error &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const rcsr::io_error &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
