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

#include <rcsr/config.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <rcsr/errors.hpp>
#include <rcsr/exportio.hpp>

namespace rcsr {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polarization pol_from_string(const std::string &s) {
    if (s == "TE")
        return Polarization::TE;
    if (s == "TM")
        return Polarization::TM;
    throw validation_error("polarization must be 'TE' or 'TM', got '" + s + "'");
}

ModulationVariant variant_from_string(const std::string &s) {
    if (s == "along-x")
        return ModulationVariant::AlongX;
    if (s == "quadrant-symmetric")
        return ModulationVariant::QuadrantSymmetric;
    throw validation_error("modulation variant must be 'along-x' or 'quadrant-symmetric', got '" +
                           s + "'");
}

const char *variant_to_string(ModulationVariant v) {
    return v == ModulationVariant::AlongX ? "along-x" : "quadrant-symmetric";
}

ElementPattern element_from_string(const std::string &s) {
    if (s == "isotropic")
        return ElementPattern::Isotropic;
    if (s == "cosine")
        return ElementPattern::Cosine;
    throw validation_error("element pattern must be 'isotropic' or 'cosine', got '" + s + "'");
}

const char *element_to_string(ElementPattern e) {
    return e == ElementPattern::Isotropic ? "isotropic" : "cosine";
}

void reject_unknown_keys(const json &j, const std::set<std::string> &known,
                         const std::string &where) {
    for (const auto &item : j.items())
        if (!known.contains(item.key()))
            throw validation_error("unknown key '" + item.key() + "' in " + where);
}

UnitCellSpec cell_from_json(const json &j) {
    reject_unknown_keys(j, {"period_mm", "gap_mm", "thickness_mm", "eps_r", "tan_delta"},
                        "palette cell");
    UnitCellSpec cell;
    cell.period_mm = j.value("period_mm", cell.period_mm);
    cell.gap_mm = j.at("gap_mm").get<double>();
    cell.thickness_mm = j.value("thickness_mm", cell.thickness_mm);
    cell.eps_r = j.value("eps_r", cell.eps_r);
    cell.tan_delta = j.value("tan_delta", cell.tan_delta);
    return cell;
}

} // namespace

RunConfig default_run_config() {
    RunConfig cfg;
    const double gaps[] = {0.1, 0.55, 1.0, 1.55, 2.05, 2.5, 2.9};
    for (double g : gaps) {
        UnitCellSpec cell;
        cell.period_mm = 6.0;
        cell.gap_mm = g;
        cell.thickness_mm = 1.6;
        cell.eps_r = 3.55;
        cell.tan_delta = 0.0;
        cfg.palette.push_back(cell);
    }
    cfg.grid = FrequencyGrid{10.0, 35.0, 251};
    cfg.incidence = IncidenceSpec{0.0, Polarization::TE};
    cfg.modulation = ModulationSpec{24.0, 0.0, ModulationVariant::AlongX};
    cfg.ga = GaConfig{};
    cfg.scatter = ScatterConfig{};
    cfg.rows = 40;
    cfg.cols = 40;
    cfg.n_total = 1600;
    cfg.margin_mm = 5.0;
    cfg.band_lo_GHz = 11.3;
    cfg.band_hi_GHz = 32.3;
    cfg.threshold_dB = -10.0;
    cfg.objective = "minimax";
    return cfg;
}

void validate(const RunConfig &cfg) {
    if (cfg.palette.empty())
        throw validation_error("config palette must not be empty");
    for (const auto &cell : cfg.palette)
        validate(cell);
    for (std::size_t i = 1; i < cfg.palette.size(); ++i) {
        if (cfg.palette[i].period_mm != cfg.palette[0].period_mm)
            throw validation_error("config palette cells must share one lattice period");
        if (!(cfg.palette[i].gap_mm > cfg.palette[i - 1].gap_mm))
            throw validation_error("config palette gaps must be strictly ascending");
    }
    validate(cfg.grid);
    validate(cfg.incidence);
    validate(cfg.modulation);
    validate(cfg.scatter);
    if (cfg.rows < 1 || cfg.cols < 1)
        throw validation_error("rows and cols must be positive");
    if (cfg.n_total != cfg.rows * cfg.cols)
        throw validation_error("n_total must equal rows * cols");
    validate(cfg.ga, static_cast<int>(cfg.palette.size()), cfg.n_total);
    if (!(cfg.margin_mm >= 0.0))
        throw validation_error("margin_mm must be non-negative");
    if (!(cfg.band_lo_GHz < cfg.band_hi_GHz))
        throw validation_error("objective band requires f_lo < f_hi");
    if (!(cfg.threshold_dB < 0.0))
        throw validation_error("threshold_dB must be negative");
    if (cfg.objective != "minimax" && cfg.objective != "bandwidth")
        throw validation_error("objective must be 'minimax' or 'bandwidth', got '" +
                               cfg.objective + "'");
}

RunConfig load_run_config(const std::filesystem::path &path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error &e) {
        throw validation_error(path.string() + ": invalid JSON: " + e.what());
    }
    if (!j.is_object())
        throw validation_error(path.string() + ": config must be a JSON object");

    RunConfig cfg = default_run_config();
    try {
        reject_unknown_keys(j,
                            {"palette", "grid", "incidence", "modulation", "ga", "scatter",
                             "rows", "cols", "margin_mm", "band", "threshold_dB", "objective",
                             "phase_table"},
                            "config");

        if (j.contains("palette")) {
            cfg.palette.clear();
            for (const auto &cj : j.at("palette"))
                cfg.palette.push_back(cell_from_json(cj));
        }
        if (j.contains("grid")) {
            const json &g = j.at("grid");
            reject_unknown_keys(g, {"f_start_GHz", "f_stop_GHz", "n_points"}, "grid");
            cfg.grid.f_start_GHz = g.value("f_start_GHz", cfg.grid.f_start_GHz);
            cfg.grid.f_stop_GHz = g.value("f_stop_GHz", cfg.grid.f_stop_GHz);
            cfg.grid.n_points = g.value("n_points", cfg.grid.n_points);
        }
        if (j.contains("incidence")) {
            const json &inc = j.at("incidence");
            reject_unknown_keys(inc, {"theta_deg", "pol"}, "incidence");
            cfg.incidence.theta_deg = inc.value("theta_deg", cfg.incidence.theta_deg);
            if (inc.contains("pol"))
                cfg.incidence.pol = pol_from_string(inc.at("pol").get<std::string>());
        }
        if (j.contains("modulation")) {
            const json &m = j.at("modulation");
            reject_unknown_keys(m, {"lambda_mm", "phi0_rad", "variant"}, "modulation");
            cfg.modulation.lambda_mm = m.value("lambda_mm", cfg.modulation.lambda_mm);
            cfg.modulation.phi0_rad = m.value("phi0_rad", cfg.modulation.phi0_rad);
            if (m.contains("variant"))
                cfg.modulation.variant =
                    variant_from_string(m.at("variant").get<std::string>());
        }
        if (j.contains("ga")) {
            const json &g = j.at("ga");
            reject_unknown_keys(g,
                                {"population_size", "generations", "tournament_size",
                                 "elitism_count", "mutation_rate", "mutation_step_mean",
                                 "rng_seed", "min_count"},
                                "ga");
            cfg.ga.population_size = g.value("population_size", cfg.ga.population_size);
            cfg.ga.generations = g.value("generations", cfg.ga.generations);
            cfg.ga.tournament_size = g.value("tournament_size", cfg.ga.tournament_size);
            cfg.ga.elitism_count = g.value("elitism_count", cfg.ga.elitism_count);
            cfg.ga.mutation_rate = g.value("mutation_rate", cfg.ga.mutation_rate);
            cfg.ga.mutation_step_mean = g.value("mutation_step_mean", cfg.ga.mutation_step_mean);
            cfg.ga.rng_seed = g.value("rng_seed", cfg.ga.rng_seed);
            cfg.ga.min_count = g.value("min_count", cfg.ga.min_count);
        }
        if (j.contains("scatter")) {
            const json &s = j.at("scatter");
            reject_unknown_keys(s, {"theta_step_deg", "element"}, "scatter");
            cfg.scatter.theta_step_deg = s.value("theta_step_deg", cfg.scatter.theta_step_deg);
            if (s.contains("element"))
                cfg.scatter.element = element_from_string(s.at("element").get<std::string>());
        }
        cfg.rows = j.value("rows", cfg.rows);
        cfg.cols = j.value("cols", cfg.cols);
        cfg.n_total = cfg.rows * cfg.cols;
        cfg.margin_mm = j.value("margin_mm", cfg.margin_mm);
        if (j.contains("band")) {
            const json &b = j.at("band");
            reject_unknown_keys(b, {"f_lo_GHz", "f_hi_GHz"}, "band");
            cfg.band_lo_GHz = b.value("f_lo_GHz", cfg.band_lo_GHz);
            cfg.band_hi_GHz = b.value("f_hi_GHz", cfg.band_hi_GHz);
        }
        cfg.threshold_dB = j.value("threshold_dB", cfg.threshold_dB);
        cfg.objective = j.value("objective", cfg.objective);
        if (j.contains("phase_table"))
            cfg.phase_table = std::filesystem::path(j.at("phase_table").get<std::string>());
    } catch (const json::exception &e) {
        throw validation_error(path.string() + ": config JSON: " + e.what());
    }

    validate(cfg);
    return cfg;
}

std::string config_to_json(const RunConfig &cfg) {
    json j;
    j["palette"] = json::array();
    for (const auto &cell : cfg.palette) {
        json cj;
        cj["period_mm"] = cell.period_mm;
        cj["gap_mm"] = cell.gap_mm;
        cj["thickness_mm"] = cell.thickness_mm;
        cj["eps_r"] = cell.eps_r;
        cj["tan_delta"] = cell.tan_delta;
        j["palette"].push_back(std::move(cj));
    }
    j["grid"] = {{"f_start_GHz", cfg.grid.f_start_GHz},
                 {"f_stop_GHz", cfg.grid.f_stop_GHz},
                 {"n_points", cfg.grid.n_points}};
    j["incidence"] = {{"theta_deg", cfg.incidence.theta_deg},
                      {"pol", to_string(cfg.incidence.pol)}};
    j["modulation"] = {{"lambda_mm", cfg.modulation.lambda_mm},
                       {"phi0_rad", cfg.modulation.phi0_rad},
                       {"variant", variant_to_string(cfg.modulation.variant)}};
    j["ga"] = {{"population_size", cfg.ga.population_size},
               {"generations", cfg.ga.generations},
               {"tournament_size", cfg.ga.tournament_size},
               {"elitism_count", cfg.ga.elitism_count},
               {"mutation_rate", cfg.ga.mutation_rate},
               {"mutation_step_mean", cfg.ga.mutation_step_mean},
               {"rng_seed", cfg.ga.rng_seed},
               {"min_count", cfg.ga.min_count}};
    j["scatter"] = {{"theta_step_deg", cfg.scatter.theta_step_deg},
                    {"element", element_to_string(cfg.scatter.element)}};
    j["rows"] = cfg.rows;
    j["cols"] = cfg.cols;
    j["margin_mm"] = cfg.margin_mm;
    j["band"] = {{"f_lo_GHz", cfg.band_lo_GHz}, {"f_hi_GHz", cfg.band_hi_GHz}};
    j["threshold_dB"] = cfg.threshold_dB;
    j["objective"] = cfg.objective;
    if (cfg.phase_table)
        j["phase_table"] = cfg.phase_table->string();
    return j.dump(2);
}

std::unique_ptr<ReflectionProvider> make_provider(const RunConfig &cfg) {
    if (cfg.phase_table) {
        PhaseTable table = read_phase_table(*cfg.phase_table);
        if (table.type_count() != cfg.palette.size())
            throw validation_error("phase table has " + std::to_string(table.type_count()) +
                                   " types but the config palette has " +
                                   std::to_string(cfg.palette.size()));
        return std::make_unique<TableProvider>(std::move(table));
    }
    return std::make_unique<AnalyticProvider>(cfg.palette);
}

} // namespace rcsr
