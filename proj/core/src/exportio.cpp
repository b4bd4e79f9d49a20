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

#include <rcsr/exportio.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <rcsr/errors.hpp>

namespace rcsr {

namespace {

using nlohmann::json;

// Six significant digits everywhere: stable goldens across platforms.
std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

// Round through the 6-digit text form so JSON numbers obey the same policy.
double round6(double v) {
    return std::strtod(fmt6(v).c_str(), nullptr);
}

void write_text_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw io_error("short write to " + path.string());
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw io_error("read failure on " + path.string());
    return ss.str();
}

std::string trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trimmed(std::string_view(line).substr(start)));
            break;
        }
        out.push_back(trimmed(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string &s, std::size_t line_no, const char *what) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw validation_error("line " + std::to_string(line_no) + ": cannot parse " + what +
                               " from '" + s + "'");
    return v;
}

int parse_int(const std::string &s, std::size_t line_no, const char *what) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw validation_error("line " + std::to_string(line_no) + ": cannot parse " + what +
                               " from '" + s + "'");
    return v;
}

json cell_to_json(const UnitCellSpec &cell) {
    json j;
    j["period_mm"] = round6(cell.period_mm);
    j["gap_mm"] = round6(cell.gap_mm);
    j["thickness_mm"] = round6(cell.thickness_mm);
    j["eps_r"] = round6(cell.eps_r);
    j["tan_delta"] = round6(cell.tan_delta);
    return j;
}

UnitCellSpec cell_from_json(const json &j) {
    UnitCellSpec cell;
    cell.period_mm = j.at("period_mm").get<double>();
    cell.gap_mm = j.at("gap_mm").get<double>();
    cell.thickness_mm = j.at("thickness_mm").get<double>();
    cell.eps_r = j.at("eps_r").get<double>();
    cell.tan_delta = j.value("tan_delta", 0.0);
    return cell;
}

// Fill colors for up to 16 palette types, then cycled.
constexpr std::array<const char *, 16> kTypeFills = {
    "#c87137", "#d98e4a", "#e8aa5e", "#f2c278", "#b35c2e", "#a34d26", "#8f3f20", "#7a331a",
    "#5e9ea0", "#4f8a8b", "#3f7677", "#2f6263", "#97b55e", "#86a44f", "#759340", "#648232"};

} // namespace

PhaseTable read_phase_table(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    while (!lines.empty() && trimmed(lines.back()).empty())
        lines.pop_back();

    if (lines.empty())
        throw validation_error(path.string() + ": empty phase table");
    if (trimmed(lines.front()) != "type_id,freq_GHz,re,im")
        throw validation_error(path.string() +
                               ": line 1: header must be exactly 'type_id,freq_GHz,re,im'");

    struct Row {
        int type_id;
        double freq, re, im;
        std::size_t line_no;
    };
    std::vector<Row> rows;
    rows.reserve(lines.size());

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string line = trimmed(lines[i]);
        if (line.empty())
            throw validation_error("line " + std::to_string(line_no) + ": blank row");
        const auto fields = split_csv(line);
        if (fields.size() != 4)
            throw validation_error("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                   std::to_string(fields.size()));
        Row r;
        r.type_id = parse_int(fields[0], line_no, "type_id");
        r.freq = parse_double(fields[1], line_no, "freq_GHz");
        r.re = parse_double(fields[2], line_no, "re");
        r.im = parse_double(fields[3], line_no, "im");
        r.line_no = line_no;

        const double mag = std::abs(std::complex<double>(r.re, r.im));
        if (mag > 1.0 + 1.0e-6)
            throw validation_error("line " + std::to_string(line_no) +
                                   ": passivity violation, |gamma| = " + fmt6(mag) +
                                   " exceeds 1 + 1e-6");
        if (!rows.empty()) {
            const Row &prev = rows.back();
            if (r.type_id < prev.type_id ||
                (r.type_id == prev.type_id && !(r.freq > prev.freq)))
                throw validation_error("line " + std::to_string(line_no) +
                                       ": rows must be sorted by (type_id, freq_GHz) ascending");
        }
        rows.push_back(r);
    }
    if (rows.empty())
        throw validation_error(path.string() + ": phase table has a header but no data rows");

    PhaseTable table;
    std::vector<double> ref_freqs;
    std::size_t type_start = 0;
    for (std::size_t i = 0; i <= rows.size(); ++i) {
        if (i < rows.size() && rows[i].type_id == rows[type_start].type_id)
            continue;
        // One type block [type_start, i) complete.
        const int tid = rows[type_start].type_id;
        std::vector<double> freqs;
        for (std::size_t k = type_start; k < i; ++k)
            freqs.push_back(rows[k].freq);
        if (table.type_ids.empty()) {
            ref_freqs = freqs;
            table.freqs_GHz = freqs;
        } else if (freqs != ref_freqs) {
            throw validation_error("type " + std::to_string(tid) +
                                   ": ragged grid, frequency set differs from type " +
                                   std::to_string(table.type_ids.front()));
        }
        table.type_ids.push_back(tid);
        for (std::size_t k = type_start; k < i; ++k)
            table.gamma.emplace_back(rows[k].re, rows[k].im);
        type_start = i;
    }

    validate(table);
    return table;
}

void write_phase_table(const PhaseTable &table, const std::filesystem::path &path) {
    validate(table);
    std::string out = "type_id,freq_GHz,re,im\n";
    for (std::size_t t = 0; t < table.type_count(); ++t) {
        for (std::size_t i = 0; i < table.freq_count(); ++i) {
            const auto &g = table.at(t, i);
            out += std::to_string(table.type_ids[t]);
            out += ',';
            out += fmt6(table.freqs_GHz[i]);
            out += ',';
            out += fmt6(g.real());
            out += ',';
            out += fmt6(g.imag());
            out += '\n';
        }
    }
    write_text_file(path, out);
}

void write_spectrum_csv(const RcsSpectrum &spectrum, const std::filesystem::path &path) {
    if (spectrum.points.empty())
        throw validation_error("refusing to write an empty spectrum");
    std::string out = "freq_GHz,rcsr_dB\n";
    for (const auto &p : spectrum.points) {
        out += fmt6(p.freq_GHz);
        out += ',';
        out += fmt6(p.rcsr_dB);
        out += '\n';
    }
    write_text_file(path, out);
}

void write_pattern_csv(const BistaticPattern &pattern, const std::filesystem::path &path) {
    if (pattern.points.empty())
        throw validation_error("refusing to write an empty pattern");
    std::string out = "theta_deg,level_dB\n";
    for (const auto &p : pattern.points) {
        out += fmt6(p.theta_deg);
        out += ',';
        out += fmt6(p.level_dB);
        out += '\n';
    }
    write_text_file(path, out);
}

void write_layout_json(const SurfaceLayout &layout, const std::filesystem::path &path) {
    validate(layout);
    json j;
    j["P"] = layout.rows;
    j["Q"] = layout.cols;
    j["period_mm"] = round6(layout.period_mm);
    j["margin_mm"] = round6(layout.margin_mm);
    j["palette"] = json::array();
    for (const auto &cell : layout.palette)
        j["palette"].push_back(cell_to_json(cell));
    json grid = json::array();
    for (int p = 0; p < layout.rows; ++p) {
        json row = json::array();
        for (int q = 0; q < layout.cols; ++q)
            row.push_back(layout.type_at(p, q));
        grid.push_back(std::move(row));
    }
    j["type_grid"] = std::move(grid);
    write_text_file(path, j.dump(2) + "\n");
}

SurfaceLayout read_layout_json(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw validation_error(path.string() + ": invalid JSON: " + e.what());
    }

    SurfaceLayout layout;
    try {
        layout.rows = j.at("P").get<int>();
        layout.cols = j.at("Q").get<int>();
        layout.period_mm = j.at("period_mm").get<double>();
        layout.margin_mm = j.at("margin_mm").get<double>();
        for (const auto &cj : j.at("palette"))
            layout.palette.push_back(cell_from_json(cj));
        for (const auto &row : j.at("type_grid"))
            for (const auto &t : row)
                layout.type_grid.push_back(t.get<int>());
    } catch (const json::exception &e) {
        throw validation_error(path.string() + ": layout JSON: " + e.what());
    }
    validate(layout);
    return layout;
}

void write_layout_svg(const SurfaceLayout &layout, const std::filesystem::path &path) {
    validate(layout);
    const auto patches = patch_geometry(layout);
    const double w = layout.board_width_mm();
    const double h = layout.board_height_mm();

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(w) + "mm\" height=\"" +
           fmt6(h) + "mm\" viewBox=\"0 0 " + fmt6(w) + " " + fmt6(h) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt6(w) + "\" height=\"" + fmt6(h) +
           "\" fill=\"#123524\"/>\n";

    std::size_t idx = 0;
    for (int p = 0; p < layout.rows; ++p) {
        for (int q = 0; q < layout.cols; ++q, ++idx) {
            const PatchSquare &sq = patches[idx];
            const int type = layout.type_at(p, q);
            const char *fill = kTypeFills[static_cast<std::size_t>(type) % kTypeFills.size()];
            svg += "<rect x=\"" + fmt6(sq.cx_mm - 0.5 * sq.edge_mm) + "\" y=\"" +
                   fmt6(sq.cy_mm - 0.5 * sq.edge_mm) + "\" width=\"" + fmt6(sq.edge_mm) +
                   "\" height=\"" + fmt6(sq.edge_mm) + "\" fill=\"" + fill + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    write_text_file(path, svg);
}

void write_band_report_json(const std::vector<Band> &bands, double threshold_dB,
                            const std::filesystem::path &path) {
    json j;
    j["threshold_dB"] = round6(threshold_dB);
    j["bands"] = json::array();
    for (const auto &b : bands) {
        json bj;
        bj["f_lo"] = round6(b.f_lo_GHz);
        bj["f_hi"] = round6(b.f_hi_GHz);
        bj["fractional_bw_percent"] = round6(b.fractional_bw_percent());
        j["bands"].push_back(std::move(bj));
    }
    write_text_file(path, j.dump(2) + "\n");
}

void write_ga_report_json(const GaResult &result, const GaConfig &cfg,
                          const std::string &objective_name, double uniform_fitness,
                          const std::filesystem::path &path) {
    json j;
    j["objective"] = objective_name;
    j["seed"] = cfg.rng_seed;
    j["uniform_fitness"] = round6(uniform_fitness);
    json cj;
    cj["population_size"] = cfg.population_size;
    cj["generations"] = cfg.generations;
    cj["tournament_size"] = cfg.tournament_size;
    cj["elitism_count"] = cfg.elitism_count;
    cj["mutation_rate"] = round6(cfg.mutation_rate);
    cj["mutation_step_mean"] = round6(cfg.mutation_step_mean);
    cj["rng_seed"] = cfg.rng_seed;
    cj["min_count"] = cfg.min_count;
    j["config"] = std::move(cj);
    j["best_weights"] = result.best.counts;
    j["best_fitness"] = round6(result.best_fitness);
    json hist = json::array();
    for (const auto &g : result.history) {
        json gj;
        gj["best"] = round6(g.best);
        gj["mean"] = round6(g.mean);
        hist.push_back(std::move(gj));
    }
    j["history"] = std::move(hist);
    write_text_file(path, j.dump(2) + "\n");
}

WeightVector read_weights_json(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw validation_error(path.string() + ": invalid JSON: " + e.what());
    }

    const json *arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("counts"))
        arr = &j.at("counts");
    else if (j.is_object() && j.contains("best_weights"))
        arr = &j.at("best_weights");
    else
        throw validation_error(path.string() +
                               ": expected a JSON array, {\"counts\": [...]} or a GA report");

    WeightVector w;
    try {
        for (const auto &v : *arr)
            w.counts.push_back(v.get<int>());
    } catch (const json::exception &e) {
        throw validation_error(path.string() + ": weights JSON: " + e.what());
    }
    validate(w);
    return w;
}

void write_manifest(const RunManifest &manifest, const std::filesystem::path &path) {
    json j;
    j["tool_version"] = manifest.tool_version;
    j["command"] = manifest.command;
    j["seed"] = manifest.seed;
    j["input_hashes"] = json::object();
    for (const auto &[file, hash] : manifest.input_hashes)
        j["input_hashes"][file] = hash;
    try {
        j["config"] = manifest.config_echo_json.empty() ? json::object()
                                                        : json::parse(manifest.config_echo_json);
    } catch (const json::parse_error &e) {
        throw validation_error("manifest config echo is not valid JSON: " + std::string(e.what()));
    }
    j["timestamp_utc"] = manifest.timestamp_utc;
    j["artifacts"] = manifest.artifacts;
    write_text_file(path, j.dump(2) + "\n");
}

std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string fnv1a_file_hex(const std::filesystem::path &path) {
    return fnv1a_hex(read_text_file(path));
}

} // namespace rcsr
