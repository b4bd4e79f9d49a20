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

#ifndef RCSR_EXPORTIO_HPP
#define RCSR_EXPORTIO_HPP

// File formats. All writers are deterministic: fixed field order, %.6g
// numbers with the C locale, LF line endings, no timestamps except in the
// run manifest. Failures throw io_error (file system) or validation_error
// (malformed content).

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <rcsr/cellmodel.hpp>
#include <rcsr/layout.hpp>
#include <rcsr/metrics.hpp>
#include <rcsr/optimizer.hpp>
#include <rcsr/scatter.hpp>

namespace rcsr {

// CSV with header "type_id,freq_GHz,re,im", rows sorted by (type_id, freq).
// The reader validates sorting, grid rectangularity and passivity
// (|gamma| <= 1 + 1e-6), reporting the first offending line.
PhaseTable read_phase_table(const std::filesystem::path &path);
void write_phase_table(const PhaseTable &table, const std::filesystem::path &path);

// CSV with header "freq_GHz,rcsr_dB".
void write_spectrum_csv(const RcsSpectrum &spectrum, const std::filesystem::path &path);

// CSV with header "theta_deg,level_dB".
void write_pattern_csv(const BistaticPattern &pattern, const std::filesystem::path &path);

// Layout as JSON: dimensions, period, margin, palette, row-major type grid.
void write_layout_json(const SurfaceLayout &layout, const std::filesystem::path &path);
SurfaceLayout read_layout_json(const std::filesystem::path &path);

// Print-style SVG of the patch faces: board outline rectangle plus one
// square per cell in row-major order, mm user units.
void write_layout_svg(const SurfaceLayout &layout, const std::filesystem::path &path);

// Threshold bands with recomputed fractional bandwidths.
void write_band_report_json(const std::vector<Band> &bands, double threshold_dB,
                            const std::filesystem::path &path);

// GA outcome: config echo, best weights, fitness, per-generation history,
// plus the uniform-weights baseline fitness for comparison.
void write_ga_report_json(const GaResult &result, const GaConfig &cfg,
                          const std::string &objective_name, double uniform_fitness,
                          const std::filesystem::path &path);

// Weight vector from JSON: a bare array, {"counts": [...]} or a GA report
// with {"best_weights": [...]}.
WeightVector read_weights_json(const std::filesystem::path &path);

// Reproducibility sidecar written next to every CLI artifact set.
struct RunManifest {
    std::string tool_version;
    std::string command;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> input_hashes;  // path -> fnv1a-64 hex
    std::string config_echo_json;                     // pre-serialized JSON
    std::string timestamp_utc;                        // ISO 8601
    std::vector<std::string> artifacts;
};

void write_manifest(const RunManifest &manifest, const std::filesystem::path &path);

// FNV-1a 64-bit of a byte string / file content, lowercase hex.
std::string fnv1a_hex(const std::string &bytes);
std::string fnv1a_file_hex(const std::filesystem::path &path);

} // namespace rcsr

#endif
