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

#ifndef RCSR_CONFIG_HPP
#define RCSR_CONFIG_HPP

// Run configuration shared by the CLI subcommands: palette, grid, incidence,
// modulation, GA settings. Loaded from JSON, validated up front, echoed into
// the run manifest.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <rcsr/cellmodel.hpp>
#include <rcsr/layout.hpp>
#include <rcsr/metrics.hpp>
#include <rcsr/optimizer.hpp>
#include <rcsr/scatter.hpp>

namespace rcsr {

struct RunConfig {
    std::vector<UnitCellSpec> palette;   // ascending gap
    FrequencyGrid grid{};
    IncidenceSpec incidence{};
    ModulationSpec modulation{};
    GaConfig ga{};
    ScatterConfig scatter{};
    int rows = 40;
    int cols = 40;
    int n_total = 1600;                  // rows * cols
    double margin_mm = 5.0;
    double band_lo_GHz = 11.3;           // minimax objective band
    double band_hi_GHz = 32.3;
    double threshold_dB = -10.0;
    std::string objective = "minimax";   // or "bandwidth"
    std::optional<std::filesystem::path> phase_table;  // table provider when set
};

// Seven-gap reference palette on the 6 mm / 1.6 mm RO4003-class substrate and
// the default 10-35 GHz grid.
RunConfig default_run_config();

// Parse JSON (partial configs overlay the defaults) and validate everything.
RunConfig load_run_config(const std::filesystem::path &path);

void validate(const RunConfig &cfg);

// Canonical JSON echo of the effective config (sorted keys, deterministic).
std::string config_to_json(const RunConfig &cfg);

// Analytic provider over the palette, or a table provider when phase_table
// is set.
std::unique_ptr<ReflectionProvider> make_provider(const RunConfig &cfg);

} // namespace rcsr

#endif
