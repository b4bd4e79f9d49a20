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

#ifndef RCSR_LAYOUT_HPP
#define RCSR_LAYOUT_HPP

// Placement of palette types on the P x Q cell grid: a sinusoidal modulation
// field sampled at cell centers, then a histogram-exact assignment that
// matches the optimized weight vector.

#include <span>
#include <vector>

#include <rcsr/cellmodel.hpp>
#include <rcsr/metrics.hpp>

namespace rcsr {

enum class ModulationVariant {
    AlongX,             // s depends on the column coordinate only
    QuadrantSymmetric,  // s depends on |x - x_c| + |y - y_c|
};

struct ModulationSpec {
    double lambda_mm = 24.0;  // modulation period
    double phi0_rad = 0.0;    // modulation phase offset
    ModulationVariant variant = ModulationVariant::AlongX;
};

void validate(const ModulationSpec &mod);

// Modulation field sampled at the P x Q cell centers, row-major (row p = y,
// column q = x). AlongX: s = sin(2 pi x_q / Lambda + phi0) with
// x_q = (q + 0.5) D. QuadrantSymmetric: s = sin(2 pi (|x| + |y|) / Lambda
// + phi0) on center-referenced coordinates, computed so mirror cells get
// bit-identical values.
std::vector<double> sinusoid_field(int rows, int cols, double period_mm,
                                   const ModulationSpec &mod);

struct SurfaceLayout {
    int rows = 0;  // P
    int cols = 0;  // Q
    double period_mm = 6.0;
    double margin_mm = 5.0;
    std::vector<UnitCellSpec> palette;  // ascending gap
    std::vector<int> type_grid;         // row-major palette indices, rows*cols

    int type_at(int p, int q) const { return type_grid[static_cast<std::size_t>(p) * cols + q]; }
    double board_width_mm() const { return cols * period_mm + 2.0 * margin_mm; }
    double board_height_mm() const { return rows * period_mm + 2.0 * margin_mm; }
};

void validate(const SurfaceLayout &layout);

// Sorted-partition assignment: cells ranked by field value (ties broken by
// row-major index), first weights[0] ranks get type 0, the next weights[1]
// type 1, and so on. The result reproduces the weight histogram exactly.
SurfaceLayout assign_types(std::span<const double> field, int rows, int cols,
                           const WeightVector &weights, std::vector<UnitCellSpec> palette,
                           double margin_mm = 5.0);

// Per-type cell counts of an existing layout.
WeightVector layout_histogram(const SurfaceLayout &layout);

// Printable patch geometry: one square per cell, edge D - g, centered in the
// cell, offset by the board margin. Row-major order.
struct PatchSquare {
    double cx_mm = 0.0;
    double cy_mm = 0.0;
    double edge_mm = 0.0;
};

std::vector<PatchSquare> patch_geometry(const SurfaceLayout &layout);

} // namespace rcsr

#endif
