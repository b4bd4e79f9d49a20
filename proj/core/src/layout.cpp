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

#include <rcsr/layout.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <rcsr/errors.hpp>

namespace rcsr {

namespace {

void validate_palette(const std::vector<UnitCellSpec> &palette) {
    if (palette.empty())
        throw validation_error("palette must not be empty");
    for (const auto &cell : palette)
        validate(cell);
    for (std::size_t i = 1; i < palette.size(); ++i) {
        if (palette[i].period_mm != palette[0].period_mm)
            throw validation_error("palette cells must share one lattice period");
        if (!(palette[i].gap_mm > palette[i - 1].gap_mm))
            throw validation_error("palette gaps must be strictly ascending");
    }
}

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw validation_error("grid dimensions must be positive");
}

} // namespace

void validate(const ModulationSpec &mod) {
    if (!(mod.lambda_mm > 0.0))
        throw validation_error("modulation period lambda_mm must be positive");
    if (!std::isfinite(mod.phi0_rad))
        throw validation_error("modulation phase phi0_rad must be finite");
}

std::vector<double> sinusoid_field(int rows, int cols, double period_mm,
                                   const ModulationSpec &mod) {
    check_dims(rows, cols);
    if (!(period_mm > 0.0))
        throw validation_error("cell period must be positive");
    validate(mod);

    const double w = 2.0 * constants::pi / mod.lambda_mm;
    std::vector<double> field(static_cast<std::size_t>(rows) * cols);

    if (mod.variant == ModulationVariant::AlongX) {
        std::vector<double> col_val(static_cast<std::size_t>(cols));
        for (int q = 0; q < cols; ++q) {
            const double x = (q + 0.5) * period_mm;
            col_val[static_cast<std::size_t>(q)] = std::sin(w * x + mod.phi0_rad);
        }
        for (int p = 0; p < rows; ++p)
            for (int q = 0; q < cols; ++q)
                field[static_cast<std::size_t>(p) * cols + q] =
                    col_val[static_cast<std::size_t>(q)];
        return field;
    }

    // Quadrant-symmetric: center-referenced offsets (q + 0.5 - cols/2) are
    // exact multiples of 0.5, so mirror cells produce bit-identical samples.
    std::vector<double> fx(static_cast<std::size_t>(cols)), fy(static_cast<std::size_t>(rows));
    for (int q = 0; q < cols; ++q)
        fx[static_cast<std::size_t>(q)] = std::abs((q + 0.5 - cols / 2.0) * period_mm);
    for (int p = 0; p < rows; ++p)
        fy[static_cast<std::size_t>(p)] = std::abs((p + 0.5 - rows / 2.0) * period_mm);
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < cols; ++q)
            field[static_cast<std::size_t>(p) * cols + q] =
                std::sin(w * (fx[static_cast<std::size_t>(q)] +
                              fy[static_cast<std::size_t>(p)]) +
                         mod.phi0_rad);
    return field;
}

void validate(const SurfaceLayout &layout) {
    check_dims(layout.rows, layout.cols);
    validate_palette(layout.palette);
    if (layout.period_mm != layout.palette[0].period_mm)
        throw validation_error("layout period does not match the palette period");
    if (!(layout.margin_mm >= 0.0))
        throw validation_error("margin_mm must be non-negative");
    const std::size_t n = static_cast<std::size_t>(layout.rows) * layout.cols;
    if (layout.type_grid.size() != n)
        throw validation_error("type grid has " + std::to_string(layout.type_grid.size()) +
                               " entries, expected " + std::to_string(n));
    for (int t : layout.type_grid)
        if (t < 0 || static_cast<std::size_t>(t) >= layout.palette.size())
            throw validation_error("type grid entry " + std::to_string(t) +
                                   " outside the palette");
}

SurfaceLayout assign_types(std::span<const double> field, int rows, int cols,
                           const WeightVector &weights, std::vector<UnitCellSpec> palette,
                           double margin_mm) {
    check_dims(rows, cols);
    validate_palette(palette);
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    if (field.size() != n)
        throw validation_error("field has " + std::to_string(field.size()) +
                               " samples, expected " + std::to_string(n));
    for (double v : field)
        if (!std::isfinite(v))
            throw validation_error("field contains a non-finite sample");
    if (weights.counts.size() != palette.size())
        throw validation_error("weight vector and palette sizes differ");
    validate(weights, static_cast<int>(n));
    if (!(margin_mm >= 0.0))
        throw validation_error("margin_mm must be non-negative");

    // Rank cells by field value; row-major index breaks ties so equal inputs
    // always produce the same layout.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (field[a] != field[b])
            return field[a] < field[b];
        return a < b;
    });

    SurfaceLayout layout;
    layout.rows = rows;
    layout.cols = cols;
    layout.period_mm = palette[0].period_mm;
    layout.margin_mm = margin_mm;
    layout.palette = std::move(palette);
    layout.type_grid.assign(n, 0);

    std::size_t pos = 0;
    for (std::size_t t = 0; t < weights.counts.size(); ++t)
        for (int c = 0; c < weights.counts[t]; ++c)
            layout.type_grid[order[pos++]] = static_cast<int>(t);

    return layout;
}

WeightVector layout_histogram(const SurfaceLayout &layout) {
    validate(layout);
    WeightVector w;
    w.counts.assign(layout.palette.size(), 0);
    for (int t : layout.type_grid)
        ++w.counts[static_cast<std::size_t>(t)];
    return w;
}

std::vector<PatchSquare> patch_geometry(const SurfaceLayout &layout) {
    validate(layout);
    std::vector<PatchSquare> patches;
    patches.reserve(layout.type_grid.size());
    for (int p = 0; p < layout.rows; ++p) {
        for (int q = 0; q < layout.cols; ++q) {
            const UnitCellSpec &cell =
                layout.palette[static_cast<std::size_t>(layout.type_at(p, q))];
            PatchSquare sq;
            sq.cx_mm = layout.margin_mm + (q + 0.5) * layout.period_mm;
            sq.cy_mm = layout.margin_mm + (p + 0.5) * layout.period_mm;
            sq.edge_mm = layout.period_mm - cell.gap_mm;
            patches.push_back(sq);
        }
    }
    return patches;
}

} // namespace rcsr
