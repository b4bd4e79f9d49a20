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

#include <rcsr/scatter.hpp>

#include <algorithm>
#include <cmath>

#include <rcsr/errors.hpp>

namespace rcsr {

namespace {

constexpr std::complex<double> j1{0.0, 1.0};
constexpr double kLevelCapDb = 300.0;

// Per-column sums of the type reflection coefficients: the p index only
// shifts cells along y, which is out of the cut plane, so each column behaves
// as one weighted element on the x line.
std::vector<std::complex<double>> column_sums(const SurfaceLayout &layout,
                                              const std::vector<std::complex<double>> &gam) {
    std::vector<std::complex<double>> cs(static_cast<std::size_t>(layout.cols),
                                         std::complex<double>{0.0, 0.0});
    for (int p = 0; p < layout.rows; ++p)
        for (int q = 0; q < layout.cols; ++q)
            cs[static_cast<std::size_t>(q)] +=
                gam[static_cast<std::size_t>(layout.type_at(p, q))];
    return cs;
}

std::vector<std::complex<double>> type_gammas(const SurfaceLayout &layout,
                                              const ReflectionProvider &provider,
                                              double freq_GHz, const IncidenceSpec &inc) {
    if (provider.type_count() != layout.palette.size())
        throw validation_error("provider type count does not match the layout palette");
    std::vector<std::complex<double>> gam(provider.type_count());
    for (std::size_t t = 0; t < gam.size(); ++t)
        gam[t] = provider.gamma(t, freq_GHz, inc);
    return gam;
}

// Cell-center x coordinate in meters, origin at the aperture center.
double cell_x_m(const SurfaceLayout &layout, int q) {
    return (q + 0.5 - layout.cols / 2.0) * layout.period_mm * 1.0e-3;
}

double ratio_db(double num, double den) {
    if (!(num > 0.0))
        return kRcsrFloorDb;
    if (!(den > 0.0))
        return kLevelCapDb;
    return std::clamp(20.0 * std::log10(num / den), kRcsrFloorDb, kLevelCapDb);
}

double element_gain(ElementPattern pattern, double theta_deg) {
    if (pattern == ElementPattern::Isotropic)
        return 1.0;
    return std::cos(deg2rad(theta_deg));
}

} // namespace

void validate(const ScatterConfig &cfg) {
    if (!(cfg.theta_step_deg > 0.0) || !(cfg.theta_step_deg <= 45.0))
        throw validation_error("theta_step_deg must lie in (0, 45]");
}

std::complex<double> backscatter_coefficient(const SurfaceLayout &layout,
                                             const ReflectionProvider &provider,
                                             double freq_GHz, const IncidenceSpec &inc) {
    validate(layout);
    validate(inc);

    const auto gam = type_gammas(layout, provider, freq_GHz, inc);
    const auto cs = column_sums(layout, gam);

    const double k0 = wavenumber(freq_GHz);
    const double s = std::sin(deg2rad(inc.theta_deg));

    std::complex<double> acc{0.0, 0.0};
    for (int q = 0; q < layout.cols; ++q)
        acc += cs[static_cast<std::size_t>(q)] *
               std::exp(-j1 * (2.0 * k0 * cell_x_m(layout, q) * s));
    const double n_cells = static_cast<double>(layout.rows) * layout.cols;
    return acc / n_cells;
}

RcsSpectrum monostatic_spectrum(const SurfaceLayout &layout, const ReflectionProvider &provider,
                                const FrequencyGrid &grid, const IncidenceSpec &inc) {
    validate(layout);
    validate(grid);
    validate(inc);

    RcsSpectrum spec;
    spec.incidence = inc;
    spec.source = "array-factor";
    spec.points.reserve(static_cast<std::size_t>(grid.n_points));

    const double s = std::sin(deg2rad(inc.theta_deg));
    const double rows = static_cast<double>(layout.rows);

    for (int i = 0; i < grid.n_points; ++i) {
        const double f = grid.at(i);
        const auto gam = type_gammas(layout, provider, f, inc);
        const auto cs = column_sums(layout, gam);
        const double k0 = wavenumber(f);

        std::complex<double> num{0.0, 0.0};
        std::complex<double> den{0.0, 0.0};
        for (int q = 0; q < layout.cols; ++q) {
            const std::complex<double> ph =
                std::exp(-j1 * (2.0 * k0 * cell_x_m(layout, q) * s));
            num += cs[static_cast<std::size_t>(q)] * ph;
            den += -rows * ph;  // PEC aperture: every cell reflects with -1
        }
        spec.points.push_back({f, ratio_db(std::abs(num), std::abs(den))});
    }
    return spec;
}

BistaticPattern bistatic_cut(const SurfaceLayout &layout, const ReflectionProvider &provider,
                             double freq_GHz, const IncidenceSpec &inc,
                             const ScatterConfig &cfg) {
    validate(layout);
    validate(inc);
    validate(cfg);

    const auto gam = type_gammas(layout, provider, freq_GHz, inc);
    const auto cs = column_sums(layout, gam);

    const double k0 = wavenumber(freq_GHz);
    const double s_inc = std::sin(deg2rad(inc.theta_deg));
    const double n_cells = static_cast<double>(layout.rows) * layout.cols;
    const double elem_inc = element_gain(cfg.element, inc.theta_deg);

    BistaticPattern pat;
    pat.freq_GHz = freq_GHz;
    pat.incidence = inc;

    // Cover [-90, 90]; the final point is clamped onto the upper edge when
    // the step does not divide 180 exactly.
    const int n_steps = static_cast<int>(std::floor(180.0 / cfg.theta_step_deg + 0.5));
    pat.points.reserve(static_cast<std::size_t>(n_steps) + 1);

    for (int i = 0; i <= n_steps; ++i) {
        const double theta = std::min(-90.0 + i * cfg.theta_step_deg, 90.0);
        const double u = std::sin(deg2rad(theta)) - s_inc;
        std::complex<double> acc{0.0, 0.0};
        for (int q = 0; q < layout.cols; ++q)
            acc += cs[static_cast<std::size_t>(q)] *
                   std::exp(j1 * (k0 * cell_x_m(layout, q) * u));
        const double num = std::abs(acc) * element_gain(cfg.element, theta);
        pat.points.push_back({theta, ratio_db(num, n_cells * elem_inc)});
    }
    return pat;
}

Lobe strongest_nonspecular_lobe(const BistaticPattern &pattern, double exclusion_deg) {
    if (!(exclusion_deg >= 0.0))
        throw validation_error("exclusion_deg must be non-negative");
    const double theta_spec = pattern.incidence.theta_deg;

    const PatternPoint *best = nullptr;
    for (const auto &p : pattern.points) {
        if (std::abs(p.theta_deg - theta_spec) <= exclusion_deg)
            continue;
        if (best == nullptr || p.level_dB > best->level_dB)
            best = &p;
    }
    if (best == nullptr)
        throw validation_error("specular exclusion removed every pattern point");
    return Lobe{best->theta_deg, best->level_dB};
}

std::optional<double> grating_lobe_deg(double freq_GHz, double lambda_mm) {
    if (!(freq_GHz > 0.0) || !(lambda_mm > 0.0))
        throw validation_error("grating lobe needs positive frequency and period");
    const double ratio = wavelength_mm(freq_GHz) / lambda_mm;
    if (ratio > 1.0)
        return std::nullopt;
    return rad2deg(std::asin(ratio));
}

} // namespace rcsr
