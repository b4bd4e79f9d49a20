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

#include <rcsr/cellmodel.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <rcsr/errors.hpp>

namespace rcsr {

namespace {

constexpr std::complex<double> j1{0.0, 1.0};

// Guard half-width around tan(beta d) poles, in radians of beta*d.
constexpr double kPoleGuardRad = 1.0e-3;

double omega(double freq_GHz) { return 2.0 * constants::pi * freq_GHz * 1.0e9; }

void check_freq(double freq_GHz) {
    if (!(freq_GHz > 0.0))
        throw validation_error("frequency must be positive, got " + std::to_string(freq_GHz) +
                               " GHz");
}

} // namespace

const char *to_string(Polarization pol) {
    return pol == Polarization::TE ? "TE" : "TM";
}

void validate(const UnitCellSpec &cell) {
    std::ostringstream err;
    if (!(cell.period_mm > 0.0))
        err << "period_mm must be positive (got " << cell.period_mm << ")";
    else if (!(cell.gap_mm > 0.0) || !(cell.gap_mm < cell.period_mm))
        err << "gap_mm must satisfy 0 < g < D (got g=" << cell.gap_mm
            << ", D=" << cell.period_mm << ")";
    else if (!(cell.thickness_mm > 0.0))
        err << "thickness_mm must be positive (got " << cell.thickness_mm << ")";
    else if (!(cell.eps_r >= 1.0))
        err << "eps_r must be >= 1 (got " << cell.eps_r << ")";
    else if (!(cell.tan_delta >= 0.0))
        err << "tan_delta must be >= 0 (got " << cell.tan_delta << ")";
    if (!err.str().empty())
        throw validation_error("unit cell: " + err.str());
}

void validate(const IncidenceSpec &inc) {
    if (!(inc.theta_deg >= 0.0) || !(inc.theta_deg < 90.0))
        throw validation_error("incidence: theta_deg must lie in [0, 90), got " +
                               std::to_string(inc.theta_deg));
}

double ReflectionSample::phase_deg() const {
    return wrap_phase_deg(rad2deg(std::arg(gamma)));
}

std::complex<double> grid_impedance(const UnitCellSpec &cell, double freq_GHz,
                                    const IncidenceSpec &inc) {
    validate(cell);
    validate(inc);
    check_freq(freq_GHz);

    const double eps_eff = 0.5 * (cell.eps_r + 1.0);
    const double k_eff = wavenumber(freq_GHz) * std::sqrt(eps_eff);
    const double eta_eff = constants::eta0 / std::sqrt(eps_eff);
    const double D = cell.period_mm * 1.0e-3;
    const double g = cell.gap_mm * 1.0e-3;

    // Grid parameter of the averaged capacitive patch array.
    const double alpha = k_eff * D / constants::pi *
                         std::log(1.0 / std::sin(constants::pi * g / (2.0 * D)));
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw numeric_error("grid parameter alpha is not positive and finite");

    const std::complex<double> z_tm = -j1 * eta_eff / (2.0 * alpha);
    if (inc.pol == Polarization::TM)
        return z_tm;

    const double s = std::sin(deg2rad(inc.theta_deg));
    return z_tm / (1.0 - s * s / (2.0 * eps_eff));
}

std::complex<double> slab_impedance(const UnitCellSpec &cell, double freq_GHz,
                                    const IncidenceSpec &inc) {
    validate(cell);
    validate(inc);
    check_freq(freq_GHz);

    const double k0 = wavenumber(freq_GHz);
    const double d = cell.thickness_mm * 1.0e-3;
    const double s = std::sin(deg2rad(inc.theta_deg));
    const std::complex<double> eps_c = cell.eps_r * (1.0 - j1 * cell.tan_delta);

    // Longitudinal wavenumber in the slab.
    const std::complex<double> beta = k0 * std::sqrt(eps_c - s * s);

    // tan(beta d) poles make the short-circuit transform singular; refuse to
    // evaluate inside a narrow guard band instead of returning huge garbage.
    const double arg = std::fmod(std::abs(beta.real()) * d, constants::pi);
    if (std::abs(arg - 0.5 * constants::pi) < kPoleGuardRad) {
        std::ostringstream msg;
        msg << "slab impedance pole at f=" << freq_GHz << " GHz, theta=" << inc.theta_deg
            << " deg (beta*d within " << kPoleGuardRad << " rad of pi/2 mod pi)";
        throw numeric_error(msg.str());
    }

    const std::complex<double> t = std::tan(beta * d);
    const double w = omega(freq_GHz);

    // At broadside the TE and TM wave impedances coincide; one shared branch
    // keeps the two polarizations bit-identical there.
    std::complex<double> z;
    if (s == 0.0)
        z = j1 * constants::eta0 / std::sqrt(eps_c) * t;
    else if (inc.pol == Polarization::TE)
        z = j1 * w * constants::mu0 * t / beta;
    else
        z = j1 * beta * t / (w * constants::eps0 * eps_c);

    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw numeric_error("slab impedance is not finite");
    return z;
}

ReflectionSample reflection(const UnitCellSpec &cell, double freq_GHz,
                            const IncidenceSpec &inc) {
    const std::complex<double> zg = grid_impedance(cell, freq_GHz, inc);
    const std::complex<double> zs = slab_impedance(cell, freq_GHz, inc);

    const std::complex<double> sum = zg + zs;
    if (std::abs(sum) == 0.0)
        throw numeric_error("grid and slab impedances cancel; parallel combination singular");
    const std::complex<double> z_in = zg * zs / sum;

    const double c = std::cos(deg2rad(inc.theta_deg));
    const double eta_pol =
        inc.pol == Polarization::TE ? constants::eta0 / c : constants::eta0 * c;

    const std::complex<double> gamma = (z_in - eta_pol) / (z_in + eta_pol);
    if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
        throw numeric_error("reflection coefficient is not finite");
    return ReflectionSample{freq_GHz, gamma};
}

double resonance_frequency(const UnitCellSpec &cell, const IncidenceSpec &inc,
                           double f_lo_GHz, double f_hi_GHz) {
    if (!(f_lo_GHz > 0.0) || !(f_lo_GHz < f_hi_GHz))
        throw validation_error("resonance bracket requires 0 < f_lo < f_hi");

    auto phase = [&](double f) { return reflection(cell, f, inc).phase_deg(); };

    double lo = f_lo_GHz, hi = f_hi_GHz;
    const double p_lo = phase(lo);
    const double p_hi = phase(hi);
    if (!(p_lo > 0.0) || !(p_hi < 0.0))
        throw numeric_error("bracket does not straddle the phase zero crossing "
                            "(phase(f_lo) must be > 0 and phase(f_hi) < 0)");

    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double p = phase(mid);
        if (std::abs(p) < 1.0e-3)
            return mid;
        if (p > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(phase(mid)) > 1.0e-2)
        throw numeric_error("resonance bisection failed to settle below 0.01 degrees");
    return mid;
}

const std::complex<double> &PhaseTable::at(std::size_t type_index,
                                           std::size_t freq_index) const {
    return gamma[type_index * freq_count() + freq_index];
}

void validate(const PhaseTable &table) {
    if (table.type_ids.empty() || table.freqs_GHz.empty())
        throw validation_error("phase table must contain at least one type and one frequency");
    for (std::size_t i = 1; i < table.type_ids.size(); ++i)
        if (table.type_ids[i] <= table.type_ids[i - 1])
            throw validation_error("phase table type ids must be strictly ascending");
    for (std::size_t i = 1; i < table.freqs_GHz.size(); ++i)
        if (!(table.freqs_GHz[i] > table.freqs_GHz[i - 1]))
            throw validation_error("phase table frequencies must be strictly ascending");
    if (table.gamma.size() != table.type_count() * table.freq_count())
        throw validation_error("phase table is ragged: expected " +
                               std::to_string(table.type_count() * table.freq_count()) +
                               " samples, got " + std::to_string(table.gamma.size()));
    for (std::size_t i = 0; i < table.gamma.size(); ++i)
        if (std::abs(table.gamma[i]) > 1.0 + 1.0e-6)
            throw validation_error("phase table sample " + std::to_string(i) +
                                   " breaks passivity: |gamma| = " +
                                   std::to_string(std::abs(table.gamma[i])));
}

ReflectionSample tabulated_reflection(const PhaseTable &table, int type_id,
                                      double freq_GHz) {
    const auto it = std::lower_bound(table.type_ids.begin(), table.type_ids.end(), type_id);
    if (it == table.type_ids.end() || *it != type_id)
        throw validation_error("phase table has no type id " + std::to_string(type_id));
    const std::size_t ti = static_cast<std::size_t>(it - table.type_ids.begin());

    const auto &fs = table.freqs_GHz;
    if (freq_GHz < fs.front() || freq_GHz > fs.back()) {
        std::ostringstream msg;
        msg << "frequency " << freq_GHz << " GHz outside table range [" << fs.front() << ", "
            << fs.back() << "]";
        throw validation_error(msg.str());
    }

    const auto hi = std::lower_bound(fs.begin(), fs.end(), freq_GHz);
    if (hi == fs.begin() || *hi == freq_GHz) {
        const std::size_t fi = static_cast<std::size_t>(hi - fs.begin());
        return ReflectionSample{freq_GHz, table.at(ti, fi)};
    }
    const std::size_t i1 = static_cast<std::size_t>(hi - fs.begin());
    const std::size_t i0 = i1 - 1;
    const double t = (freq_GHz - fs[i0]) / (fs[i1] - fs[i0]);
    const std::complex<double> g = table.at(ti, i0) * (1.0 - t) + table.at(ti, i1) * t;
    return ReflectionSample{freq_GHz, g};
}

AnalyticProvider::AnalyticProvider(std::vector<UnitCellSpec> palette)
    : palette_(std::move(palette)) {
    if (palette_.empty())
        throw validation_error("analytic provider needs a non-empty palette");
    for (const auto &cell : palette_)
        validate(cell);
}

std::complex<double> AnalyticProvider::gamma(std::size_t type_index, double freq_GHz,
                                             const IncidenceSpec &inc) const {
    if (type_index >= palette_.size())
        throw validation_error("type index " + std::to_string(type_index) +
                               " outside palette of " + std::to_string(palette_.size()));
    return reflection(palette_[type_index], freq_GHz, inc).gamma;
}

TableProvider::TableProvider(PhaseTable table) : table_(std::move(table)) {
    validate(table_);
}

std::complex<double> TableProvider::gamma(std::size_t type_index, double freq_GHz,
                                          const IncidenceSpec &) const {
    if (type_index >= table_.type_count())
        throw validation_error("type index " + std::to_string(type_index) +
                               " outside table of " + std::to_string(table_.type_count()));
    return tabulated_reflection(table_, table_.type_ids[type_index], freq_GHz).gamma;
}

} // namespace rcsr
