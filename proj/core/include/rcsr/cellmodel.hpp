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

#ifndef RCSR_CELLMODEL_HPP
#define RCSR_CELLMODEL_HPP

// Averaged sheet-impedance model of a square-patch high-impedance-surface
// unit cell: a capacitive patch grid over a grounded dielectric slab. The
// e^{+j omega t} time convention is used throughout, so a PEC plane has
// reflection coefficient -1 and the patch grid impedance is capacitive
// (negative imaginary part).

#include <complex>
#include <cstddef>
#include <vector>

#include <rcsr/units.hpp>

namespace rcsr {

enum class Polarization { TE, TM };

const char *to_string(Polarization pol);

// Geometry and substrate of one unit cell. The gap g is the edge-to-edge
// spacing between neighbouring patches, g = D - L for patch side L.
struct UnitCellSpec {
    double period_mm = 6.0;     // lattice period D
    double gap_mm = 1.0;        // inter-patch gap g, 0 < g < D
    double thickness_mm = 1.6;  // substrate thickness d
    double eps_r = 3.55;        // substrate relative permittivity
    double tan_delta = 0.0;     // substrate loss tangent
};

// Throws validation_error on non-physical parameters.
void validate(const UnitCellSpec &cell);

struct IncidenceSpec {
    double theta_deg = 0.0;     // polar angle from broadside, 0 <= theta < 90
    Polarization pol = Polarization::TE;
};

void validate(const IncidenceSpec &inc);

struct ReflectionSample {
    double freq_GHz = 0.0;
    std::complex<double> gamma{};

    double magnitude() const { return std::abs(gamma); }
    // Phase in degrees wrapped to (-180, 180].
    double phase_deg() const;
};

// Sheet impedance of the patch grid (averaged capacitive-grid formula with
// the effective half-space permittivity (eps_r + 1) / 2).
std::complex<double> grid_impedance(const UnitCellSpec &cell, double freq_GHz,
                                    const IncidenceSpec &inc);

// Input impedance of the grounded dielectric slab (transmission-line
// transform of a short circuit through thickness d). Throws numeric_error
// within the guard band of a tan(beta d) pole.
std::complex<double> slab_impedance(const UnitCellSpec &cell, double freq_GHz,
                                    const IncidenceSpec &inc);

// Reflection coefficient of the cell: grid and slab impedances in parallel
// against the polarization-dependent free-space wave impedance.
ReflectionSample reflection(const UnitCellSpec &cell, double freq_GHz,
                            const IncidenceSpec &inc);

// Zero-phase resonance inside [f_lo, f_hi], located by bisection on the
// wrapped phase to better than 0.01 degrees. Throws numeric_error when the
// bracket does not straddle a +/- phase change.
double resonance_frequency(const UnitCellSpec &cell, const IncidenceSpec &inc,
                           double f_lo_GHz, double f_hi_GHz);

// Rectangular table of reflection coefficients: one row set per type id over
// a shared ascending frequency grid. This is the interchange format for
// measured or full-wave cell data.
struct PhaseTable {
    std::vector<int> type_ids;                 // ascending, unique
    std::vector<double> freqs_GHz;             // ascending, shared by all types
    std::vector<std::complex<double>> gamma;   // [type][freq], row-major

    std::size_t type_count() const { return type_ids.size(); }
    std::size_t freq_count() const { return freqs_GHz.size(); }
    const std::complex<double> &at(std::size_t type_index, std::size_t freq_index) const;
};

void validate(const PhaseTable &table);

// Linear interpolation in frequency for one type id (not index). Throws
// validation_error for unknown ids or out-of-range frequencies.
ReflectionSample tabulated_reflection(const PhaseTable &table, int type_id, double freq_GHz);

// Uniform source of per-type reflection coefficients for the metrics and
// scatter layers: either the analytic model over a palette of cells, or a
// loaded phase table.
class ReflectionProvider {
  public:
    virtual ~ReflectionProvider() = default;
    virtual std::size_t type_count() const = 0;
    virtual std::complex<double> gamma(std::size_t type_index, double freq_GHz,
                                       const IncidenceSpec &inc) const = 0;
};

class AnalyticProvider : public ReflectionProvider {
  public:
    explicit AnalyticProvider(std::vector<UnitCellSpec> palette);
    std::size_t type_count() const override { return palette_.size(); }
    std::complex<double> gamma(std::size_t type_index, double freq_GHz,
                               const IncidenceSpec &inc) const override;
    const std::vector<UnitCellSpec> &palette() const { return palette_; }

  private:
    std::vector<UnitCellSpec> palette_;
};

// Table-backed provider. Tables carry no incidence dependence; the stored
// curves are used for whatever incidence the caller requests.
class TableProvider : public ReflectionProvider {
  public:
    explicit TableProvider(PhaseTable table);
    std::size_t type_count() const override { return table_.type_count(); }
    std::complex<double> gamma(std::size_t type_index, double freq_GHz,
                               const IncidenceSpec &inc) const override;
    const PhaseTable &table() const { return table_; }

  private:
    PhaseTable table_;
};

} // namespace rcsr

#endif
