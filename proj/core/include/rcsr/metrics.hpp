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

#ifndef RCSR_METRICS_HPP
#define RCSR_METRICS_HPP

// Monostatic RCS-reduction figures of merit for a mixed-cell aperture under
// the coherent-sum (array equivalence) model, plus threshold-band extraction
// and the optimization objectives built on them.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <rcsr/cellmodel.hpp>

namespace rcsr {

// Levels below this are clamped; avoids -inf dB at perfect cancellation.
inline constexpr double kRcsrFloorDb = -300.0;

// Cell counts per palette type.
struct WeightVector {
    std::vector<int> counts;

    int total() const;
    std::size_t size() const { return counts.size(); }
};

// Non-negative entries; when expected_total >= 0 the sum must match it.
void validate(const WeightVector &weights, int expected_total = -1);

// Uniformly spaced closed frequency interval.
struct FrequencyGrid {
    double f_start_GHz = 10.0;
    double f_stop_GHz = 35.0;
    int n_points = 251;

    double at(int i) const;
    std::vector<double> frequencies() const;
};

void validate(const FrequencyGrid &grid);

struct SpectrumPoint {
    double freq_GHz = 0.0;
    double rcsr_dB = 0.0;
};

struct RcsSpectrum {
    std::vector<SpectrumPoint> points;
    IncidenceSpec incidence{};
    std::string source;  // "formula" or "array-factor"
};

// RCS reduction of an equal-split two-type aperture relative to a PEC plate:
// 10 log10(|g1 + g2|^2 / 4).
double rcsr_two(std::complex<double> g1, std::complex<double> g2);

// Weighted generalization: 10 log10(|sum m_i g_i|^2 / (sum m_i)^2).
double rcsr_weighted(std::span<const std::complex<double>> gammas,
                     const WeightVector &weights);

// RCSR vs frequency from per-type reflection data.
RcsSpectrum rcsr_spectrum(const ReflectionProvider &provider, const WeightVector &weights,
                          const FrequencyGrid &grid, const IncidenceSpec &inc);

struct Band {
    double f_lo_GHz = 0.0;
    double f_hi_GHz = 0.0;

    double width_GHz() const { return f_hi_GHz - f_lo_GHz; }
    // 2 (f_hi - f_lo) / (f_hi + f_lo), in percent.
    double fractional_bw_percent() const;
};

// Contiguous runs where rcsr_dB <= threshold. Interior band edges are refined
// by linear interpolation between the bracketing samples; runs touching the
// grid ends keep the end frequency. Sorted by width descending, then by
// f_lo ascending.
std::vector<Band> threshold_band(const RcsSpectrum &spectrum, double threshold_dB = -10.0);

// Worst (largest) rcsr_dB over grid points inside [f_lo, f_hi]. Throws
// validation_error when the band contains no samples.
double objective_worst_case(const RcsSpectrum &spectrum, double f_lo_GHz, double f_hi_GHz);

// Negated fractional bandwidth (percent) of the widest band at `threshold_dB`,
// 0 when no band exists. Lower is better, matching the minimizing optimizer.
double objective_bandwidth(const RcsSpectrum &spectrum, double threshold_dB = -10.0);

// Reusable objective for the optimizer: caches the per-type gamma matrix over
// the grid once, then evaluates candidate weight vectors without touching the
// provider again.
class SpectrumObjective {
  public:
    enum class Kind { WorstCase, Bandwidth };

    SpectrumObjective(const ReflectionProvider &provider, const FrequencyGrid &grid,
                      const IncidenceSpec &inc, Kind kind, double band_lo_GHz,
                      double band_hi_GHz, double threshold_dB = -10.0);

    double operator()(const WeightVector &weights) const;
    std::size_t type_count() const { return n_types_; }

  private:
    std::size_t n_types_;
    std::vector<double> freqs_;
    std::vector<std::complex<double>> gamma_;  // [type][freq]
    IncidenceSpec inc_;
    Kind kind_;
    double band_lo_, band_hi_, threshold_;
};

} // namespace rcsr

#endif
