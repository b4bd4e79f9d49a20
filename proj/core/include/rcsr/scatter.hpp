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

#ifndef RCSR_SCATTER_HPP
#define RCSR_SCATTER_HPP

// Array-factor scattering of the finite layout: each cell re-radiates with
// its reflection coefficient from a point at the cell center. Levels are
// normalized to a PEC plate of identical aperture (every coefficient -1)
// evaluated by the same sum. Incidence and observation share the x-z plane;
// the phase origin sits at the aperture center, so the specular direction of
// incidence theta_inc is theta_obs = +theta_inc and backscatter is
// theta_obs = -theta_inc.

#include <complex>
#include <optional>
#include <vector>

#include <rcsr/cellmodel.hpp>
#include <rcsr/layout.hpp>
#include <rcsr/metrics.hpp>

namespace rcsr {

enum class ElementPattern {
    Isotropic,
    Cosine,  // cos(theta) taper on both incidence and observation
};

struct ScatterConfig {
    double theta_step_deg = 0.25;  // bistatic cut resolution
    ElementPattern element = ElementPattern::Isotropic;
};

void validate(const ScatterConfig &cfg);

// Complex monostatic backscatter sum at theta_inc, normalized by the cell
// count (a PEC aperture at normal incidence gives exactly -1).
std::complex<double> backscatter_coefficient(const SurfaceLayout &layout,
                                             const ReflectionProvider &provider,
                                             double freq_GHz, const IncidenceSpec &inc);

// Monostatic RCSR vs frequency: 20 log10(|sum| / |sum_PEC|) at each grid
// point, clamped to [-300, 300] dB. Source tag "array-factor".
RcsSpectrum monostatic_spectrum(const SurfaceLayout &layout, const ReflectionProvider &provider,
                                const FrequencyGrid &grid, const IncidenceSpec &inc);

struct PatternPoint {
    double theta_deg = 0.0;
    double level_dB = 0.0;
};

// Bistatic cut in the incidence plane at one frequency. Levels relative to
// the PEC specular peak.
struct BistaticPattern {
    double freq_GHz = 0.0;
    IncidenceSpec incidence{};
    std::vector<PatternPoint> points;  // theta strictly increasing over [-90, 90]
};

BistaticPattern bistatic_cut(const SurfaceLayout &layout, const ReflectionProvider &provider,
                             double freq_GHz, const IncidenceSpec &inc,
                             const ScatterConfig &cfg = {});

struct Lobe {
    double theta_deg = 0.0;
    double level_dB = 0.0;
};

// Strongest pattern point outside +/- exclusion_deg of the specular
// direction. Throws validation_error when the exclusion swallows the cut.
Lobe strongest_nonspecular_lobe(const BistaticPattern &pattern, double exclusion_deg = 10.0);

// First-order grating/quantization lobe direction asin(lambda / Lambda) in
// degrees, or no value when lambda > Lambda.
std::optional<double> grating_lobe_deg(double freq_GHz, double lambda_mm);

} // namespace rcsr

#endif
