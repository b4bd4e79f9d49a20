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

#ifndef RCSR_UNITS_HPP
#define RCSR_UNITS_HPP

// Unit conventions used across the public API: frequencies in GHz, lengths in
// mm, angles in degrees unless a name says otherwise. SI conversion happens
// inside the numerical kernels.

#include <cmath>
#include <numbers>

namespace rcsr {

namespace constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c0 = 299792458.0;          // vacuum speed of light, m/s
inline constexpr double mu0 = 4.0e-7 * pi;         // vacuum permeability, H/m
inline constexpr double eps0 = 1.0 / (mu0 * c0 * c0);
inline const double eta0 = std::sqrt(mu0 / eps0);  // free-space impedance, ~376.73 Ohm

} // namespace constants

inline constexpr double deg2rad(double deg) { return deg * constants::pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / constants::pi; }

// Angular wavenumber in rad/m for a frequency in GHz.
inline double wavenumber(double freq_GHz) {
    return 2.0 * constants::pi * freq_GHz * 1.0e9 / constants::c0;
}

// Free-space wavelength in mm.
inline double wavelength_mm(double freq_GHz) {
    return constants::c0 / (freq_GHz * 1.0e9) * 1.0e3;
}

// Wrap an angle in degrees to the half-open interval (-180, 180].
inline double wrap_phase_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0)
        w += 360.0;
    else if (w > 180.0)
        w -= 360.0;
    return w;
}

} // namespace rcsr

#endif
