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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <rcsr/errors.hpp>
#include <rcsr/metrics.hpp>
#include <rcsr/units.hpp>

#include "test_util.hpp"

using namespace rcsr;

namespace {

std::complex<double> polar_deg(double mag, double deg) {
    return std::polar(mag, deg2rad(deg));
}

// Triangular synthetic spectrum on the default grid: exactly at `threshold`
// dB at f_lo/f_hi (both must be grid points), descending to a vertex between
// them, 0 dB outside. Band membership is decided by index so one-ulp noise in
// the grid cannot move the edges.
RcsSpectrum tent_spectrum(double f_lo, double f_hi, double threshold = -10.0) {
    const FrequencyGrid grid;
    const double step = (grid.f_stop_GHz - grid.f_start_GHz) / (grid.n_points - 1);
    const int i_lo = static_cast<int>(std::lround((f_lo - grid.f_start_GHz) / step));
    const int i_hi = static_cast<int>(std::lround((f_hi - grid.f_start_GHz) / step));
    const double mid = 0.5 * (i_lo + i_hi);

    RcsSpectrum spec;
    spec.source = "formula";
    for (int i = 0; i < grid.n_points; ++i) {
        double level;
        if (i < i_lo || i > i_hi)
            level = 0.0;
        else if (i <= mid)
            level = threshold - 5.0 * (i - i_lo) / (mid - i_lo);
        else
            level = threshold - 5.0 + 5.0 * (i - mid) / (i_hi - mid);
        spec.points.push_back({grid.at(i), level});
    }
    return spec;
}

} // namespace

TEST_CASE("weight vector validation") {
    CHECK_THROWS_AS(validate(WeightVector{{}}), validation_error);
    CHECK_THROWS_AS(validate(WeightVector{{3, -1}}), validation_error);
    CHECK_THROWS_AS(validate(WeightVector{{0, 0}}), validation_error);
    CHECK_THROWS_AS(validate(WeightVector{{3, 1}}, 5), validation_error);
    CHECK_NOTHROW(validate(WeightVector{{3, 1}}, 4));
    CHECK_NOTHROW(validate(WeightVector{{3, 1}}));
    CHECK(WeightVector{{104, 112, 164, 196, 412, 336, 276}}.total() == 1600);
}

TEST_CASE("frequency grid endpoints are exact") {
    const FrequencyGrid g{10.0, 35.0, 251};
    CHECK(g.at(0) == 10.0);
    CHECK(g.at(250) == 35.0);
    CHECK(g.at(13) == doctest::Approx(11.3).epsilon(1e-12));
    const auto fs = g.frequencies();
    CHECK(fs.size() == 251);
    CHECK(fs.front() == 10.0);
    CHECK(fs.back() == 35.0);
    CHECK_THROWS_AS(validate(FrequencyGrid{10.0, 9.0, 251}), validation_error);
    CHECK_THROWS_AS(validate(FrequencyGrid{10.0, 35.0, 1}), validation_error);
    CHECK_THROWS_AS(validate(FrequencyGrid{0.0, 35.0, 251}), validation_error);
}

TEST_CASE("two-cell reduction: antiphase floor, coherent zero, 143-degree point") {
    CHECK(rcsr_two(polar_deg(1, 0), polar_deg(1, 180)) == kRcsrFloorDb);
    CHECK(rcsr_two(polar_deg(1, 0), polar_deg(1, 0)) == doctest::Approx(0.0).epsilon(1e-12));

    // Closed form: 20 log10 |cos(dphi / 2)|.
    const double v143 = rcsr_two(polar_deg(1, 0), polar_deg(1, 143));
    CHECK(v143 == doctest::Approx(20.0 * std::log10(std::cos(deg2rad(71.5)))).epsilon(1e-12));
    CHECK(v143 == doctest::Approx(-9.97).epsilon(0.005));

    for (double dphi = 0.0; dphi <= 359.0; dphi += 1.0) {
        const double got = rcsr_two(polar_deg(1, 0), polar_deg(1, dphi));
        const double closed =
            std::max(kRcsrFloorDb, 20.0 * std::log10(std::abs(std::cos(deg2rad(dphi / 2)))));
        CHECK(got == doctest::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("weighted reduction basics") {
    const std::vector<std::complex<double>> anti = {polar_deg(1, 0), polar_deg(1, 180)};

    CHECK(rcsr_weighted(anti, WeightVector{{1, 1}}) == kRcsrFloorDb);
    CHECK(rcsr_weighted(anti, WeightVector{{3, 1}}) ==
          doctest::Approx(20.0 * std::log10(0.5)).epsilon(1e-12));

    const std::vector<std::complex<double>> coherent(7, polar_deg(1, 0));
    CHECK(rcsr_weighted(coherent, WeightVector{{104, 112, 164, 196, 412, 336, 276}}) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(rcsr_weighted(anti, WeightVector{{1, 1, 1}}), validation_error);
    const std::vector<std::complex<double>> one = {polar_deg(1, 0)};
    CHECK_THROWS_AS(rcsr_weighted(one, WeightVector{{4}}), validation_error);
}

TEST_CASE("weighted reduction properties: pair equivalence, scaling, permutation, bound") {
    std::mt19937_64 rng(20260819);
    auto rand_gamma = [&]() {
        std::uniform_real_distribution<double> mag(0.0, 1.0), ph(0.0, 360.0);
        return polar_deg(mag(rng), ph(rng));
    };

    for (int trial = 0; trial < 100; ++trial) {
        const std::complex<double> a = rand_gamma(), b = rand_gamma();
        const std::vector<std::complex<double>> g2 = {a, b};
        CHECK(rcsr_weighted(g2, WeightVector{{1, 1}}) ==
              doctest::Approx(rcsr_two(a, b)).epsilon(1e-12));

        std::vector<std::complex<double>> g5(5);
        std::vector<int> m5(5);
        std::uniform_int_distribution<int> cnt(1, 400);
        for (int i = 0; i < 5; ++i) {
            g5[static_cast<std::size_t>(i)] = rand_gamma();
            m5[static_cast<std::size_t>(i)] = cnt(rng);
        }
        const double base = rcsr_weighted(g5, WeightVector{{m5}});

        // Integer scale invariance.
        std::vector<int> m5k = m5;
        for (int &v : m5k)
            v *= 7;
        CHECK(rcsr_weighted(g5, WeightVector{{m5k}}) == doctest::Approx(base).epsilon(1e-12));

        // Permutation equivariance.
        std::vector<std::size_t> perm = {3, 0, 4, 1, 2};
        std::vector<std::complex<double>> gp(5);
        std::vector<int> mp(5);
        for (std::size_t i = 0; i < 5; ++i) {
            gp[i] = g5[perm[i]];
            mp[i] = m5[perm[i]];
        }
        CHECK(rcsr_weighted(gp, WeightVector{{mp}}) == doctest::Approx(base).epsilon(1e-12));

        // Never a gain for passive cells.
        CHECK(base <= 1.0e-12);
    }

    // Equality exactly at phase alignment with unit magnitudes.
    const std::vector<std::complex<double>> aligned = {polar_deg(1, 37), polar_deg(1, 37)};
    CHECK(rcsr_weighted(aligned, WeightVector{{5, 11}}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectrum of a single active lossless type sits at 0 dB") {
    AnalyticProvider provider(testutil::two_type_palette());
    const FrequencyGrid grid{10.0, 24.0, 57};  // keep clear of the slab pole
    const auto spec = rcsr_spectrum(provider, WeightVector{{1600, 0}}, grid,
                                    IncidenceSpec{0.0, Polarization::TE});
    CHECK(spec.points.size() == 57);
    CHECK(spec.source == "formula");
    for (const auto &p : spec.points)
        CHECK(std::abs(p.rcsr_dB) < 1.0e-9);
}

TEST_CASE("two-type spectrum dips below -10 dB only near the 180-degree crossing") {
    const auto palette = testutil::two_type_palette();
    AnalyticProvider provider(palette);
    const IncidenceSpec inc{0.0, Polarization::TE};

    // Locate the phase-opposition frequency from the cell model alone.
    auto wrapped_diff = [&](double f) {
        const double p0 = reflection(palette[0], f, inc).phase_deg();
        const double p1 = reflection(palette[1], f, inc).phase_deg();
        return wrap_phase_deg(p0 - p1 - 180.0);
    };
    double lo = 14.0, hi = 18.0;
    REQUIRE(wrapped_diff(lo) < 0.0);
    REQUIRE(wrapped_diff(hi) > 0.0);
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (wrapped_diff(mid) < 0.0 ? lo : hi) = mid;
    }
    const double crossing = 0.5 * (lo + hi);
    CHECK(crossing == doctest::Approx(15.9409).epsilon(1e-3));

    const auto spec =
        rcsr_spectrum(provider, WeightVector{{800, 800}}, FrequencyGrid{10.0, 35.0, 251}, inc);

    const auto min_it = std::min_element(
        spec.points.begin(), spec.points.end(),
        [](const SpectrumPoint &a, const SpectrumPoint &b) { return a.rcsr_dB < b.rcsr_dB; });
    CHECK(std::abs(min_it->freq_GHz - crossing) <= 0.5);

    bool any_deep = false;
    for (const auto &p : spec.points) {
        if (p.rcsr_dB <= -10.0) {
            any_deep = true;
            CHECK(std::abs(p.freq_GHz - crossing) <= 2.0);
        }
    }
    CHECK(any_deep);
}

TEST_CASE("threshold bands: reference-shaped synthetic spectra") {
    const auto spec = tent_spectrum(11.3, 32.3);
    const auto bands = threshold_band(spec);
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].f_lo_GHz == doctest::Approx(11.3).epsilon(1e-9));
    CHECK(bands[0].f_hi_GHz == doctest::Approx(32.3).epsilon(1e-9));
    CHECK(bands[0].fractional_bw_percent() == doctest::Approx(96.33).epsilon(1e-3));

    const auto spec40 = tent_spectrum(21.7, 34.5);
    const auto bands40 = threshold_band(spec40);
    REQUIRE(bands40.size() == 1);
    CHECK(bands40[0].fractional_bw_percent() == doctest::Approx(45.552).epsilon(1e-3));

    // Flat -9 dB never crosses the default threshold.
    RcsSpectrum flat;
    for (int i = 0; i < 251; ++i)
        flat.points.push_back({FrequencyGrid{}.at(i), -9.0});
    CHECK(threshold_band(flat).empty());

    RcsSpectrum tiny;
    tiny.points.push_back({10.0, -20.0});
    CHECK_THROWS_AS(threshold_band(tiny), validation_error);
}

TEST_CASE("threshold bands: interpolated edges, grid ends, ordering") {
    // Spectrum with two bands of different widths; edges off the sample grid.
    RcsSpectrum spec;
    const FrequencyGrid grid;
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = grid.at(i);
        double level = 0.0;
        if (f >= 12.0 && f <= 13.0)
            level = -14.0;  // narrow band, edges interpolate at -10
        if (f >= 20.0 && f <= 24.0)
            level = -14.0;  // wide band
        spec.points.push_back({f, level});
    }
    const auto bands = threshold_band(spec);
    REQUIRE(bands.size() == 2);
    // Sorted by width descending.
    CHECK(bands[0].width_GHz() > bands[1].width_GHz());
    CHECK(bands[0].f_lo_GHz < 20.0);
    CHECK(bands[0].f_lo_GHz > 19.8);
    CHECK(bands[1].f_lo_GHz < 12.0);
    CHECK(bands[1].f_lo_GHz > 11.8);

    // A run touching the grid end keeps the end frequency.
    RcsSpectrum edge;
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = grid.at(i);
        edge.points.push_back({f, f <= 12.0 ? -15.0 : 0.0});
    }
    const auto eb = threshold_band(edge);
    REQUIRE(eb.size() == 1);
    CHECK(eb[0].f_lo_GHz == 10.0);

    // Round trip: a band built from a tent is recovered within one grid step.
    const auto rt = threshold_band(tent_spectrum(14.0, 27.5));
    REQUIRE(rt.size() == 1);
    CHECK(std::abs(rt[0].f_lo_GHz - 14.0) <= 0.1);
    CHECK(std::abs(rt[0].f_hi_GHz - 27.5) <= 0.1);
}

TEST_CASE("objectives: worst case picks the maximum, bandwidth negates the widest band") {
    RcsSpectrum flat;
    const FrequencyGrid grid;
    for (int i = 0; i < grid.n_points; ++i)
        flat.points.push_back({grid.at(i), -12.0});
    CHECK(objective_worst_case(flat, 11.3, 32.3) == -12.0);

    RcsSpectrum spike = flat;
    spike.points[100].rcsr_dB = -5.0;  // f = 20 GHz
    CHECK(objective_worst_case(spike, 11.3, 32.3) == -5.0);
    // Outside the band the spike is invisible.
    CHECK(objective_worst_case(spike, 25.0, 32.3) == -12.0);
    CHECK_THROWS_AS(objective_worst_case(spike, 35.5, 36.0), validation_error);
    CHECK_THROWS_AS(objective_worst_case(spike, 20.0, 20.0), validation_error);

    const auto tent = tent_spectrum(11.3, 32.3);
    CHECK(objective_bandwidth(tent) ==
          doctest::Approx(-threshold_band(tent)[0].fractional_bw_percent()).epsilon(1e-12));
    RcsSpectrum shallow;
    for (int i = 0; i < grid.n_points; ++i)
        shallow.points.push_back({grid.at(i), -9.0});
    CHECK(objective_bandwidth(shallow) == 0.0);
}

TEST_CASE("spectrum objective matches its direct counterparts") {
    AnalyticProvider provider(testutil::reference_palette());
    const FrequencyGrid grid;
    const IncidenceSpec inc{0.0, Polarization::TE};
    const WeightVector w{{104, 112, 164, 196, 412, 336, 276}};

    const SpectrumObjective minimax(provider, grid, inc, SpectrumObjective::Kind::WorstCase,
                                    11.3, 32.3);
    const auto spec = rcsr_spectrum(provider, w, grid, inc);
    CHECK(minimax(w) == doctest::Approx(objective_worst_case(spec, 11.3, 32.3)).epsilon(1e-12));

    const SpectrumObjective bw(provider, grid, inc, SpectrumObjective::Kind::Bandwidth, 11.3,
                               32.3);
    CHECK(bw(w) == doctest::Approx(objective_bandwidth(spec)).epsilon(1e-12));

    CHECK_THROWS_AS(minimax(WeightVector{{1, 1}}), validation_error);
}
