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

#include <rcsr/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <rcsr/errors.hpp>

namespace rcsr {

namespace {

double clamp_db(double mag, double den) {
    // 20 log10(mag / den) with the documented floor; den is a positive count.
    if (!(mag > 0.0))
        return kRcsrFloorDb;
    return std::max(kRcsrFloorDb, 20.0 * std::log10(mag / den));
}

} // namespace

int WeightVector::total() const {
    int sum = 0;
    for (int c : counts)
        sum += c;
    return sum;
}

void validate(const WeightVector &weights, int expected_total) {
    if (weights.counts.empty())
        throw validation_error("weight vector must not be empty");
    for (std::size_t i = 0; i < weights.counts.size(); ++i)
        if (weights.counts[i] < 0)
            throw validation_error("weight " + std::to_string(i) + " is negative (" +
                                   std::to_string(weights.counts[i]) + ")");
    const int total = weights.total();
    if (expected_total >= 0 && total != expected_total)
        throw validation_error("weights sum to " + std::to_string(total) + ", expected " +
                               std::to_string(expected_total));
    if (total <= 0)
        throw validation_error("weights must sum to a positive count");
}

double FrequencyGrid::at(int i) const {
    if (i == n_points - 1)
        return f_stop_GHz;
    return f_start_GHz + i * (f_stop_GHz - f_start_GHz) / (n_points - 1);
}

std::vector<double> FrequencyGrid::frequencies() const {
    std::vector<double> fs(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        fs[static_cast<std::size_t>(i)] = at(i);
    return fs;
}

void validate(const FrequencyGrid &grid) {
    if (!(grid.f_start_GHz > 0.0))
        throw validation_error("frequency grid must start above 0 GHz");
    if (!(grid.f_stop_GHz > grid.f_start_GHz))
        throw validation_error("frequency grid must satisfy f_start < f_stop");
    if (grid.n_points < 2)
        throw validation_error("frequency grid needs at least 2 points");
}

double rcsr_two(std::complex<double> g1, std::complex<double> g2) {
    return clamp_db(std::abs(g1 + g2), 2.0);
}

double rcsr_weighted(std::span<const std::complex<double>> gammas,
                     const WeightVector &weights) {
    if (gammas.size() != weights.counts.size())
        throw validation_error("gamma list and weight vector sizes differ (" +
                               std::to_string(gammas.size()) + " vs " +
                               std::to_string(weights.counts.size()) + ")");
    if (weights.counts.size() < 2)
        throw validation_error("mixing metric needs at least 2 cell types; "
                               "model a single-type surface as (N, 0)");
    validate(weights);

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < gammas.size(); ++i)
        acc += static_cast<double>(weights.counts[i]) * gammas[i];
    return clamp_db(std::abs(acc), static_cast<double>(weights.total()));
}

RcsSpectrum rcsr_spectrum(const ReflectionProvider &provider, const WeightVector &weights,
                          const FrequencyGrid &grid, const IncidenceSpec &inc) {
    validate(grid);
    validate(inc);
    if (weights.counts.size() != provider.type_count())
        throw validation_error("weight vector has " + std::to_string(weights.counts.size()) +
                               " entries for a provider with " +
                               std::to_string(provider.type_count()) + " types");
    validate(weights);

    RcsSpectrum spec;
    spec.incidence = inc;
    spec.source = "formula";
    spec.points.reserve(static_cast<std::size_t>(grid.n_points));

    std::vector<std::complex<double>> gammas(provider.type_count());
    for (int i = 0; i < grid.n_points; ++i) {
        const double f = grid.at(i);
        for (std::size_t t = 0; t < provider.type_count(); ++t)
            gammas[t] = provider.gamma(t, f, inc);
        spec.points.push_back({f, rcsr_weighted(gammas, weights)});
    }
    return spec;
}

double Band::fractional_bw_percent() const {
    return 200.0 * (f_hi_GHz - f_lo_GHz) / (f_hi_GHz + f_lo_GHz);
}

std::vector<Band> threshold_band(const RcsSpectrum &spectrum, double threshold_dB) {
    const auto &pts = spectrum.points;
    if (pts.size() < 2)
        throw validation_error("threshold_band needs a spectrum with at least 2 points");

    // Linear-interpolated crossing between a sample above threshold and its
    // neighbour at or below it.
    auto crossing = [&](std::size_t above, std::size_t below) {
        const double l0 = pts[above].rcsr_dB, l1 = pts[below].rcsr_dB;
        const double t = (threshold_dB - l0) / (l1 - l0);
        return pts[above].freq_GHz + t * (pts[below].freq_GHz - pts[above].freq_GHz);
    };

    std::vector<Band> bands;
    std::size_t i = 0;
    const std::size_t n = pts.size();
    while (i < n) {
        if (pts[i].rcsr_dB > threshold_dB) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && pts[j + 1].rcsr_dB <= threshold_dB)
            ++j;
        Band b;
        b.f_lo_GHz = (i == 0) ? pts.front().freq_GHz : crossing(i - 1, i);
        b.f_hi_GHz = (j == n - 1) ? pts.back().freq_GHz : crossing(j + 1, j);
        bands.push_back(b);
        i = j + 1;
    }

    std::sort(bands.begin(), bands.end(), [](const Band &a, const Band &b) {
        if (a.width_GHz() != b.width_GHz())
            return a.width_GHz() > b.width_GHz();
        return a.f_lo_GHz < b.f_lo_GHz;
    });
    return bands;
}

double objective_worst_case(const RcsSpectrum &spectrum, double f_lo_GHz, double f_hi_GHz) {
    if (!(f_lo_GHz < f_hi_GHz))
        throw validation_error("worst-case objective requires f_lo < f_hi");
    double worst = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto &p : spectrum.points) {
        if (p.freq_GHz < f_lo_GHz || p.freq_GHz > f_hi_GHz)
            continue;
        any = true;
        worst = std::max(worst, p.rcsr_dB);
    }
    if (!any) {
        std::ostringstream msg;
        msg << "band [" << f_lo_GHz << ", " << f_hi_GHz << "] GHz contains no spectrum samples";
        throw validation_error(msg.str());
    }
    return worst;
}

double objective_bandwidth(const RcsSpectrum &spectrum, double threshold_dB) {
    const auto bands = threshold_band(spectrum, threshold_dB);
    if (bands.empty())
        return 0.0;
    return -bands.front().fractional_bw_percent();
}

SpectrumObjective::SpectrumObjective(const ReflectionProvider &provider,
                                     const FrequencyGrid &grid, const IncidenceSpec &inc,
                                     Kind kind, double band_lo_GHz, double band_hi_GHz,
                                     double threshold_dB)
    : n_types_(provider.type_count()), freqs_(grid.frequencies()), inc_(inc), kind_(kind),
      band_lo_(band_lo_GHz), band_hi_(band_hi_GHz), threshold_(threshold_dB) {
    validate(grid);
    validate(inc);
    if (kind_ == Kind::WorstCase) {
        if (!(band_lo_ < band_hi_))
            throw validation_error("objective band requires f_lo < f_hi");
        bool any = false;
        for (double f : freqs_)
            any = any || (f >= band_lo_ && f <= band_hi_);
        if (!any)
            throw validation_error("objective band contains no grid samples");
    }

    gamma_.resize(n_types_ * freqs_.size());
    for (std::size_t t = 0; t < n_types_; ++t)
        for (std::size_t i = 0; i < freqs_.size(); ++i)
            gamma_[t * freqs_.size() + i] = provider.gamma(t, freqs_[i], inc_);
}

double SpectrumObjective::operator()(const WeightVector &weights) const {
    if (weights.counts.size() != n_types_)
        throw validation_error("weight vector size does not match objective type count");
    const double total = static_cast<double>(weights.total());

    if (kind_ == Kind::WorstCase) {
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < freqs_.size(); ++i) {
            if (freqs_[i] < band_lo_ || freqs_[i] > band_hi_)
                continue;
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t t = 0; t < n_types_; ++t)
                acc += static_cast<double>(weights.counts[t]) * gamma_[t * freqs_.size() + i];
            worst = std::max(worst, clamp_db(std::abs(acc), total));
        }
        return worst;
    }

    RcsSpectrum spec;
    spec.incidence = inc_;
    spec.source = "formula";
    spec.points.reserve(freqs_.size());
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t t = 0; t < n_types_; ++t)
            acc += static_cast<double>(weights.counts[t]) * gamma_[t * freqs_.size() + i];
        spec.points.push_back({freqs_[i], clamp_db(std::abs(acc), total)});
    }
    return objective_bandwidth(spec, threshold_);
}

} // namespace rcsr
