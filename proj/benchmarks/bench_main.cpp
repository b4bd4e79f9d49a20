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

#include <benchmark/benchmark.h>

#include <rcsr/config.hpp>
#include <rcsr/layout.hpp>
#include <rcsr/metrics.hpp>
#include <rcsr/optimizer.hpp>
#include <rcsr/scatter.hpp>

namespace {

rcsr::RunConfig cfg() { return rcsr::default_run_config(); }

void BM_reflection(benchmark::State &state) {
    const auto c = cfg();
    const rcsr::IncidenceSpec inc{0.0, rcsr::Polarization::TE};
    double f = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcsr::reflection(c.palette[0], f, inc));
        f = (f >= 35.0) ? 10.0 : f + 0.1;
    }
}
BENCHMARK(BM_reflection);

void BM_spectrum_251(benchmark::State &state) {
    const auto c = cfg();
    const rcsr::AnalyticProvider provider(c.palette);
    const rcsr::WeightVector w{{104, 112, 164, 196, 412, 336, 276}};
    for (auto _ : state)
        benchmark::DoNotOptimize(rcsr::rcsr_spectrum(provider, w, c.grid, c.incidence));
}
BENCHMARK(BM_spectrum_251);

void BM_objective_eval(benchmark::State &state) {
    const auto c = cfg();
    const rcsr::AnalyticProvider provider(c.palette);
    const rcsr::SpectrumObjective obj(provider, c.grid, c.incidence,
                                      rcsr::SpectrumObjective::Kind::WorstCase, c.band_lo_GHz,
                                      c.band_hi_GHz);
    const rcsr::WeightVector w{{104, 112, 164, 196, 412, 336, 276}};
    for (auto _ : state)
        benchmark::DoNotOptimize(obj(w));
}
BENCHMARK(BM_objective_eval);

void BM_bistatic_cut(benchmark::State &state) {
    const auto c = cfg();
    const rcsr::AnalyticProvider provider(c.palette);
    const auto field = rcsr::sinusoid_field(c.rows, c.cols, 6.0, c.modulation);
    const rcsr::WeightVector w{{104, 112, 164, 196, 412, 336, 276}};
    const auto layout = rcsr::assign_types(field, c.rows, c.cols, w, c.palette, c.margin_mm);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rcsr::bistatic_cut(layout, provider, 18.0, c.incidence, c.scatter));
}
BENCHMARK(BM_bistatic_cut);

void BM_ga_small(benchmark::State &state) {
    rcsr::GaConfig ga;
    ga.population_size = 16;
    ga.generations = 20;
    auto fitness = [](const rcsr::WeightVector &w) {
        return static_cast<double>(std::abs(w.counts[0] - w.counts[1]));
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(rcsr::ga_optimize(fitness, 2, 1600, ga));
}
BENCHMARK(BM_ga_small);

} // namespace

BENCHMARK_MAIN();
