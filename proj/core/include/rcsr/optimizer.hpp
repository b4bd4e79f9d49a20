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

#ifndef RCSR_OPTIMIZER_HPP
#define RCSR_OPTIMIZER_HPP

// Generational GA over integer compositions: weight vectors with fixed sum
// N_total. Reproducibility is part of the contract, so the random layer is
// built on std::mt19937_64 (bit-exact engine by definition) with hand-rolled
// draw helpers instead of the implementation-defined std distributions.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <rcsr/metrics.hpp>

namespace rcsr {

// Deterministic random helpers. Same seed, same platform-independent stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01();

    // Geometric draw >= 1 with the given mean, via inversion.
    int geometric(double mean);

    // Fisher-Yates.
    template <typename T> void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

struct GaConfig {
    int population_size = 64;
    int generations = 200;
    int tournament_size = 3;
    int elitism_count = 1;
    double mutation_rate = 0.3;       // per genome
    double mutation_step_mean = 8.0;  // mean of the geometric transfer size
    std::uint64_t rng_seed = 0;
    int min_count = 0;                // lower bound per entry
};

void validate(const GaConfig &cfg, int n_types, int n_total);

struct GenerationStats {
    double best = 0.0;
    double mean = 0.0;
};

struct GaResult {
    WeightVector best;
    double best_fitness = 0.0;
    std::vector<GenerationStats> history;  // one entry per generation
};

// Project raw integers onto the feasible set: clamp entries below min_count,
// then add or subtract single units at indices cycled round-robin from a
// seeded shuffle until the sum is n_total (subtraction skips entries already
// at min_count).
WeightVector repair(std::vector<long long> raw, int n_total, Rng &rng, int min_count = 0);

// Per-gene uniform pick from the parents, then repair.
WeightVector crossover(const WeightVector &a, const WeightVector &b, Rng &rng,
                       int min_count = 0);

// With probability mutation_rate, transfer k units (geometric k, truncated so
// the donor stays >= min_count) from one random entry to another.
WeightVector mutate(const WeightVector &w, const GaConfig &cfg, Rng &rng);

// Minimize `fitness` over compositions of n_total into n_types parts.
// Population: one even-split individual plus random compositions. Tournament
// selection, uniform crossover, unit-transfer mutation, elitism. Identical
// seeds give identical results.
GaResult ga_optimize(const std::function<double(const WeightVector &)> &fitness,
                     int n_types, int n_total, const GaConfig &cfg);

} // namespace rcsr

#endif
