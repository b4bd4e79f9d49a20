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

#include <rcsr/optimizer.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <rcsr/errors.hpp>

namespace rcsr {

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0)
        throw validation_error("uniform_index needs n > 0");
    // Rejection-free modulo is biased for huge n; with n far below 2^64 the
    // bias is negligible, but reject the tail anyway to keep draws exact.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t x = next_u64();
    while (x >= limit)
        x = next_u64();
    return static_cast<std::size_t>(x % n);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::geometric(double mean) {
    if (!(mean >= 1.0))
        throw validation_error("geometric mean must be >= 1");
    if (mean == 1.0)
        return 1;
    // Support {1, 2, ...} with success probability p = 1/mean, by inversion.
    const double p = 1.0 / mean;
    const double u = uniform01();
    double k = std::floor(std::log1p(-u) / std::log1p(-p));
    if (!(k >= 0.0))
        k = 0.0;
    // Transfers are truncated against the donor count anyway; cap the draw to
    // keep the int cast defined.
    k = std::min(k, 1.0e9);
    return 1 + static_cast<int>(k);
}

void validate(const GaConfig &cfg, int n_types, int n_total) {
    if (n_types < 1)
        throw validation_error("GA needs at least one type");
    if (n_total < 1)
        throw validation_error("GA needs a positive total cell count");
    if (cfg.population_size < 2)
        throw validation_error("population_size must be >= 2");
    if (cfg.generations < 1)
        throw validation_error("generations must be >= 1");
    if (cfg.tournament_size < 1 || cfg.tournament_size > cfg.population_size)
        throw validation_error("tournament_size must lie in [1, population_size]");
    if (cfg.elitism_count < 0 || cfg.elitism_count >= cfg.population_size)
        throw validation_error("elitism_count must lie in [0, population_size)");
    if (!(cfg.mutation_rate >= 0.0) || !(cfg.mutation_rate <= 1.0))
        throw validation_error("mutation_rate must lie in [0, 1]");
    if (!(cfg.mutation_step_mean >= 1.0))
        throw validation_error("mutation_step_mean must be >= 1");
    if (cfg.min_count < 0)
        throw validation_error("min_count must be >= 0");
    if (static_cast<long long>(cfg.min_count) * n_types > n_total)
        throw validation_error("min_count * n_types exceeds the total cell count");
}

WeightVector repair(std::vector<long long> raw, int n_total, Rng &rng, int min_count) {
    if (raw.empty())
        throw validation_error("repair needs a non-empty vector");
    const std::size_t n = raw.size();
    if (static_cast<long long>(min_count) * static_cast<long long>(n) > n_total)
        throw validation_error("min_count * n_types exceeds the total cell count");

    for (auto &v : raw)
        v = std::max<long long>(v, min_count);

    long long sum = std::accumulate(raw.begin(), raw.end(), 0LL);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);

    std::size_t c = 0;
    while (sum != n_total) {
        const std::size_t idx = order[c];
        c = (c + 1) % n;
        if (sum < n_total) {
            ++raw[idx];
            ++sum;
        } else if (raw[idx] > min_count) {
            --raw[idx];
            --sum;
        }
    }

    WeightVector w;
    w.counts.reserve(n);
    for (long long v : raw)
        w.counts.push_back(static_cast<int>(v));
    return w;
}

WeightVector crossover(const WeightVector &a, const WeightVector &b, Rng &rng,
                       int min_count) {
    if (a.counts.size() != b.counts.size())
        throw validation_error("crossover parents have different lengths");
    const int n_total = a.total();
    if (b.total() != n_total)
        throw validation_error("crossover parents have different totals");

    std::vector<long long> child(a.counts.size());
    for (std::size_t i = 0; i < child.size(); ++i)
        child[i] = (rng.next_u64() & 1u) ? b.counts[i] : a.counts[i];
    return repair(std::move(child), n_total, rng, min_count);
}

WeightVector mutate(const WeightVector &w, const GaConfig &cfg, Rng &rng) {
    WeightVector out = w;
    const std::size_t n = out.counts.size();
    if (n < 2)
        return out;
    if (rng.uniform01() >= cfg.mutation_rate)
        return out;

    const std::size_t from = rng.uniform_index(n);
    const std::size_t to = (from + 1 + rng.uniform_index(n - 1)) % n;

    int k = rng.geometric(cfg.mutation_step_mean);
    k = std::min(k, out.counts[from] - cfg.min_count);
    if (k <= 0)
        return out;
    out.counts[from] -= k;
    out.counts[to] += k;
    return out;
}

GaResult ga_optimize(const std::function<double(const WeightVector &)> &fitness,
                     int n_types, int n_total, const GaConfig &cfg) {
    validate(cfg, n_types, n_total);

    Rng rng(cfg.rng_seed);
    const std::size_t pop_size = static_cast<std::size_t>(cfg.population_size);
    const std::size_t n = static_cast<std::size_t>(n_types);

    std::vector<WeightVector> pop;
    pop.reserve(pop_size);

    // Even split first: the optimizer never reports worse than uniform. The
    // remainder goes to the leading entries so the individual is the canonical
    // (q+1, ..., q+1, q, ..., q) split, independent of the seed.
    {
        std::vector<long long> even(n, n_total / n_types);
        for (int r = 0; r < n_total % n_types; ++r)
            ++even[static_cast<std::size_t>(r)];
        pop.push_back(repair(std::move(even), n_total, rng, cfg.min_count));
    }
    const long long hi = std::max<long long>(1, 2LL * n_total / n_types);
    for (std::size_t i = 1; i < pop_size; ++i) {
        std::vector<long long> raw(n);
        for (auto &v : raw)
            v = static_cast<long long>(rng.uniform_index(static_cast<std::size_t>(hi + 1)));
        pop.push_back(repair(std::move(raw), n_total, rng, cfg.min_count));
    }

    std::vector<double> fit(pop_size);
    auto evaluate = [&](const std::vector<WeightVector> &p) {
        for (std::size_t i = 0; i < pop_size; ++i)
            fit[i] = fitness(p[i]);
    };

    // Lower fitness wins; ties resolved by index for determinism.
    auto better = [&](std::size_t i, std::size_t j) {
        return fit[i] < fit[j] || (fit[i] == fit[j] && i < j);
    };

    GaResult result;
    result.history.reserve(static_cast<std::size_t>(cfg.generations));
    double best_fit = std::numeric_limits<double>::infinity();

    for (int gen = 0; gen < cfg.generations; ++gen) {
        evaluate(pop);

        std::size_t best_idx = 0;
        double mean = 0.0;
        for (std::size_t i = 0; i < pop_size; ++i) {
            if (better(i, best_idx))
                best_idx = i;
            mean += fit[i];
        }
        mean /= static_cast<double>(pop_size);
        result.history.push_back({fit[best_idx], mean});

        if (fit[best_idx] < best_fit) {
            best_fit = fit[best_idx];
            result.best = pop[best_idx];
        }

        if (gen + 1 == cfg.generations)
            break;

        std::vector<std::size_t> rank(pop_size);
        std::iota(rank.begin(), rank.end(), std::size_t{0});
        std::sort(rank.begin(), rank.end(), [&](std::size_t i, std::size_t j) {
            return better(i, j);
        });

        std::vector<WeightVector> next;
        next.reserve(pop_size);
        for (int e = 0; e < cfg.elitism_count; ++e)
            next.push_back(pop[rank[static_cast<std::size_t>(e)]]);

        auto tournament = [&]() -> const WeightVector & {
            std::size_t winner = rng.uniform_index(pop_size);
            for (int t = 1; t < cfg.tournament_size; ++t) {
                const std::size_t challenger = rng.uniform_index(pop_size);
                if (better(challenger, winner))
                    winner = challenger;
            }
            return pop[winner];
        };

        while (next.size() < pop_size) {
            const WeightVector &pa = tournament();
            const WeightVector &pb = tournament();
            WeightVector child = crossover(pa, pb, rng, cfg.min_count);
            next.push_back(mutate(child, cfg, rng));
        }
        pop = std::move(next);
    }

    result.best_fitness = best_fit;
    return result;
}

} // namespace rcsr
