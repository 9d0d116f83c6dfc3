// Copyright 2026 branchlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "branchlab/branching.hpp"

#include <algorithm>
#include <cmath>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"

namespace branchlab {

MigrationResult sample_migration(const MigrationLaw& migration,
                                 const OffspringLaw& offspring,
                                 std::span<const double> family_sums,
                                 Engine& rng) {
  MigrationResult out;
  const double u = rng.uniform();
  if (u < migration.p) {
    const double families = migration.family_emigration.sample(rng);
    const double cancelled =
        std::min(families, static_cast<double>(family_sums.size()));
    double removed = 0.0;
    for (double i = 0.0; i < cancelled; i += 1.0) {
      removed += family_sums[static_cast<std::size_t>(i)];
    }
    removed += offspring.sample_brood_sum(rng, families - cancelled);
    out.net = -removed - migration.individual_emigration.sample(rng);
    out.families_cancelled = cancelled;
  } else if (u < migration.p + migration.q) {
    out.net = 0.0;
  } else {
    out.net = migration.immigration.sample(rng);
  }
  return out;
}

GenerationState step(const GenerationState& state, const ModelConfig& model,
                     Engine& rng) {
  GenerationState next{state.n + 1, 0.0};
  if (state.z <= 0.0) return next;  // absorbing
  const MigrationLaw& mig = model.migration;
  const double u = rng.uniform();
  double z_next;
  if (u < mig.p) {
    // Emigration cancels whole family sums of this generation; only the
    // surviving families' offspring are drawn, and any deficit beyond the
    // current generation is drawn fresh and subtracted.
    const double families = mig.family_emigration.sample(rng);
    const double cancelled = std::min(families, state.z);
    const double survivors = state.z - cancelled;
    const double deficit = families - cancelled;
    double total = model.offspring.sample_brood_sum(rng, survivors);
    total -= model.offspring.sample_brood_sum(rng, deficit);
    total -= mig.individual_emigration.sample(rng);
    z_next = total;
  } else if (u < mig.p + mig.q) {
    z_next = model.offspring.sample_brood_sum(rng, state.z);
  } else {
    z_next = model.offspring.sample_brood_sum(rng, state.z) +
             mig.immigration.sample(rng);
  }
  next.z = std::max(0.0, z_next);
  return next;
}

ExtinctionRecord simulate_extinction(const ModelConfig& model, double z0,
                                     std::uint64_t cap, Engine& rng) {
  ExtinctionRecord rec;
  rec.z0 = z0;
  GenerationState state{0, z0};
  while (state.n < cap) {
    state = step(state, model, rng);
    if (state.z <= 0.0) {
      rec.generations = static_cast<double>(state.n);
      return rec;
    }
  }
  rec.generations = static_cast<double>(cap);
  rec.censored = true;
  return rec;
}

double SurvivalCurve::half_width(std::size_t i) const {
  const double p = estimate(i);
  const double n = static_cast<double>(reps);
  return 1.959963984540054 * std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / n);
}

SurvivalCurve discrete_survival_curve(const ModelConfig& model,
                                      std::vector<double> generation_grid,
                                      std::uint64_t reps, std::uint64_t seed,
                                      std::uint64_t tag, unsigned workers) {
  struct Acc {
    std::vector<std::uint64_t> alive;
    std::uint64_t censored = 0;
  };
  const std::uint64_t n_max =
      static_cast<std::uint64_t>(generation_grid.back());
  Acc init;
  init.alive.assign(generation_grid.size(), 0);
  Acc total = parallel_replicates(
      reps, workers, seed, tag, init,
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        const double z0 = sample_initial(model.initial, rng);
        const ExtinctionRecord rec =
            simulate_extinction(model, z0, n_max + 1, rng);
        if (rec.censored) acc.censored += 1;
        const double t_ext = rec.censored
                                 ? std::numeric_limits<double>::infinity()
                                 : rec.generations;
        for (std::size_t i = 0; i < generation_grid.size(); ++i) {
          if (t_ext > generation_grid[i]) acc.alive[i] += 1;
        }
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t i = 0; i < into.alive.size(); ++i) {
          into.alive[i] += from.alive[i];
        }
        into.censored += from.censored;
      });
  SurvivalCurve curve;
  curve.horizon = std::move(generation_grid);
  curve.alive = std::move(total.alive);
  curve.reps = reps;
  curve.censored = total.censored;
  return curve;
}

ConditionalSample conditional_normalized_generation(
    const ModelConfig& model, std::uint64_t n, std::uint64_t reps,
    std::uint64_t seed, std::uint64_t tag, unsigned workers,
    std::uint64_t min_survivors) {
  const double b = model.derived().b;
  const double scale = b * static_cast<double>(n);
  using Acc = std::vector<double>;
  Acc values = parallel_replicates(
      reps, workers, seed, tag, Acc{},
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        GenerationState state{0, sample_initial(model.initial, rng)};
        while (state.n < n && state.z > 0.0) state = step(state, model, rng);
        if (state.z > 0.0) acc.push_back(state.z / scale);
      },
      [](Acc& into, const Acc& from) {
        into.insert(into.end(), from.begin(), from.end());
      });
  ConditionalSample out;
  out.reps = reps;
  out.survivors = values.size();
  out.values = std::move(values);
  if (out.survivors < min_survivors) {
    throw InsufficientSurvivorsError(
        "conditional_normalized_generation: survivors " +
        std::to_string(out.survivors) + " < required " +
        std::to_string(min_survivors));
  }
  return out;
}

ExtinctionStats extinction_time_stats(const ModelConfig& model,
                                      std::uint64_t reps, std::uint64_t cap,
                                      std::uint64_t seed, std::uint64_t tag,
                                      unsigned workers) {
  struct Acc {
    double sum = 0.0;
    std::uint64_t counted = 0;
    std::uint64_t censored = 0;
  };
  Acc total = parallel_replicates(
      reps, workers, seed, tag, Acc{},
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        const double z0 = sample_initial(model.initial, rng);
        const ExtinctionRecord rec = simulate_extinction(model, z0, cap, rng);
        if (rec.censored) {
          acc.censored += 1;
        } else {
          acc.sum += rec.generations;
          acc.counted += 1;
        }
      },
      [](Acc& into, const Acc& from) {
        into.sum += from.sum;
        into.counted += from.counted;
        into.censored += from.censored;
      });
  ExtinctionStats out;
  out.counted = total.counted;
  out.censored = total.censored;
  out.mean_generations =
      total.counted == 0 ? 0.0 : total.sum / static_cast<double>(total.counted);
  return out;
}

}  // namespace branchlab
