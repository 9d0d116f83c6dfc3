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

#ifndef BRANCHLAB_BRANCHING_HPP_
#define BRANCHLAB_BRANCHING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "branchlab/model.hpp"
#include "branchlab/rng.hpp"

namespace branchlab {

struct GenerationState {
  std::uint64_t n = 0;  // generation index
  double z = 0.0;       // population size (integer-valued)
};

struct ExtinctionRecord {
  double generations = 0.0;  // smallest n >= 1 with Z_n = 0
  bool censored = false;     // hit the generation cap while alive
  double z0 = 0.0;
};

struct MigrationResult {
  double net = 0.0;                 // signed population adjustment
  double families_cancelled = 0.0;  // brood sums removed by emigration
};

// Resolves one generation's migration against the family sums already drawn
// for reproduction.  On the emigration branch the first E_fam sums are
// cancelled (the same draws, not fresh ones); when fewer sums exist than
// families to cancel, fresh offspring draws fill the deficit and are
// subtracted.  Immigration contributes +I, the middle branch contributes 0.
MigrationResult sample_migration(const MigrationLaw& migration,
                                 const OffspringLaw& offspring,
                                 std::span<const double> family_sums,
                                 Engine& rng);

// One generation of the chain: z' = (sum of z family sizes + migration)_+,
// with zero absorbing.  An absorbed state consumes no randomness.
GenerationState step(const GenerationState& state, const ModelConfig& model,
                     Engine& rng);

// Runs the chain from z0 until absorption or the generation cap.
ExtinctionRecord simulate_extinction(const ModelConfig& model, double z0,
                                     std::uint64_t cap, Engine& rng);

// ------------------------------------------------------- replicate drivers

struct SurvivalCurve {
  std::vector<double> horizon;       // ascending probe points
  std::vector<std::uint64_t> alive;  // paths still positive at each probe
  std::uint64_t reps = 0;
  std::uint64_t censored = 0;

  double estimate(std::size_t i) const {
    return static_cast<double>(alive[i]) / static_cast<double>(reps);
  }
  // Normal-approximation half-width of the two-sided 95% interval.
  double half_width(std::size_t i) const;
};

struct ConditionalSample {
  std::vector<double> values;  // normalized values over surviving paths
  std::uint64_t reps = 0;
  std::uint64_t survivors = 0;
};

struct ExtinctionStats {
  double mean_generations = 0.0;  // over non-censored paths
  std::uint64_t counted = 0;
  std::uint64_t censored = 0;
};

// P(Z_n > 0) along an ascending generation grid.
SurvivalCurve discrete_survival_curve(const ModelConfig& model,
                                      std::vector<double> generation_grid,
                                      std::uint64_t reps, std::uint64_t seed,
                                      std::uint64_t tag, unsigned workers);

// Sample of Z_n / (b n) over paths with Z_n > 0.  Throws
// InsufficientSurvivorsError when fewer than min_survivors paths survive.
ConditionalSample conditional_normalized_generation(
    const ModelConfig& model, std::uint64_t n, std::uint64_t reps,
    std::uint64_t seed, std::uint64_t tag, unsigned workers,
    std::uint64_t min_survivors);

// Mean extinction generation over many paths (censored paths excluded and
// counted separately).
ExtinctionStats extinction_time_stats(const ModelConfig& model,
                                      std::uint64_t reps, std::uint64_t cap,
                                      std::uint64_t seed, std::uint64_t tag,
                                      unsigned workers);

}  // namespace branchlab

#endif  // BRANCHLAB_BRANCHING_HPP_
