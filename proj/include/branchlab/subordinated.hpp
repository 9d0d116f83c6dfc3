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

#ifndef BRANCHLAB_SUBORDINATED_HPP_
#define BRANCHLAB_SUBORDINATED_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "branchlab/branching.hpp"
#include "branchlab/model.hpp"
#include "branchlab/renewal.hpp"
#include "branchlab/rng.hpp"

namespace branchlab {

// One observation of the population on the renewal clock: the chain is
// advanced one generation per renewal epoch and read off at time t.
struct SubordinatedSample {
  double t = 0.0;
  double y = 0.0;            // population at t
  std::uint64_t n_at_t = 0;  // renewals by t
  bool extinct = false;      // absorption happened at a generation <= n_at_t
  double extinct_generation = 0.0;
};

SubordinatedSample simulate_y_at(const ModelConfig& model,
                                 const InterarrivalLaw& clock, double t,
                                 Engine& rng);

// Epoch at which the chain's absorption is first observed on the renewal
// clock.  Simulation stops once the next epoch passes `horizon` (the value
// is then +infinity: death happens beyond every probe point); hitting the
// generation cap first sets *censored and also returns +infinity.
double simulate_death_time(const ModelConfig& model,
                           const InterarrivalLaw& clock, std::uint64_t cap,
                           Engine& rng, bool* censored = nullptr,
                           double horizon =
                               std::numeric_limits<double>::infinity());

// P(Y(t) > 0) along an ascending time grid; one path serves every horizon.
SurvivalCurve subordinated_survival_curve(const ModelConfig& model,
                                          const InterarrivalLaw& clock,
                                          std::vector<double> time_grid,
                                          std::uint64_t reps,
                                          std::uint64_t seed, std::uint64_t tag,
                                          unsigned workers);

// Sample of Y(t) / normalization over surviving paths.
ConditionalSample subordinated_conditional_sample(
    const ModelConfig& model, const InterarrivalLaw& clock, double t,
    double normalization, std::uint64_t reps, std::uint64_t seed,
    std::uint64_t tag, unsigned workers, std::uint64_t min_survivors);

// Decomposition check: the conditional law of Y(t) must match the mixture
// of the conditional generation laws weighted by the renewal count given
// survival.  Direct and mixture estimators are built from independent runs.
struct MixtureCheck {
  double max_abs_discrepancy = 0.0;
  double joint_se_at_max = 0.0;
  std::vector<double> x_grid;
  std::vector<double> direct;
  std::vector<double> mixture;
  std::vector<double> joint_se;
};

MixtureCheck mixture_identity_check(const ModelConfig& model,
                                    const InterarrivalLaw& clock, double t,
                                    const std::vector<double>& x_grid,
                                    std::uint64_t reps, std::uint64_t seed,
                                    unsigned workers);

}  // namespace branchlab

#endif  // BRANCHLAB_SUBORDINATED_HPP_
