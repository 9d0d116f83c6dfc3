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

#include "branchlab/subordinated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"

namespace branchlab {

namespace {

constexpr std::uint64_t kGenerationCap = 1u << 30;

}  // namespace

SubordinatedSample simulate_y_at(const ModelConfig& model,
                                 const InterarrivalLaw& clock, double t,
                                 Engine& rng) {
  if (!(t >= 0.0)) throw DomainError("simulate_y_at: t must be >= 0");
  SubordinatedSample out;
  out.t = t;
  GenerationState state{0, sample_initial(model.initial, rng)};
  RenewalCursor cursor(clock, rng);
  // Zero is absorbing, so once the chain dies the remaining renewals cannot
  // change Y(t); only the count of epochs up to the death epoch matters.
  while (cursor.next_epoch() <= t && state.z > 0.0) {
    cursor.advance(clock, rng);
    state = step(state, model, rng);
  }
  out.n_at_t = cursor.count();
  out.y = state.z;
  if (state.z <= 0.0) {
    out.extinct = true;
    out.extinct_generation = static_cast<double>(state.n);
    out.y = 0.0;
  }
  return out;
}

double simulate_death_time(const ModelConfig& model,
                           const InterarrivalLaw& clock, std::uint64_t cap,
                           Engine& rng, bool* censored, double horizon) {
  if (censored != nullptr) *censored = false;
  GenerationState state{0, sample_initial(model.initial, rng)};
  if (state.z <= 0.0) return 0.0;
  RenewalCursor cursor(clock, rng);
  while (state.n < cap) {
    const double epoch = cursor.next_epoch();
    if (epoch > horizon) return std::numeric_limits<double>::infinity();
    cursor.advance(clock, rng);
    state = step(state, model, rng);
    if (state.z <= 0.0) return epoch;
  }
  if (censored != nullptr) *censored = true;
  return std::numeric_limits<double>::infinity();
}

SurvivalCurve subordinated_survival_curve(const ModelConfig& model,
                                          const InterarrivalLaw& clock,
                                          std::vector<double> time_grid,
                                          std::uint64_t reps,
                                          std::uint64_t seed, std::uint64_t tag,
                                          unsigned workers) {
  struct Acc {
    std::vector<std::uint64_t> alive;
    std::uint64_t censored = 0;
  };
  Acc init;
  init.alive.assign(time_grid.size(), 0);
  Acc total = parallel_replicates(
      reps, workers, seed, tag, init,
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        bool cens = false;
        const double death = simulate_death_time(
            model, clock, kGenerationCap, rng, &cens, time_grid.back());
        if (cens) acc.censored += 1;
        for (std::size_t i = 0; i < time_grid.size(); ++i) {
          if (death > time_grid[i]) acc.alive[i] += 1;
        }
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t i = 0; i < into.alive.size(); ++i) {
          into.alive[i] += from.alive[i];
        }
        into.censored += from.censored;
      });
  SurvivalCurve curve;
  curve.horizon = std::move(time_grid);
  curve.alive = std::move(total.alive);
  curve.reps = reps;
  curve.censored = total.censored;
  return curve;
}

ConditionalSample subordinated_conditional_sample(
    const ModelConfig& model, const InterarrivalLaw& clock, double t,
    double normalization, std::uint64_t reps, std::uint64_t seed,
    std::uint64_t tag, unsigned workers, std::uint64_t min_survivors) {
  using Acc = std::vector<double>;
  Acc values = parallel_replicates(
      reps, workers, seed, tag, Acc{},
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        const SubordinatedSample s = simulate_y_at(model, clock, t, rng);
        if (s.y > 0.0) acc.push_back(s.y / normalization);
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
        "subordinated_conditional_sample: survivors " +
        std::to_string(out.survivors) + " < required " +
        std::to_string(min_survivors));
  }
  return out;
}

MixtureCheck mixture_identity_check(const ModelConfig& model,
                                    const InterarrivalLaw& clock, double t,
                                    const std::vector<double>& x_grid,
                                    std::uint64_t reps, std::uint64_t seed,
                                    unsigned workers) {
  const std::size_t nx = x_grid.size();
  // Generation window wide enough that P(N(t) > n_max) is negligible for the
  // clocks this check is used with (moderate t).
  const std::uint64_t n_max =
      static_cast<std::uint64_t>(std::ceil(4.0 * t + 64.0));

  // Direct estimator of P(Y(t) <= x | Y(t) > 0).
  struct DirectAcc {
    std::vector<std::uint64_t> le;
    std::uint64_t survivors = 0;
  };
  DirectAcc d_init;
  d_init.le.assign(nx, 0);
  DirectAcc direct = parallel_replicates(
      reps, workers, seed, /*tag=*/101, d_init,
      [&](DirectAcc& acc, std::uint64_t, Engine& rng) {
        const SubordinatedSample s = simulate_y_at(model, clock, t, rng);
        if (s.y > 0.0) {
          acc.survivors += 1;
          for (std::size_t i = 0; i < nx; ++i) {
            if (s.y <= x_grid[i]) acc.le[i] += 1;
          }
        }
      },
      [](DirectAcc& into, const DirectAcc& from) {
        for (std::size_t i = 0; i < into.le.size(); ++i) {
          into.le[i] += from.le[i];
        }
        into.survivors += from.survivors;
      });

  // Chain-only estimator of P(Z_n > 0) and P(Z_n <= x | Z_n > 0).
  struct ChainAcc {
    std::vector<std::uint64_t> alive;          // per generation
    std::vector<std::uint64_t> le;             // generation-major [n][x]
  };
  ChainAcc c_init;
  c_init.alive.assign(n_max + 1, 0);
  c_init.le.assign((n_max + 1) * nx, 0);
  ChainAcc chain = parallel_replicates(
      reps, workers, seed, /*tag=*/102, c_init,
      [&](ChainAcc& acc, std::uint64_t, Engine& rng) {
        GenerationState state{0, sample_initial(model.initial, rng)};
        for (std::uint64_t n = 0; n <= n_max && state.z > 0.0; ++n) {
          acc.alive[n] += 1;
          for (std::size_t i = 0; i < nx; ++i) {
            if (state.z <= x_grid[i]) acc.le[n * nx + i] += 1;
          }
          state = step(state, model, rng);
        }
      },
      [](ChainAcc& into, const ChainAcc& from) {
        for (std::size_t i = 0; i < into.alive.size(); ++i) {
          into.alive[i] += from.alive[i];
        }
        for (std::size_t i = 0; i < into.le.size(); ++i) {
          into.le[i] += from.le[i];
        }
      });

  // Clock-only estimator of P(N(t) = n).
  using ClockAcc = std::vector<std::uint64_t>;
  ClockAcc clock_init(n_max + 2, 0);
  ClockAcc clocks = parallel_replicates(
      reps, workers, seed, /*tag=*/103, clock_init,
      [&](ClockAcc& acc, std::uint64_t, Engine& rng) {
        const RenewalCount rc = count_renewals(clock, t, rng);
        acc[std::min<std::uint64_t>(rc.n, n_max + 1)] += 1;
      },
      [](ClockAcc& into, const ClockAcc& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });

  const double r = static_cast<double>(reps);
  MixtureCheck out;
  out.x_grid = x_grid;
  out.direct.assign(nx, 0.0);
  out.mixture.assign(nx, 0.0);
  out.joint_se.assign(nx, 0.0);

  // Assemble the mixture with weights w_n = P(N(t)=n) P(Z_n>0).
  std::vector<double> w(n_max + 1, 0.0);
  std::vector<double> var_w(n_max + 1, 0.0);
  double w_total = 0.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const double p = static_cast<double>(clocks[n]) / r;
    const double q = static_cast<double>(chain.alive[n]) / r;
    w[n] = p * q;
    const double var_p = p * (1.0 - p) / r;
    const double var_q = q * (1.0 - q) / r;
    var_w[n] = q * q * var_p + p * p * var_q;
    w_total += w[n];
  }

  for (std::size_t i = 0; i < nx; ++i) {
    const double ns = static_cast<double>(direct.survivors);
    out.direct[i] = static_cast<double>(direct.le[i]) / ns;
    double mix = 0.0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (w[n] <= 0.0 || chain.alive[n] == 0) continue;
      const double f =
          static_cast<double>(chain.le[n * nx + i]) /
          static_cast<double>(chain.alive[n]);
      mix += w[n] * f;
    }
    mix /= w_total;
    out.mixture[i] = mix;

    double var_mix = 0.0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (w[n] <= 0.0 || chain.alive[n] == 0) continue;
      const double f =
          static_cast<double>(chain.le[n * nx + i]) /
          static_cast<double>(chain.alive[n]);
      const double var_f =
          f * (1.0 - f) / static_cast<double>(chain.alive[n]);
      const double wn_norm = w[n] / w_total;
      var_mix += wn_norm * wn_norm * var_f;
      const double dw = (f - mix) / w_total;
      var_mix += dw * dw * var_w[n];
    }
    const double var_direct = out.direct[i] * (1.0 - out.direct[i]) / ns;
    out.joint_se[i] = std::sqrt(var_mix + var_direct);

    const double diff = std::fabs(out.direct[i] - out.mixture[i]);
    if (diff > out.max_abs_discrepancy) {
      out.max_abs_discrepancy = diff;
      out.joint_se_at_max = out.joint_se[i];
    }
  }
  return out;
}

}  // namespace branchlab
