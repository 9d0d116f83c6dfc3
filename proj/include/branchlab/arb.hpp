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

#ifndef BRANCHLAB_ARB_HPP_
#define BRANCHLAB_ARB_HPP_

#include <cstdint>
#include <string>

#include "branchlab/branching.hpp"
#include "branchlab/model.hpp"
#include "branchlab/renewal.hpp"
#include "branchlab/rng.hpp"

namespace branchlab {

// Law of the sojourn at zero between two branching periods.
class SojournLaw {
 public:
  enum class Kind { kExponential, kDeterministic, kParetoTail };

  static SojournLaw exponential(double mu);
  static SojournLaw deterministic(double d);
  static SojournLaw pareto_tail(double alpha, double x_m);

  Kind kind() const { return kind_; }
  bool finite_mean() const { return kind_ != Kind::kParetoTail; }
  double alpha() const { return alpha_; }
  double tail_constant() const { return c_d_; }

  double sample(Engine& rng) const;
  void check() const;
  std::string describe() const;

 private:
  SojournLaw() = default;

  Kind kind_ = Kind::kExponential;
  double mu_ = 1.0;
  double d_ = 1.0;
  double alpha_ = 0.0;
  double x_m_ = 1.0;
  double c_d_ = 0.0;
};

// Alternating regenerative configuration: down periods drawn from the
// sojourn law, up periods realized as fresh subordinated populations that
// live exactly until their own extinction epoch.
struct ArbConfig {
  ModelConfig model;
  InterarrivalLaw interarrival = InterarrivalLaw::exponential(1.0);
  SojournLaw sojourn = SojournLaw::exponential(1.0);
};

struct ArbObservation {
  double u = 0.0;                 // population at t (0 during down periods)
  bool in_down = false;
  std::uint64_t cycle_index = 0;  // 1-based cycle containing t
};

// Advances cycle by cycle until t is covered.  The up duration and the
// population evaluated inside it come from one realization: the copy is
// streamed forward until its extinction epoch, which closes the cycle.
ArbObservation simulate_u_at(const ArbConfig& config, double t, Engine& rng,
                             std::uint64_t max_cycles = 1u << 26);

// Limiting ratio of the down-period tail to the up-period survival tail.
// The up-period tail exponent follows the regime of (interarrival, initial):
// gamma when the clock has finite mean, rho for a heavy clock with
// finite-mean start, rho*gamma when both are heavy.  Equal exponents resolve
// to a ratio of tail constants; the heavy-clock/finite-start regime needs
// the simulated mean extinction time, supplied through `mean_T_minus_1`
// (negative means unavailable, raising UnsupportedRegimeError when needed).
double theoretical_delta(const ArbConfig& config,
                         double mean_T_minus_1 = -1.0);

struct ArbAtomSample {
  double atom = 0.0;        // estimate of P(U(t) = 0)
  double half_width = 0.0;  // 95% binomial half-width
  ConditionalSample conditional;  // U(t)/normalization given U(t) > 0
};

ArbAtomSample atom_and_conditional(const ArbConfig& config, double t,
                                   double normalization, std::uint64_t reps,
                                   std::uint64_t seed, std::uint64_t tag,
                                   unsigned workers,
                                   std::uint64_t min_survivors);

}  // namespace branchlab

#endif  // BRANCHLAB_ARB_HPP_
