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

#ifndef BRANCHLAB_RENEWAL_HPP_
#define BRANCHLAB_RENEWAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "branchlab/rng.hpp"

namespace branchlab {

// Interarrival law of the renewal clock.  The heavy-tailed variants carry
// exact tail constants: P(J > x) = c_J x^(-rho) for large x, and the slowly
// varying part of the tail is fixed to the constant L_rho = c_J Gamma(1-rho)
// so that the normalization t^rho / L_rho is computable in closed form.
class InterarrivalLaw {
 public:
  enum class Kind { kExponential, kDeterministic, kParetoTail, kFractional };

  static InterarrivalLaw exponential(double mu);
  static InterarrivalLaw deterministic(double d);
  static InterarrivalLaw pareto_tail(double rho, double x_m);
  // Waiting times scale * tau_rho of the fractional renewal clock.
  static InterarrivalLaw fractional(double rho, double scale);

  Kind kind() const { return kind_; }
  bool finite_mean() const { return finite_mean_; }
  double mean() const;        // throws UnsupportedRegimeError when infinite
  double rho() const { return rho_; }
  double tail_constant() const { return c_j_; }  // c_J
  double slowly_varying_constant() const { return l_rho_; }

  double sample(Engine& rng) const;
  // Exact survival for the Pareto family (used by tail oracles).
  double pareto_survival(double x) const;

  void check() const;
  std::string describe() const;

 private:
  InterarrivalLaw() = default;

  Kind kind_ = Kind::kExponential;
  double mu_ = 1.0;
  double d_ = 1.0;
  double rho_ = 0.0;
  double x_m_ = 1.0;
  double scale_ = 1.0;
  double c_j_ = 0.0;
  double l_rho_ = 0.0;
  bool finite_mean_ = true;
};

// Streaming renewal state: strictly increasing epochs S_1 < S_2 < ... with
// N(t) = max{n : S_n <= t}.
class RenewalCursor {
 public:
  RenewalCursor(const InterarrivalLaw& law, Engine& rng)
      : next_(law.sample(rng)) {}

  std::uint64_t count() const { return n_; }
  double last_epoch() const { return last_; }
  double next_epoch() const { return next_; }

  void advance(const InterarrivalLaw& law, Engine& rng) {
    last_ = next_;
    n_ += 1;
    next_ += law.sample(rng);
  }

 private:
  std::uint64_t n_ = 0;
  double last_ = 0.0;
  double next_ = 0.0;
};

struct RenewalCount {
  std::uint64_t n = 0;  // renewals by t
  double spent = 0.0;   // t - S_N(t)
};

RenewalCount count_renewals(const InterarrivalLaw& law, double t, Engine& rng);

struct RatioCheckPoint {
  double t = 0.0;
  double mean_ratio = 0.0;       // mean of N(t)/(t/mu)
  double frac_within_eps = 0.0;  // mass of |ratio - 1| <= eps
};

// Law-of-large-numbers diagnostic for finite-mean clocks; throws
// DomainError for laws with infinite mean.
std::vector<RatioCheckPoint> ratio_limit_check(const InterarrivalLaw& law,
                                               const std::vector<double>& ts,
                                               std::uint64_t reps, double eps,
                                               std::uint64_t seed,
                                               std::uint64_t tag,
                                               unsigned workers);

}  // namespace branchlab

#endif  // BRANCHLAB_RENEWAL_HPP_
