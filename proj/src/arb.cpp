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

#include "branchlab/arb.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/special.hpp"

namespace branchlab {

SojournLaw SojournLaw::exponential(double mu) {
  SojournLaw law;
  law.kind_ = Kind::kExponential;
  law.mu_ = mu;
  return law;
}

SojournLaw SojournLaw::deterministic(double d) {
  SojournLaw law;
  law.kind_ = Kind::kDeterministic;
  law.d_ = d;
  return law;
}

SojournLaw SojournLaw::pareto_tail(double alpha, double x_m) {
  SojournLaw law;
  law.kind_ = Kind::kParetoTail;
  law.alpha_ = alpha;
  law.x_m_ = x_m;
  law.c_d_ = std::pow(x_m, alpha);
  return law;
}

double SojournLaw::sample(Engine& rng) const {
  switch (kind_) {
    case Kind::kExponential:
      return sample_exponential(rng, mu_);
    case Kind::kDeterministic:
      return d_;
    case Kind::kParetoTail:
      return sample_pareto(rng, alpha_, x_m_);
  }
  return 0.0;
}

void SojournLaw::check() const {
  switch (kind_) {
    case Kind::kExponential:
      if (!(mu_ > 0.0)) throw DomainError("sojourn: mu must be > 0");
      return;
    case Kind::kDeterministic:
      if (!(d_ > 0.0)) throw DomainError("sojourn: d must be > 0");
      return;
    case Kind::kParetoTail:
      if (!(alpha_ > 0.5 && alpha_ < 1.0) || !(x_m_ > 0.0)) {
        throw DomainError("sojourn: pareto needs alpha in (1/2,1), x_m > 0");
      }
      return;
  }
}

std::string SojournLaw::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kExponential:
      os << "exponential(mu=" << mu_ << ")";
      break;
    case Kind::kDeterministic:
      os << "deterministic(" << d_ << ")";
      break;
    case Kind::kParetoTail:
      os << "pareto(alpha=" << alpha_ << ",x_m=" << x_m_ << ")";
      break;
  }
  return os.str();
}

ArbObservation simulate_u_at(const ArbConfig& config, double t, Engine& rng,
                             std::uint64_t max_cycles) {
  if (!(t >= 0.0)) throw DomainError("simulate_u_at: t must be >= 0");
  double clock_time = 0.0;
  for (std::uint64_t cycle = 1; cycle <= max_cycles; ++cycle) {
    const double down = config.sojourn.sample(rng);
    if (t < clock_time + down) return {0.0, true, cycle};
    clock_time += down;
    // Fresh subordinated copy; its extinction epoch ends the cycle.
    GenerationState state{0, sample_initial(config.model.initial, rng)};
    RenewalCursor cursor(config.interarrival, rng);
    for (;;) {
      const double epoch = clock_time + cursor.next_epoch();
      if (t < epoch) return {state.z, false, cycle};
      cursor.advance(config.interarrival, rng);
      state = step(state, config.model, rng);
      if (state.z <= 0.0) {
        clock_time = epoch;  // death observed here; cycle closes
        break;
      }
    }
  }
  throw CycleOverflowError("simulate_u_at: cycle budget exhausted");
}

double theoretical_delta(const ArbConfig& config, double mean_T_minus_1) {
  const DerivedParams d = config.model.derived();
  const bool clock_heavy = !config.interarrival.finite_mean();
  const bool start_heavy = !config.model.initial.has_finite_mean();

  // Up-period tail: exponent and constant of P(up duration > t).  The
  // chain-survival constant uses the form
  //   L = c b^-g Gamma(1-theta-g) / Gamma(1-theta),
  // which the simulated P(Z_n > 0) n^g matches directly (see the survival
  // oracle tests); the commonly quoted variant without the Gamma(1-g)
  // factor does not.
  double up_exponent;
  double up_constant;
  const double gamma = config.model.initial.gamma();
  const double c_gamma = config.model.initial.tail_constant();
  const double l_theta_gamma =
      config.model.initial.has_finite_mean()
          ? 0.0
          : c_gamma * std::pow(d.b, -gamma) *
                std::exp(std::lgamma(1.0 - d.theta - gamma) -
                         std::lgamma(1.0 - d.theta));
  if (!clock_heavy && start_heavy) {
    const double mu = config.interarrival.mean();
    up_exponent = gamma;
    up_constant = l_theta_gamma * std::pow(mu, gamma);
  } else if (clock_heavy && !start_heavy) {
    const double rho = config.interarrival.rho();
    up_exponent = rho;
    if (mean_T_minus_1 < 0.0) {
      up_constant = -1.0;  // only needed on the equal-exponent branch
    } else {
      up_constant =
          mean_T_minus_1 * config.interarrival.slowly_varying_constant();
    }
  } else if (clock_heavy && start_heavy) {
    const double rho = config.interarrival.rho();
    const double l_rho = config.interarrival.slowly_varying_constant();
    const double front = std::pow(1.0 - rho, gamma) *
                         std::pow(std::tgamma(1.0 - rho), 1.0 + gamma) /
                         std::tgamma(1.0 - rho * gamma);
    up_exponent = rho * gamma;
    up_constant = front * l_theta_gamma * std::pow(l_rho, gamma);
  } else {
    throw UnsupportedRegimeError(
        "theoretical_delta: finite-mean clock with finite-mean start has a "
        "summable up tail; no tail-ratio regime applies");
  }

  // Down-period tail.
  if (config.sojourn.finite_mean()) return 0.0;  // lighter than any t^(-a), a<1
  const double alpha = config.sojourn.alpha();
  constexpr double kExponentTol = 1e-12;
  if (alpha > up_exponent + kExponentTol) return 0.0;
  if (alpha < up_exponent - kExponentTol) {
    return std::numeric_limits<double>::infinity();
  }
  if (up_constant < 0.0) {
    throw UnsupportedRegimeError(
        "theoretical_delta: equal exponents need the simulated mean "
        "extinction time; pass mean_T_minus_1");
  }
  return config.sojourn.tail_constant() / up_constant;
}

ArbAtomSample atom_and_conditional(const ArbConfig& config, double t,
                                   double normalization, std::uint64_t reps,
                                   std::uint64_t seed, std::uint64_t tag,
                                   unsigned workers,
                                   std::uint64_t min_survivors) {
  struct Acc {
    std::uint64_t zeros = 0;
    std::vector<double> values;
  };
  Acc total = parallel_replicates(
      reps, workers, seed, tag, Acc{},
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        const ArbObservation obs = simulate_u_at(config, t, rng);
        if (obs.u <= 0.0) {
          acc.zeros += 1;
        } else {
          acc.values.push_back(obs.u / normalization);
        }
      },
      [](Acc& into, const Acc& from) {
        into.zeros += from.zeros;
        into.values.insert(into.values.end(), from.values.begin(),
                           from.values.end());
      });
  ArbAtomSample out;
  const double r = static_cast<double>(reps);
  out.atom = static_cast<double>(total.zeros) / r;
  out.half_width = 1.959963984540054 *
                   std::sqrt(std::max(out.atom * (1.0 - out.atom), 1.0 / r) / r);
  out.conditional.reps = reps;
  out.conditional.survivors = total.values.size();
  out.conditional.values = std::move(total.values);
  if (out.conditional.survivors < min_survivors) {
    throw InsufficientSurvivorsError(
        "atom_and_conditional: survivors " +
        std::to_string(out.conditional.survivors) + " < required " +
        std::to_string(min_survivors));
  }
  return out;
}

}  // namespace branchlab
