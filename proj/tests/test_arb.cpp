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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <doctest.h>

#include "branchlab/arb.hpp"
#include "branchlab/errors.hpp"
#include "branchlab/special.hpp"
#include "branchlab/subordinated.hpp"

using namespace branchlab;

namespace {

DiscretePmf unit_mass(int k) {
  std::vector<double> probs(k + 1, 0.0);
  probs[k] = 1.0;
  return DiscretePmf(probs);
}

ModelConfig model_c2(InitialLaw initial) {
  ModelConfig config;
  config.offspring = OffspringLaw::poisson_unit();
  config.migration.p = 0.25;
  config.migration.q = 0.75;
  config.migration.family_emigration = unit_mass(0);
  config.migration.individual_emigration = unit_mass(1);
  config.migration.immigration = unit_mass(0);
  config.initial = std::move(initial);
  return config;
}

}  // namespace

TEST_CASE("fully deterministic configuration cycles with period 3") {
  // Offspring identically zero, one founder, unit interarrivals, sojourn 2:
  // the population equals 1 exactly on [2,3), [5,6), [8,9), ...
  ArbConfig config;
  config.model.offspring = OffspringLaw::explicit_pmf({1.0});
  config.model.migration.q = 1.0;
  config.model.migration.family_emigration = unit_mass(0);
  config.model.migration.individual_emigration = unit_mass(0);
  config.model.migration.immigration = unit_mass(0);
  config.model.initial = InitialLaw::fixed(1);
  config.interarrival = InterarrivalLaw::deterministic(1.0);
  config.sojourn = SojournLaw::deterministic(2.0);
  Engine rng(41, 0);
  struct Probe {
    double t;
    double u;
    bool down;
    std::uint64_t cycle;
  };
  for (const Probe& p : {Probe{0.5, 0.0, true, 1}, Probe{1.9, 0.0, true, 1},
                         Probe{2.0, 1.0, false, 1}, Probe{2.9, 1.0, false, 1},
                         Probe{3.1, 0.0, true, 2}, Probe{5.5, 1.0, false, 2},
                         Probe{8.2, 1.0, false, 3}}) {
    const auto obs = simulate_u_at(config, p.t, rng);
    CHECK(obs.u == p.u);
    CHECK(obs.in_down == p.down);
    CHECK(obs.cycle_index == p.cycle);
  }
}

TEST_CASE("landing in the first up period couples to the plain process") {
  // With a shared stream, the value read inside the first up period equals
  // the subordinated process run for the elapsed time: the up duration and
  // the evaluated copy are one realization.
  ArbConfig config;
  config.model = model_c2(InitialLaw::fixed(1));
  config.interarrival = InterarrivalLaw::exponential(1.0);
  config.sojourn = SojournLaw::exponential(2.0);
  const double t = 6.0;
  int coupled = 0;
  for (std::uint64_t rep = 0; rep < 4000; ++rep) {
    Engine a(42, rep);
    Engine b(42, rep);
    const auto obs = simulate_u_at(config, t, a);
    const double down = config.sojourn.sample(b);
    if (t < down) {
      CHECK(obs.in_down);
      CHECK(obs.cycle_index == 1);
      continue;
    }
    const auto y = simulate_y_at(config.model, config.interarrival, t - down,
                                 b);
    if (y.y > 0.0) {
      ++coupled;
      CHECK(obs.cycle_index == 1);
      CHECK_FALSE(obs.in_down);
      CHECK(obs.u == y.y);
    }
  }
  CHECK(coupled > 100);
}

TEST_CASE("cycle bookkeeping never observes a dead copy as up") {
  ArbConfig config;
  config.model = model_c2(InitialLaw::heavy_tail(0.7, 1.0));
  config.interarrival = InterarrivalLaw::exponential(1.0);
  config.sojourn = SojournLaw::pareto_tail(0.7, 1.0);
  Engine rng(43, 0);
  for (int i = 0; i < 20000; ++i) {
    const auto obs = simulate_u_at(config, 50.0, rng);
    if (!obs.in_down) CHECK(obs.u > 0.0);
    if (obs.in_down) CHECK(obs.u == 0.0);
    CHECK(obs.cycle_index >= 1);
  }
}

TEST_CASE("tail-ratio regimes resolve by exponent comparison") {
  // Lighter sojourn tail than up tail: ratio 0.
  {
    ArbConfig config;
    config.model = model_c2(InitialLaw::fixed(1));
    config.interarrival = InterarrivalLaw::pareto_tail(0.6, 1.0);
    config.sojourn = SojournLaw::pareto_tail(0.95, 1.0);
    CHECK(theoretical_delta(config, 1.0) == 0.0);
  }
  // Heavier sojourn tail: ratio infinity.
  {
    ArbConfig config;
    config.model = model_c2(InitialLaw::fixed(1));
    config.interarrival = InterarrivalLaw::pareto_tail(0.9, 1.0);
    config.sojourn = SojournLaw::pareto_tail(0.6, 1.0);
    CHECK(std::isinf(theoretical_delta(config)));
  }
  // Finite-mean sojourn always loses.
  {
    ArbConfig config;
    config.model = model_c2(InitialLaw::heavy_tail(0.7, 1.0));
    config.interarrival = InterarrivalLaw::exponential(1.0);
    config.sojourn = SojournLaw::exponential(1.0);
    CHECK(theoretical_delta(config) == 0.0);
  }
}

TEST_CASE("matched exponents resolve to the constant ratio") {
  // alpha = gamma = 0.7 on a unit-mean clock: the up-tail constant is the
  // chain-survival constant c b^-g Gamma(1-theta-g)/Gamma(1-theta), the form
  // the simulated survival curve matches.
  ArbConfig config;
  config.model = model_c2(InitialLaw::heavy_tail(0.7, 1.0));
  config.interarrival = InterarrivalLaw::exponential(1.0);
  config.sojourn = SojournLaw::pareto_tail(0.7, 1.0);
  const double delta = theoretical_delta(config);
  const double b = 0.5, theta = -0.5, gamma = 0.7;
  const double l_tg = std::pow(b, -gamma) *
                      std::tgamma(1.0 - theta - gamma) /
                      std::tgamma(1.0 - theta);
  CHECK(delta == doctest::Approx(1.0 / l_tg).epsilon(1e-10));
  CHECK(delta == doctest::Approx(0.468573).epsilon(1e-4));
}

TEST_CASE("equal exponents on a heavy clock need the extinction mean") {
  ArbConfig config;
  config.model = model_c2(InitialLaw::fixed(1));
  config.interarrival = InterarrivalLaw::pareto_tail(0.7, 1.0);
  config.sojourn = SojournLaw::pareto_tail(0.7, 1.0);
  CHECK_THROWS_AS(theoretical_delta(config), UnsupportedRegimeError);
  CHECK(theoretical_delta(config, 1.5) > 0.0);
}

TEST_CASE("atom sampler counts zeros and survivors coherently") {
  ArbConfig config;
  config.model = model_c2(InitialLaw::heavy_tail(0.7, 1.0));
  config.interarrival = InterarrivalLaw::exponential(1.0);
  config.sojourn = SojournLaw::pareto_tail(0.7, 1.0);
  const auto out = atom_and_conditional(config, 200.0, 50.0, 20000, 44, 1, 2,
                                        10);
  CHECK(out.atom > 0.0);
  CHECK(out.atom < 1.0);
  CHECK(out.conditional.survivors + static_cast<std::uint64_t>(
                                        out.atom * 20000 + 0.5) == 20000);
  for (double v : out.conditional.values) CHECK(v > 0.0);
}

TEST_CASE("cycle budget overflow raises") {
  ArbConfig config;
  config.model.offspring = OffspringLaw::explicit_pmf({1.0});
  config.model.migration.q = 1.0;
  config.model.initial = InitialLaw::fixed(1);
  config.interarrival = InterarrivalLaw::deterministic(1.0);
  config.sojourn = SojournLaw::deterministic(1.0);
  Engine rng(45, 0);
  CHECK_THROWS_AS(simulate_u_at(config, 1e9, rng, 16), CycleOverflowError);
}
