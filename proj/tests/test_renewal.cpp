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

#include "branchlab/errors.hpp"
#include "branchlab/renewal.hpp"

using namespace branchlab;

TEST_CASE("interarrival draws and tail constants") {
  Engine rng(11, 0);
  const auto det = InterarrivalLaw::deterministic(1.0);
  for (int i = 0; i < 4; ++i) CHECK(det.sample(rng) == 1.0);

  const auto expo = InterarrivalLaw::exponential(2.0);
  const int n = 300000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += expo.sample(rng);
  CHECK(std::fabs(sum / n - 2.0) < 3.0 * 2.0 / std::sqrt(double(n)));

  const auto pareto = InterarrivalLaw::pareto_tail(0.7, 1.0);
  CHECK(pareto.tail_constant() == doctest::Approx(1.0));
  CHECK(pareto.slowly_varying_constant() ==
        doctest::Approx(std::tgamma(0.3)).epsilon(1e-12));
  int above10 = 0;
  for (int i = 0; i < n; ++i) {
    const double j = pareto.sample(rng);
    CHECK(j >= 1.0);
    if (j > 10.0) ++above10;
  }
  const double p = std::pow(10.0, -0.7);
  CHECK(std::fabs(double(above10) / n - p) <
        3.0 * std::sqrt(p * (1 - p) / n));
  CHECK(pareto.pareto_survival(10.0) == doctest::Approx(p));
  CHECK_THROWS_AS(pareto.mean(), UnsupportedRegimeError);
}

TEST_CASE("fractional clock tail matches its constant") {
  // P(J > x) ~ c_J x^(-rho) with c_J = scale^rho / Gamma(1-rho).
  const auto law = InterarrivalLaw::fractional(0.7, 1.0);
  Engine rng(12, 0);
  const int n = 400000;
  int above = 0;
  const double x = 50.0;
  for (int i = 0; i < n; ++i) {
    if (law.sample(rng) > x) ++above;
  }
  const double expect = law.tail_constant() * std::pow(x, -0.7);
  const double se = std::sqrt(expect / n);
  CHECK(std::fabs(double(above) / n - expect) < 4.0 * se + 0.1 * expect);
}

TEST_CASE("renewal counting on the lattice clock") {
  Engine rng(13, 0);
  const auto det = InterarrivalLaw::deterministic(1.0);
  const auto rc = count_renewals(det, 3.5, rng);
  CHECK(rc.n == 3);
  CHECK(rc.spent == doctest::Approx(0.5));
  const auto rc0 = count_renewals(det, 0.5, rng);
  CHECK(rc0.n == 0);
  CHECK(rc0.spent == doctest::Approx(0.5));
}

TEST_CASE("poisson identity for the exponential clock") {
  Engine rng(14, 0);
  const auto expo = InterarrivalLaw::exponential(1.0);
  const int n = 40000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto rc = count_renewals(expo, 100.0, rng);
    sum += double(rc.n);
    sum2 += double(rc.n) * double(rc.n);
    CHECK(rc.spent >= 0.0);
  }
  const double mean = sum / n;
  CHECK(std::fabs(mean - 100.0) < 3.0 * 10.0 / std::sqrt(double(n)));
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(var - 100.0) < 8.0);
}

TEST_CASE("cursor epochs are strictly increasing and bracket t") {
  Engine rng(15, 0);
  const auto pareto = InterarrivalLaw::pareto_tail(0.7, 1.0);
  RenewalCursor cursor(pareto, rng);
  double prev = 0.0;
  for (int i = 0; i < 200; ++i) {
    CHECK(cursor.next_epoch() > prev);
    prev = cursor.next_epoch();
    cursor.advance(pareto, rng);
    CHECK(cursor.last_epoch() == prev);
  }
}

TEST_CASE("heavy-tail renewal count scales like t^rho") {
  const auto pareto = InterarrivalLaw::pareto_tail(0.7, 1.0);
  const double l_rho = pareto.slowly_varying_constant();
  std::vector<double> ratios;
  for (double t : {1e3, 1e4, 1e5}) {
    Engine rng(16, static_cast<std::uint64_t>(t));
    const int n = 1500;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += double(count_renewals(pareto, t, rng).n);
    ratios.push_back((sum / n) * l_rho / std::pow(t, 0.7));
  }
  for (double r : ratios) {
    CHECK(std::fabs(r - ratios[0]) < 0.15 * ratios[0]);
  }
}

TEST_CASE("law-of-large-numbers diagnostic for finite-mean clocks") {
  const auto det = InterarrivalLaw::deterministic(1.0);
  const auto points =
      ratio_limit_check(det, {10.0, 100.0}, 500, 0.05, 21, 1, 2);
  CHECK(points[1].frac_within_eps == 1.0);

  const auto expo = InterarrivalLaw::exponential(1.0);
  const auto ep = ratio_limit_check(expo, {10000.0}, 3000, 0.05, 22, 2, 2);
  CHECK(1.0 - ep[0].frac_within_eps <= 0.01);
  CHECK(std::fabs(ep[0].mean_ratio - 1.0) < 0.01);

  CHECK_THROWS_AS(ratio_limit_check(InterarrivalLaw::pareto_tail(0.7, 1.0),
                                    {10.0}, 10, 0.05, 23, 3, 1),
                  DomainError);
}
