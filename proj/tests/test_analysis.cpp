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

#include "branchlab/analysis.hpp"
#include "branchlab/errors.hpp"
#include "branchlab/rng.hpp"
#include "branchlab/special.hpp"

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

TEST_CASE("empirical cdf is a right-continuous step function") {
  const EmpiricalCdf cdf({3.0, 1.0, 2.0, 2.0});
  CHECK(cdf.eval(0.5) == 0.0);
  CHECK(cdf.eval(1.0) == 0.25);
  CHECK(cdf.eval(1.999) == 0.25);
  CHECK(cdf.eval(2.0) == 0.75);
  CHECK(cdf.eval(3.0) == 1.0);
}

TEST_CASE("ks distance: calibration and rejection") {
  // A degenerate sample against its own step function.
  {
    const EmpiricalCdf sample({2.0, 2.0, 2.0});
    const auto ks = ks_distance(
        sample, [](double x) { return x < 2.0 ? 0.0 : 1.0; }, "step");
    CHECK(ks.statistic == 0.0);
  }
  // A large exponential sample against its own law (DKW scale).
  {
    Engine rng(51, 0);
    std::vector<double> draws(1000000);
    for (auto& d : draws) d = sample_exponential(rng);
    const EmpiricalCdf sample(std::move(draws));
    const auto ks = ks_distance(
        sample, [](double x) { return 1.0 - std::exp(-x); }, "exp");
    CHECK(ks.statistic <= 0.002);
  }
  // The same sample against the wrong law must reject hard.
  {
    Engine rng(52, 0);
    std::vector<double> draws(20000);
    for (auto& d : draws) d = sample_exponential(rng);
    const EmpiricalCdf sample(std::move(draws));
    const auto ks = ks_distance(
        sample,
        [](double x) { return std::min(1.0, std::max(0.0, x)); },
        "uniform");
    CHECK(ks.statistic >= 0.2);
  }
}

TEST_CASE("two-sample ks is symmetric and satisfies the triangle bound") {
  Engine rng(53, 0);
  auto draw = [&rng](double scale, int n) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * sample_exponential(rng);
    return EmpiricalCdf(std::move(v));
  };
  const auto a = draw(1.0, 4000);
  const auto b = draw(1.3, 4000);
  const auto c = draw(1.7, 4000);
  const double ab = ks_distance(a, b).statistic;
  const double ba = ks_distance(b, a).statistic;
  const double bc = ks_distance(b, c).statistic;
  const double ac = ks_distance(a, c).statistic;
  CHECK(ab == ba);
  CHECK(ac <= ab + bc + 1e-12);
}

TEST_CASE("tail fit recovers exact and contaminated power laws") {
  std::vector<double> ts, ps;
  for (double t = 100.0; t <= 1e5; t *= 2.0) {
    ts.push_back(t);
    ps.push_back(std::pow(t, -1.5));
  }
  const auto exact = fit_tail_index(ts, ps);
  CHECK(exact.exponent == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(exact.stderr_ < 1e-12);

  std::vector<double> cs;
  for (double t : ts) cs.push_back(0.7 * std::pow(t, -0.7) *
                                   (1.0 + 5.0 / std::log(t)));
  const auto noisy = fit_tail_index(ts, cs);
  CHECK(std::fabs(noisy.exponent + 0.7) < 0.1);

  ps[2] = 0.0;
  CHECK_THROWS_AS(fit_tail_index(ts, ps), ZeroCellError);
  CHECK_THROWS_AS(fit_tail_index({10.0, 20.0, 100.0},
                                 {0.1, 0.05, 0.01}),
                  DomainError);  // grid spans one decade only
}

TEST_CASE("prediction table: plain rows") {
  const auto clock_exp = InterarrivalLaw::exponential(1.0);
  const auto clock_pareto = InterarrivalLaw::pareto_tail(0.9, 1.0);

  const auto row1 = predict(model_c2(InitialLaw::fixed(1)), clock_exp);
  CHECK(row1.survival_exponent == doctest::Approx(-1.5));
  CHECK(row1.limit.kind == LimitLaw::Kind::kExp1);
  CHECK(row1.scale(512.0) == doctest::Approx(256.0));
  CHECK_FALSE(row1.has_atom);

  const auto row2 =
      predict(model_c2(InitialLaw::heavy_tail(0.7, 1.0)), clock_exp);
  CHECK(row2.survival_exponent == doctest::Approx(-0.7));
  CHECK(row2.limit.kind == LimitLaw::Kind::kEta);

  const auto row3 = predict(model_c2(InitialLaw::fixed(1)), clock_pareto);
  CHECK(row3.survival_exponent == doctest::Approx(-0.9));
  CHECK(row3.limit.kind == LimitLaw::Kind::kExp1);
  // A(t) = b t^rho / L_rho with L_rho = Gamma(0.1).
  CHECK(row3.scale(100.0) ==
        doctest::Approx(0.5 * std::pow(100.0, 0.9) / std::tgamma(0.1)));

  const auto row4 =
      predict(model_c2(InitialLaw::heavy_tail(0.6, 1.0)), clock_pareto);
  CHECK(row4.survival_exponent == doctest::Approx(-0.54));
  CHECK(row4.limit.kind == LimitLaw::Kind::kProduct);
  CHECK(row4.limit.factors.size() == 2);
  CHECK(row4.limit.factors[0].first.kind == LimitLaw::Kind::kEta);
  CHECK(row4.limit.factors[1].first.kind == LimitLaw::Kind::kZetaPower);

  // The power-weighted factor needs gamma < rho.
  CHECK_THROWS_AS(predict(model_c2(InitialLaw::heavy_tail(0.95, 1.0)),
                          clock_pareto),
                  UnsupportedRegimeError);
}

TEST_CASE("prediction table: regenerative rows") {
  const auto clock_pareto = InterarrivalLaw::pareto_tail(0.9, 1.0);
  const auto sojourn = SojournLaw::pareto_tail(0.6, 1.0);

  // Heavy clock, finite start, dominated by the sojourn tail.
  const auto row = predict(model_c2(InitialLaw::fixed(1)), clock_pareto,
                           &sojourn,
                           std::numeric_limits<double>::infinity());
  CHECK(row.has_atom);
  CHECK(row.atom == 1.0);
  CHECK(row.normalization == "t^rho/L_rho");
  CHECK(row.scale(100.0) ==
        doctest::Approx(std::pow(100.0, 0.9) / std::tgamma(0.1)));
  REQUIRE(row.limit.kind == LimitLaw::Kind::kProduct);
  CHECK(row.limit.factors[0].first.kind == LimitLaw::Kind::kExp1);
  CHECK(row.limit.factors[1].first.kind == LimitLaw::Kind::kBeta);
  CHECK(row.limit.factors[1].first.p1 == doctest::Approx(0.6));
  CHECK(row.limit.factors[1].first.p2 == doctest::Approx(0.1));
  CHECK(row.limit.factors[1].second == doctest::Approx(0.9));

  // Finite-mean clock with a heavy start and a finite delta keeps the
  // matched-exponent mixing factor.
  const auto clock_exp = InterarrivalLaw::exponential(1.0);
  const auto sojourn_eq = SojournLaw::pareto_tail(0.7, 1.0);
  const auto row2 = predict(model_c2(InitialLaw::heavy_tail(0.7, 1.0)),
                            clock_exp, &sojourn_eq, 1.4);
  CHECK(row2.atom == doctest::Approx(1.4 / 2.4));
  REQUIRE(row2.limit.kind == LimitLaw::Kind::kProduct);
  CHECK(row2.limit.factors[1].first.kind == LimitLaw::Kind::kBeta);
  CHECK(row2.limit.factors[1].first.p1 == doctest::Approx(0.7));

  // Window violations raise.
  CHECK_THROWS_AS(predict(model_c2(InitialLaw::heavy_tail(0.4, 1.0)),
                          clock_exp, &sojourn_eq, 1.0),
                  UnsupportedRegimeError);
  CHECK_THROWS_AS(predict(model_c2(InitialLaw::fixed(1)), clock_exp,
                          &sojourn_eq, 1.0),
                  UnsupportedRegimeError);
}

TEST_CASE("scale-mixture quadrature: bounds, oracle product, sampler") {
  auto exp_cdf = [](double x) {
    return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x);
  };
  CHECK(g_quadrature(exp_cdf, 0.9, 0.9, std::nullopt, 0.0) == 0.0);
  CHECK(g_quadrature(exp_cdf, 0.9, 0.9, std::nullopt, 1e8) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // The mixing integral equals the product-law distribution: the first
  // branch against the compiled beta-power product.
  const double rho = 0.9;
  const CompiledLimitLaw product(LimitLaw::product(
      {{LimitLaw::exp1(), 1.0}, {LimitLaw::beta(1.0 - rho, rho), rho}}));
  for (double x : {0.05, 0.2, 0.5, 1.0, 2.0}) {
    const double via_integral =
        g_quadrature(exp_cdf, rho, rho, std::nullopt, x);
    CHECK(std::fabs(via_integral - product.cdf(x)) < 1e-3);
  }

  // The alpha branch against a direct sampler of xi * Beta(1-rho,alpha)^rho.
  const double alpha = 0.6;
  Engine rng(54, 0);
  std::vector<double> draws(200000);
  for (auto& d : draws) {
    d = sample_exponential(rng) *
        std::pow(sample_beta(rng, 1.0 - rho, alpha), rho);
  }
  const EmpiricalCdf sample(std::move(draws));
  double worst = 0.0;
  for (double x : {0.02, 0.1, 0.3, 0.8, 2.0}) {
    const double via_integral = g_quadrature(exp_cdf, rho, rho, alpha, x);
    worst = std::max(worst, std::fabs(via_integral - sample.eval(x)));
  }
  CHECK(worst < 0.01);

  CHECK_THROWS_AS(g_quadrature(exp_cdf, 0.9, 0.4, std::nullopt, 1.0),
                  DomainError);
  CHECK_THROWS_AS(g_quadrature(exp_cdf, 0.9, 0.9, 0.3, 1.0), DomainError);
}
