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
#include "branchlab/quadrature.hpp"
#include "branchlab/special.hpp"

using namespace branchlab;

TEST_CASE("incomplete beta closed forms") {
  // x = 1 gives the complete Beta function.
  CHECK(inc_beta(1.0, 2.5, 1.5) ==
        doctest::Approx(beta_function(2.5, 1.5)).epsilon(1e-12));
  // Uniform integrand.
  CHECK(inc_beta(0.5, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  // a=1: B_x(1,b) = (1-(1-x)^b)/b.
  CHECK(inc_beta(0.5, 1.0, 2.0) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(inc_beta(0.3, 1.0, 0.7) ==
        doctest::Approx((1.0 - std::pow(0.7, 0.7)) / 0.7).epsilon(1e-10));
  CHECK_THROWS_AS(inc_beta(-0.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(inc_beta(0.5, -1.0, 1.0), DomainError);
}

TEST_CASE("regularized incomplete beta against quadrature") {
  for (double a : {0.4, 1.3, 3.0}) {
    for (double b : {0.3, 0.9, 2.0}) {
      for (double x : {0.05, 0.35, 0.8}) {
        // u = w^(1/a) absorbs the u^(a-1) endpoint.
        auto integrand = [&](double w) {
          const double u = std::pow(w, 1.0 / a);
          return std::pow(1.0 - u, b - 1.0) / a;
        };
        const double direct =
            integrate(integrand, 0.0, std::pow(x, a), 1e-11, 1e-13).value;
        CHECK(inc_beta(x, a, b) == doctest::Approx(direct).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("mittag-leffler reduces to the exponential at rho=1") {
  CHECK(mittag_leffler(1.0, -1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(mittag_leffler(1.0, -7.5) == doctest::Approx(std::exp(-7.5)));
}

TEST_CASE("mittag-leffler half-order closed form") {
  // E_{1/2}(-z) = exp(z^2) erfc(z) on z >= 0.
  for (double z : {0.2, 1.0, 2.0, 5.0, 20.0}) {
    const double expect = std::exp(z * z) * std::erfc(z);
    CHECK(mittag_leffler(0.5, -z) ==
          doctest::Approx(expect).epsilon(1e-8));
  }
  CHECK(mittag_leffler(0.5, -1.0) ==
        doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-10));
  CHECK(mittag_leffler(0.5, 0.0) == 1.0);
  CHECK_THROWS_AS(mittag_leffler(0.5, 0.5), DomainError);
}

TEST_CASE("mittag-leffler branches agree across the crossover") {
  // The evaluator must be smooth and consistent where the power series,
  // asymptotic series, and spectral integral hand over.
  for (double rho : {0.3, 0.5, 0.7, 0.8, 0.9}) {
    double prev = 1.0;
    for (double z = 0.25; z < 4000.0; z *= 1.07) {
      const double v = mittag_leffler(rho, -z);
      CHECK(v > 0.0);
      CHECK(v < prev * (1.0 + 1e-9));
      prev = v;
    }
  }
}

TEST_CASE("mittag-leffler deep tail matches the one-term asymptote") {
  for (double rho : {0.4, 0.7, 0.9}) {
    const double z = 1e6;
    const double lead = 1.0 / (z * std::tgamma(1.0 - rho));
    CHECK(mittag_leffler(rho, -z) == doctest::Approx(lead).epsilon(1e-4));
  }
}

TEST_CASE("two-parameter variant matches the derivative identity") {
  // E_{r,r}(-z) = r * d/dy E_r(y) at y=-z; check with central differences.
  for (double rho : {0.5, 0.8}) {
    for (double z : {0.7, 3.0, 9.0}) {
      const double h = 1e-5;
      const double deriv = (mittag_leffler(rho, -z + h) -
                            mittag_leffler(rho, -z - h)) /
                           (2.0 * h);
      CHECK(mittag_leffler_rho_rho(rho, -z) ==
            doctest::Approx(rho * deriv).epsilon(1e-5));
    }
  }
}

TEST_CASE("kummer function against the integral representation") {
  // M(a,1,-z) = 1/B(a,1-a) int_0^1 e^(-z s) s^(a-1) (1-s)^(-a) ds, with the
  // endpoint singularities absorbed by power substitutions on each half.
  for (double a : {0.3, 0.7}) {
    for (double z : {0.5, 5.0, 30.0, 60.0, 200.0}) {
      auto head = [&](double w) {  // s = w^(1/a) on [0, 1/2]
        const double s = std::pow(w, 1.0 / a);
        return std::exp(-z * s) * std::pow(1.0 - s, -a) / a;
      };
      auto tail = [&](double v) {  // s = 1 - v^(1/(1-a)) on [1/2, 1]
        const double s = 1.0 - std::pow(v, 1.0 / (1.0 - a));
        return std::exp(-z * s) * std::pow(s, a - 1.0) / (1.0 - a);
      };
      const double direct =
          (integrate(head, 0.0, std::pow(0.5, a), 1e-11, 1e-14).value +
           integrate(tail, 0.0, std::pow(0.5, 1.0 - a), 1e-11, 1e-14).value) /
          beta_function(a, 1.0 - a);
      CHECK(kummer_m1_neg(a, z) == doctest::Approx(direct).epsilon(1e-6));
    }
  }
}

TEST_CASE("adaptive quadrature on known integrals") {
  const double q1 = integrate([](double x) { return std::exp(-x); }, 0.0,
                              40.0, 1e-12, 1e-14).value;
  CHECK(q1 == doctest::Approx(1.0).epsilon(1e-10));
  const double q2 =
      integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0)
          .value;
  CHECK(q2 == doctest::Approx(std::atan(1.0)).epsilon(1e-10));
}
