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

#ifndef BRANCHLAB_LIMIT_LAWS_HPP_
#define BRANCHLAB_LIMIT_LAWS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "branchlab/rng.hpp"

namespace branchlab {

// Monotone grid representation of a distribution function.
struct TabulatedCdf {
  std::vector<double> grid;    // ascending abscissae
  std::vector<double> values;  // nondecreasing, within [0,1]
  double error_budget = 0.0;   // max pointwise error of the tabulation

  double eval(double x) const;      // monotone linear interpolation
  double quantile(double p) const;  // generalized inverse
  void repair_monotone();           // isotone projection + clamp to [0,1]
};

// Builds the standard geometric tabulation grid for a positive law:
// [1e-4 * median, (1-1e-4)-quantile] with `knots` knots, plus the origin.
TabulatedCdf tabulate_cdf(const std::function<double(double)>& cdf,
                          double error_budget, int knots = 2048);

// ------------------------------------------------------------- eta family

// Laplace transform of the heavy-start conditional limit law:
//   phi(lambda) = 1 + theta lambda^g (1+lambda)^(-theta-g)
//                 B_{1/(1+lambda)}(-theta, 1-g),      theta < 0, g in (0,1).
double eta_laplace(double theta, double gamma, double lambda);

// Pointwise survival 1 - F_eta(x).  The transform inverts in closed form to
// a Beta(|theta|,1) mixture of Kummer functions,
//   P(eta > x) = |theta| int_0^1 v^(|theta|-1) M(g, 1, -(1-v)x) dv,
// which is evaluated by adaptive quadrature.
double eta_survival(double theta, double gamma, double x);

// Monotone tabulation of F_eta on [0, x_max] with pointwise error <= tol.
// The quadrature route is cross-checked against a Gaver-Stehfest inversion
// of phi(lambda)/lambda at probe points; disagreement beyond the combined
// budget raises InversionFailureError.
TabulatedCdf eta_cdf(double theta, double gamma, double x_max, double tol);

// Gaver-Stehfest inversion of a Laplace transform of a distribution
// function (used as the independent route in tests and cross-checks).
double gaver_stehfest_cdf(const std::function<double(double)>& laplace,
                          double x);

// ------------------------------------------- Mittag-Leffler tau and zeta

// E_rho(z), z <= 0 (re-export of the special-function implementation).
double ml_func(double rho, double z);

// F_tau(x) = 1 - E_rho(-x^rho), x >= 0, rho in (0,1].
double ml_cdf(double rho, double x);

// Density x^(rho-1) E_{rho,rho}(-x^rho) of the same law.
double ml_pdf(double rho, double x);

// One-sided stable draw with Laplace transform exp(-lambda^rho).
double sample_stable(double rho, Engine& rng);

// Mittag-Leffler draw with Laplace transform 1/(1+lambda^rho); for rho = 1
// this degenerates to Exp(1).
double sample_ml(double rho, Engine& rng);

// Power-weighted Mittag-Leffler law: dF_zeta(u) proportional to
// u^(-gamma) dF_tau(u).  The weight integral converges only for gamma < rho;
// otherwise the constructor raises DivergentWeightError.
class ZetaPowerLaw {
 public:
  ZetaPowerLaw(double rho, double gamma);

  double cdf(double x) const;
  double normalizer() const { return normalizer_; }
  // Relative discrepancy between 1/normalizer and the tabulated constant
  // Gamma(1-rho*gamma)/Gamma(1-gamma) quoted for this law; reported as a
  // diagnostic rather than asserted (see README notes on the constant).
  double stated_constant_discrepancy() const;

  const TabulatedCdf& table() const { return table_; }

 private:
  double head_weight(double x) const;   // closed-form series below head_cut_
  double weight_below(double x) const;  // unnormalized integral
  double rho_;
  double gamma_;
  double head_cut_ = 0.0;
  double normalizer_ = 0.0;
  std::vector<double> weight_grid_;    // geometric body grid
  std::vector<double> weight_values_;  // accumulated weight integral
  TabulatedCdf table_;
};

double zeta_cdf(double rho, double gamma, double x);
double sample_zeta(const ZetaPowerLaw& law, Engine& rng);

// ------------------------------------------------------------- limit laws

// Symbolic description of a limiting random variable.
struct LimitLaw {
  enum class Kind { kExp1, kEta, kMittagLeffler, kZetaPower, kBeta, kProduct };

  Kind kind = Kind::kExp1;
  double p1 = 0.0;
  double p2 = 0.0;
  // Independent factors with exponents; the law is prod factor^exponent.
  std::vector<std::pair<LimitLaw, double>> factors;

  static LimitLaw exp1();
  static LimitLaw eta(double theta, double gamma);
  static LimitLaw mittag_leffler(double rho);
  static LimitLaw zeta_power(double rho, double gamma);
  static LimitLaw beta(double a, double b);
  static LimitLaw product(std::vector<std::pair<LimitLaw, double>> factors);

  void check() const;
  std::string describe() const;
};

// Executable form of a LimitLaw: exact samplers and an evaluable CDF.
// Product CDFs are computed with the multiplicative mixing integral
// F_{XY}(z) = int F_X(z/u) dF_Y(u) over tabulated factors.
class CompiledLimitLaw {
 public:
  explicit CompiledLimitLaw(const LimitLaw& law, double tol = 1e-5);

  double sample(Engine& rng) const;
  double cdf(double x) const;

  // CDF evaluated on an explicit grid (monotone by construction).
  TabulatedCdf cdf_on_grid(const std::vector<double>& grid) const;

  // Standard tabulation of the law.
  TabulatedCdf tabulate(int knots = 2048) const;

  const LimitLaw& law() const { return law_; }

 private:
  struct Part {
    std::function<double(Engine&)> sample;
    std::function<double(double)> cdf;
    double exponent = 1.0;
  };

  void compile(const LimitLaw& law, double exponent);

  LimitLaw law_;
  double tol_;
  std::vector<Part> parts_;
  std::function<double(double)> combined_;
  std::vector<std::shared_ptr<const ZetaPowerLaw>> zeta_keepalive_;
  std::vector<std::shared_ptr<const TabulatedCdf>> table_keepalive_;
};

// Convenience wrappers mirroring the module operations.
double sample_limit(const CompiledLimitLaw& law, Engine& rng);
TabulatedCdf cdf_limit(const CompiledLimitLaw& law,
                       const std::vector<double>& grid);

}  // namespace branchlab

#endif  // BRANCHLAB_LIMIT_LAWS_HPP_
