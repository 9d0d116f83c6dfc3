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

#ifndef BRANCHLAB_ANALYSIS_HPP_
#define BRANCHLAB_ANALYSIS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchlab/arb.hpp"
#include "branchlab/limit_laws.hpp"
#include "branchlab/model.hpp"
#include "branchlab/renewal.hpp"

namespace branchlab {

class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> sample);

  double eval(double x) const;  // right-continuous step function
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct KsResult {
  double statistic = 0.0;
  std::size_t n = 0;
  std::string reference;
};

// Sup-norm distance between an empirical CDF and a reference CDF closure,
// evaluated at the sample points from both sides of each step.
KsResult ks_distance(const EmpiricalCdf& sample,
                     const std::function<double(double)>& reference,
                     std::string reference_id = "");

// Two-sample variant (sup over the pooled points).
KsResult ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

struct TailFit {
  double exponent = 0.0;  // slope of log p against log t
  double stderr_ = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t points = 0;
};

// Least-squares power-law fit of survival estimates on a log-log scale.
// Requires strictly positive estimates (ZeroCellError otherwise) and a grid
// spanning at least 1.5 decades.  Optional weights are inverse variances.
TailFit fit_tail_index(const std::vector<double>& ts,
                       const std::vector<double>& ps,
                       const std::vector<double>* inv_var_weights = nullptr);

// One row of the prediction table: normalization, survival exponent, and
// the limit law of the normalized value conditioned on positivity (with the
// zero atom when a sojourn law makes the process regenerative).
struct Prediction {
  std::string normalization;
  std::function<double(double)> scale;  // A(t)
  double survival_exponent = 0.0;
  LimitLaw limit = LimitLaw::exp1();
  double atom = 0.0;
  bool has_atom = false;
};

// Dispatches on (clock mean finite?, initial mean finite?, sojourn regime).
// `delta` feeds the atom for regenerative regimes (infinity selects the
// purely-continuous conditional row).  Throws UnsupportedRegimeError outside
// the documented windows.
Prediction predict(const ModelConfig& model, const InterarrivalLaw& clock,
                   const SojournLaw* sojourn = nullptr,
                   std::optional<double> delta = std::nullopt);

// Scale-mixture distribution functions
//   G1(x) = 1/B(beta,1-beta) int_0^1 F(x u^-rho) (1-u)^(beta-1) u^-beta du
//   G2(x) = 1/B(alpha,1-beta) int_0^1 F(x u^-rho) (1-u)^(alpha-1) u^-beta du
// with the endpoint singularities absorbed by power substitutions.
// beta_exp in (1/2,1); alpha (when given) selects G2.
double g_quadrature(const std::function<double(double)>& f, double rho,
                    double beta_exp, std::optional<double> alpha, double x);

}  // namespace branchlab

#endif  // BRANCHLAB_ANALYSIS_HPP_
