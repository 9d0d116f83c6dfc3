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

#include "branchlab/analysis.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "branchlab/errors.hpp"
#include "branchlab/quadrature.hpp"
#include "branchlab/special.hpp"

namespace branchlab {

EmpiricalCdf::EmpiricalCdf(std::vector<double> sample)
    : sorted_(std::move(sample)) {
  if (sorted_.size() < 1) {
    throw DomainError("EmpiricalCdf: sample must be nonempty");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::eval(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

KsResult ks_distance(const EmpiricalCdf& sample,
                     const std::function<double(double)>& reference,
                     std::string reference_id) {
  if (sample.size() < 2) {
    throw DomainError("ks_distance: sample must have at least 2 points");
  }
  const auto& xs = sample.sorted();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ref = reference(xs[i]);
    if (!std::isfinite(ref)) {
      throw DomainError("ks_distance: reference cdf returned a non-finite "
                        "value at x = " + std::to_string(xs[i]));
    }
    // The lower-side comparison uses the reference's left limit so that
    // references with jumps (step functions, tabulations) are handled.
    const double ref_left = reference(
        std::nextafter(xs[i], -std::numeric_limits<double>::infinity()));
    const double hi = static_cast<double>(i + 1) / n - ref;
    const double lo = ref_left - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return {d, xs.size(), std::move(reference_id)};
}

KsResult ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  double d = 0.0;
  for (double x : a.sorted()) d = std::max(d, std::fabs(a.eval(x) - b.eval(x)));
  for (double x : b.sorted()) d = std::max(d, std::fabs(a.eval(x) - b.eval(x)));
  return {d, a.size() + b.size(), "two-sample"};
}

TailFit fit_tail_index(const std::vector<double>& ts,
                       const std::vector<double>& ps,
                       const std::vector<double>* inv_var_weights) {
  if (ts.size() != ps.size() || ts.size() < 3) {
    throw DomainError("fit_tail_index: need matching grids with >= 3 points");
  }
  for (double p : ps) {
    if (p == 0.0) throw ZeroCellError("fit_tail_index: zero survival estimate");
    if (!(p > 0.0)) throw DomainError("fit_tail_index: negative estimate");
  }
  const double span = std::log10(ts.back() / ts.front());
  if (!(span >= 1.5)) {
    throw DomainError("fit_tail_index: grid must span >= 1.5 decades");
  }
  const std::size_t n = ts.size();
  std::vector<double> w(n, 1.0);
  if (inv_var_weights != nullptr) {
    if (inv_var_weights->size() != n) {
      throw DomainError("fit_tail_index: weight size mismatch");
    }
    w = *inv_var_weights;
  }
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sw += w[i];
    sx += w[i] * std::log(ts[i]);
    sy += w[i] * std::log(ps[i]);
  }
  const double xbar = sx / sw;
  const double ybar = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(ts[i]) - xbar;
    sxx += w[i] * dx * dx;
    sxy += w[i] * dx * (std::log(ps[i]) - ybar);
  }
  TailFit fit;
  fit.exponent = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = std::log(ps[i]) - ybar -
                         fit.exponent * (std::log(ts[i]) - xbar);
    rss += w[i] * resid * resid;
  }
  const double dof = std::max(1.0, static_cast<double>(n) - 2.0);
  fit.stderr_ = std::sqrt(rss / dof / sxx);
  fit.t_lo = ts.front();
  fit.t_hi = ts.back();
  fit.points = n;
  return fit;
}

Prediction predict(const ModelConfig& model, const InterarrivalLaw& clock,
                   const SojournLaw* sojourn, std::optional<double> delta) {
  const DerivedParams d = model.derived();
  const bool clock_heavy = !clock.finite_mean();
  const bool start_heavy = !model.initial.has_finite_mean();
  const double gamma = model.initial.gamma();
  const double b = d.b;

  Prediction out;
  if (sojourn == nullptr) {
    if (!clock_heavy) {
      const double mu = clock.mean();
      out.normalization = "b*t/mu";
      out.scale = [b, mu](double t) { return b * t / mu; };
      if (!start_heavy) {
        out.survival_exponent = -(1.0 + std::fabs(d.theta));
        out.limit = LimitLaw::exp1();
      } else {
        out.survival_exponent = -gamma;
        out.limit = LimitLaw::eta(d.theta, gamma);
      }
      return out;
    }
    const double rho = clock.rho();
    const double l_rho = clock.slowly_varying_constant();
    out.normalization = "b*t^rho/L_rho";
    out.scale = [b, rho, l_rho](double t) {
      return b * std::pow(t, rho) / l_rho;
    };
    if (!start_heavy) {
      out.survival_exponent = -rho;
      out.limit = LimitLaw::exp1();
    } else {
      if (!(gamma < rho)) {
        throw UnsupportedRegimeError(
            "predict: the power-weighted factor requires gamma < rho");
      }
      out.survival_exponent = -rho * gamma;
      out.limit = LimitLaw::product({{LimitLaw::eta(d.theta, gamma), 1.0},
                                     {LimitLaw::zeta_power(rho, gamma), 1.0}});
    }
    return out;
  }

  // Regenerative regimes: the limit is the conditional-on-positive law and
  // the zero atom is delta/(delta+1).
  if (!delta.has_value()) {
    throw UnsupportedRegimeError("predict: regenerative rows need delta");
  }
  const double dl = *delta;
  const bool continuous_row = std::isinf(dl);
  out.has_atom = true;
  out.atom = continuous_row ? 1.0 : dl / (dl + 1.0);
  const double alpha = sojourn->finite_mean() ? 1.0 : sojourn->alpha();
  if (continuous_row && sojourn->finite_mean()) {
    throw UnsupportedRegimeError(
        "predict: a finite-mean sojourn cannot dominate the up tail");
  }

  if (!clock_heavy) {
    if (!start_heavy) {
      throw UnsupportedRegimeError(
          "predict: finite-mean clock needs a heavy initial law (gamma in "
          "(1/2,1)) in the regenerative table");
    }
    if (!(gamma > 0.5)) {
      throw UnsupportedRegimeError(
          "predict: regenerative window requires gamma in (1/2,1)");
    }
    const double mu = clock.mean();
    out.normalization = "b*t/mu";
    out.scale = [b, mu](double t) { return b * t / mu; };
    out.survival_exponent = -gamma;
    const double second = continuous_row ? alpha : gamma;
    out.limit = LimitLaw::product(
        {{LimitLaw::eta(d.theta, gamma), 1.0},
         {LimitLaw::beta(second, 1.0 - gamma), 1.0}});
    return out;
  }

  const double rho = clock.rho();
  const double l_rho = clock.slowly_varying_constant();
  out.normalization = "t^rho/L_rho";
  out.scale = [rho, l_rho](double t) { return std::pow(t, rho) / l_rho; };
  if (!start_heavy) {
    if (!(rho > 0.5)) {
      throw UnsupportedRegimeError(
          "predict: regenerative window requires rho in (1/2,1)");
    }
    out.survival_exponent = -rho;
    const double first = continuous_row ? alpha : rho;
    out.limit = LimitLaw::product(
        {{LimitLaw::exp1(), 1.0},
         {LimitLaw::beta(first, 1.0 - rho), rho}});
    return out;
  }
  if (!(rho * gamma > 0.5)) {
    throw UnsupportedRegimeError(
        "predict: regenerative window requires rho*gamma in (1/2,1)");
  }
  if (!(gamma < rho)) {
    throw UnsupportedRegimeError(
        "predict: the power-weighted factor requires gamma < rho");
  }
  out.survival_exponent = -rho * gamma;
  const double first = continuous_row ? alpha : rho * gamma;
  out.limit = LimitLaw::product(
      {{LimitLaw::eta(d.theta, gamma), 1.0},
       {LimitLaw::zeta_power(rho, gamma), 1.0},
       {LimitLaw::beta(first, 1.0 - rho * gamma), rho}});
  return out;
}

double g_quadrature(const std::function<double(double)>& f, double rho,
                    double beta_exp, std::optional<double> alpha, double x) {
  if (!(beta_exp > 0.5 && beta_exp < 1.0)) {
    throw DomainError("g_quadrature: beta must lie in (1/2,1)");
  }
  if (alpha.has_value() && !(*alpha > 0.5 && *alpha < 1.0)) {
    throw DomainError("g_quadrature: alpha must lie in (1/2,1)");
  }
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw DomainError("g_quadrature: rho must lie in (0,1]");
  }
  if (x <= 0.0) return 0.0;
  const double c = alpha.value_or(beta_exp);  // exponent at u = 1
  const double bver = beta_exp;               // exponent at u = 0
  auto core = [&](double u) { return f(x * std::pow(u, -rho)); };

  // [0,1/2]: u = w^(1/(1-b)) absorbs u^-b.
  const double p_lo = 1.0 - bver;
  auto head = [&](double w) {
    const double u = std::pow(w, 1.0 / p_lo);
    return core(u) * std::pow(1.0 - u, c - 1.0) / p_lo;
  };
  const double head_hi = std::pow(0.5, p_lo);
  const double head_val = integrate(head, 0.0, head_hi, 1e-8, 1e-12).value;

  // [1/2,1]: v = (1-u)^c absorbs (1-u)^(c-1).
  auto tail = [&](double v) {
    const double u = 1.0 - std::pow(v, 1.0 / c);
    return core(u) * std::pow(u, -bver) / c;
  };
  const double tail_hi = std::pow(0.5, c);
  const double tail_val = integrate(tail, 0.0, tail_hi, 1e-8, 1e-12).value;

  const double norm = beta_function(alpha.value_or(beta_exp), 1.0 - bver);
  const double val = (head_val + tail_val) / norm;
  return std::min(1.0, std::max(0.0, val));
}

}  // namespace branchlab
