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

#include "branchlab/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "branchlab/errors.hpp"
#include "branchlab/quadrature.hpp"
#include "branchlab/special.hpp"

namespace branchlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

}  // namespace

// ------------------------------------------------------------ TabulatedCdf

double TabulatedCdf::eval(double x) const {
  if (grid.empty()) return 0.0;
  if (x <= grid.front()) return x < grid.front() ? 0.0 : values.front();
  if (x >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin());
  const double x0 = grid[i - 1];
  const double x1 = grid[i];
  const double w = (x - x0) / (x1 - x0);
  return values[i - 1] + w * (values[i] - values[i - 1]);
}

double TabulatedCdf::quantile(double p) const {
  if (grid.empty()) return 0.0;
  if (p <= values.front()) return grid.front();
  if (p >= values.back()) return grid.back();
  const auto it = std::lower_bound(values.begin(), values.end(), p);
  std::size_t i = static_cast<std::size_t>(it - values.begin());
  if (i == 0) return grid.front();
  const double p0 = values[i - 1];
  const double p1 = values[i];
  if (p1 <= p0) return grid[i];
  const double w = (p - p0) / (p1 - p0);
  return grid[i - 1] + w * (grid[i] - grid[i - 1]);
}

void TabulatedCdf::repair_monotone() {
  double run = 0.0;
  for (double& v : values) {
    v = std::min(1.0, std::max(v, run));
    run = v;
  }
}

namespace {

// Expanding search + bisection for the generalized inverse of a cdf closure.
// The expansion is clamped so that cdf values that saturate below p (for
// example at the resolution limit of a support endpoint) cannot push the
// bracket to infinity.
double quantile_of(const std::function<double(double)>& cdf, double p,
                   double hint = 1.0) {
  double hi = hint;
  while (cdf(hi) < p && hi < 1e300) hi *= 2.0;
  double lo = hi;
  int guard = 0;
  while (lo > 0.0 && cdf(lo) >= p && guard++ < 2400) lo *= 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TabulatedCdf tabulate_cdf(const std::function<double(double)>& cdf,
                          double error_budget, int knots) {
  const double median = quantile_of(cdf, 0.5);
  // Table-backed inputs can saturate slightly below 1; target the reachable
  // part of the upper tail so the range search cannot run away.
  const double sup = cdf(1e290);
  const double p_hi = std::min(1.0 - 1e-4, sup * (1.0 - 1e-9));
  const double hi = quantile_of(cdf, p_hi, std::max(median, 1.0));
  // Laws whose distribution rises like a small power carry real mass far
  // below the median scale; take the lower range from the 1e-4 quantile
  // when that reaches deeper.
  const double lo_q = quantile_of(cdf, 1e-4, median);
  const double lo =
      std::max(std::min(median * 1e-4, lo_q), hi * 1e-290 + 1e-300);
  TabulatedCdf out;
  out.error_budget = error_budget;
  out.grid.reserve(knots + 1);
  out.values.reserve(knots + 1);
  out.grid.push_back(0.0);
  out.values.push_back(std::max(0.0, cdf(0.0)));
  const double ratio =
      hi > lo ? std::log(hi / lo) / (knots - 1) : 0.0;
  for (int i = 0; i < knots; ++i) {
    const double x = lo * std::exp(ratio * i);
    out.grid.push_back(x);
    out.values.push_back(cdf(x));
  }
  out.repair_monotone();
  return out;
}

// ------------------------------------------------------------- eta family

double eta_laplace(double theta, double gamma, double lambda) {
  if (!(theta < 0.0)) throw DomainError("eta_laplace: theta must be < 0");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("eta_laplace: gamma must lie in (0,1)");
  }
  if (!(lambda >= 0.0)) throw DomainError("eta_laplace: lambda must be >= 0");
  if (lambda == 0.0) return 1.0;
  const double a = -theta;  // positive
  const double x = 1.0 / (1.0 + lambda);
  const double factor = std::pow(lambda, gamma) *
                        std::pow(1.0 + lambda, -theta - gamma);
  return 1.0 + theta * factor * inc_beta(x, a, 1.0 - gamma);
}

double eta_survival(double theta, double gamma, double x) {
  if (!(theta < 0.0)) throw DomainError("eta_survival: theta must be < 0");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("eta_survival: gamma must lie in (0,1)");
  }
  if (x < 0.0) return 1.0;
  if (x == 0.0) return 1.0;
  const double a = -theta;
  QuadResult q;
  if (a < 1.0) {
    // v = w^(1/a) flattens the v^(a-1) endpoint weight.
    auto integrand = [&](double w) {
      const double v = std::pow(w, 1.0 / a);
      return kummer_m1_neg(gamma, (1.0 - v) * x);
    };
    q = integrate(integrand, 0.0, 1.0, 1e-9, 1e-12);
  } else {
    auto integrand = [&](double v) {
      return a * std::pow(v, a - 1.0) *
             kummer_m1_neg(gamma, (1.0 - v) * x);
    };
    q = integrate(integrand, 0.0, 1.0, 1e-9, 1e-12);
  }
  return std::min(1.0, std::max(0.0, q.value));
}

double gaver_stehfest_cdf(const std::function<double(double)>& laplace,
                          double x) {
  constexpr int kM = 8;
  static const std::vector<long double> weights = [] {
    auto binom = [](int n, int k) {
      long double r = 1.0L;
      for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
      return r;
    };
    long double mfact = 1.0L;
    for (int i = 2; i <= kM; ++i) mfact *= i;
    std::vector<long double> w(2 * kM + 1, 0.0L);
    for (int k = 1; k <= 2 * kM; ++k) {
      long double sum = 0.0L;
      const int j_hi = k < kM ? k : kM;
      for (int j = (k + 1) / 2; j <= j_hi; ++j) {
        long double t = powl(static_cast<long double>(j), kM + 1) / mfact;
        t *= binom(kM, j) * binom(2 * j, j) * binom(j, k - j);
        sum += t;
      }
      w[k] = ((kM + k) % 2 == 0 ? 1.0L : -1.0L) * sum;
    }
    return w;
  }();
  if (!(x > 0.0)) return 0.0;
  long double acc = 0.0L;
  for (int k = 1; k <= 2 * kM; ++k) {
    const double lam = k * kLn2 / x;
    acc += weights[k] * static_cast<long double>(laplace(lam));
  }
  return static_cast<double>(acc * kLn2 / x);
}

TabulatedCdf eta_cdf(double theta, double gamma, double x_max, double tol) {
  if (!(tol >= 1e-6)) throw DomainError("eta_cdf: tol must be >= 1e-6");
  if (!(x_max > 0.0)) throw DomainError("eta_cdf: x_max must be positive");
  auto survival = [&](double x) { return eta_survival(theta, gamma, x); };

  constexpr int kKnots = 2048;
  TabulatedCdf out;
  out.error_budget = tol;
  out.grid.reserve(kKnots + 1);
  out.values.reserve(kKnots + 1);
  out.grid.push_back(0.0);
  out.values.push_back(0.0);
  const double lo = std::min(1e-4, x_max * 1e-6);
  const double ratio = std::log(x_max / lo) / (kKnots - 1);
  for (int i = 0; i < kKnots; ++i) {
    const double x = lo * std::exp(ratio * i);
    out.grid.push_back(x);
    out.values.push_back(1.0 - survival(x));
  }
  out.repair_monotone();

  // Independent route: Gaver-Stehfest inversion of phi(lambda)/lambda.
  auto lt_of_cdf = [&](double lam) {
    return eta_laplace(theta, gamma, lam) / lam;
  };
  double worst = 0.0;
  for (double p : {0.15, 0.3, 0.5, 0.7, 0.85}) {
    const double x = out.quantile(p);
    if (!(x > 0.0) || x >= x_max) continue;
    const double via_gs = gaver_stehfest_cdf(lt_of_cdf, x);
    worst = std::max(worst, std::fabs(via_gs - out.eval(x)));
  }
  if (worst > std::max(tol, 2e-4)) {
    std::ostringstream os;
    os << "eta_cdf: quadrature and transform inversion disagree by " << worst;
    throw InversionFailureError(os.str());
  }
  return out;
}

// ------------------------------------------- Mittag-Leffler tau and zeta

double ml_func(double rho, double z) { return mittag_leffler(rho, z); }

double ml_cdf(double rho, double x) {
  if (x < 0.0) throw DomainError("ml_cdf: x must be >= 0");
  if (x == 0.0) return 0.0;
  return 1.0 - mittag_leffler(rho, -std::pow(x, rho));
}

double ml_pdf(double rho, double x) {
  if (!(x > 0.0)) throw DomainError("ml_pdf: x must be > 0");
  return std::pow(x, rho - 1.0) *
         mittag_leffler_rho_rho(rho, -std::pow(x, rho));
}

double sample_stable(double rho, Engine& rng) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DomainError("sample_stable: rho must lie in (0,1)");
  }
  // Kanter's representation of the one-sided stable law.
  const double u = kPi * rng.uniform_open();
  const double e = sample_exponential(rng);
  const double log_a = (rho / (1.0 - rho)) * std::log(std::sin(rho * u)) +
                       std::log(std::sin((1.0 - rho) * u)) -
                       (1.0 / (1.0 - rho)) * std::log(std::sin(u));
  return std::exp(((1.0 - rho) / rho) * (log_a - std::log(e)));
}

double sample_ml(double rho, Engine& rng) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw DomainError("sample_ml: rho must lie in (0,1]");
  }
  const double xi = sample_exponential(rng);
  if (rho == 1.0) return xi;
  return std::pow(xi, 1.0 / rho) * sample_stable(rho, rng);
}

// --------------------------------------------------------------- zeta law

ZetaPowerLaw::ZetaPowerLaw(double rho, double gamma)
    : rho_(rho), gamma_(gamma) {
  if (!(rho > 0.0 && rho <= 1.0) || !(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("zeta: rho in (0,1], gamma in (0,1) required");
  }
  if (!(gamma < rho)) {
    throw DivergentWeightError(
        "zeta: weight integral diverges unless gamma < rho (the density "
        "behaves like u^(rho-1) near zero)");
  }
  head_cut_ = 0.25;
  // Extend the range until the remaining weighted tail is negligible.
  double x_tail = 64.0;
  while (x_tail < 1e150) {
    const double tail_density = std::pow(x_tail, -gamma_) *
                                ml_pdf(rho_, x_tail) * x_tail;
    if (tail_density < 1e-13) break;
    x_tail *= 2.0;
  }
  // One accumulation pass over a geometric partition of the body; the grid
  // then serves every cdf() call by interpolation.
  auto integrand = [this](double u) {
    return std::pow(u, -gamma_) * ml_pdf(rho_, u);
  };
  constexpr int kBodyKnots = 3000;
  weight_grid_.reserve(kBodyKnots + 1);
  weight_values_.reserve(kBodyKnots + 1);
  weight_grid_.push_back(head_cut_);
  weight_values_.push_back(head_weight(head_cut_));
  const double step = std::log(x_tail / head_cut_) / kBodyKnots;
  double acc = weight_values_.back();
  for (int i = 1; i <= kBodyKnots; ++i) {
    const double a = head_cut_ * std::exp(step * (i - 1));
    const double b = head_cut_ * std::exp(step * i);
    acc += integrate(integrand, a, b, 1e-10, 1e-16).value;
    weight_grid_.push_back(b);
    weight_values_.push_back(acc);
  }
  normalizer_ = acc;
  // Leading tail correction beyond the cutoff (power-law regime only).
  if (rho_ < 1.0) {
    const double lead = -inv_gamma(-rho_);
    normalizer_ += lead * std::pow(x_tail, -(gamma_ + rho_)) / (gamma_ + rho_);
  }
  auto cdf_closure = [this](double x) { return this->cdf(x); };
  table_ = tabulate_cdf(cdf_closure, 2e-6, 2048);
}

double ZetaPowerLaw::head_weight(double x) const {
  // Analytic head: int_0^x u^(rho-gamma-1+rho k) / Gamma(rho+rho k).
  double head = 0.0;
  double sign = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double expo = rho_ - gamma_ + rho_ * k;
    const double term = sign * std::pow(x, expo) / expo *
                        inv_gamma(rho_ + rho_ * k);
    head += term;
    if (std::fabs(term) < 1e-16 * std::fabs(head) && k > 2) break;
    sign = -sign;
  }
  return head;
}

double ZetaPowerLaw::weight_below(double x) const {
  if (x <= 0.0) return 0.0;
  if (x <= head_cut_) return head_weight(x);
  if (x >= weight_grid_.back()) return weight_values_.back();
  const auto it = std::upper_bound(weight_grid_.begin(), weight_grid_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - weight_grid_.begin());
  const double x0 = weight_grid_[i - 1];
  const double x1 = weight_grid_[i];
  const double w = std::log(x / x0) / std::log(x1 / x0);
  return weight_values_[i - 1] +
         w * (weight_values_[i] - weight_values_[i - 1]);
}

double ZetaPowerLaw::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double w = weight_below(x);
  return std::min(1.0, w / normalizer_);
}

double ZetaPowerLaw::stated_constant_discrepancy() const {
  const double stated = std::exp(std::lgamma(1.0 - rho_ * gamma_) -
                                 std::lgamma(1.0 - gamma_));
  const double mine = 1.0 / normalizer_;
  return std::fabs(mine - stated) / stated;
}

double zeta_cdf(double rho, double gamma, double x) {
  const ZetaPowerLaw law(rho, gamma);
  return law.cdf(x);
}

double sample_zeta(const ZetaPowerLaw& law, Engine& rng) {
  return law.table().quantile(rng.uniform_open());
}

// -------------------------------------------------------------- LimitLaw

LimitLaw LimitLaw::exp1() {
  LimitLaw l;
  l.kind = Kind::kExp1;
  return l;
}

LimitLaw LimitLaw::eta(double theta, double gamma) {
  LimitLaw l;
  l.kind = Kind::kEta;
  l.p1 = theta;
  l.p2 = gamma;
  return l;
}

LimitLaw LimitLaw::mittag_leffler(double rho) {
  LimitLaw l;
  l.kind = Kind::kMittagLeffler;
  l.p1 = rho;
  return l;
}

LimitLaw LimitLaw::zeta_power(double rho, double gamma) {
  LimitLaw l;
  l.kind = Kind::kZetaPower;
  l.p1 = rho;
  l.p2 = gamma;
  return l;
}

LimitLaw LimitLaw::beta(double a, double b) {
  LimitLaw l;
  l.kind = Kind::kBeta;
  l.p1 = a;
  l.p2 = b;
  return l;
}

LimitLaw LimitLaw::product(std::vector<std::pair<LimitLaw, double>> factors) {
  LimitLaw l;
  l.kind = Kind::kProduct;
  l.factors = std::move(factors);
  return l;
}

void LimitLaw::check() const {
  switch (kind) {
    case Kind::kExp1:
      return;
    case Kind::kEta:
      if (!(p1 < 0.0) || !(p2 > 0.0 && p2 < 1.0)) {
        throw DomainError("LimitLaw: eta requires theta < 0, gamma in (0,1)");
      }
      return;
    case Kind::kMittagLeffler:
      if (!(p1 > 0.0 && p1 <= 1.0)) {
        throw DomainError("LimitLaw: Mittag-Leffler requires rho in (0,1]");
      }
      return;
    case Kind::kZetaPower:
      if (!(p1 > 0.0 && p1 <= 1.0) || !(p2 > 0.0 && p2 < 1.0)) {
        throw DomainError("LimitLaw: zeta requires rho in (0,1], gamma in (0,1)");
      }
      return;
    case Kind::kBeta:
      if (!(p1 > 0.0) || !(p2 > 0.0)) {
        throw DomainError("LimitLaw: Beta requires positive shapes");
      }
      return;
    case Kind::kProduct:
      if (factors.empty()) throw DomainError("LimitLaw: empty product");
      for (const auto& [base, expo] : factors) {
        base.check();
        if (!(expo > 0.0)) {
          throw DomainError("LimitLaw: factor exponents must be positive");
        }
      }
      return;
  }
}

std::string LimitLaw::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kExp1:
      os << "Exp(1)";
      break;
    case Kind::kEta:
      os << "eta(theta=" << p1 << ",gamma=" << p2 << ")";
      break;
    case Kind::kMittagLeffler:
      os << "mittag_leffler(rho=" << p1 << ")";
      break;
    case Kind::kZetaPower:
      os << "zeta(rho=" << p1 << ",gamma=" << p2 << ")";
      break;
    case Kind::kBeta:
      os << "beta(" << p1 << "," << p2 << ")";
      break;
    case Kind::kProduct: {
      bool first = true;
      for (const auto& [base, expo] : factors) {
        if (!first) os << " * ";
        first = false;
        os << base.describe();
        if (expo != 1.0) os << "^" << expo;
      }
      break;
    }
  }
  return os.str();
}

// ------------------------------------------------------- CompiledLimitLaw

namespace {

// Multiplicative mixing of an accumulated tabulated factor with the next
// one: F_{XY}(z) = sum_i F_next(z/u_i) dG(u_i) over the knots of G.  The
// factor table truncates its upper tail at the chosen quantile (or at the
// double-resolution limit of a support endpoint), so arguments beyond its
// last knot evaluate to 1; otherwise the mixture saturates below 1 by the
// truncated mass.
std::function<double(double)> mix_product(
    std::shared_ptr<const TabulatedCdf> g,
    std::shared_ptr<const TabulatedCdf> f) {
  return [g, f](double z) -> double {
    if (z <= 0.0) return 0.0;
    auto f_eval = [&f](double w) {
      return w >= f->grid.back() ? 1.0 : f->eval(w);
    };
    const auto& grid = g->grid;
    const auto& val = g->values;
    double acc = 0.0;
    // Mass below the first knot sits at scales <= grid[1].
    if (val.front() > 0.0) acc += val.front() * f_eval(z / grid[1]);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double dm = val[i + 1] - val[i];
      if (dm <= 0.0) continue;
      const double lo = std::max(grid[i], 1e-300);
      const double mid = std::sqrt(lo * std::max(grid[i + 1], 1e-300));
      acc += dm * f_eval(z / mid);
    }
    if (val.back() < 1.0) {
      acc += (1.0 - val.back()) * f_eval(z / (2.0 * grid.back()));
    }
    return std::min(1.0, acc);
  };
}

}  // namespace

CompiledLimitLaw::CompiledLimitLaw(const LimitLaw& law, double tol)
    : law_(law), tol_(tol) {
  law.check();
  compile(law, 1.0);
  if (parts_.size() == 1) {
    const Part& p = parts_.front();
    const double inv_e = 1.0 / p.exponent;
    auto base = p.cdf;
    combined_ = [base, inv_e](double x) {
      if (x <= 0.0) return 0.0;
      return base(std::pow(x, inv_e));
    };
    return;
  }
  // Fold the factors pairwise through tabulations.
  constexpr int kMixKnots = 4096;
  auto part_cdf = [](const Part& p) {
    const double inv_e = 1.0 / p.exponent;
    auto base = p.cdf;
    return std::function<double(double)>([base, inv_e](double x) {
      if (x <= 0.0) return 0.0;
      return base(std::pow(x, inv_e));
    });
  };
  auto acc = std::make_shared<const TabulatedCdf>(
      tabulate_cdf(part_cdf(parts_[0]), tol_, kMixKnots));
  table_keepalive_.push_back(acc);
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    auto next = std::make_shared<const TabulatedCdf>(
        tabulate_cdf(part_cdf(parts_[i]), tol_, kMixKnots));
    table_keepalive_.push_back(next);
    auto mixed = mix_product(acc, next);
    acc = std::make_shared<const TabulatedCdf>(
        tabulate_cdf(mixed, tol_, kMixKnots));
    table_keepalive_.push_back(acc);
  }
  auto final_table = acc;
  combined_ = [final_table](double x) { return final_table->eval(x); };
}

void CompiledLimitLaw::compile(const LimitLaw& law, double exponent) {
  switch (law.kind) {
    case LimitLaw::Kind::kProduct:
      for (const auto& [base, expo] : law.factors) {
        compile(base, exponent * expo);
      }
      return;
    case LimitLaw::Kind::kExp1: {
      Part p;
      p.exponent = exponent;
      p.sample = [](Engine& rng) { return sample_exponential(rng); };
      p.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
      parts_.push_back(std::move(p));
      return;
    }
    case LimitLaw::Kind::kBeta: {
      const double a = law.p1;
      const double b = law.p2;
      Part p;
      p.exponent = exponent;
      p.sample = [a, b](Engine& rng) { return sample_beta(rng, a, b); };
      p.cdf = [a, b](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return reg_inc_beta(x, a, b);
      };
      parts_.push_back(std::move(p));
      return;
    }
    case LimitLaw::Kind::kMittagLeffler: {
      const double rho = law.p1;
      Part p;
      p.exponent = exponent;
      p.sample = [rho](Engine& rng) { return sample_ml(rho, rng); };
      p.cdf = [rho](double x) { return x <= 0.0 ? 0.0 : ml_cdf(rho, x); };
      parts_.push_back(std::move(p));
      return;
    }
    case LimitLaw::Kind::kEta: {
      const double theta = law.p1;
      const double gamma = law.p2;
      auto survival = [theta, gamma](double x) {
        return eta_survival(theta, gamma, x);
      };
      const double x_max = quantile_of(
          [&](double x) { return 1.0 - survival(x); }, 1.0 - 2e-5);
      auto table = std::make_shared<const TabulatedCdf>(
          eta_cdf(theta, gamma, x_max, std::max(tol_, 1e-6)));
      table_keepalive_.push_back(table);
      Part p;
      p.exponent = exponent;
      p.sample = [table](Engine& rng) {
        return table->quantile(rng.uniform_open());
      };
      p.cdf = [table, theta, gamma](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= table->grid.back()) {
          return 1.0 - eta_survival(theta, gamma, x);
        }
        return table->eval(x);
      };
      parts_.push_back(std::move(p));
      return;
    }
    case LimitLaw::Kind::kZetaPower: {
      auto zeta = std::make_shared<const ZetaPowerLaw>(law.p1, law.p2);
      zeta_keepalive_.push_back(zeta);
      Part p;
      p.exponent = exponent;
      p.sample = [zeta](Engine& rng) { return sample_zeta(*zeta, rng); };
      p.cdf = [zeta](double x) { return zeta->cdf(x); };
      parts_.push_back(std::move(p));
      return;
    }
  }
}

double CompiledLimitLaw::sample(Engine& rng) const {
  double out = 1.0;
  for (const Part& p : parts_) {
    out *= std::pow(p.sample(rng), p.exponent);
  }
  return out;
}

double CompiledLimitLaw::cdf(double x) const { return combined_(x); }

TabulatedCdf CompiledLimitLaw::cdf_on_grid(
    const std::vector<double>& grid) const {
  TabulatedCdf out;
  out.error_budget = 1e-4;
  out.grid = grid;
  out.values.reserve(grid.size());
  for (double x : grid) out.values.push_back(combined_(x));
  out.repair_monotone();
  return out;
}

TabulatedCdf CompiledLimitLaw::tabulate(int knots) const {
  return tabulate_cdf(combined_, 1e-4, knots);
}

double sample_limit(const CompiledLimitLaw& law, Engine& rng) {
  return law.sample(rng);
}

TabulatedCdf cdf_limit(const CompiledLimitLaw& law,
                       const std::vector<double>& grid) {
  return law.cdf_on_grid(grid);
}

}  // namespace branchlab
