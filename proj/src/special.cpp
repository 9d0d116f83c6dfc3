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

#include "branchlab/special.hpp"

#include <cmath>
#include <limits>

#include "branchlab/errors.hpp"
#include "branchlab/quadrature.hpp"

namespace branchlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double inv_gamma(double x) {
  if (x > 0.0) return std::exp(-std::lgamma(x));
  if (x == std::floor(x)) return 0.0;  // poles of Gamma
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
  return std::exp(std::lgamma(1.0 - x)) * std::sin(kPi * x) / kPi;
}

double beta_function(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

namespace {

// Continued fraction for the regularized incomplete Beta, evaluated with the
// modified Lentz scheme.  Converges quickly for x < (a+1)/(a+b+2).
double inc_beta_cf(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw InversionFailureError("inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("reg_inc_beta: shape parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("reg_inc_beta: x must lie in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = a * std::log(x) + b * std::log1p(-x) -
                           std::log(a) - std::lgamma(a) - std::lgamma(b) +
                           std::lgamma(a + b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * inc_beta_cf(x, a, b);
  }
  const double log_front_sym = b * std::log1p(-x) + a * std::log(x) -
                               std::log(b) - std::lgamma(a) - std::lgamma(b) +
                               std::lgamma(a + b);
  return 1.0 - std::exp(log_front_sym) * inc_beta_cf(1.0 - x, b, a);
}

double inc_beta(double x, double a, double b) {
  return reg_inc_beta(x, a, b) * beta_function(a, b);
}

namespace {

struct SeriesResult {
  double value = 0.0;
  bool trusted = false;
};

// Power series sum_k z^k / Gamma(beta + rho k) in long double, with a running
// roundoff bound from the gross (absolute) sum.
SeriesResult ml_power_series(double rho, double beta, double z, double tol) {
  // The largest term is ~exp(|z|^(1/rho)); beyond long-double headroom the
  // roundoff test below would reject the sum anyway, so skip the work.
  if (std::pow(std::fabs(z), 1.0 / rho) > 36.0) return {};
  long double sum = 0.0L;
  long double gross = 0.0L;
  long double zk = 1.0L;
  long double prev_mag = std::numeric_limits<long double>::max();
  int small_in_a_row = 0;
  bool converged = false;
  for (int k = 0; k < 800; ++k) {
    const double g = inv_gamma(beta + rho * k);
    const long double term = zk * static_cast<long double>(g);
    sum += term;
    gross += fabsl(term);
    zk *= z;
    const long double mag = fabsl(term);
    if (mag < 1e-22L * (fabsl(sum) + 1e-300L) && mag <= prev_mag) {
      if (++small_in_a_row >= 3) {
        converged = true;
        break;
      }
    } else {
      small_in_a_row = 0;
    }
    prev_mag = mag;
  }
  SeriesResult r;
  r.value = static_cast<double>(sum);
  const long double roundoff = gross * 1e-17L;
  r.trusted = converged && sum > 0.0L && roundoff < tol * fabsl(sum);
  return r;
}

// Asymptotic series sum_{k>=1} (-1)^(k+1) z^(-k) / Gamma(beta - rho k) for
// z -> +infinity (argument -z), truncated at its smallest term.
SeriesResult ml_asymptotic(double rho, double beta, double z, double tol) {
  long double sum = 0.0L;
  long double best = std::numeric_limits<long double>::max();
  double sign = 1.0;
  long double zinv = 1.0L / z;
  long double zk = zinv;
  bool ok = false;
  for (int k = 1; k <= 80; ++k) {
    const double g = inv_gamma(beta - rho * k);
    const long double term = sign * zk * static_cast<long double>(g);
    const long double mag = fabsl(term);
    if (mag > best && g != 0.0) break;  // divergence sets in
    sum += term;
    if (g != 0.0) best = mag;
    sign = -sign;
    zk *= zinv;
    if (sum != 0.0L && best < tol * fabsl(sum)) {
      ok = true;
      break;
    }
  }
  SeriesResult r;
  r.value = static_cast<double>(sum);
  r.trusted = ok && sum > 0.0L;
  return r;
}

// Spectral route.  With the rational relaxation kernel
//   K(r) = sin(pi rho)/pi * r^(rho-1) / (r^(2 rho) + 2 r^rho cos(pi rho) + 1)
// one has E_rho(-t^rho) = int_0^inf e^(-rt) K(r) dr; substituting t = z^(1/rho)
// and r = s^(1/rho) flattens the r^(rho-1) endpoint and gives
//   E_rho(-z)       = sin(pi rho)/(pi rho) int e^(-(sz)^(1/rho)) / D(s) ds,
//   E_{rho,rho}(-z) = z^(1/rho-1) sin(pi rho)/(pi rho)
//                     int s^(1/rho) e^(-(sz)^(1/rho)) / D(s) ds,
// with D(s) = s^2 + 2 s cos(pi rho) + 1.  `moment` selects the s^(1/rho)
// factor; the caller applies the z prefactor.
double ml_spectral(double rho, double z, int moment) {
  const double cospr = std::cos(kPi * rho);
  auto integrand = [&](double s) {
    if (s <= 0.0) return s == 0.0 && moment == 0 ? 1.0 : 0.0;
    const double denom = (s * s + 2.0 * s * cospr) + 1.0;
    double val = std::exp(-std::pow(s * z, 1.0 / rho)) / denom;
    if (moment == 1) val *= std::pow(s, 1.0 / rho);
    return val;
  };
  // The exponential is below ~1e-17 once (s z)^(1/rho) exceeds 42.
  const double s_max = std::pow(42.0, rho) / z;
  // The denominator dips near s = 1 as rho -> 1; seed panels around it.
  double total = 0.0;
  double splits[4] = {0.0, std::min(0.5, s_max), std::min(2.0, s_max), s_max};
  for (int i = 0; i < 3; ++i) {
    if (splits[i + 1] > splits[i]) {
      total += integrate(integrand, splits[i], splits[i + 1], 1e-11, 1e-14,
                         6000)
                   .value;
    }
  }
  const double front = std::sin(kPi * rho) / (kPi * rho);
  return front * total;
}

double ml_eval(double rho, double beta_param, double z_neg) {
  // z_neg >= 0 is the magnitude of the (nonpositive) argument.
  constexpr double kTol = 1e-9;
  if (z_neg == 0.0) return inv_gamma(beta_param);
  const auto series = ml_power_series(rho, beta_param, -z_neg, kTol);
  if (series.trusted) return series.value;
  const auto asym = ml_asymptotic(rho, beta_param, z_neg, kTol);
  if (asym.trusted) return asym.value;
  if (beta_param == 1.0) return ml_spectral(rho, z_neg, 0);
  return std::pow(z_neg, 1.0 / rho - 1.0) * ml_spectral(rho, z_neg, 1);
}

}  // namespace

double mittag_leffler(double rho, double z) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw DomainError("mittag_leffler: rho must lie in (0,1]");
  }
  if (z > 0.0) {
    throw DomainError("mittag_leffler: only z <= 0 is supported");
  }
  if (rho == 1.0) return std::exp(z);
  return ml_eval(rho, 1.0, -z);
}

double mittag_leffler_rho_rho(double rho, double z) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw DomainError("mittag_leffler_rho_rho: rho must lie in (0,1]");
  }
  if (z > 0.0) {
    throw DomainError("mittag_leffler_rho_rho: only z <= 0 is supported");
  }
  if (rho == 1.0) return std::exp(z);
  return ml_eval(rho, rho, -z);
}

double kummer_m1_neg(double a, double z) {
  if (!(a > 0.0) || !(a < 1.0)) {
    throw DomainError("kummer_m1_neg: a must lie in (0,1)");
  }
  if (z < 0.0) throw DomainError("kummer_m1_neg: z must be >= 0");
  if (z == 0.0) return 1.0;
  if (z <= 18.0) {
    // sum_k (a)_k (-z)^k / (k!)^2; the cancellation scale is e^z, so long
    // double keeps the relative error near 1e-10 up to this cutoff.
    long double sum = 1.0L;
    long double term = 1.0L;
    long double prev_mag = std::numeric_limits<long double>::max();
    for (int k = 0; k < 400; ++k) {
      term *= static_cast<long double>(a + k) * (-z) /
              ((k + 1.0L) * (k + 1.0L));
      sum += term;
      const long double mag = fabsl(term);
      if (mag < 1e-20L * (fabsl(sum) + 1e-30L) && mag <= prev_mag) break;
      prev_mag = mag;
    }
    return static_cast<double>(sum);
  }
  // Large z, both asymptotic components:
  //   M(a,1,-z) ~ z^(-a)/Gamma(1-a) sum_k ((a)_k)^2/(k! z^k)
  //             - cos(pi a) e^(-z) z^(a-1)/Gamma(a) sum_k ((1-a)_k)^2/(k! z^k),
  // each truncated at its smallest term.
  auto part = [z](double shape) {
    long double sum = 1.0L;
    long double term = 1.0L;
    long double best = std::numeric_limits<long double>::max();
    for (int k = 0; k < 100; ++k) {
      term *= static_cast<long double>(shape + k) * (shape + k) /
              ((k + 1.0L) * z);
      if (fabsl(term) > best) break;
      best = fabsl(term);
      sum += term;
      if (fabsl(term) < 1e-17L * fabsl(sum)) break;
    }
    return static_cast<double>(sum);
  };
  const double algebraic = std::pow(z, -a) * inv_gamma(1.0 - a) * part(a);
  const double exponential = -std::cos(3.14159265358979323846 * a) *
                             std::exp(-z + (a - 1.0) * std::log(z) -
                                      std::lgamma(a)) *
                             part(1.0 - a);
  return algebraic + exponential;
}

}  // namespace branchlab
