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

#ifndef BRANCHLAB_QUADRATURE_HPP_
#define BRANCHLAB_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "branchlab/errors.hpp"

namespace branchlab {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1,1].
inline constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGkWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename F>
QuadResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kronrod = kGkWeights[7] * f(c);
  double gauss = kGaussWeights[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGkNodes[i];
    const double fsum = f(c - dx) + f(c + dx);
    kronrod += kGkWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  QuadResult r;
  r.value = kronrod * h;
  r.error = std::fabs((kronrod - gauss) * h);
  return r;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration on a finite interval.
// Splits the interval with the largest error estimate until the total
// estimate meets max(abs_tol, rel_tol*|integral|) or the panel budget runs
// out; the achieved estimate is returned so callers can enforce their own
// error contracts.
template <typename F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 0.0, int max_panels = 4000) {
  struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  auto first = detail::gk15(f, a, b);
  std::priority_queue<Panel> panels;
  panels.push({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  int used = 1;
  while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
         used < max_panels) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      panels.push({worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push({worst.a, mid, left.value, left.error});
    panels.push({mid, worst.b, right.value, right.error});
    ++used;
  }
  return {total, total_err};
}

}  // namespace branchlab

#endif  // BRANCHLAB_QUADRATURE_HPP_
