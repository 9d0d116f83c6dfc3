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

#ifndef BRANCHLAB_SPECIAL_HPP_
#define BRANCHLAB_SPECIAL_HPP_

namespace branchlab {

// 1/Gamma(x) for any real x; exactly 0 at the poles x = 0, -1, -2, ...
double inv_gamma(double x);

// Complete Beta function B(a,b), a,b > 0.
double beta_function(double a, double b);

// Regularized incomplete Beta I_x(a,b), continued-fraction evaluation.
double reg_inc_beta(double x, double a, double b);

// Non-regularized lower incomplete Beta B_x(a,b) = int_0^x u^(a-1)(1-u)^(b-1) du.
// Relative error <= 1e-10 on the interior of the domain.
double inc_beta(double x, double a, double b);

// Mittag-Leffler function E_rho(z) for z <= 0 and rho in (0,1].
//
// Three evaluation routes: the defining power series (accumulated in long
// double while its roundoff estimate stays below target), the alternating
// asymptotic series in 1/z truncated at its smallest term, and as a backstop
// the completely-monotone spectral representation
//   E_rho(-z) = sin(pi rho)/(pi rho) * int_0^inf e^(-z s^(1/rho))
//               / (s^2 + 2 s cos(pi rho) + 1) ds,
// integrated adaptively.  Relative error <= 1e-8 everywhere on z <= 0.
double mittag_leffler(double rho, double z);

// Two-parameter variant E_{rho,rho}(z) for z <= 0; x^(rho-1)*E_{rho,rho}(-x^rho)
// is the density whose distribution function is 1 - E_rho(-x^rho).
double mittag_leffler_rho_rho(double rho, double z);

// Kummer's M(a, 1, -z) for z >= 0 and a in (0,1): series for moderate z and
// the large-z expansion  z^(-a)/Gamma(1-a) * sum_k ((a)_k)^2 / (k! z^k).
double kummer_m1_neg(double a, double z);

}  // namespace branchlab

#endif  // BRANCHLAB_SPECIAL_HPP_
