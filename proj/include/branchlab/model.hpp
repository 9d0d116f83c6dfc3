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

#ifndef BRANCHLAB_MODEL_HPP_
#define BRANCHLAB_MODEL_HPP_

#include <string>
#include <vector>

#include "branchlab/rng.hpp"

namespace branchlab {

// Reproduction law of one family.  Every built-in family is critical
// (mean 1) with finite positive variance.
class OffspringLaw {
 public:
  enum class Family { kTwoPoint, kGeometric, kPoissonUnit, kExplicitPmf };

  static OffspringLaw two_point(double p0, double p2);
  static OffspringLaw geometric(double success);
  static OffspringLaw poisson_unit();
  static OffspringLaw explicit_pmf(std::vector<double> probs);

  Family family() const { return family_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }

  // Throws NonCriticalError / DomainError when the law is malformed.
  void check() const;

  // One family size.
  double sample(Engine& rng) const;

  // Sum of `families` independent family sizes.  The unit-Poisson family
  // collapses to a single Poisson(families) draw by superposition; the other
  // families sum draws directly.
  double sample_brood_sum(Engine& rng, double families) const;

  std::string describe() const;

 private:
  OffspringLaw() = default;

  Family family_ = Family::kPoissonUnit;
  double p0_ = 0.0, p2_ = 0.0;  // two-point
  double success_ = 0.5;        // geometric
  DiscretePmf pmf_;             // explicit
  double mean_ = 1.0;
  double variance_ = 1.0;
};

// Per-generation migration: with probability p a bounded emigration of
// whole families and individuals, with probability q nothing, with
// probability r a batch of immigrants (only while the population is
// positive; zero stays absorbing).
struct MigrationLaw {
  double p = 0.0;
  double q = 1.0;
  double r = 0.0;
  DiscretePmf family_emigration;      // support in [0, C_fam]
  DiscretePmf individual_emigration;  // support in [0, C_ind]
  DiscretePmf immigration;

  // r*E[I] - p*(E[E_fam]*E[X] + E[E_ind]); must be negative.
  double mean_migration(const OffspringLaw& offspring) const;

  void check() const;  // branch weights and law shape only
  std::string describe() const;
};

// Law of the founding population size.
class InitialLaw {
 public:
  enum class Kind { kFixed, kFiniteMean, kHeavyTail };

  static InitialLaw fixed(double k);
  static InitialLaw finite_mean(std::vector<double> probs);
  // P(Z0 > x) = min(1, c*(1+x)^(-gamma)) exactly, for integer x >= 0.
  static InitialLaw heavy_tail(double gamma, double c);

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  double tail_constant() const { return c_; }
  bool has_finite_mean() const { return kind_ != Kind::kHeavyTail; }

  void check() const;
  double sample(Engine& rng) const;
  std::string describe() const;

 private:
  InitialLaw() = default;

  Kind kind_ = Kind::kFixed;
  double fixed_ = 1.0;
  DiscretePmf pmf_;
  double gamma_ = 0.0;
  double c_ = 0.0;
};

enum class ThetaRegime { kMinusOneToZero, kExactlyMinusOne, kBelowMinusOne };

struct DerivedParams {
  double theta = 0.0;  // 2 E[M] / Var[X], negative by construction
  double b = 0.0;      // Var[X] / 2
  ThetaRegime regime = ThetaRegime::kMinusOneToZero;
};

// Derives (theta, b) and classifies the regime.  Pure; throws
// NonCriticalError or NonNegativeMigrationMeanError on bad inputs.
DerivedParams derive_params(const OffspringLaw& offspring,
                            const MigrationLaw& migration);

struct ModelConfig {
  OffspringLaw offspring = OffspringLaw::poisson_unit();
  MigrationLaw migration;
  InitialLaw initial = InitialLaw::fixed(1);

  DerivedParams derived() const {
    return derive_params(offspring, migration);
  }
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass = true;
  std::string regime;

  void add(std::string name, bool pass, std::string detail = "");
};

// Structured pass/fail report over the moment assumptions; never throws.
ValidationReport validate(const ModelConfig& config);

// Draw of the founding population size (integer-valued double).
double sample_initial(const InitialLaw& initial, Engine& rng);

std::string to_string(ThetaRegime regime);

}  // namespace branchlab

#endif  // BRANCHLAB_MODEL_HPP_
