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

#include "branchlab/renewal.hpp"

#include <cmath>
#include <sstream>

#include "branchlab/errors.hpp"
#include "branchlab/limit_laws.hpp"
#include "branchlab/parallel.hpp"

namespace branchlab {

InterarrivalLaw InterarrivalLaw::exponential(double mu) {
  InterarrivalLaw law;
  law.kind_ = Kind::kExponential;
  law.mu_ = mu;
  law.finite_mean_ = true;
  return law;
}

InterarrivalLaw InterarrivalLaw::deterministic(double d) {
  InterarrivalLaw law;
  law.kind_ = Kind::kDeterministic;
  law.d_ = d;
  law.finite_mean_ = true;
  return law;
}

InterarrivalLaw InterarrivalLaw::pareto_tail(double rho, double x_m) {
  InterarrivalLaw law;
  law.kind_ = Kind::kParetoTail;
  law.rho_ = rho;
  law.x_m_ = x_m;
  law.finite_mean_ = false;
  law.c_j_ = std::pow(x_m, rho);
  law.l_rho_ = law.c_j_ * std::exp(std::lgamma(1.0 - rho));
  return law;
}

InterarrivalLaw InterarrivalLaw::fractional(double rho, double scale) {
  InterarrivalLaw law;
  law.kind_ = Kind::kFractional;
  law.rho_ = rho;
  law.scale_ = scale;
  law.finite_mean_ = false;
  // P(scale * tau > x) ~ (x/scale)^(-rho) / Gamma(1-rho).
  law.c_j_ = std::pow(scale, rho) * std::exp(-std::lgamma(1.0 - rho));
  law.l_rho_ = std::pow(scale, rho);
  return law;
}

double InterarrivalLaw::mean() const {
  switch (kind_) {
    case Kind::kExponential:
      return mu_;
    case Kind::kDeterministic:
      return d_;
    default:
      throw UnsupportedRegimeError("interarrival mean is infinite");
  }
}

double InterarrivalLaw::sample(Engine& rng) const {
  switch (kind_) {
    case Kind::kExponential:
      return sample_exponential(rng, mu_);
    case Kind::kDeterministic:
      return d_;
    case Kind::kParetoTail:
      return sample_pareto(rng, rho_, x_m_);
    case Kind::kFractional:
      return scale_ * sample_ml(rho_, rng);
  }
  return 0.0;
}

double InterarrivalLaw::pareto_survival(double x) const {
  if (kind_ != Kind::kParetoTail) {
    throw DomainError("pareto_survival: law is not Pareto");
  }
  if (x <= x_m_) return 1.0;
  return std::pow(x_m_ / x, rho_);
}

void InterarrivalLaw::check() const {
  switch (kind_) {
    case Kind::kExponential:
      if (!(mu_ > 0.0)) throw DomainError("interarrival: mu must be > 0");
      return;
    case Kind::kDeterministic:
      if (!(d_ > 0.0)) throw DomainError("interarrival: d must be > 0");
      return;
    case Kind::kParetoTail:
      if (!(rho_ > 0.0 && rho_ < 1.0) || !(x_m_ > 0.0)) {
        throw DomainError("interarrival: pareto needs rho in (0,1), x_m > 0");
      }
      return;
    case Kind::kFractional:
      if (!(rho_ > 0.0 && rho_ < 1.0) || !(scale_ > 0.0)) {
        throw DomainError(
            "interarrival: fractional needs rho in (0,1), scale > 0");
      }
      return;
  }
}

std::string InterarrivalLaw::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kExponential:
      os << "exponential(mu=" << mu_ << ")";
      break;
    case Kind::kDeterministic:
      os << "deterministic(" << d_ << ")";
      break;
    case Kind::kParetoTail:
      os << "pareto(rho=" << rho_ << ",x_m=" << x_m_ << ")";
      break;
    case Kind::kFractional:
      os << "fractional(rho=" << rho_ << ",scale=" << scale_ << ")";
      break;
  }
  return os.str();
}

RenewalCount count_renewals(const InterarrivalLaw& law, double t,
                            Engine& rng) {
  if (!(t >= 0.0)) throw DomainError("count_renewals: t must be >= 0");
  RenewalCursor cursor(law, rng);
  while (cursor.next_epoch() <= t) cursor.advance(law, rng);
  return {cursor.count(), t - cursor.last_epoch()};
}

std::vector<RatioCheckPoint> ratio_limit_check(const InterarrivalLaw& law,
                                               const std::vector<double>& ts,
                                               std::uint64_t reps, double eps,
                                               std::uint64_t seed,
                                               std::uint64_t tag,
                                               unsigned workers) {
  if (!law.finite_mean()) {
    throw DomainError("ratio_limit_check: requires a finite-mean law");
  }
  const double mu = law.mean();
  struct Acc {
    std::vector<double> ratio_sum;
    std::vector<std::uint64_t> within;
  };
  Acc init;
  init.ratio_sum.assign(ts.size(), 0.0);
  init.within.assign(ts.size(), 0);
  Acc total = parallel_replicates(
      reps, workers, seed, tag, init,
      [&](Acc& acc, std::uint64_t, Engine& rng) {
        RenewalCursor cursor(law, rng);
        for (std::size_t i = 0; i < ts.size(); ++i) {
          while (cursor.next_epoch() <= ts[i]) cursor.advance(law, rng);
          const double ratio =
              static_cast<double>(cursor.count()) / (ts[i] / mu);
          acc.ratio_sum[i] += ratio;
          if (std::fabs(ratio - 1.0) <= eps) acc.within[i] += 1;
        }
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t i = 0; i < into.ratio_sum.size(); ++i) {
          into.ratio_sum[i] += from.ratio_sum[i];
          into.within[i] += from.within[i];
        }
      });
  std::vector<RatioCheckPoint> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out[i].t = ts[i];
    out[i].mean_ratio = total.ratio_sum[i] / static_cast<double>(reps);
    out[i].frac_within_eps =
        static_cast<double>(total.within[i]) / static_cast<double>(reps);
  }
  return out;
}

}  // namespace branchlab
