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

#ifndef BRANCHLAB_RNG_HPP_
#define BRANCHLAB_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "branchlab/errors.hpp"

namespace branchlab {

// Counter-based generator (Philox2x64-10).  A stream is fully determined
// by (seed, stream_id), so replicate k of a run can be reproduced in
// isolation and results do not depend on how replicates are scheduled
// across workers.
class Engine {
 public:
  Engine(std::uint64_t seed, std::uint64_t stream_id)
      : key_(seed), stream_(stream_id) {}

  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    std::uint64_t x0 = counter_++;
    std::uint64_t x1 = stream_;
    std::uint64_t k = key_;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(kMul) * x0;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += kWeyl;
    }
    spare_ = x1;
    have_spare_ = true;
    return x0;
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0,1); safe under log() and x^(-1/a).
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kMul = 0xD2B74407B1CE6E93ull;
  static constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

inline double sample_exponential(Engine& rng, double mean = 1.0) {
  return -mean * std::log(rng.uniform_open());
}

inline double sample_normal(Engine& rng) {
  const double u = rng.uniform_open();
  const double v = rng.uniform_open();
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(6.283185307179586476925287 * v);
}

// Poisson counts are returned as integer-valued doubles: population sizes
// reached through heavy-tailed initial laws exceed the 32-bit range long
// before they exceed the 2^53 exact-integer range of a double.
//
// Small means use the multiplicative method; means >= 10 use Hormann's
// transformed-rejection sampler PTRS, whose acceptance test stays accurate
// for means up to ~1e12 (log-gamma rounding grows like mean*log(mean)*eps).
inline double sample_poisson(Engine& rng, double mean) {
  if (mean < 0.0 || !(mean < 4.0e15)) {
    throw DomainError("sample_poisson: mean outside [0, 4e15)");
  }
  if (mean == 0.0) return 0.0;
  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    double prod = rng.uniform_open();
    double k = 0.0;
    while (prod > limit) {
      prod *= rng.uniform_open();
      k += 1.0;
    }
    return k;
  }
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform_open();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return k;
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * loglam - mean - std::lgamma(k + 1.0)) {
      return k;
    }
  }
}

// Gamma(shape, 1), Marsaglia-Tsang with the shape<1 power boost.
inline double sample_gamma(Engine& rng, double shape) {
  if (!(shape > 0.0)) throw DomainError("sample_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double boost = std::pow(rng.uniform_open(), 1.0 / shape);
    return boost * sample_gamma(rng, shape + 1.0);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double sample_beta(Engine& rng, double a, double b) {
  const double x = sample_gamma(rng, a);
  const double y = sample_gamma(rng, b);
  return x / (x + y);
}

// Pareto survival P(X > x) = (x_m/x)^a for x >= x_m, by inversion.
inline double sample_pareto(Engine& rng, double a, double x_m) {
  return x_m * std::pow(rng.uniform_open(), -1.0 / a);
}

// Finite nonnegative-integer law given by its probability vector.
class DiscretePmf {
 public:
  DiscretePmf() = default;
  explicit DiscretePmf(std::vector<double> probs) : probs_(std::move(probs)) {
    double acc = 0.0;
    cdf_.reserve(probs_.size());
    for (double p : probs_) {
      if (p < 0.0) throw DomainError("DiscretePmf: negative probability");
      acc += p;
      cdf_.push_back(acc);
    }
    if (!cdf_.empty()) cdf_.back() = 1.0;
  }

  double sample(Engine& rng) const {
    const double u = rng.uniform();
    for (std::size_t k = 0; k + 1 < cdf_.size(); ++k) {
      if (u < cdf_[k]) return static_cast<double>(k);
    }
    return static_cast<double>(cdf_.empty() ? 0 : cdf_.size() - 1);
  }

  double mean() const {
    double m = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) m += double(k) * probs_[k];
    return m;
  }

  double second_moment() const {
    double m = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k)
      m += double(k) * double(k) * probs_[k];
    return m;
  }

  double total() const { return cdf_.empty() ? 0.0 : cdf_.back(); }
  double raw_sum() const {
    double s = 0.0;
    for (double p : probs_) s += p;
    return s;
  }
  std::size_t support_size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

}  // namespace branchlab

#endif  // BRANCHLAB_RNG_HPP_
