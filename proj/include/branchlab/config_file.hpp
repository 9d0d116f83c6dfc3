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

#ifndef BRANCHLAB_CONFIG_FILE_HPP_
#define BRANCHLAB_CONFIG_FILE_HPP_

#include <optional>
#include <string>

#include "branchlab/arb.hpp"
#include "branchlab/model.hpp"
#include "branchlab/renewal.hpp"

namespace branchlab {

// A parsed experiment description: the discrete model plus, when present,
// the renewal clock and the sojourn law of the regenerative extension.
struct ExperimentConfig {
  ModelConfig model;
  std::optional<InterarrivalLaw> interarrival;
  std::optional<SojournLaw> sojourn;
  std::string canonical;  // normalized text, echoed into output headers

  ArbConfig arb() const;  // requires interarrival and sojourn
};

// Parses the nested key-value format, e.g.
//
//   offspring.family = poisson_unit
//   migration.p = 0.25
//   migration.q = 0.75
//   migration.individual_emigration = const 1
//   initial.kind = heavy_tail
//   initial.gamma = 0.7
//   initial.c = 1.0
//   interarrival.kind = exponential
//   interarrival.mu = 1.0
//
// Unknown keys, malformed values, and missing required fields raise
// ConfigError with the offending line number and key in the message.
ExperimentConfig parse_config_text(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

// Shipped reference configurations, by name (c1, c2, c3, arb_equal,
// arb_delta_zero, arb_heavy_clock).
const std::string& reference_config_text(const std::string& name);
std::vector<std::string> reference_config_names();

}  // namespace branchlab

#endif  // BRANCHLAB_CONFIG_FILE_HPP_
