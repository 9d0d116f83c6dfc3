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

#include <map>
#include <string>
#include <vector>

#include "branchlab/config_file.hpp"
#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

// Unit-Poisson reproduction with individual emigration only; the migration
// weight p sets theta = -2p.
const char kC1[] = R"(# critical chain, theta = -1, b = 1/2
offspring.family = poisson_unit
migration.p = 0.5
migration.q = 0.5
migration.individual_emigration = const 1
initial.kind = fixed
initial.k = 1
interarrival.kind = exponential
interarrival.mu = 1.0
)";

const char kC2[] = R"(# critical chain, theta = -1/2, b = 1/2
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = fixed
initial.k = 1
interarrival.kind = exponential
interarrival.mu = 1.0
)";

const char kC3[] = R"(# theta = -1/2 chain started from a heavy-tailed population
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = heavy_tail
initial.gamma = 0.7
initial.c = 1.0
interarrival.kind = exponential
interarrival.mu = 1.0
)";

const char kC2Pareto[] = R"(# theta = -1/2 chain on a heavy-tailed clock
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = fixed
initial.k = 1
interarrival.kind = pareto
interarrival.rho = 0.7
interarrival.x_m = 1.0
)";

const char kC3HeavyClock[] = R"(# heavy start (gamma=0.6) on a heavy clock (rho=0.9)
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = heavy_tail
initial.gamma = 0.6
initial.c = 1.0
interarrival.kind = pareto
interarrival.rho = 0.9
interarrival.x_m = 1.0
)";

const char kArbEqual[] = R"(# regenerative run with matched tail exponents (alpha = gamma = 0.7)
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = heavy_tail
initial.gamma = 0.7
initial.c = 1.0
interarrival.kind = exponential
interarrival.mu = 1.0
sojourn.kind = pareto
sojourn.alpha = 0.7
sojourn.x_m = 1.0
)";

const char kArbDeltaZero[] = R"(# regenerative run with a light sojourn tail (alpha=0.95 > rho=0.6)
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = fixed
initial.k = 1
interarrival.kind = pareto
interarrival.rho = 0.6
interarrival.x_m = 1.0
sojourn.kind = pareto
sojourn.alpha = 0.95
sojourn.x_m = 1.0
)";

const char kArbHeavyClock[] = R"(# regenerative run dominated by the sojourn tail (alpha=0.6 < rho=0.9)
offspring.family = poisson_unit
migration.p = 0.25
migration.q = 0.75
migration.individual_emigration = const 1
initial.kind = fixed
initial.k = 1
interarrival.kind = pareto
interarrival.rho = 0.9
interarrival.x_m = 1.0
sojourn.kind = pareto
sojourn.alpha = 0.6
sojourn.x_m = 1.0
)";

const std::map<std::string, std::string>& registry() {
  static const std::map<std::string, std::string> reg = {
      {"c1", kC1},
      {"c2", kC2},
      {"c3", kC3},
      {"c2_pareto", kC2Pareto},
      {"c3_heavy_clock", kC3HeavyClock},
      {"arb_equal", kArbEqual},
      {"arb_delta_zero", kArbDeltaZero},
      {"arb_heavy_clock", kArbHeavyClock},
  };
  return reg;
}

}  // namespace

const std::string& reference_config_text(const std::string& name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) {
    throw ConfigError("unknown reference config '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> reference_config_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : registry()) names.push_back(name);
  return names;
}

}  // namespace branchlab
