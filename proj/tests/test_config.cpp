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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <fstream>
#include <sstream>

#include "branchlab/config_file.hpp"
#include "branchlab/errors.hpp"

using namespace branchlab;

TEST_CASE("reference configs parse to the advertised parameters") {
  const auto c2 = parse_config_text(reference_config_text("c2"));
  const auto d = c2.model.derived();
  CHECK(d.theta == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(d.b == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c2.interarrival.has_value());
  CHECK(c2.interarrival->finite_mean());
  CHECK_FALSE(c2.sojourn.has_value());

  const auto c1 = parse_config_text(reference_config_text("c1"));
  CHECK(c1.model.derived().theta == doctest::Approx(-1.0).epsilon(1e-12));

  const auto c3 = parse_config_text(reference_config_text("c3"));
  CHECK(c3.model.initial.kind() == InitialLaw::Kind::kHeavyTail);
  CHECK(c3.model.initial.gamma() == doctest::Approx(0.7));

  const auto arb = parse_config_text(reference_config_text("arb_equal"));
  CHECK(arb.sojourn.has_value());
  CHECK_NOTHROW(arb.arb());

  const auto heavy = parse_config_text(reference_config_text("arb_heavy_clock"));
  CHECK(heavy.interarrival->rho() == doctest::Approx(0.9));
  CHECK(heavy.sojourn->alpha() == doctest::Approx(0.6));
}

TEST_CASE("shipped config files match the embedded reference text") {
  for (const auto& name : reference_config_names()) {
    std::ifstream in("configs/" + name + ".cfg");
    if (!in) in.open("../configs/" + name + ".cfg");
    REQUIRE_MESSAGE(bool(in), "missing configs/", name, ".cfg");
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == reference_config_text(name));
  }
}

TEST_CASE("parser errors carry line and key context") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_config_text(text);
      FAIL_CHECK("expected ConfigError for: ", text);
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK_MESSAGE(msg.find(needle) != std::string::npos,
                    "message '", msg, "' lacks '", needle, "'");
    }
  };
  const std::string base =
      "offspring.family = poisson_unit\n"
      "migration.p = 0.25\nmigration.q = 0.75\n"
      "migration.individual_emigration = const 1\n"
      "initial.kind = fixed\ninitial.k = 1\n";

  expect_error("offspring.family = poisson_unit\nbogus line\n", "line 2");
  expect_error(base + "unknown.key = 3\n", "unknown key");
  expect_error(base + "interarrival.kind = pareto\ninterarrival.rho = abc\n"
                      "interarrival.x_m = 1\n",
               "not a number");
  expect_error("offspring.family = martian\n" + base.substr(base.find('\n')),
               "offspring.family");
  expect_error(base + base, "duplicate");
  // Missing required key inside a selected family.
  expect_error("offspring.family = geometric\n" + base.substr(base.find('\n') + 1),
               "offspring.success");
}

TEST_CASE("discrete law values parse both forms") {
  const std::string text =
      "offspring.family = poisson_unit\n"
      "migration.p = 0.5\nmigration.q = 0.5\n"
      "migration.individual_emigration = pmf 0.0 0.5 0.5\n"
      "initial.kind = fixed\ninitial.k = 2\n";
  const auto cfg = parse_config_text(text);
  CHECK(cfg.model.migration.individual_emigration.mean() ==
        doctest::Approx(1.5));
  CHECK(cfg.model.derived().theta == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("regenerative accessor requires both sections") {
  const auto c2 = parse_config_text(reference_config_text("c2"));
  CHECK_THROWS_AS(c2.arb(), ConfigError);
}
