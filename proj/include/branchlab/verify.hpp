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

#ifndef BRANCHLAB_VERIFY_HPP_
#define BRANCHLAB_VERIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace branchlab {

// One measured check inside a criterion: the measurement, the bound it is
// held to, and the verdict.
struct CheckLine {
  std::string name;
  double measured = 0.0;
  std::string bound;
  bool pass = false;
};

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;  // non-gating diagnostics

  void check(std::string name, double measured, std::string bound, bool ok);
};

struct VerifySummary {
  std::vector<CriterionResult> criteria;
  std::uint64_t seed = 0;
  unsigned workers = 0;

  bool all_pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20260808;
  unsigned workers = 0;          // 0: hardware default
  bool progress = false;         // stream one line per criterion to stderr
  std::vector<std::string> only; // run a subset of criterion ids
};

// Runs the acceptance criteria on the shipped reference configurations with
// all tolerances pinned in code.  Measurements that cannot meet their stated
// bound still run and report honestly.
VerifySummary run_verification(const VerifyOptions& options);

// Deterministic reduced pipeline used by the scheduling-independence
// criterion; the returned text must be byte-identical for every worker
// count.
std::string determinism_probe(std::uint64_t seed, unsigned workers);

void print_summary(const VerifySummary& summary, std::ostream& os);
void write_summary_csv(const VerifySummary& summary, const std::string& path);

}  // namespace branchlab

#endif  // BRANCHLAB_VERIFY_HPP_
