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

// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <iostream>

#include "branchlab/verify.hpp"

int main(int argc, char** argv) {
  branchlab::VerifyOptions options;
  options.progress = true;
  for (int i = 1; i < argc; ++i) {
    options.only.emplace_back(argv[i]);
  }
  const auto summary = branchlab::run_verification(options);
  branchlab::print_summary(summary, std::cout);
  return summary.all_pass() ? 0 : 1;
}
