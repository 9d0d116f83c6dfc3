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

#ifndef BRANCHLAB_PARALLEL_HPP_
#define BRANCHLAB_PARALLEL_HPP_

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "branchlab/rng.hpp"

namespace branchlab {

// Stream ids are (tag, replicate) pairs packed into 64 bits.  Distinct tags
// keep the streams of different experiment phases disjoint under one seed.
inline std::uint64_t make_stream(std::uint64_t tag, std::uint64_t replicate) {
  return (tag << 40) + replicate;
}

inline unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs body(acc, replicate, engine) over replicates [0, reps) and merges the
// per-block accumulators in block order.  Replicate k always sees the stream
// (tag, k) of `seed`, and blocks have a fixed width, so the merged result is
// bit-identical for every worker count.
template <typename Acc, typename Body, typename Merge>
Acc parallel_replicates(std::uint64_t reps, unsigned workers,
                        std::uint64_t seed, std::uint64_t tag, Acc init,
                        Body body, Merge merge) {
  constexpr std::uint64_t kBlock = 1u << 16;
  const std::uint64_t n_blocks = (reps + kBlock - 1) / kBlock;
  if (workers == 0) workers = 1;

  std::vector<Acc> block_acc(n_blocks, init);
  std::atomic<std::uint64_t> next_block{0};

  auto work = [&]() {
    for (;;) {
      const std::uint64_t bi = next_block.fetch_add(1);
      if (bi >= n_blocks) return;
      Acc acc = init;
      const std::uint64_t lo = bi * kBlock;
      const std::uint64_t hi = std::min(reps, lo + kBlock);
      for (std::uint64_t rep = lo; rep < hi; ++rep) {
        Engine rng(seed, make_stream(tag, rep));
        body(acc, rep, rng);
      }
      block_acc[bi] = std::move(acc);
    }
  };

  if (workers == 1 || n_blocks <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  Acc out = init;
  for (std::uint64_t bi = 0; bi < n_blocks; ++bi) merge(out, block_acc[bi]);
  return out;
}

}  // namespace branchlab

#endif  // BRANCHLAB_PARALLEL_HPP_
