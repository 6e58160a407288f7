// Copyright 2026 The dynsc Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsc/stream.hpp"
#include "dynsc/types.hpp"
#include "dynsc/verifier.hpp"

namespace dynsc {

struct RunOptions {
  NumericMode mode = NumericMode::kFastFloat;
  bool implicit_sets = false;  // unknown sets are declared with cost 1
  std::int64_t verify_every = 0;  // 0 disables snapshot verification
  bool certify = false;           // also run the duality checks on verified snapshots
  bool async_verify = false;      // verify snapshots on a worker thread
  bool brute_force_final = false; // compare the final cover against OPT
};

struct RunSummary {
  int max_f_observed = 0;
  std::uint64_t total_touched = 0;
  std::uint64_t updates = 0;
  double amortized_touched = 0.0;
  std::vector<std::uint64_t> rebuilds_per_level;
  std::uint64_t verified_snapshots = 0;
  // Combined report of all verified snapshots and the final ratio check.
  VerifierReport report;
  // op_index of the first snapshot that failed verification.
  std::optional<std::int64_t> first_failure;
};

// Error raised by the engine while replaying a stream, tagged with the
// 1-based index of the offending event.
class RunError : public std::runtime_error {
 public:
  RunError(std::int64_t op_index, const std::string& what)
      : std::runtime_error("op " + std::to_string(op_index) + ": " + what), op_index_(op_index) {}
  std::int64_t op_index() const noexcept { return op_index_; }

 private:
  std::int64_t op_index_;
};

// Replays the stream, writing one JSON object per event and a final summary
// object to `jsonl` (when non-null).
RunSummary run(const Stream& stream, const RunOptions& options, std::ostream* jsonl);

struct BenchResult {
  std::uint64_t updates = 0;
  std::uint64_t total_touched = 0;
  double amortized_touched = 0.0;
  double median_seconds = 0.0;
  int max_f_observed = 0;
  Level max_level = 0;
  std::vector<std::uint64_t> rebuilds_per_level;
};

// Replays the stream `repetitions` times without output; wall-clock is the
// median over repetitions, work counts come from the last one.
BenchResult bench(const Stream& stream, int repetitions, NumericMode mode, bool implicit_sets);

// Tab-separated: a header and exactly one summary row, then one row per
// level with its rebuild count.
void write_bench_tsv(const BenchResult& result, const Stream& stream, std::ostream& out);

}  // namespace dynsc
