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
#include <string>
#include <vector>

#include "dynsc/rational.hpp"
#include "dynsc/stream.hpp"

namespace dynsc {

// random-churn     fill to half capacity, then inserts and deletes at random
// insert-heavy     at least 90% of the updates are inserts
// delete-cascade   n inserts followed by deleting every element
// rebuild-attack   fill to capacity, then repeatedly delete the live element
//                  at the lowest level and insert a fresh one
enum class Profile { kRandomChurn, kInsertHeavy, kDeleteCascade, kRebuildAttack };

// Throws Error(kInvalidArgument) for an unknown name.
Profile parse_profile(const std::string& name);
const char* to_string(Profile profile);
std::vector<std::string> profile_names();

struct WorkloadParams {
  Profile profile = Profile::kRandomChurn;
  std::uint64_t seed = 1;
  std::int64_t n = 100;    // capacity, written as nmax
  std::int64_t m = 20;     // number of sets
  int f = 3;               // max sets per element
  std::int64_t ops = 0;    // element updates; 0 picks a profile default
  Rational epsilon{1, 10};
  Rational cost_ratio = 1;
};

// Deterministic for fixed parameters. Costs are two-digit decimals in
// [1/C, 1]; element ids are never reused. Throws Error(kInvalidArgument) for
// n < 1, m < 1, f < 1 or f > m.
Stream gen(const WorkloadParams& params);

}  // namespace dynsc
