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
#include <vector>

#include "dynsc/instance.hpp"
#include "dynsc/rational.hpp"
#include "dynsc/snapshot.hpp"

namespace dynsc {

struct OptResult {
  Rational cost = 0;
  std::vector<std::uint32_t> sets;  // ascending set index
};

inline constexpr std::size_t kBruteForceMaxSets = 22;

// Exact minimum-cost cover by depth-first search: branch on the sets of the
// first uncovered element, excluding each tried set from later siblings, and
// prune on cost. Throws kInstanceTooLarge above kBruteForceMaxSets sets and
// kUncoverable for an element in no set.
OptResult brute_force_opt(const Instance& instance);

// The live part of a snapshot as a static instance with exact costs.
template <class Num>
Instance live_instance(const Snapshot<Num>& snapshot);

}  // namespace dynsc
