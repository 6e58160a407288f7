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

#include "dynsc/numeric.hpp"
#include "dynsc/types.hpp"

namespace dynsc {

// Input to FIX-LEVEL(k, S', E'). Sets and elements are numbered locally; the
// local set order is the pick order inside a target-level bucket. Every
// element starts at level k with weight (1+eps)^{-k}, and each set's starting
// W* is its frozen contribution (members outside E') plus that weight for
// every member in E'.
template <class Num>
struct FixLevelProblem {
  Level k = 0;
  std::vector<Num> cost;
  std::vector<Num> frozen_weight;
  std::vector<std::vector<std::uint32_t>> element_sets;

  std::size_t num_sets() const { return cost.size(); }
  std::size_t num_elements() const { return element_sets.size(); }
};

template <class Num>
struct FixLevelResult {
  std::vector<Level> set_level;
  std::vector<Num> set_weight;
  std::vector<Level> elem_level;
  std::vector<Num> elem_weight;
  std::uint64_t touched = 0;
  // Recomputations where the target level would have gone up. The algorithm
  // relies on this never happening; anything nonzero is a defect.
  std::uint64_t target_increases = 0;
};

// Largest i in [1, k] with W + ((1+eps)^{-i} - (1+eps)^{-k}) * alive >= c/(1+eps),
// or 0 when no such i exists. With alive == 0 the condition is W >= c/(1+eps)
// for every i, so the answer is k or 0; fix_level caps it at the set's
// previous target. A float-log estimate is corrected by evaluating the
// inequality itself, so the result is exact in exact mode.
template <class Num>
Level target_level(const Num& cost, const Num& weight, Level k, std::int64_t alive_count,
                   const LevelGeometry<Num>& g);

// Bucket sweep over target levels, rounds i = k down to 0. O(f*|E'| + |S'| + k).
template <class Num>
FixLevelResult<Num> fix_level(const FixLevelProblem<Num>& problem, const LevelGeometry<Num>& g);

}  // namespace dynsc
