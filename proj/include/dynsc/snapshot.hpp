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
#include "dynsc/types.hpp"

namespace dynsc {

// Immutable deep copy of a system between updates. Shares nothing with the
// live engine, so it can be handed to another thread.
template <class Num>
struct Snapshot {
  struct Set {
    std::string name;
    Rational exact_cost;
    Num cost;
    Level level = 0;
    Num weight;
    bool tight = false;
  };

  struct Element {
    std::string name;
    std::uint64_t seq = 0;
    ElemState state = ElemState::kActive;
    Level level = 0;
    Num weight;
    std::vector<std::uint32_t> sets;  // indices into Snapshot::sets
    // Where the level index files this element; must agree with state/level.
    ElemState bucket_state = ElemState::kActive;
    Level bucket_level = -1;
  };

  Rational epsilon;
  Rational cost_ratio;
  std::int64_t n_max = 0;
  Level max_level = 0;
  NumericMode mode = NumericMode::kExactRational;

  std::vector<Set> sets;
  std::vector<Element> elements;  // E and D, ascending seq
  std::vector<std::int64_t> counters;  // C_{<=j}, j in [0, L]
  // |A_i|, |P_i|, |D_i| as cached by the level index.
  std::vector<std::size_t> active_sizes;
  std::vector<std::size_t> passive_sizes;
  std::vector<std::size_t> dead_sizes;
  int max_frequency = 0;
};

}  // namespace dynsc
