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
#include <functional>
#include <vector>

#include "dynsc/fix_level.hpp"
#include "dynsc/set_system.hpp"

namespace dynsc {

struct RebuildOutcome {
  // Sets whose level or weight may have changed, ascending SetId.
  std::vector<SetId> affected_sets;
  std::uint64_t touched = 0;
  std::uint64_t target_increases = 0;
  // Passive elements that would have been demoted to level k; the algorithm
  // guarantees there are none.
  std::uint64_t passive_demotions = 0;
};

// REBUILD(<=k) with reusable scratch space. Tight flags of the affected sets
// are left to the caller so that it can diff them.
template <class Num>
class Rebuilder {
 public:
  using Observer = std::function<void(const FixLevelProblem<Num>&, const FixLevelResult<Num>&)>;

  // Called with every FIX-LEVEL input and output.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  RebuildOutcome run(SetSystem<Num>& sys, Level k);

 private:
  Observer observer_;
  std::vector<std::uint32_t> set_mark_;  // epoch stamp: set is in S'
  std::vector<char> in_s2_;              // set is tight after the passive pass
  std::vector<std::uint32_t> local_;     // SetId -> FIX-LEVEL local index
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> affected_;
  std::vector<std::uint32_t> passive_;
  std::vector<std::uint32_t> demoted_;
};

extern template class Rebuilder<double>;
extern template class Rebuilder<Rational>;

}  // namespace dynsc
