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

#include "dynsc/instance.hpp"
#include "dynsc/numeric.hpp"
#include "dynsc/types.hpp"

namespace dynsc {

template <class Num>
struct StaticPartition {
  std::vector<Level> set_level;
  std::vector<Num> set_weight;
  std::vector<Level> elem_level;
  std::vector<Num> elem_weight;
  std::vector<std::uint32_t> tight;  // ascending set index
};

// Discretized primal-dual: every set and element starts at level L with
// weight (1+eps)^{-L}; in rounds t = L..1 the sets slack at the start of the
// round drop one level and the elements covered only by those sets grow by a
// (1+eps) factor and drop with them. Throws kNoIncidence for an element in no
// set.
template <class Num>
StaticPartition<Num> static_build(const Instance& instance, const LevelGeometry<Num>& g);

// Returns one message per violated property; empty means the partition is a
// valid hierarchical partition whose tight sets pay at most (1+eps)*f times
// the packing value.
template <class Num>
std::vector<std::string> check_partition(const Instance& instance,
                                         const StaticPartition<Num>& partition,
                                         const LevelGeometry<Num>& g);

}  // namespace dynsc
