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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dynsc/rational.hpp"

namespace dynsc {

// A static set system: sets with costs and elements given by the local
// indices of their containing sets.
struct Instance {
  std::vector<std::string> set_names;
  std::vector<Rational> costs;
  std::vector<std::string> element_names;
  std::vector<std::vector<std::uint32_t>> element_sets;

  std::size_t num_sets() const { return costs.size(); }
  std::size_t num_elements() const { return element_sets.size(); }

  int max_frequency() const {
    std::size_t f = 0;
    for (const auto& sets : element_sets) f = std::max(f, sets.size());
    return static_cast<int>(f);
  }
};

}  // namespace dynsc
