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

#include "dynsc/rational.hpp"
#include "dynsc/types.hpp"

namespace dynsc {

// ceil(log_{1+eps}(C * n)) + 1, evaluated exactly: the smallest t with
// (1+eps)^t >= C*n, plus one. Requires eps > 0 and C*n >= 1.
Level compute_level_cap(const Rational& epsilon, const Rational& cost_ratio,
                        std::int64_t n);

struct SystemConfig {
  Rational epsilon;
  Rational cost_ratio;  // C: every cost lies in [1/C, 1]
  std::int64_t n_max = 1;
  Level max_level = 0;  // L, derived
  NumericMode mode = NumericMode::kExactRational;

  // Validates 0 < eps < 1/2, C >= 1, n_max >= 1 and derives L.
  // Throws Error(kInvalidConfig) otherwise.
  static SystemConfig make(const Rational& epsilon, const Rational& cost_ratio,
                           std::int64_t n_max,
                           NumericMode mode = NumericMode::kExactRational);
};

}  // namespace dynsc
