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

#include "dynsc/config.hpp"

#include "dynsc/errors.hpp"

namespace dynsc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kCostOutOfRange: return "cost-out-of-range";
    case ErrorCode::kUnknownSet: return "unknown-set";
    case ErrorCode::kUnknownElement: return "unknown-element";
    case ErrorCode::kDeadElement: return "dead-element";
    case ErrorCode::kEmptySetList: return "empty-set-list";
    case ErrorCode::kCapacityExceeded: return "capacity-exceeded";
    case ErrorCode::kNoIncidence: return "no-incidence";
    case ErrorCode::kLevelOutOfRange: return "level-out-of-range";
    case ErrorCode::kInstanceTooLarge: return "instance-too-large";
    case ErrorCode::kUncoverable: return "uncoverable";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

const char* to_string(ElemState state) {
  switch (state) {
    case ElemState::kActive: return "active";
    case ElemState::kPassive: return "passive";
    case ElemState::kDead: return "dead";
  }
  return "?";
}

const char* to_string(NumericMode mode) {
  return mode == NumericMode::kFastFloat ? "fast-float" : "exact-rational";
}

Level compute_level_cap(const Rational& epsilon, const Rational& cost_ratio,
                        std::int64_t n) {
  if (epsilon <= 0) throw Error(ErrorCode::kInvalidConfig, "epsilon must be positive");
  const Rational target = cost_ratio * n;
  if (target < 1) throw Error(ErrorCode::kInvalidConfig, "C * n must be at least 1");
  const Rational base = 1 + epsilon;
  Rational power = 1;
  Level t = 0;
  while (power < target) {
    power *= base;
    ++t;
  }
  return t + 1;
}

SystemConfig SystemConfig::make(const Rational& epsilon, const Rational& cost_ratio,
                                std::int64_t n_max, NumericMode mode) {
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) {
    throw Error(ErrorCode::kInvalidConfig,
                "epsilon must satisfy 0 < eps < 1/2, got " + to_fraction_string(epsilon));
  }
  if (cost_ratio < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "C must be at least 1, got " + to_decimal_string(cost_ratio));
  }
  if (n_max < 1) {
    throw Error(ErrorCode::kInvalidConfig, "n_max must be positive");
  }
  SystemConfig config;
  config.epsilon = epsilon;
  config.cost_ratio = cost_ratio;
  config.n_max = n_max;
  config.mode = mode;
  config.max_level = compute_level_cap(epsilon, cost_ratio, n_max);
  return config;
}

}  // namespace dynsc
