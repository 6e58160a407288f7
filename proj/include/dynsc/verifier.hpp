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

#include <optional>
#include <string>
#include <vector>

#include "dynsc/brute_force.hpp"
#include "dynsc/fix_level.hpp"
#include "dynsc/numeric.hpp"
#include "dynsc/snapshot.hpp"

namespace dynsc {

struct Violation {
  std::string invariant;
  std::string entity;
  std::string expected;
  std::string actual;
};

struct VerifierReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::optional<Rational> ratio;            // cover cost / OPT
  std::optional<Rational> certificate_gap;  // packing value minus the required lower bound

  void add(Violation v) {
    pass = false;
    violations.push_back(std::move(v));
  }
  void merge(const VerifierReport& other);
};

// Line-oriented text: a "report" line, then one "violation" line per entry.
std::string serialize(const VerifierReport& report);

// Structural and weight invariants of a snapshot: element levels and weights,
// bucket placement, set weight bounds and tight flags, slack sets at level 0,
// coverage of E and D by tight sets, |D_{<=j}| <= 2eps|A_{<=j}| + 1 and
// non-negative counters. Exact for rational snapshots; float snapshots are
// compared with the mode tolerance.
template <class Num>
VerifierReport check_invariants(const Snapshot<Num>& snapshot);

// Duality checks: the live weights are a feasible packing, the packing value
// is at least c(cover)/((1+eps)(1+2eps)f), and the dead weight is at most
// 2eps times the active weight plus one. With `opt`, also checks
// packing <= OPT <= c(cover) <= (1+5eps)f*OPT and records the ratio.
template <class Num>
VerifierReport certify_ratio(const Snapshot<Num>& snapshot,
                             const std::optional<OptResult>& opt = std::nullopt);

// Round-by-round simulation of the static algorithm from level k down,
// restricted to the given sets and elements. Slow reference for fix_level.
template <class Num>
FixLevelResult<Num> reference_fix_level(const FixLevelProblem<Num>& problem,
                                        const LevelGeometry<Num>& g);

}  // namespace dynsc
