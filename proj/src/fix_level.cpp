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

#include "dynsc/fix_level.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "dynsc/linked_buckets.hpp"

namespace dynsc {
namespace {

template <class Num>
bool reaches_threshold(const Num& cost, const Num& threshold, const Num& weight, Level i,
                       Level k, std::int64_t alive_count, const LevelGeometry<Num>& g) {
  Num gain = g.weight_at(i) - g.weight_at(k);
  gain *= Num(static_cast<long>(alive_count));
  return Arith<Num>::at_least(weight + gain, threshold, cost);
}

}  // namespace

template <class Num>
Level target_level(const Num& cost, const Num& weight, Level k, std::int64_t alive_count,
                   const LevelGeometry<Num>& g) {
  const Num threshold = g.tight_threshold(cost);
  if (alive_count == 0) {
    // The inequality no longer depends on i.
    return Arith<Num>::at_least(weight, threshold, cost) ? k : 0;
  }
  if (k <= 0) return 0;

  const double need = (Arith<Num>::to_double(threshold) - Arith<Num>::to_double(weight)) /
                          static_cast<double>(alive_count) +
                      Arith<Num>::to_double(g.weight_at(k));
  Level guess = k;
  if (need > 0.0) {
    const double exact = -std::log(need) / g.log_one_plus_eps;
    guess = exact >= static_cast<double>(k) ? k
                                            : std::max(0, static_cast<Level>(std::floor(exact)));
  }
  while (guess < k && reaches_threshold(cost, threshold, weight, guess + 1, k, alive_count, g)) {
    ++guess;
  }
  while (guess >= 1 && !reaches_threshold(cost, threshold, weight, guess, k, alive_count, g)) {
    --guess;
  }
  return guess;
}

template <class Num>
FixLevelResult<Num> fix_level(const FixLevelProblem<Num>& problem, const LevelGeometry<Num>& g) {
  const Level k = problem.k;
  const std::size_t m = problem.num_sets();
  const std::size_t n = problem.num_elements();
  FixLevelResult<Num> out;
  out.set_level.assign(m, 0);
  out.elem_level.assign(n, k);
  out.elem_weight.assign(n, g.weight_at(k));

  // Set -> member CSR.
  std::vector<std::uint32_t> offset(m + 1, 0);
  for (const auto& sets : problem.element_sets) {
    for (std::uint32_t s : sets) ++offset[s + 1];
    out.touched += sets.size();
  }
  for (std::size_t s = 0; s < m; ++s) offset[s + 1] += offset[s];
  std::vector<std::uint32_t> members(offset[m]);
  {
    std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
    for (std::uint32_t e = 0; e < n; ++e) {
      for (std::uint32_t s : problem.element_sets[e]) members[cursor[s]++] = e;
    }
  }

  std::vector<std::int64_t> alive(m);
  out.set_weight.resize(m);
  std::vector<Level> target(m);
  LinkedBuckets gamma(static_cast<std::size_t>(k) + 1);
  for (std::uint32_t s = 0; s < m; ++s) {
    alive[s] = offset[s + 1] - offset[s];
    out.set_weight[s] = problem.frozen_weight[s] + g.weight_at(k) * Num(static_cast<long>(alive[s]));
    target[s] = target_level(problem.cost[s], out.set_weight[s], k, alive[s], g);
    gamma.push_front(static_cast<std::uint32_t>(target[s]), s);
  }

  std::vector<char> set_frozen(m, 0);
  std::vector<char> elem_frozen(n, 0);
  std::vector<std::uint32_t> round;
  for (Level i = k; i >= 0; --i) {
    const auto bucket = static_cast<std::uint32_t>(i);
    round.clear();
    gamma.collect(bucket, round);
    std::sort(round.begin(), round.end());
    for (std::uint32_t s : round) {
      // Sets only ever leave Gamma[i] during round i.
      if (gamma.bucket_of(s) != bucket) continue;
      gamma.erase(s);
      set_frozen[s] = 1;
      out.set_level[s] = i;
      const Num delta = g.weight_at(i) - g.weight_at(k);
      for (std::uint32_t p = offset[s]; p < offset[s + 1]; ++p) {
        const std::uint32_t e = members[p];
        ++out.touched;
        if (elem_frozen[e]) continue;
        elem_frozen[e] = 1;
        out.elem_level[e] = i;
        out.elem_weight[e] = g.weight_at(i);
        out.set_weight[s] += delta;
        for (std::uint32_t t : problem.element_sets[e]) {
          ++out.touched;
          if (t == s || set_frozen[t]) continue;
          out.set_weight[t] += delta;
          --alive[t];
          Level next = target_level(problem.cost[t], out.set_weight[t], k, alive[t], g);
          if (next > target[t]) {
            // A value above the current round only says the set is already
            // tight, and a set left without alive elements keeps its place.
            // Any other increase is a defect.
            if (alive[t] != 0 && next <= i) ++out.target_increases;
            next = target[t];
          }
          if (next != target[t]) {
            target[t] = next;
            gamma.move(t, static_cast<std::uint32_t>(next));
          }
        }
      }
    }
    assert(gamma.empty(bucket));
  }
  return out;
}

template Level target_level<double>(const double&, const double&, Level, std::int64_t,
                                    const LevelGeometry<double>&);
template Level target_level<Rational>(const Rational&, const Rational&, Level, std::int64_t,
                                      const LevelGeometry<Rational>&);
template FixLevelResult<double> fix_level<double>(const FixLevelProblem<double>&,
                                                  const LevelGeometry<double>&);
template FixLevelResult<Rational> fix_level<Rational>(const FixLevelProblem<Rational>&,
                                                      const LevelGeometry<Rational>&);

}  // namespace dynsc
