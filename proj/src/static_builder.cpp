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

#include "dynsc/static_builder.hpp"

#include <algorithm>

#include "dynsc/errors.hpp"

namespace dynsc {

template <class Num>
StaticPartition<Num> static_build(const Instance& instance, const LevelGeometry<Num>& g) {
  const Level L = g.max_level;
  const std::size_t m = instance.num_sets();
  const std::size_t n = instance.num_elements();
  StaticPartition<Num> out;
  out.set_level.assign(m, L);
  out.set_weight.assign(m, Num(0));
  out.elem_level.assign(n, L);
  out.elem_weight.assign(n, g.weight_at(L));

  std::vector<Num> cost(m);
  std::vector<Num> threshold(m);
  for (std::size_t s = 0; s < m; ++s) {
    cost[s] = Arith<Num>::from_rational(instance.costs[s]);
    threshold[s] = g.tight_threshold(cost[s]);
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (instance.element_sets[e].empty()) {
      throw Error(ErrorCode::kNoIncidence,
                  "element '" + instance.element_names[e] + "' has no containing set");
    }
    for (std::uint32_t s : instance.element_sets[e]) out.set_weight[s] += g.weight_at(L);
  }

  // Only sets and elements that are still descending are carried forward: a
  // set that is tight at the start of a round keeps its weight for good, and
  // so does every element it contains.
  std::vector<std::uint32_t> sets(m);
  for (std::uint32_t s = 0; s < m; ++s) sets[s] = s;
  std::vector<std::uint32_t> elems(n);
  for (std::uint32_t e = 0; e < n; ++e) elems[e] = e;
  std::vector<char> slack(m, 0);

  for (Level t = L; t >= 1 && !sets.empty(); --t) {
    std::size_t kept = 0;
    for (std::uint32_t s : sets) {
      slack[s] = !Arith<Num>::at_least(out.set_weight[s], threshold[s], cost[s]);
      if (slack[s]) sets[kept++] = s;
    }
    sets.resize(kept);

    kept = 0;
    for (std::uint32_t e : elems) {
      const auto& es = instance.element_sets[e];
      if (std::all_of(es.begin(), es.end(), [&](std::uint32_t s) { return slack[s] != 0; })) {
        elems[kept++] = e;
      }
    }
    elems.resize(kept);

    for (std::uint32_t s : sets) out.set_level[s] = t - 1;
    for (std::uint32_t e : elems) {
      const Num delta = g.weight_at(t - 1) - out.elem_weight[e];
      out.elem_weight[e] = g.weight_at(t - 1);
      out.elem_level[e] = t - 1;
      for (std::uint32_t s : instance.element_sets[e]) out.set_weight[s] += delta;
    }
  }

  for (std::uint32_t s = 0; s < m; ++s) {
    if (is_tight_weight(out.set_weight[s], cost[s], threshold[s])) out.tight.push_back(s);
  }
  return out;
}

template <class Num>
std::vector<std::string> check_partition(const Instance& instance,
                                         const StaticPartition<Num>& p,
                                         const LevelGeometry<Num>& g) {
  using A = Arith<Num>;
  std::vector<std::string> bad;
  const std::size_t m = instance.num_sets();
  const std::size_t n = instance.num_elements();
  const Num one(1);

  std::vector<Num> weight(m, Num(0));
  std::vector<Level> max_set_level(n, -1);
  Num packing(0);
  for (std::size_t e = 0; e < n; ++e) {
    const auto& name = instance.element_names[e];
    if (!A::equal(p.elem_weight[e], g.weight_at(p.elem_level[e]), one)) {
      bad.push_back("element-weight " + name + ": weight is not (1+eps)^-level");
    }
    if (p.elem_level[e] == 0) {
      bad.push_back("element-level-zero " + name + ": element ended at level 0");
    }
    for (std::uint32_t s : instance.element_sets[e]) {
      weight[s] += p.elem_weight[e];
      max_set_level[e] = std::max(max_set_level[e], p.set_level[s]);
    }
    if (max_set_level[e] != p.elem_level[e]) {
      bad.push_back("element-level " + name + ": level differs from max containing set level");
    }
    packing += p.elem_weight[e];
  }

  std::vector<char> tight(m, 0);
  Num tight_cost(0);
  for (std::size_t s = 0; s < m; ++s) {
    const auto& name = instance.set_names[s];
    const Num cost = A::from_rational(instance.costs[s]);
    const Num threshold = g.tight_threshold(cost);
    if (!A::equal(weight[s], p.set_weight[s], cost)) {
      bad.push_back("set-weight " + name + ": cached weight differs from member sum");
    }
    if (!A::at_most(weight[s], cost, cost)) {
      bad.push_back("set-weight-bound " + name + ": weight exceeds cost");
    }
    const bool is_tight = is_tight_weight(weight[s], cost, threshold);
    if (!is_tight && p.set_level[s] != 0) {
      bad.push_back("slack-level " + name + ": slack set above level 0");
    }
    if (is_tight && p.set_level[s] == 0) {
      bad.push_back("tight-level " + name + ": tight set at level 0");
    }
    tight[s] = is_tight;
    if (is_tight) tight_cost += cost;
  }

  std::vector<std::uint32_t> expected;
  for (std::uint32_t s = 0; s < m; ++s) {
    if (tight[s]) expected.push_back(s);
  }
  if (expected != p.tight) bad.push_back("tight-list: reported tight sets differ from weights");

  for (std::size_t e = 0; e < n; ++e) {
    const auto& es = instance.element_sets[e];
    if (std::none_of(es.begin(), es.end(), [&](std::uint32_t s) { return tight[s] != 0; })) {
      bad.push_back("coverage " + instance.element_names[e] + ": no tight set contains it");
    }
  }

  const Num bound = g.one_plus_eps * Num(static_cast<long>(instance.max_frequency())) * packing;
  if (!A::at_most(tight_cost, bound, one)) {
    bad.push_back("cost-bound: tight cost exceeds (1+eps)*f*sum of weights");
  }
  return bad;
}

template StaticPartition<double> static_build<double>(const Instance&,
                                                      const LevelGeometry<double>&);
template StaticPartition<Rational> static_build<Rational>(const Instance&,
                                                          const LevelGeometry<Rational>&);
template std::vector<std::string> check_partition<double>(const Instance&,
                                                          const StaticPartition<double>&,
                                                          const LevelGeometry<double>&);
template std::vector<std::string> check_partition<Rational>(const Instance&,
                                                            const StaticPartition<Rational>&,
                                                            const LevelGeometry<Rational>&);

}  // namespace dynsc
