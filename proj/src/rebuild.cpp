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

#include "dynsc/rebuild.hpp"

#include <algorithm>
#include <cassert>

namespace dynsc {

template <class Num>
RebuildOutcome Rebuilder<Num>::run(SetSystem<Num>& sys, Level k) {
  using A = Arith<Num>;
  const auto& g = sys.geometry();
  const Level p = std::min(k + 1, sys.max_level());
  RebuildOutcome out;

  const std::size_t m = sys.num_sets();
  if (set_mark_.size() < m) {
    set_mark_.resize(m, 0);
    in_s2_.resize(m, 0);
    local_.resize(m, 0);
  }
  if (++epoch_ == 0) {
    std::fill(set_mark_.begin(), set_mark_.end(), 0);
    epoch_ = 1;
  }
  auto slot_of = [](std::uint32_t idx) { return ElemSlot(idx); };

  // Affected elements E*_{<=k} and D*_{<=k}, and the sets S' that
  // contain them. Every set containing such an element is at level <= k.
  affected_.clear();
  for (Level i = 0; i <= k; ++i) {
    sys.levels().collect(ElemState::kActive, i, affected_);
    sys.levels().collect(ElemState::kPassive, i, affected_);
    sys.levels().collect(ElemState::kDead, i, affected_);
  }
  for (std::uint32_t idx : affected_) {
    for (const auto& inc : sys.element(slot_of(idx)).incidences) {
      ++out.touched;
      if (set_mark_[inc.set.value()] != epoch_) {
        set_mark_[inc.set.value()] = epoch_;
        out.affected_sets.push_back(inc.set);
      }
    }
  }
  std::sort(out.affected_sets.begin(), out.affected_sets.end());

  // Purge the dead, zero the passive, lift everything to p.
  passive_.clear();
  std::size_t live = 0;
  for (std::uint32_t idx : affected_) {
    auto& e = sys.element(slot_of(idx));
    if (e.state == ElemState::kDead) {
      for (const auto& inc : e.incidences) {
        ++out.touched;
        sys.set(inc.set).weight -= e.weight;
      }
      sys.purge_element(slot_of(idx));
      continue;
    }
    const Num next = e.state == ElemState::kActive ? g.weight_at(p) : Num(0);
    const Num delta = next - e.weight;
    for (const auto& inc : e.incidences) {
      ++out.touched;
      sys.set(inc.set).weight += delta;
    }
    e.weight = next;
    if (e.state == ElemState::kPassive) passive_.push_back(idx);
    affected_[live++] = idx;
  }
  affected_.resize(live);
  for (SetId s : out.affected_sets) sys.set(s).level = p;
  for (std::uint32_t idx : affected_) {
    sys.place(slot_of(idx), sys.element(slot_of(idx)).state, p);
  }

  // Passive elements in insertion order either become active at p or
  // take the largest weight that keeps every containing set within its cost.
  std::sort(passive_.begin(), passive_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return sys.element(slot_of(a)).seq < sys.element(slot_of(b)).seq;
  });
  const Num& lifted = g.weight_at(p);
  for (std::uint32_t idx : passive_) {
    auto& e = sys.element(slot_of(idx));
    bool fits = true;
    Num lambda;
    bool first = true;
    for (const auto& inc : e.incidences) {
      ++out.touched;
      const auto& s = sys.set(inc.set);
      if (!A::at_most(s.weight + lifted, s.cost, s.cost)) fits = false;
      Num room = s.cost - s.weight;
      if (first || room < lambda) lambda = room;
      first = false;
    }
    if (fits) {
      e.weight = lifted;
      sys.place(slot_of(idx), ElemState::kActive, p);
    } else {
      e.weight = lambda < Num(0) ? Num(0) : lambda;
    }
    for (const auto& inc : e.incidences) {
      ++out.touched;
      sys.set(inc.set).weight += e.weight;
    }
  }

  // S'': the sets that are tight now stay at p.
  for (SetId s : out.affected_sets) {
    const auto& rec = sys.set(s);
    in_s2_[s.value()] = is_tight_weight(rec.weight, rec.cost, rec.threshold);
  }

  // The rest of S' drops to k, and so does every element without a
  // set in S''. Such elements are active at (1+eps)^{-k}.
  const Num& base = g.weight_at(k);
  demoted_.clear();
  std::uint32_t count = 0;
  for (SetId s : out.affected_sets) {
    if (in_s2_[s.value()]) continue;
    sys.set(s).level = k;
    local_[s.value()] = count++;
  }
  for (std::uint32_t idx : affected_) {
    auto& e = sys.element(slot_of(idx));
    bool held = false;
    for (const auto& inc : e.incidences) {
      ++out.touched;
      if (in_s2_[inc.set.value()]) held = true;
    }
    if (held) continue;
    if (e.state == ElemState::kPassive) ++out.passive_demotions;
    const Num delta = base - e.weight;
    for (const auto& inc : e.incidences) {
      ++out.touched;
      sys.set(inc.set).weight += delta;
    }
    e.weight = base;
    sys.place(slot_of(idx), ElemState::kActive, k);
    demoted_.push_back(idx);
  }
  assert(out.passive_demotions == 0);

  // FIX-LEVEL(k, S' \ S'', X).
  std::sort(demoted_.begin(), demoted_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return sys.element(slot_of(a)).seq < sys.element(slot_of(b)).seq;
  });
  FixLevelProblem<Num> problem;
  problem.k = k;
  problem.cost.reserve(count);
  problem.frozen_weight.reserve(count);
  std::vector<long> alive(count, 0);
  for (SetId s : out.affected_sets) {
    if (!in_s2_[s.value()]) problem.cost.push_back(sys.set(s).cost);
  }
  problem.element_sets.resize(demoted_.size());
  for (std::size_t i = 0; i < demoted_.size(); ++i) {
    auto& sets = problem.element_sets[i];
    for (const auto& inc : sys.element(slot_of(demoted_[i])).incidences) {
      ++out.touched;
      const std::uint32_t local = local_[inc.set.value()];
      sets.push_back(local);
      ++alive[local];
    }
  }
  for (SetId s : out.affected_sets) {
    if (in_s2_[s.value()]) continue;
    const std::uint32_t local = local_[s.value()];
    problem.frozen_weight.push_back(sys.set(s).weight - base * Num(alive[local]));
  }

  FixLevelResult<Num> result = fix_level(problem, g);
  out.touched += result.touched;
  out.target_increases += result.target_increases;
  if (observer_) observer_(problem, result);

  for (SetId s : out.affected_sets) {
    if (in_s2_[s.value()]) continue;
    const std::uint32_t local = local_[s.value()];
    auto& rec = sys.set(s);
    rec.level = result.set_level[local];
    rec.weight = result.set_weight[local];
  }
  for (std::size_t i = 0; i < demoted_.size(); ++i) {
    const ElemSlot slot = slot_of(demoted_[i]);
    sys.element(slot).weight = result.elem_weight[i];
    sys.place(slot, ElemState::kActive, result.elem_level[i]);
  }

  // Float weights drift under repeated add/subtract; resynchronize every set
  // this rebuild touched.
  if constexpr (!A::kExact) {
    for (SetId s : out.affected_sets) sys.set(s).weight = sys.recompute_weight(s);
  }

  // Reset C_{<=j} = floor(eps * |E_{<=j}|) for j <= k.
  std::int64_t running = 0;
  for (Level j = 0; j <= k; ++j) {
    running += static_cast<std::int64_t>(sys.levels().size(BucketKind::kLive, j));
    sys.counters()[static_cast<std::size_t>(j)] = floor_times(sys.config().epsilon, running);
  }
  return out;
}

template class Rebuilder<double>;
template class Rebuilder<Rational>;

}  // namespace dynsc
