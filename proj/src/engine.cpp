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

#include "dynsc/engine.hpp"

#include <algorithm>
#include <cassert>

#include "dynsc/errors.hpp"

namespace dynsc {

template <class Num>
DynamicEngine<Num>::DynamicEngine(const SystemConfig& config) : sys_(config) {
  stats_.rebuilds_per_level.assign(static_cast<std::size_t>(config.max_level) + 1, 0);
}

template <class Num>
SetId DynamicEngine<Num>::declare_set(std::string_view name, const Rational& cost) {
  return sys_.declare_set(name, cost);
}

template <class Num>
void DynamicEngine<Num>::record_flag(SetId id, CoverDiff& diff) {
  auto& s = sys_.set(id);
  const bool tight = is_tight_weight(s.weight, s.cost, s.threshold);
  if (tight == s.tight) return;
  s.tight = tight;
  if (tight) {
    diff.added.push_back(id);
    cover_cost_ += s.exact_cost;
    ++cover_size_;
  } else {
    diff.removed.push_back(id);
    cover_cost_ -= s.exact_cost;
    --cover_size_;
  }
}

template <class Num>
CoverDiff DynamicEngine<Num>::insert(std::string_view elem, std::span<const std::string> names) {
  std::vector<SetId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    auto id = sys_.find_set(name);
    if (!id) throw Error(ErrorCode::kUnknownSet, "unknown set '" + name + "'");
    ids.push_back(*id);
  }
  return insert(elem, ids);
}

template <class Num>
CoverDiff DynamicEngine<Num>::insert(std::string_view elem, std::span<const SetId> sets) {
  const std::string name(elem);
  if (auto existing = sys_.find_element(name)) {
    if (sys_.element(*existing).state == ElemState::kDead) {
      throw Error(ErrorCode::kDeadElement,
                  "element '" + name + "' is dead but not yet purged; use a fresh id");
    }
    throw Error(ErrorCode::kDuplicateId, "element '" + name + "' is already live");
  }
  if (sets.empty()) throw Error(ErrorCode::kEmptySetList, "element '" + name + "' has no sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].valid() || sets[i].value() >= sys_.num_sets()) {
      throw Error(ErrorCode::kUnknownSet, "unknown set index for element '" + name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[i] == sets[j]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "set '" + sys_.set(sets[i]).name + "' listed twice for '" + name + "'");
      }
    }
  }
  if (static_cast<std::int64_t>(sys_.live_count()) >= sys_.config().n_max) {
    throw Error(ErrorCode::kCapacityExceeded,
                "inserting '" + name + "' would exceed n_max live elements");
  }

  CoverDiff diff;
  Level level = 0;
  bool any_tight = false;
  for (SetId s : sets) {
    ++diff.touched;
    level = std::max(level, sys_.set(s).level);
    any_tight = any_tight || sys_.set(s).tight;
  }
  if (any_tight) {
    sys_.add_element(name, sets, ElemState::kPassive, level, Num(0));
  } else {
    // Every containing set is slack, hence at level 0. Raise the new weight
    // until the first of them reaches its cost.
    Num lambda = sys_.set(sets[0]).cost - sys_.set(sets[0]).weight;
    for (SetId s : sets) {
      assert(sys_.set(s).level == 0);
      lambda = std::min<Num>(lambda, sys_.set(s).cost - sys_.set(s).weight);
    }
    if (lambda < Num(0)) lambda = Num(0);
    sys_.add_element(name, sets, ElemState::kPassive, 0, lambda);
    for (SetId s : sets) sys_.set(s).weight += lambda;
    for (SetId s : sets) record_flag(s, diff);
    std::sort(diff.added.begin(), diff.added.end());
  }
  ++stats_.inserts;
  stats_.total_touched += diff.touched;
  return diff;
}

template <class Num>
CoverDiff DynamicEngine<Num>::erase(std::string_view elem) {
  const std::string name(elem);
  auto found = sys_.find_element(name);
  if (!found) throw Error(ErrorCode::kUnknownElement, "unknown element '" + name + "'");
  const ElemSlot slot = *found;
  auto& e = sys_.element(slot);
  if (e.state == ElemState::kDead) {
    throw Error(ErrorCode::kDeadElement, "element '" + name + "' is already deleted");
  }
  const Level level = e.level;
  sys_.place(slot, ElemState::kDead, level);

  CoverDiff diff;
  auto& counters = sys_.counters();
  for (Level k = sys_.max_level(); k >= level; --k) {
    auto& c = counters[static_cast<std::size_t>(k)];
    if (--c > 0) continue;
    RebuildOutcome outcome = rebuilder_.run(sys_, k);
    diff.rebuild_level = k;
    diff.touched += outcome.touched;
    stats_.target_increases += outcome.target_increases;
    stats_.passive_demotions += outcome.passive_demotions;
    ++stats_.rebuilds_per_level[static_cast<std::size_t>(k)];
    for (SetId s : outcome.affected_sets) record_flag(s, diff);
    break;
  }
  ++stats_.deletes;
  stats_.total_touched += diff.touched;
  return diff;
}

template <class Num>
std::vector<SetId> DynamicEngine<Num>::cover() const {
  std::vector<SetId> out;
  out.reserve(cover_size_);
  for (std::uint32_t i = 0; i < sys_.num_sets(); ++i) {
    if (sys_.set(SetId(i)).tight) out.emplace_back(i);
  }
  return out;
}

template <class Num>
std::optional<std::string> DynamicEngine<Num>::lowest_live_element() const {
  for (Level i = 0; i <= sys_.max_level(); ++i) {
    for (ElemState st : {ElemState::kActive, ElemState::kPassive}) {
      const std::uint32_t slot = sys_.levels().front(st, i);
      if (slot != LinkedBuckets::kNone) return sys_.element(ElemSlot(slot)).name;
    }
  }
  return std::nullopt;
}

template class DynamicEngine<double>;
template class DynamicEngine<Rational>;

}  // namespace dynsc
