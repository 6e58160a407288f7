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

#include "dynsc/set_system.hpp"

#include <algorithm>

#include "dynsc/errors.hpp"

namespace dynsc {

Level element_level_of(std::span<const Level> containing_set_levels) {
  if (containing_set_levels.empty()) {
    throw Error(ErrorCode::kNoIncidence, "element has no containing set");
  }
  return *std::max_element(containing_set_levels.begin(), containing_set_levels.end());
}

std::size_t LevelIndex::size(BucketKind kind, Level level) const {
  switch (kind) {
    case BucketKind::kLive:
      return size(ElemState::kActive, level) + size(ElemState::kPassive, level);
    case BucketKind::kActive: return size(ElemState::kActive, level);
    case BucketKind::kPassive: return size(ElemState::kPassive, level);
    case BucketKind::kDead: return size(ElemState::kDead, level);
  }
  return 0;
}

std::optional<std::pair<ElemState, Level>> LevelIndex::where(ElemSlot slot) const {
  const std::uint32_t b = buckets_.bucket_of(slot.value());
  if (b == LinkedBuckets::kNone) return std::nullopt;
  const auto per_kind = static_cast<std::uint32_t>(max_level_ + 1);
  return std::pair{static_cast<ElemState>(b / per_kind), static_cast<Level>(b % per_kind)};
}

template <class Num>
SetSystem<Num>::SetSystem(const SystemConfig& config)
    : config_(config),
      geometry_(LevelGeometry<Num>::make(config.epsilon, config.max_level)),
      levels_(config.max_level),
      counters_(static_cast<std::size_t>(config.max_level) + 1, 0) {}

template <class Num>
SetId SetSystem<Num>::declare_set(std::string_view name, const Rational& cost) {
  std::string key(name);
  if (set_names_.contains(key)) {
    throw Error(ErrorCode::kDuplicateId, "set '" + key + "' already declared");
  }
  if (cost * config_.cost_ratio < 1 || cost > 1) {
    throw Error(ErrorCode::kCostOutOfRange,
                "cost " + to_decimal_string(cost) + " of set '" + key + "' outside [1/C, 1]");
  }
  const SetId id(static_cast<std::uint32_t>(sets_.size()));
  SetRecord<Num> rec;
  rec.name = key;
  rec.exact_cost = cost;
  rec.cost = Arith<Num>::from_rational(cost);
  rec.threshold = Arith<Num>::from_rational(cost / (1 + config_.epsilon));
  rec.weight = Num(0);
  sets_.push_back(std::move(rec));
  set_names_.emplace(std::move(key), id);
  return id;
}

template <class Num>
std::optional<SetId> SetSystem<Num>::find_set(std::string_view name) const {
  auto it = set_names_.find(std::string(name));
  if (it == set_names_.end()) return std::nullopt;
  return it->second;
}

template <class Num>
std::optional<ElemSlot> SetSystem<Num>::find_element(std::string_view name) const {
  auto it = element_names_.find(std::string(name));
  if (it == element_names_.end()) return std::nullopt;
  return it->second;
}

template <class Num>
SetClass SetSystem<Num>::classify_set(SetId id) const {
  const auto& s = set(id);
  return is_tight_weight(s.weight, s.cost, s.threshold) ? SetClass::kTight : SetClass::kSlack;
}

template <class Num>
Level SetSystem<Num>::element_level(ElemSlot slot) const {
  const auto& e = element(slot);
  std::vector<Level> levels;
  levels.reserve(e.incidences.size());
  for (const auto& inc : e.incidences) levels.push_back(set(inc.set).level);
  return element_level_of(levels);
}

template <class Num>
std::int64_t SetSystem<Num>::prefix_count(BucketKind kind, Level j) const {
  if (j < 0 || j > max_level()) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(j) + " outside [0, L]");
  }
  std::int64_t total = 0;
  for (Level i = 0; i <= j; ++i) total += static_cast<std::int64_t>(levels_.size(kind, i));
  return total;
}

template <class Num>
ElemSlot SetSystem<Num>::add_element(std::string_view name, std::span<const SetId> sets,
                                     ElemState state, Level level, const Num& weight) {
  std::uint32_t index;
  if (!free_slots_.empty()) {
    index = free_slots_.back();
    free_slots_.pop_back();
  } else {
    index = static_cast<std::uint32_t>(elements_.size());
    elements_.emplace_back();
  }
  const ElemSlot slot(index);
  auto& e = elements_[index];
  e.name = std::string(name);
  e.seq = next_seq_++;
  e.state = state;
  e.level = level;
  e.weight = weight;
  e.in_use = true;
  e.incidences.clear();
  e.incidences.reserve(sets.size());
  for (SetId sid : sets) {
    std::uint32_t node;
    if (!free_nodes_.empty()) {
      node = free_nodes_.back();
      free_nodes_.pop_back();
    } else {
      node = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    auto& s = sets_[sid.value()];
    nodes_[node] = IncidenceNode{slot, sid, LinkedBuckets::kNone, s.member_head};
    if (s.member_head != LinkedBuckets::kNone) nodes_[s.member_head].prev_in_set = node;
    s.member_head = node;
    ++s.member_count;
    e.incidences.push_back({sid, node});
  }
  max_frequency_ = std::max(max_frequency_, static_cast<int>(sets.size()));
  element_names_.emplace(e.name, slot);
  levels_.place(slot, state, level);
  if (state == ElemState::kDead) {
    ++dead_count_;
  } else {
    ++live_count_;
  }
  return slot;
}

template <class Num>
void SetSystem<Num>::purge_element(ElemSlot slot) {
  auto& e = elements_[slot.value()];
  for (const auto& inc : e.incidences) {
    IncidenceNode& n = nodes_[inc.node];
    auto& s = sets_[inc.set.value()];
    if (n.prev_in_set != LinkedBuckets::kNone) {
      nodes_[n.prev_in_set].next_in_set = n.next_in_set;
    } else {
      s.member_head = n.next_in_set;
    }
    if (n.next_in_set != LinkedBuckets::kNone) nodes_[n.next_in_set].prev_in_set = n.prev_in_set;
    --s.member_count;
    free_nodes_.push_back(inc.node);
  }
  levels_.remove(slot);
  if (e.state == ElemState::kDead) {
    --dead_count_;
  } else {
    --live_count_;
  }
  element_names_.erase(e.name);
  e.incidences.clear();
  e.name.clear();
  e.in_use = false;
  free_slots_.push_back(slot.value());
}

template <class Num>
void SetSystem<Num>::place(ElemSlot slot, ElemState state, Level level) {
  auto& e = elements_[slot.value()];
  if ((e.state == ElemState::kDead) != (state == ElemState::kDead)) {
    if (state == ElemState::kDead) {
      --live_count_;
      ++dead_count_;
    } else {
      ++live_count_;
      --dead_count_;
    }
  }
  e.state = state;
  e.level = level;
  levels_.place(slot, state, level);
}

template <class Num>
Num SetSystem<Num>::recompute_weight(SetId id) const {
  Num total(0);
  for_each_member(id, [&](ElemSlot slot) { total += element(slot).weight; });
  return total;
}

template <class Num>
Snapshot<Num> SetSystem<Num>::snapshot() const {
  Snapshot<Num> snap;
  snap.epsilon = config_.epsilon;
  snap.cost_ratio = config_.cost_ratio;
  snap.n_max = config_.n_max;
  snap.max_level = config_.max_level;
  snap.mode = config_.mode;
  snap.sets.reserve(sets_.size());
  for (const auto& s : sets_) {
    snap.sets.push_back({s.name, s.exact_cost, s.cost, s.level, s.weight, s.tight});
  }
  std::vector<std::uint32_t> order;
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].in_use) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return elements_[a].seq < elements_[b].seq;
  });
  snap.elements.reserve(order.size());
  for (std::uint32_t i : order) {
    const auto& e = elements_[i];
    typename Snapshot<Num>::Element out;
    out.name = e.name;
    out.seq = e.seq;
    out.state = e.state;
    out.level = e.level;
    out.weight = e.weight;
    for (const auto& inc : e.incidences) out.sets.push_back(inc.set.value());
    if (auto loc = levels_.where(ElemSlot(i))) {
      out.bucket_state = loc->first;
      out.bucket_level = loc->second;
    }
    snap.elements.push_back(std::move(out));
  }
  snap.counters = counters_;
  for (Level i = 0; i <= config_.max_level; ++i) {
    snap.active_sizes.push_back(levels_.size(ElemState::kActive, i));
    snap.passive_sizes.push_back(levels_.size(ElemState::kPassive, i));
    snap.dead_sizes.push_back(levels_.size(ElemState::kDead, i));
  }
  snap.max_frequency = max_frequency_;
  return snap;
}

template class SetSystem<double>;
template class SetSystem<Rational>;

}  // namespace dynsc
