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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dynsc/config.hpp"
#include "dynsc/linked_buckets.hpp"
#include "dynsc/numeric.hpp"
#include "dynsc/snapshot.hpp"
#include "dynsc/types.hpp"

namespace dynsc {

enum class BucketKind : std::uint8_t { kLive, kActive, kPassive, kDead };

// max over the levels of the containing sets. Throws kNoIncidence when empty.
Level element_level_of(std::span<const Level> containing_set_levels);

// Pure tight/slack predicate on a given weight.
template <class Num>
SetClass classify_weight(const Num& weight, const Num& cost, const LevelGeometry<Num>& g) {
  return is_tight_weight(weight, cost, g.tight_threshold(cost)) ? SetClass::kTight
                                                                : SetClass::kSlack;
}

// One (element, set) membership. Threaded through the set's member list; the
// element keeps the node index in its own incidence array.
struct IncidenceNode {
  ElemSlot elem;
  SetId set;
  std::uint32_t prev_in_set = LinkedBuckets::kNone;
  std::uint32_t next_in_set = LinkedBuckets::kNone;
};

template <class Num>
struct SetRecord {
  std::string name;
  Rational exact_cost;
  Num cost;
  Num threshold;  // c_s / (1+eps)
  Level level = 0;
  Num weight{};  // W*(s), over members in E and D
  bool tight = false;
  std::uint32_t member_head = LinkedBuckets::kNone;
  std::uint32_t member_count = 0;
};

template <class Num>
struct ElementRecord {
  struct Incidence {
    SetId set;
    std::uint32_t node;
  };

  std::string name;
  std::uint64_t seq = 0;
  ElemState state = ElemState::kPassive;
  Level level = 0;
  Num weight{};
  std::vector<Incidence> incidences;
  bool in_use = false;
};

// Per-level buckets A_i, P_i, D_i over element slots. E_i is A_i + P_i.
class LevelIndex {
 public:
  LevelIndex() = default;
  explicit LevelIndex(Level max_level)
      : max_level_(max_level), buckets_(3 * (static_cast<std::size_t>(max_level) + 1)) {}

  void place(ElemSlot slot, ElemState state, Level level) {
    buckets_.move(slot.value(), bucket_id(state, level));
  }
  void remove(ElemSlot slot) { buckets_.erase(slot.value()); }

  std::size_t size(ElemState state, Level level) const {
    return buckets_.size(bucket_id(state, level));
  }
  std::size_t size(BucketKind kind, Level level) const;

  // Location of the slot, or nullopt if it is in no bucket.
  std::optional<std::pair<ElemState, Level>> where(ElemSlot slot) const;

  void collect(ElemState state, Level level, std::vector<std::uint32_t>& out) const {
    buckets_.collect(bucket_id(state, level), out);
  }
  // Most recently placed slot of the bucket, or LinkedBuckets::kNone.
  std::uint32_t front(ElemState state, Level level) const {
    return buckets_.front(bucket_id(state, level));
  }

  Level max_level() const { return max_level_; }

 private:
  std::uint32_t bucket_id(ElemState state, Level level) const {
    return static_cast<std::uint32_t>(state) * static_cast<std::uint32_t>(max_level_ + 1) +
           static_cast<std::uint32_t>(level);
  }

  Level max_level_ = 0;
  LinkedBuckets buckets_;
};

// The evolving instance: sets with costs, live and dead elements, incidences,
// the level index and the rebuild counters C_{<=j}.
template <class Num>
class SetSystem {
 public:
  explicit SetSystem(const SystemConfig& config);

  const SystemConfig& config() const { return config_; }
  const LevelGeometry<Num>& geometry() const { return geometry_; }
  Level max_level() const { return config_.max_level; }

  // Registers a set at level 0 with W* = 0. Throws kDuplicateId or
  // kCostOutOfRange (cost outside [1/C, 1]).
  SetId declare_set(std::string_view name, const Rational& cost);

  std::optional<SetId> find_set(std::string_view name) const;
  std::optional<ElemSlot> find_element(std::string_view name) const;

  std::size_t num_sets() const { return sets_.size(); }
  SetRecord<Num>& set(SetId id) { return sets_[id.value()]; }
  const SetRecord<Num>& set(SetId id) const { return sets_[id.value()]; }
  ElementRecord<Num>& element(ElemSlot slot) { return elements_[slot.value()]; }
  const ElementRecord<Num>& element(ElemSlot slot) const { return elements_[slot.value()]; }

  // Tight iff c_s/(1+eps) <= W*(s) <= c_s on the cached weight.
  SetClass classify_set(SetId id) const;

  // Recomputes max level over containing sets. Throws kNoIncidence.
  Level element_level(ElemSlot slot) const;

  // Sum of bucket sizes for levels <= j. Throws kLevelOutOfRange.
  std::int64_t prefix_count(BucketKind kind, Level j) const;

  // Creates the record, its incidences and its bucket entry. Sets' weights are
  // left to the caller.
  ElemSlot add_element(std::string_view name, std::span<const SetId> sets, ElemState state,
                       Level level, const Num& weight);
  // Unlinks incidences and bucket entry and frees the slot. Weights untouched.
  void purge_element(ElemSlot slot);
  // Moves the element to the bucket for (state, level) and updates the record.
  void place(ElemSlot slot, ElemState state, Level level);

  LevelIndex& levels() { return levels_; }
  const LevelIndex& levels() const { return levels_; }

  std::vector<std::int64_t>& counters() { return counters_; }
  const std::vector<std::int64_t>& counters() const { return counters_; }

  std::size_t live_count() const { return live_count_; }
  std::size_t dead_count() const { return dead_count_; }
  int max_frequency() const { return max_frequency_; }

  // Recomputes W*(s) from the member list.
  Num recompute_weight(SetId id) const;

  template <class F>
  void for_each_member(SetId id, F&& f) const {
    for (std::uint32_t n = sets_[id.value()].member_head; n != LinkedBuckets::kNone;
         n = nodes_[n].next_in_set) {
      f(nodes_[n].elem);
    }
  }

  Snapshot<Num> snapshot() const;

 private:
  SystemConfig config_;
  LevelGeometry<Num> geometry_;
  std::vector<SetRecord<Num>> sets_;
  std::unordered_map<std::string, SetId> set_names_;
  std::vector<ElementRecord<Num>> elements_;
  std::vector<std::uint32_t> free_slots_;
  std::unordered_map<std::string, ElemSlot> element_names_;
  std::vector<IncidenceNode> nodes_;
  std::vector<std::uint32_t> free_nodes_;
  LevelIndex levels_;
  std::vector<std::int64_t> counters_;
  std::uint64_t next_seq_ = 0;
  std::size_t live_count_ = 0;
  std::size_t dead_count_ = 0;
  int max_frequency_ = 0;
};

extern template class SetSystem<double>;
extern template class SetSystem<Rational>;

}  // namespace dynsc
