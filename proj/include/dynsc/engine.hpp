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
#include <vector>

#include "dynsc/config.hpp"
#include "dynsc/rebuild.hpp"
#include "dynsc/set_system.hpp"
#include "dynsc/snapshot.hpp"

namespace dynsc {

// Change to the maintained cover caused by one update.
struct CoverDiff {
  std::vector<SetId> added;    // ascending
  std::vector<SetId> removed;  // ascending
  std::optional<Level> rebuild_level;
  std::uint64_t touched = 0;

  bool empty() const { return added.empty() && removed.empty(); }
};

struct EngineStats {
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t total_touched = 0;
  std::vector<std::uint64_t> rebuilds_per_level;  // indexed by k
  std::uint64_t target_increases = 0;
  std::uint64_t passive_demotions = 0;

  std::uint64_t updates() const { return inserts + deletes; }
};

// Fully dynamic set cover under element insertions and deletions. The cover
// is the collection of tight sets. Single writer; use snapshot() to hand the
// state to another thread.
template <class Num>
class DynamicEngine {
 public:
  explicit DynamicEngine(const SystemConfig& config);

  SetId declare_set(std::string_view name, const Rational& cost);
  std::optional<SetId> find_set(std::string_view name) const { return sys_.find_set(name); }
  const std::string& set_name(SetId id) const { return sys_.set(id).name; }

  // Throws Error for a live or still-recorded dead id (kDuplicateId /
  // kDeadElement), an unknown set, an empty or repeated set list, or when the
  // live count would exceed n_max.
  CoverDiff insert(std::string_view elem, std::span<const SetId> sets);
  CoverDiff insert(std::string_view elem, std::span<const std::string> set_names);

  // Throws kUnknownElement or kDeadElement.
  CoverDiff erase(std::string_view elem);

  std::vector<SetId> cover() const;
  const Rational& cover_cost() const { return cover_cost_; }
  std::size_t cover_size() const { return cover_size_; }

  std::size_t live_count() const { return sys_.live_count(); }
  // Name of a live element at the lowest occupied level, or nullopt if none.
  std::optional<std::string> lowest_live_element() const;

  const EngineStats& stats() const { return stats_; }
  int max_frequency() const { return sys_.max_frequency(); }
  const SystemConfig& config() const { return sys_.config(); }
  Level max_level() const { return sys_.max_level(); }

  Snapshot<Num> snapshot() const { return sys_.snapshot(); }
  const SetSystem<Num>& system() const { return sys_; }

  void set_fix_level_observer(typename Rebuilder<Num>::Observer observer) {
    rebuilder_.set_observer(std::move(observer));
  }

  // Direct state access for tests that need to stage a configuration.
  SetSystem<Num>& mutable_system_for_testing() { return sys_; }

 private:
  void record_flag(SetId id, CoverDiff& diff);

  SetSystem<Num> sys_;
  Rebuilder<Num> rebuilder_;
  EngineStats stats_;
  Rational cover_cost_ = 0;
  std::size_t cover_size_ = 0;
};

extern template class DynamicEngine<double>;
extern template class DynamicEngine<Rational>;

}  // namespace dynsc
