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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace dynsc {

using Level = int;

// Dense index wrapper so set handles and element slots cannot be mixed up.
template <class Tag>
class StrongIndex {
 public:
  static constexpr std::uint32_t kInvalid = std::numeric_limits<std::uint32_t>::max();

  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(std::uint32_t v) : value_(v) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool valid() const { return value_ != kInvalid; }

  friend constexpr auto operator<=>(StrongIndex, StrongIndex) = default;

 private:
  std::uint32_t value_ = kInvalid;
};

struct SetTag;
struct ElemTag;

// Sets are numbered in declaration order; that order is the tie-break order
// wherever a deterministic choice between sets is needed.
using SetId = StrongIndex<SetTag>;
// Slot of an element record. Slots are recycled after a rebuild purges a dead
// element; ElementRecord::seq is the stable insertion order.
using ElemSlot = StrongIndex<ElemTag>;

enum class ElemState : std::uint8_t { kActive, kPassive, kDead };

enum class SetClass : std::uint8_t { kSlack, kTight };

enum class NumericMode : std::uint8_t { kFastFloat, kExactRational };

const char* to_string(ElemState state);
const char* to_string(NumericMode mode);

}  // namespace dynsc

template <class Tag>
struct std::hash<dynsc::StrongIndex<Tag>> {
  std::size_t operator()(dynsc::StrongIndex<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};
