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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "dynsc/config.hpp"
#include "dynsc/errors.hpp"
#include "dynsc/linked_buckets.hpp"
#include "dynsc/set_system.hpp"
#include "test_util.hpp"

using namespace dynsc;
using testutil::q;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_SUITE("core-model") {

TEST_CASE("level cap matches a logarithm away from integer boundaries") {
  CHECK(compute_level_cap(q(1, 4), 1, 4) == 8);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const long den = std::uniform_int_distribution<long>(3, 60)(rng);
    const long num = std::uniform_int_distribution<long>(1, (den - 1) / 2)(rng);
    const Rational eps = q(num, den);
    const Rational c = q(std::uniform_int_distribution<long>(100, 1000)(rng), 100);
    const long n = std::uniform_int_distribution<long>(1, 100000)(rng);
    const double t = std::log(Rational(c * n).get_d()) / std::log1p(eps.get_d());
    if (std::abs(t - std::round(t)) < 1e-7) continue;
    const int expect = static_cast<int>(std::max(0.0, std::ceil(t))) + 1;
    CHECK(compute_level_cap(eps, c, n) == expect);
  }
}

TEST_CASE("level cap at an exact power") {
  // 1.5^2 = 2.25: t = 2 for C*n = 2.25, so L = 3.
  CHECK(compute_level_cap(q(1, 2), q(225, 100), 1) == 3);
  CHECK(compute_level_cap(q(1, 2), 1, 1) == 1);
}

TEST_CASE("config validation") {
  CHECK(code_of([] { SystemConfig::make(q(1, 2), 1, 4); }) == ErrorCode::kInvalidConfig);
  CHECK(code_of([] { SystemConfig::make(0, 1, 4); }) == ErrorCode::kInvalidConfig);
  CHECK(code_of([] { SystemConfig::make(q(1, 4), q(1, 2), 4); }) == ErrorCode::kInvalidConfig);
  CHECK(code_of([] { SystemConfig::make(q(1, 4), 1, 0); }) == ErrorCode::kInvalidConfig);
  auto cfg = SystemConfig::make(q(1, 4), 1, 4);
  CHECK(cfg.max_level == 8);
  // Just inside the open interval.
  const Rational near_half = q(1, 2) - q(1, 1000000000);
  CHECK(SystemConfig::make(near_half, 1, 4).max_level >= 1);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(*parse_fraction("3/4") == q(3, 4));
  CHECK(*parse_fraction("2") == 2);
  CHECK_FALSE(parse_fraction("1/0"));
  CHECK_FALSE(parse_fraction("a/b"));
  CHECK(*parse_decimal("0.05") == q(1, 20));
  CHECK(*parse_decimal("12.500") == q(25, 2));
  CHECK_FALSE(parse_decimal("1e3"));
  CHECK_FALSE(parse_decimal("."));
  CHECK(to_decimal_string(q(3, 4)) == "0.75");
  CHECK(to_decimal_string(q(1, 3)) == "1/3");
  CHECK(to_decimal_string(q(5)) == "5");
  CHECK(to_fraction_string(q(49, 100)) == "49/100");
  CHECK(floor_times(q(1, 10), 39) == 3);
  CHECK(floor_times(q(1, 4), 4) == 1);
}

TEST_CASE("linked buckets") {
  LinkedBuckets b(3);
  b.push_front(0, 5);
  b.push_front(0, 2);
  b.push_front(1, 7);
  CHECK(b.size(0) == 2);
  CHECK(b.front(0) == 2);
  b.move(5, 2);
  CHECK(b.size(0) == 1);
  CHECK(b.bucket_of(5) == 2);
  b.erase(2);
  CHECK(b.empty(0));
  CHECK(b.bucket_of(2) == LinkedBuckets::kNone);
  std::vector<std::uint32_t> out;
  b.collect(1, out);
  CHECK(out == std::vector<std::uint32_t>{7});
}

TEST_CASE("declare_set") {
  SetSystem<Rational> sys(SystemConfig::make(q(1, 4), 1, 4));
  const SetId s1 = sys.declare_set("s1", 1);
  CHECK(sys.set(s1).level == 0);
  CHECK(sys.set(s1).weight == 0);
  CHECK(sys.classify_set(s1) == SetClass::kSlack);
  CHECK(code_of([&] { sys.declare_set("s1", 1); }) == ErrorCode::kDuplicateId);
  CHECK(code_of([&] { sys.declare_set("s2", q(3, 2)); }) == ErrorCode::kCostOutOfRange);

  SetSystem<Rational> ten(SystemConfig::make(q(1, 4), 10, 4));
  CHECK(code_of([&] { ten.declare_set("s1", q(5, 100)); }) == ErrorCode::kCostOutOfRange);
  SetSystem<double> two(SystemConfig::make(q(1, 4), 2, 4, NumericMode::kFastFloat));
  CHECK_NOTHROW(two.declare_set("s1", q(1, 2)));
}

TEST_CASE("element level is the max over containing sets") {
  const std::vector<Level> a{0, 3, 2}, b{0}, c{5, 5};
  CHECK(element_level_of(a) == 3);
  CHECK(element_level_of(b) == 0);
  CHECK(element_level_of(c) == 5);
  CHECK(code_of([] { element_level_of(std::span<const Level>{}); }) == ErrorCode::kNoIncidence);
}

TEST_CASE("classify by the closed tight interval") {
  const auto g = LevelGeometry<Rational>::make(q(1, 2), 3);
  CHECK(classify_weight<Rational>(q(2, 3), 1, g) == SetClass::kTight);
  CHECK(classify_weight<Rational>(0, 1, g) == SetClass::kSlack);
  CHECK(classify_weight<Rational>(q(6, 10), 1, g) == SetClass::kSlack);
  CHECK(classify_weight<Rational>(1, 1, g) == SetClass::kTight);
  CHECK(classify_weight<Rational>(q(101, 100), 1, g) == SetClass::kSlack);

  const auto gf = LevelGeometry<double>::make(q(1, 2), 3);
  CHECK(classify_weight<double>(2.0 / 3.0, 1.0, gf) == SetClass::kTight);
  CHECK(classify_weight<double>(2.0 / 3.0 - 1e-12, 1.0, gf) == SetClass::kTight);
  CHECK(classify_weight<double>(0.6, 1.0, gf) == SetClass::kSlack);
}

TEST_CASE("prefix counts per bucket kind") {
  SetSystem<Rational> sys(SystemConfig::make(q(1, 4), 1, 4));
  const SetId s = sys.declare_set("s", 1);
  const SetId sets[] = {s};
  for (BucketKind k : {BucketKind::kLive, BucketKind::kDead}) {
    for (Level j = 0; j <= sys.max_level(); ++j) CHECK(sys.prefix_count(k, j) == 0);
  }
  sys.add_element("a", sets, ElemState::kActive, 0, 1);
  sys.add_element("b", sets, ElemState::kPassive, 0, 0);
  sys.add_element("c", sets, ElemState::kActive, 1, 0);
  sys.add_element("d", sets, ElemState::kActive, 1, 0);
  sys.add_element("e", sets, ElemState::kPassive, 1, 0);
  sys.add_element("x", sets, ElemState::kDead, 0, 0);
  for (int i = 0; i < 4; ++i) {
    sys.add_element("y" + std::to_string(i), sets, ElemState::kDead, 2, 0);
  }
  CHECK(sys.prefix_count(BucketKind::kLive, 1) == 5);
  CHECK(sys.prefix_count(BucketKind::kActive, 1) == 3);
  CHECK(sys.prefix_count(BucketKind::kPassive, 0) == 1);
  CHECK(sys.prefix_count(BucketKind::kDead, 1) == 1);
  CHECK(sys.prefix_count(BucketKind::kDead, 2) == 5);
  CHECK(code_of([&] { sys.prefix_count(BucketKind::kLive, sys.max_level() + 1); }) ==
        ErrorCode::kLevelOutOfRange);
  CHECK(code_of([&] { sys.prefix_count(BucketKind::kLive, -1); }) ==
        ErrorCode::kLevelOutOfRange);
}

TEST_CASE("purge unlinks memberships and frees the name") {
  SetSystem<Rational> sys(SystemConfig::make(q(1, 4), 1, 4));
  const SetId s = sys.declare_set("s", 1);
  const SetId t = sys.declare_set("t", 1);
  const SetId both[] = {s, t};
  const ElemSlot a = sys.add_element("a", both, ElemState::kActive, 0, q(1, 3));
  sys.set(s).weight = q(1, 3);
  sys.set(t).weight = q(1, 3);
  CHECK(sys.recompute_weight(s) == q(1, 3));
  CHECK(sys.live_count() == 1);
  CHECK(sys.max_frequency() == 2);
  sys.purge_element(a);
  CHECK(sys.recompute_weight(s) == 0);
  CHECK(sys.live_count() == 0);
  CHECK_FALSE(sys.find_element("a"));
  int members = 0;
  sys.for_each_member(t, [&](ElemSlot) { ++members; });
  CHECK(members == 0);
}

TEST_CASE("snapshot is a deep copy") {
  SetSystem<Rational> sys(SystemConfig::make(q(1, 4), 1, 4));
  const SetId s = sys.declare_set("s", 1);
  const SetId sets[] = {s};
  sys.add_element("a", sets, ElemState::kPassive, 0, 1);
  sys.set(s).weight = 1;
  const auto snap = sys.snapshot();
  sys.set(s).weight = 0;
  CHECK(snap.sets.at(0).weight == 1);
  CHECK(snap.elements.size() == 1);
  CHECK(snap.elements[0].bucket_state == ElemState::kPassive);
  CHECK(snap.counters.size() == static_cast<std::size_t>(sys.max_level()) + 1);
}

}  // TEST_SUITE
