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

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dynsc {

// A family of doubly linked lists over a dense item universe. Each item sits in
// at most one bucket; insert, erase and move are O(1). Links live in parallel
// arrays indexed by item, so the lists allocate nothing per node.
class LinkedBuckets {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  LinkedBuckets() = default;
  explicit LinkedBuckets(std::size_t num_buckets)
      : head_(num_buckets, kNone), size_(num_buckets, 0) {}

  std::size_t num_buckets() const { return head_.size(); }

  void reset(std::size_t num_buckets) {
    head_.assign(num_buckets, kNone);
    size_.assign(num_buckets, 0);
    links_.clear();
  }

  void push_front(std::uint32_t bucket, std::uint32_t item) {
    if (item >= links_.size()) links_.resize(static_cast<std::size_t>(item) + 1);
    Link& l = links_[item];
    assert(l.bucket == kNone);
    l.bucket = bucket;
    l.prev = kNone;
    l.next = head_[bucket];
    if (l.next != kNone) links_[l.next].prev = item;
    head_[bucket] = item;
    ++size_[bucket];
  }

  void erase(std::uint32_t item) {
    Link& l = links_[item];
    assert(l.bucket != kNone);
    if (l.prev != kNone) {
      links_[l.prev].next = l.next;
    } else {
      head_[l.bucket] = l.next;
    }
    if (l.next != kNone) links_[l.next].prev = l.prev;
    --size_[l.bucket];
    l = Link{};
  }

  void move(std::uint32_t item, std::uint32_t bucket) {
    if (bucket_of(item) == bucket) return;
    if (bucket_of(item) != kNone) erase(item);
    push_front(bucket, item);
  }

  std::uint32_t bucket_of(std::uint32_t item) const {
    return item < links_.size() ? links_[item].bucket : kNone;
  }
  std::size_t size(std::uint32_t bucket) const { return size_[bucket]; }
  bool empty(std::uint32_t bucket) const { return size_[bucket] == 0; }
  std::uint32_t front(std::uint32_t bucket) const { return head_[bucket]; }
  std::uint32_t next(std::uint32_t item) const { return links_[item].next; }

  // Appends every item of `bucket` to `out`.
  void collect(std::uint32_t bucket, std::vector<std::uint32_t>& out) const {
    for (std::uint32_t it = head_[bucket]; it != kNone; it = links_[it].next) {
      out.push_back(it);
    }
  }

 private:
  struct Link {
    std::uint32_t prev = kNone;
    std::uint32_t next = kNone;
    std::uint32_t bucket = kNone;
  };

  std::vector<std::uint32_t> head_;
  std::vector<std::size_t> size_;
  std::vector<Link> links_;
};

}  // namespace dynsc
