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
#include <string>
#include <string_view>
#include <vector>

#include "dynsc/rational.hpp"

namespace dynsc {

// Text format, one record per line:
//   setcover v1 eps=<p>/<q> C=<decimal> nmax=<int>
//   set <id> cost=<decimal>
//   + <elem> <set> [<set>...]
//   - <elem>
// Blank lines and lines starting with '#' are ignored.

struct StreamHeader {
  Rational epsilon;
  Rational cost_ratio;
  std::int64_t n_max = 0;

  bool operator==(const StreamHeader&) const = default;
};

struct StreamEvent {
  enum class Kind { kDeclareSet, kInsert, kDelete };

  Kind kind = Kind::kInsert;
  std::string id;
  Rational cost = 0;              // kDeclareSet only
  std::vector<std::string> sets;  // kInsert only

  bool operator==(const StreamEvent&) const = default;
};

const char* to_string(StreamEvent::Kind kind);

struct Stream {
  StreamHeader header;
  std::vector<StreamEvent> events;

  bool operator==(const Stream&) const = default;
};

// Throws ParseError with the 1-based line number on malformed input, a
// missing header, eps outside (0, 1/2) or not written as p/q, or a set
// declared twice.
Stream parse_stream(std::string_view text);

std::string render_event(const StreamEvent& event);
std::string render(const Stream& stream);

}  // namespace dynsc
