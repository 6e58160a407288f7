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

#include "dynsc/stream.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "dynsc/errors.hpp"

namespace dynsc {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::string_view> value_of(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return std::nullopt;
  }
  return token.substr(key.size() + 1);
}

// Costs are decimals; an exact fraction is accepted as well.
std::optional<Rational> parse_number(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_fraction(text);
  return parse_decimal(text);
}

StreamHeader parse_header(const std::vector<std::string_view>& tok, std::size_t line) {
  if (tok.size() != 5 || tok[0] != "setcover") {
    throw ParseError(line, "expected header 'setcover v1 eps=<p>/<q> C=<decimal> nmax=<int>'");
  }
  if (tok[1] != "v1") throw ParseError(line, "unsupported format version '" + std::string(tok[1]) + "'");
  StreamHeader h;
  auto eps = value_of(tok[2], "eps");
  if (!eps) throw ParseError(line, "expected eps=<p>/<q>");
  if (eps->find('/') == std::string_view::npos) {
    throw ParseError(line, "eps must be an exact fraction p/q");
  }
  auto e = parse_fraction(*eps);
  if (!e) throw ParseError(line, "eps '" + std::string(*eps) + "' is not a rational p/q");
  if (*e <= 0 || *e >= Rational(1, 2)) {
    throw ParseError(line, "eps must satisfy 0 < eps < 1/2, got " + to_fraction_string(*e));
  }
  h.epsilon = *e;
  auto c = value_of(tok[3], "C");
  if (!c) throw ParseError(line, "expected C=<decimal>");
  auto cv = parse_number(*c);
  if (!cv || *cv < 1) throw ParseError(line, "C must be a decimal >= 1");
  h.cost_ratio = *cv;
  auto n = value_of(tok[4], "nmax");
  if (!n) throw ParseError(line, "expected nmax=<int>");
  std::int64_t nv = 0;
  auto [ptr, ec] = std::from_chars(n->data(), n->data() + n->size(), nv);
  if (ec != std::errc() || ptr != n->data() + n->size() || nv < 1) {
    throw ParseError(line, "nmax must be a positive integer");
  }
  h.n_max = nv;
  return h;
}

}  // namespace

const char* to_string(StreamEvent::Kind kind) {
  switch (kind) {
    case StreamEvent::Kind::kDeclareSet: return "set";
    case StreamEvent::Kind::kInsert: return "insert";
    case StreamEvent::Kind::kDelete: return "delete";
  }
  return "?";
}

Stream parse_stream(std::string_view text) {
  Stream out;
  bool have_header = false;
  std::unordered_set<std::string> declared;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      out.header = parse_header(tok, line_no);
      have_header = true;
      continue;
    }
    StreamEvent ev;
    if (tok[0] == "set") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'set <id> cost=<decimal>'");
      auto cost = value_of(tok[2], "cost");
      if (!cost) throw ParseError(line_no, "expected cost=<decimal>");
      auto value = parse_number(*cost);
      if (!value) throw ParseError(line_no, "malformed cost '" + std::string(*cost) + "'");
      ev.kind = StreamEvent::Kind::kDeclareSet;
      ev.id = std::string(tok[1]);
      ev.cost = *value;
      if (!declared.insert(ev.id).second) {
        throw ParseError(line_no, "set '" + ev.id + "' declared twice");
      }
    } else if (tok[0] == "+") {
      if (tok.size() < 3) throw ParseError(line_no, "expected '+ <elem> <set> [<set>...]'");
      ev.kind = StreamEvent::Kind::kInsert;
      ev.id = std::string(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) ev.sets.emplace_back(tok[i]);
    } else if (tok[0] == "-") {
      if (tok.size() != 2) throw ParseError(line_no, "expected '- <elem>'");
      ev.kind = StreamEvent::Kind::kDelete;
      ev.id = std::string(tok[1]);
    } else {
      throw ParseError(line_no, "unrecognized record '" + std::string(tok[0]) + "'");
    }
    out.events.push_back(std::move(ev));
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header line");
  return out;
}

std::string render_event(const StreamEvent& ev) {
  switch (ev.kind) {
    case StreamEvent::Kind::kDeclareSet:
      return "set " + ev.id + " cost=" + to_decimal_string(ev.cost);
    case StreamEvent::Kind::kInsert: {
      std::string s = "+ " + ev.id;
      for (const auto& set : ev.sets) s += " " + set;
      return s;
    }
    case StreamEvent::Kind::kDelete:
      return "- " + ev.id;
  }
  return {};
}

std::string render(const Stream& stream) {
  std::ostringstream out;
  out << "setcover v1 eps=" << to_fraction_string(stream.header.epsilon)
      << " C=" << to_decimal_string(stream.header.cost_ratio) << " nmax=" << stream.header.n_max
      << '\n';
  for (const auto& ev : stream.events) out << render_event(ev) << '\n';
  return out.str();
}

}  // namespace dynsc
