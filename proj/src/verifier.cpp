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

#include "dynsc/verifier.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dynsc {
namespace {

std::string show(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
std::string show(const Rational& x) { return to_decimal_string(x); }
std::string show(long x) { return std::to_string(x); }

Rational exact(double x) { return Rational(x); }
const Rational& exact(const Rational& x) { return x; }

}  // namespace

void VerifierReport::merge(const VerifierReport& other) {
  for (const auto& v : other.violations) add(v);
  if (other.ratio) ratio = other.ratio;
  if (other.certificate_gap) certificate_gap = other.certificate_gap;
}

std::string serialize(const VerifierReport& report) {
  std::ostringstream out;
  out << "report pass=" << (report.pass ? "true" : "false")
      << " violations=" << report.violations.size();
  if (report.ratio) out << " ratio=" << to_decimal_string(*report.ratio);
  if (report.certificate_gap) out << " certificate_gap=" << to_decimal_string(*report.certificate_gap);
  out << '\n';
  for (const auto& v : report.violations) {
    out << "violation " << v.invariant << ' ' << v.entity << " expected=" << v.expected
        << " actual=" << v.actual << '\n';
  }
  return out.str();
}

template <class Num>
VerifierReport check_invariants(const Snapshot<Num>& snap) {
  using A = Arith<Num>;
  VerifierReport report;
  const Level L = snap.max_level;
  const auto g = LevelGeometry<Num>::make(snap.epsilon, L);
  const std::size_t m = snap.sets.size();
  const Num one(1);
  const auto levels = static_cast<std::size_t>(L) + 1;

  std::vector<Num> weight(m, Num(0));
  std::vector<long> active(levels, 0), passive(levels, 0), dead(levels, 0);
  for (const auto& e : snap.elements) {
    if (e.sets.empty()) {
      report.add({"element-incidence", e.name, ">=1 set", "0"});
      continue;
    }
    if (e.level < 0 || e.level > L) {
      report.add({"element-level-range", e.name, "[0," + show(long{L}) + "]", show(long{e.level})});
      continue;
    }
    Level top = 0;
    for (std::uint32_t s : e.sets) {
      top = std::max(top, snap.sets[s].level);
      weight[s] += e.weight;
    }
    if (top != e.level) report.add({"element-level", e.name, show(long{top}), show(long{e.level})});
    if (e.bucket_state != e.state || e.bucket_level != e.level) {
      report.add({"bucket", e.name,
                  std::string(to_string(e.state)) + "@" + show(long{e.level}),
                  std::string(to_string(e.bucket_state)) + "@" + show(long{e.bucket_level})});
    }
    const Num& cap = g.weight_at(e.level);
    if (e.state == ElemState::kActive) {
      if (!A::equal(e.weight, cap, one)) {
        report.add({"element-weight", e.name, show(cap), show(e.weight)});
      }
    } else if (!A::at_least(e.weight, Num(0), one) || !A::at_most(e.weight, cap, one)) {
      report.add({"element-weight-bound", e.name, "[0," + show(cap) + "]", show(e.weight)});
    }
    const auto lv = static_cast<std::size_t>(e.level);
    switch (e.state) {
      case ElemState::kActive: ++active[lv]; break;
      case ElemState::kPassive: ++passive[lv]; break;
      case ElemState::kDead: ++dead[lv]; break;
    }
  }

  for (std::size_t i = 0; i < levels && i < snap.active_sizes.size(); ++i) {
    const std::string at = "level-" + std::to_string(i);
    if (static_cast<long>(snap.active_sizes[i]) != active[i]) {
      report.add({"bucket-size", "A@" + at, show(active[i]), show(long(snap.active_sizes[i]))});
    }
    if (static_cast<long>(snap.passive_sizes[i]) != passive[i]) {
      report.add({"bucket-size", "P@" + at, show(passive[i]), show(long(snap.passive_sizes[i]))});
    }
    if (static_cast<long>(snap.dead_sizes[i]) != dead[i]) {
      report.add({"bucket-size", "D@" + at, show(dead[i]), show(long(snap.dead_sizes[i]))});
    }
  }

  for (std::size_t s = 0; s < m; ++s) {
    const auto& rec = snap.sets[s];
    if (rec.level < 0 || rec.level > L) {
      report.add({"set-level-range", rec.name, "[0," + show(long{L}) + "]", show(long{rec.level})});
    }
    if (!A::equal(weight[s], rec.weight, rec.cost)) {
      report.add({"set-weight", rec.name, show(weight[s]), show(rec.weight)});
    }
    if (!A::at_least(weight[s], Num(0), rec.cost) || !A::at_most(weight[s], rec.cost, rec.cost)) {
      report.add({"set-weight-bound", rec.name, "[0," + show(rec.cost) + "]", show(weight[s])});
    }
    const bool tight = is_tight_weight(weight[s], rec.cost, g.tight_threshold(rec.cost));
    if (tight != rec.tight) {
      report.add({"tight-flag", rec.name, tight ? "tight" : "slack", rec.tight ? "tight" : "slack"});
    }
    if (!tight && rec.level != 0) {
      report.add({"slack-level", rec.name, "0", show(long{rec.level})});
    }
  }

  for (const auto& e : snap.elements) {
    if (std::none_of(e.sets.begin(), e.sets.end(),
                     [&](std::uint32_t s) { return snap.sets[s].tight; })) {
      report.add({"coverage", e.name, "a tight containing set", "none"});
    }
  }

  long a_prefix = 0, d_prefix = 0;
  for (std::size_t j = 0; j < levels; ++j) {
    a_prefix += active[j];
    d_prefix += dead[j];
    const Rational bound = 2 * snap.epsilon * a_prefix + 1;
    if (Rational(d_prefix) > bound) {
      report.add({"dirty-bound", "level-" + std::to_string(j), "<=" + to_decimal_string(bound),
                  show(d_prefix)});
    }
  }

  for (std::size_t j = 0; j < snap.counters.size(); ++j) {
    if (snap.counters[j] < 0) {
      report.add({"counter", "level-" + std::to_string(j), ">=0", show(long(snap.counters[j]))});
    }
  }
  return report;
}

template <class Num>
VerifierReport certify_ratio(const Snapshot<Num>& snap, const std::optional<OptResult>& opt) {
  using A = Arith<Num>;
  VerifierReport report;
  const Num one(1);
  std::vector<Num> live_weight(snap.sets.size(), Num(0));
  Num packing(0), active_sum(0), dead_sum(0);
  for (const auto& e : snap.elements) {
    if (e.state == ElemState::kDead) {
      dead_sum += e.weight;
      continue;
    }
    if (e.state == ElemState::kActive) active_sum += e.weight;
    packing += e.weight;
    for (std::uint32_t s : e.sets) live_weight[s] += e.weight;
  }

  Rational cover_cost = 0;
  for (std::size_t s = 0; s < snap.sets.size(); ++s) {
    const auto& rec = snap.sets[s];
    if (rec.tight) cover_cost += rec.exact_cost;
    if (!A::at_most(live_weight[s], rec.cost, rec.cost)) {
      report.add({"packing", rec.name, "<=" + show(rec.cost), show(live_weight[s])});
    }
  }

  const Rational& eps = snap.epsilon;
  const long f = std::max(1, snap.max_frequency);
  const Rational lower = cover_cost / ((1 + eps) * (1 + 2 * eps) * f);
  const Rational gap = exact(packing) - lower;
  report.certificate_gap = gap;
  if (!A::at_least(packing, A::from_rational(lower), one)) {
    report.add({"certificate", "packing", ">=" + to_decimal_string(lower), show(packing)});
  }

  const Num dead_cap = A::from_rational(2 * eps) * active_sum + one;
  if (!A::at_most(dead_sum, dead_cap, one)) {
    report.add({"dead-weight", "D", "<=" + show(dead_cap), show(dead_sum)});
  }

  if (opt) {
    const Rational& best = opt->cost;
    if (!A::at_most(packing, A::from_rational(best), one)) {
      report.add({"weak-duality", "packing", "<=" + to_decimal_string(best), show(packing)});
    }
    if (best > cover_cost) {
      report.add({"opt-upper", "cover", ">=" + to_decimal_string(best), to_decimal_string(cover_cost)});
    }
    const Rational cap = (1 + 5 * eps) * f * best;
    if (cover_cost > cap) {
      report.add({"ratio", "cover", "<=" + to_decimal_string(cap), to_decimal_string(cover_cost)});
    }
    if (best > 0) {
      Rational r = cover_cost / best;
      r.canonicalize();
      report.ratio = r;
    }
  }
  return report;
}

template <class Num>
FixLevelResult<Num> reference_fix_level(const FixLevelProblem<Num>& problem,
                                        const LevelGeometry<Num>& g) {
  using A = Arith<Num>;
  const Level k = problem.k;
  const std::size_t m = problem.num_sets();
  const std::size_t n = problem.num_elements();
  FixLevelResult<Num> out;
  out.set_level.assign(m, k);
  out.set_weight = problem.frozen_weight;
  out.elem_level.assign(n, k);
  out.elem_weight.assign(n, g.weight_at(k));
  for (std::size_t e = 0; e < n; ++e) {
    for (std::uint32_t s : problem.element_sets[e]) out.set_weight[s] += g.weight_at(k);
  }

  std::vector<char> slack(m);
  for (Level t = k; t >= 1; --t) {
    for (std::size_t s = 0; s < m; ++s) {
      slack[s] = !A::at_least(out.set_weight[s], g.tight_threshold(problem.cost[s]), problem.cost[s]);
    }
    std::vector<std::size_t> exclusive;
    for (std::size_t e = 0; e < n; ++e) {
      const auto& sets = problem.element_sets[e];
      if (std::all_of(sets.begin(), sets.end(), [&](std::uint32_t s) { return slack[s] != 0; })) {
        exclusive.push_back(e);
      }
    }
    for (std::size_t s = 0; s < m; ++s) {
      if (slack[s]) --out.set_level[s];
    }
    for (std::size_t e : exclusive) {
      const Num grown = out.elem_weight[e] * g.one_plus_eps;
      for (std::uint32_t s : problem.element_sets[e]) out.set_weight[s] += grown - out.elem_weight[e];
      out.elem_weight[e] = grown;
      --out.elem_level[e];
    }
  }
  return out;
}

template VerifierReport check_invariants<double>(const Snapshot<double>&);
template VerifierReport check_invariants<Rational>(const Snapshot<Rational>&);
template VerifierReport certify_ratio<double>(const Snapshot<double>&,
                                              const std::optional<OptResult>&);
template VerifierReport certify_ratio<Rational>(const Snapshot<Rational>&,
                                                const std::optional<OptResult>&);
template FixLevelResult<double> reference_fix_level<double>(const FixLevelProblem<double>&,
                                                            const LevelGeometry<double>&);
template FixLevelResult<Rational> reference_fix_level<Rational>(const FixLevelProblem<Rational>&,
                                                                const LevelGeometry<Rational>&);

}  // namespace dynsc
