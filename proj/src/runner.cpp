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

#include "dynsc/runner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <future>
#include <ostream>

#include "dynsc/engine.hpp"
#include "dynsc/errors.hpp"
#include "json.hpp"

namespace dynsc {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxPendingChecks = 4;

template <class Num>
VerifierReport verify_snapshot(const Snapshot<Num>& snap, bool certify) {
  VerifierReport report = check_invariants(snap);
  if (certify) report.merge(certify_ratio(snap));
  return report;
}

template <class Num>
class Replay {
 public:
  Replay(const Stream& stream, const RunOptions& options)
      : stream_(stream), options_(options), engine_(make_config(stream, options)) {}

  RunSummary run(std::ostream* out) {
    std::uint64_t updates = 0;
    for (std::size_t i = 0; i < stream_.events.size(); ++i) {
      const auto op = static_cast<std::int64_t>(i) + 1;
      const StreamEvent& ev = stream_.events[i];
      CoverDiff diff;
      try {
        diff = apply(ev);
      } catch (const Error& e) {
        throw RunError(op, e.what());
      }
      if (out) write_record(*out, op, ev, diff);
      if (ev.kind != StreamEvent::Kind::kDeclareSet) {
        ++updates;
        if (options_.verify_every > 0 &&
            updates % static_cast<std::uint64_t>(options_.verify_every) == 0) {
          schedule(op);
        }
      }
    }
    while (!pending_.empty()) collect_oldest();

    const auto& stats = engine_.stats();
    summary_.max_f_observed = engine_.max_frequency();
    summary_.total_touched = stats.total_touched;
    summary_.updates = stats.updates();
    summary_.amortized_touched =
        summary_.updates == 0 ? 0.0
                              : static_cast<double>(summary_.total_touched) / summary_.updates;
    summary_.rebuilds_per_level = stats.rebuilds_per_level;

    if (options_.brute_force_final) {
      const auto snap = engine_.snapshot();
      const OptResult opt = brute_force_opt(live_instance(snap));
      VerifierReport report = check_invariants(snap);
      report.merge(certify_ratio(snap, opt));
      if (!report.pass && !summary_.first_failure) {
        summary_.first_failure = static_cast<std::int64_t>(stream_.events.size());
      }
      summary_.report.merge(report);
    }

    if (out) {
      Json s;
      s["kind"] = "summary";
      s["max_f_observed"] = summary_.max_f_observed;
      s["total_touched"] = summary_.total_touched;
      s["updates"] = summary_.updates;
      s["amortized_touched"] = summary_.amortized_touched;
      *out << s.dump() << '\n';
    }
    return summary_;
  }

 private:
  static SystemConfig make_config(const Stream& stream, const RunOptions& options) {
    try {
      const auto& h = stream.header;
      return SystemConfig::make(h.epsilon, h.cost_ratio, h.n_max, options.mode);
    } catch (const Error& e) {
      throw RunError(0, e.what());
    }
  }

  CoverDiff apply(const StreamEvent& ev) {
    switch (ev.kind) {
      case StreamEvent::Kind::kDeclareSet:
        engine_.declare_set(ev.id, ev.cost);
        return {};
      case StreamEvent::Kind::kInsert:
        if (options_.implicit_sets) {
          for (const auto& name : ev.sets) {
            if (!engine_.find_set(name)) engine_.declare_set(name, Rational(1));
          }
        }
        return engine_.insert(ev.id, ev.sets);
      case StreamEvent::Kind::kDelete:
        return engine_.erase(ev.id);
    }
    return {};
  }

  void write_record(std::ostream& out, std::int64_t op, const StreamEvent& ev,
                    const CoverDiff& diff) const {
    Json rec;
    rec["op_index"] = op;
    rec["kind"] = to_string(ev.kind);
    if (ev.kind == StreamEvent::Kind::kDeclareSet) {
      rec["elem"] = nullptr;
    } else {
      rec["elem"] = ev.id;
    }
    rec["cover_size"] = engine_.cover_size();
    rec["cover_cost"] = to_double(engine_.cover_cost());
    Json added = Json::array(), removed = Json::array();
    for (SetId s : diff.added) added.push_back(engine_.set_name(s));
    for (SetId s : diff.removed) removed.push_back(engine_.set_name(s));
    rec["added"] = std::move(added);
    rec["removed"] = std::move(removed);
    if (diff.rebuild_level) {
      rec["rebuild_level"] = *diff.rebuild_level;
    } else {
      rec["rebuild_level"] = nullptr;
    }
    rec["touched"] = diff.touched;
    out << rec.dump() << '\n';
  }

  void schedule(std::int64_t op) {
    ++summary_.verified_snapshots;
    auto snap = engine_.snapshot();
    const bool certify = options_.certify;
    if (!options_.async_verify) {
      absorb(op, verify_snapshot(snap, certify));
      return;
    }
    pending_.emplace_back(op, std::async(std::launch::async, [snap = std::move(snap), certify] {
                            return verify_snapshot(snap, certify);
                          }));
    if (pending_.size() > kMaxPendingChecks) collect_oldest();
  }

  void collect_oldest() {
    auto [op, future] = std::move(pending_.front());
    pending_.pop_front();
    absorb(op, future.get());
  }

  void absorb(std::int64_t op, const VerifierReport& report) {
    if (!report.pass && !summary_.first_failure) summary_.first_failure = op;
    summary_.report.merge(report);
  }

  const Stream& stream_;
  const RunOptions& options_;
  DynamicEngine<Num> engine_;
  RunSummary summary_;
  std::deque<std::pair<std::int64_t, std::future<VerifierReport>>> pending_;
};

}  // namespace

RunSummary run(const Stream& stream, const RunOptions& options, std::ostream* jsonl) {
  if (options.mode == NumericMode::kExactRational) {
    return Replay<Rational>(stream, options).run(jsonl);
  }
  return Replay<double>(stream, options).run(jsonl);
}

BenchResult bench(const Stream& stream, int repetitions, NumericMode mode, bool implicit_sets) {
  RunOptions options;
  options.mode = mode;
  options.implicit_sets = implicit_sets;
  BenchResult result;
  std::vector<double> seconds;
  RunSummary last;
  for (int r = 0; r < std::max(1, repetitions); ++r) {
    const auto start = std::chrono::steady_clock::now();
    last = run(stream, options, nullptr);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    seconds.push_back(took.count());
  }
  std::sort(seconds.begin(), seconds.end());
  const std::size_t mid = seconds.size() / 2;
  result.median_seconds =
      seconds.size() % 2 == 1 ? seconds[mid] : 0.5 * (seconds[mid - 1] + seconds[mid]);
  result.updates = last.updates;
  result.total_touched = last.total_touched;
  result.amortized_touched = last.amortized_touched;
  result.max_f_observed = last.max_f_observed;
  result.rebuilds_per_level = last.rebuilds_per_level;
  result.max_level = static_cast<Level>(last.rebuilds_per_level.size()) - 1;
  return result;
}

void write_bench_tsv(const BenchResult& r, const Stream& stream, std::ostream& out) {
  const double per_update_us =
      r.updates == 0 ? 0.0 : r.median_seconds * 1e6 / static_cast<double>(r.updates);
  out << "row\tupdates\ttotal_touched\tamortized_touched\tmedian_wall_s\twall_us_per_update"
         "\tmax_f\tL\tepsilon\tnmax\n";
  out << "summary\t" << r.updates << '\t' << r.total_touched << '\t' << r.amortized_touched
      << '\t' << r.median_seconds << '\t' << per_update_us << '\t' << r.max_f_observed << '\t'
      << r.max_level << '\t' << to_fraction_string(stream.header.epsilon) << '\t'
      << stream.header.n_max << '\n';
  out << "row\tlevel\trebuilds\n";
  for (std::size_t k = 0; k < r.rebuilds_per_level.size(); ++k) {
    out << "rebuild\t" << k << '\t' << r.rebuilds_per_level[k] << '\n';
  }
}

}  // namespace dynsc
