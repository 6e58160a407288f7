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

#include "dynsc/workload.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "dynsc/config.hpp"
#include "dynsc/engine.hpp"
#include "dynsc/errors.hpp"

namespace dynsc {
namespace {

class Generator {
 public:
  explicit Generator(const WorkloadParams& p) : p_(p), rng_(p.seed) {
    stream_.header = {p.epsilon, p.cost_ratio, p.n};
    // Smallest two-digit cost that is still >= 1/C.
    mpz_class lo_z;
    const Rational lo_q = Rational(100) / p.cost_ratio;
    mpz_cdiv_q(lo_z.get_mpz_t(), lo_q.get_num_mpz_t(), lo_q.get_den_mpz_t());
    const long lo = std::clamp<long>(lo_z.get_si(), 1, 100);
    std::uniform_int_distribution<long> cents(lo, 100);
    for (std::int64_t s = 0; s < p.m; ++s) {
      StreamEvent ev;
      ev.kind = StreamEvent::Kind::kDeclareSet;
      ev.id = "s" + std::to_string(s);
      ev.cost = Rational(cents(rng_), 100);
      ev.cost.canonicalize();
      stream_.events.push_back(std::move(ev));
    }
  }

  const std::string& insert() {
    StreamEvent ev;
    ev.kind = StreamEvent::Kind::kInsert;
    ev.id = "e" + std::to_string(next_id_++);
    std::uniform_int_distribution<int> count(1, p_.f);
    std::uniform_int_distribution<std::int64_t> pick(0, p_.m - 1);
    const int k = count(rng_);
    std::vector<std::int64_t> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      const std::int64_t s = pick(rng_);
      if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) chosen.push_back(s);
    }
    for (std::int64_t s : chosen) ev.sets.push_back("s" + std::to_string(s));
    position_[ev.id] = live_.size();
    live_.push_back(ev.id);
    stream_.events.push_back(std::move(ev));
    return stream_.events.back().id;
  }

  void erase_random() {
    std::uniform_int_distribution<std::size_t> pick(0, live_.size() - 1);
    const std::size_t i = pick(rng_);
    erase_at(i);
  }

  void erase_named(const std::string& id) { erase_at(position_.at(id)); }

  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t live() const { return live_.size(); }
  const StreamEvent& last() const { return stream_.events.back(); }
  const std::vector<StreamEvent>& events() const { return stream_.events; }
  Stream take() { return std::move(stream_); }

 private:
  void erase_at(std::size_t i) {
    StreamEvent ev;
    ev.kind = StreamEvent::Kind::kDelete;
    ev.id = live_[i];
    position_.erase(ev.id);
    if (i + 1 != live_.size()) {
      live_[i] = std::move(live_.back());
      position_[live_[i]] = i;
    }
    live_.pop_back();
    stream_.events.push_back(std::move(ev));
  }

  const WorkloadParams& p_;
  std::mt19937_64 rng_;
  Stream stream_;
  std::vector<std::string> live_;
  std::unordered_map<std::string, std::size_t> position_;
  std::int64_t next_id_ = 0;
};

}  // namespace

Profile parse_profile(const std::string& name) {
  if (name == "random-churn") return Profile::kRandomChurn;
  if (name == "insert-heavy") return Profile::kInsertHeavy;
  if (name == "delete-cascade") return Profile::kDeleteCascade;
  if (name == "rebuild-attack") return Profile::kRebuildAttack;
  throw Error(ErrorCode::kInvalidArgument, "unknown profile '" + name + "'");
}

const char* to_string(Profile profile) {
  switch (profile) {
    case Profile::kRandomChurn: return "random-churn";
    case Profile::kInsertHeavy: return "insert-heavy";
    case Profile::kDeleteCascade: return "delete-cascade";
    case Profile::kRebuildAttack: return "rebuild-attack";
  }
  return "?";
}

std::vector<std::string> profile_names() {
  return {"random-churn", "insert-heavy", "delete-cascade", "rebuild-attack"};
}

Stream gen(const WorkloadParams& p) {
  if (p.n < 1 || p.m < 1 || p.f < 1 || p.f > p.m) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1, m >= 1 and 1 <= f <= m");
  }
  Generator g(p);
  switch (p.profile) {
    case Profile::kRandomChurn: {
      const std::int64_t ops = p.ops > 0 ? p.ops : 4 * p.n;
      std::int64_t done = 0;
      for (; done < ops && static_cast<std::int64_t>(g.live()) < (p.n + 1) / 2; ++done) g.insert();
      for (; done < ops; ++done) {
        const auto live = static_cast<std::int64_t>(g.live());
        const bool add = live == 0 || (live < p.n && g.coin(0.5));
        if (add) {
          g.insert();
        } else {
          g.erase_random();
        }
      }
      break;
    }
    case Profile::kInsertHeavy: {
      const std::int64_t ops = p.ops > 0 ? p.ops : p.n;
      const std::int64_t delete_budget = ops / 10;
      std::int64_t deletes = 0;
      for (std::int64_t done = 0; done < ops; ++done) {
        const auto live = static_cast<std::int64_t>(g.live());
        const bool can_delete = live > 0 && deletes < delete_budget;
        if (live == p.n && !can_delete) break;
        if (live == p.n || (can_delete && g.coin(0.05))) {
          g.erase_random();
          ++deletes;
        } else {
          g.insert();
        }
      }
      break;
    }
    case Profile::kDeleteCascade: {
      for (std::int64_t i = 0; i < p.n; ++i) g.insert();
      while (g.live() > 0) g.erase_random();
      break;
    }
    case Profile::kRebuildAttack: {
      // A fast engine follows the stream so that every delete can target the
      // live element at the lowest level.
      const auto config = SystemConfig::make(p.epsilon, p.cost_ratio, p.n, NumericMode::kFastFloat);
      DynamicEngine<double> engine(config);
      for (const auto& ev : g.events()) engine.declare_set(ev.id, ev.cost);
      for (std::int64_t i = 0; i < p.n; ++i) {
        const std::string id = g.insert();
        engine.insert(id, g.last().sets);
      }
      const std::int64_t rounds = p.ops > 0 ? p.ops / 2 : 2 * p.n;
      for (std::int64_t r = 0; r < rounds; ++r) {
        const auto victim = engine.lowest_live_element();
        if (!victim) break;
        g.erase_named(*victim);
        engine.erase(*victim);
        const std::string id = g.insert();
        engine.insert(id, g.last().sets);
      }
      break;
    }
  }
  return g.take();
}

}  // namespace dynsc
