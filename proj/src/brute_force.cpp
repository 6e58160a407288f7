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

#include "dynsc/brute_force.hpp"

#include <algorithm>
#include <limits>

#include "dynsc/errors.hpp"

namespace dynsc {
namespace {

template <class Cost>
class CoverSearch {
 public:
  CoverSearch(const Instance& instance, std::vector<Cost> cost)
      : instance_(instance),
        cost_(std::move(cost)),
        members_(instance.num_sets()),
        candidates_(instance.num_elements()),
        cover_count_(instance.num_elements(), 0),
        excluded_(instance.num_sets(), 0) {
    for (std::uint32_t e = 0; e < instance.num_elements(); ++e) {
      for (std::uint32_t s : instance.element_sets[e]) members_[s].push_back(e);
      candidates_[e] = instance.element_sets[e];
      std::sort(candidates_[e].begin(), candidates_[e].end(), [&](std::uint32_t a, std::uint32_t b) {
        return cost_[a] < cost_[b] || (cost_[a] == cost_[b] && a < b);
      });
    }
  }

  void run() { search(Cost(0)); }

  const Cost& best() const { return best_; }
  std::vector<std::uint32_t> best_sets() const {
    auto out = best_sets_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void search(const Cost& spent) {
    if (found_ && !(spent < best_)) return;
    // Branch on the uncovered element with the fewest usable sets.
    std::size_t pick = kNone;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < cover_count_.size(); ++e) {
      if (cover_count_[e] != 0) continue;
      std::size_t usable = 0;
      for (std::uint32_t s : candidates_[e]) usable += excluded_[s] == 0;
      if (usable == 0) return;
      if (usable < fewest) {
        fewest = usable;
        pick = e;
      }
    }
    if (pick == kNone) {
      best_ = spent;
      best_sets_ = chosen_;
      found_ = true;
      return;
    }
    std::vector<std::uint32_t> tried;
    for (std::uint32_t s : candidates_[pick]) {
      if (excluded_[s] != 0) continue;
      const Cost next = spent + cost_[s];
      if (found_ && !(next < best_)) break;  // candidates ascend by cost
      chosen_.push_back(s);
      for (std::uint32_t e : members_[s]) ++cover_count_[e];
      search(next);
      for (std::uint32_t e : members_[s]) --cover_count_[e];
      chosen_.pop_back();
      ++excluded_[s];
      tried.push_back(s);
    }
    for (std::uint32_t s : tried) --excluded_[s];
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const Instance& instance_;
  std::vector<Cost> cost_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<int> cover_count_;
  std::vector<int> excluded_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> best_sets_;
  Cost best_{};
  bool found_ = false;
};

}  // namespace

OptResult brute_force_opt(const Instance& instance) {
  if (instance.num_sets() > kBruteForceMaxSets) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(instance.num_sets()) + " sets exceed the brute-force limit of " +
                    std::to_string(kBruteForceMaxSets));
  }
  for (std::size_t e = 0; e < instance.num_elements(); ++e) {
    if (instance.element_sets[e].empty()) {
      throw Error(ErrorCode::kUncoverable,
                  "element '" + instance.element_names[e] + "' is in no set");
    }
  }
  OptResult out;
  if (instance.num_elements() == 0) return out;

  // Integer costs over a common denominator when they fit, exact rationals
  // otherwise.
  mpz_class denom = 1;
  for (const auto& c : instance.costs) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::int64_t> scaled;
  mpz_class total = 0;
  bool fits = true;
  for (const auto& c : instance.costs) {
    mpz_class v = c.get_num() * (denom / c.get_den());
    total += v;
    if (!v.fits_slong_p()) fits = false;
    scaled.push_back(fits ? v.get_si() : 0);
  }
  fits = fits && total.fits_slong_p() && denom.fits_slong_p();

  if (fits) {
    CoverSearch<std::int64_t> search(instance, std::move(scaled));
    search.run();
    out.cost = Rational(mpz_class(search.best()), denom);
    out.cost.canonicalize();
    out.sets = search.best_sets();
  } else {
    CoverSearch<Rational> search(instance, instance.costs);
    search.run();
    out.cost = search.best();
    out.sets = search.best_sets();
  }
  return out;
}

template <class Num>
Instance live_instance(const Snapshot<Num>& snapshot) {
  Instance out;
  for (const auto& s : snapshot.sets) {
    out.set_names.push_back(s.name);
    out.costs.push_back(s.exact_cost);
  }
  for (const auto& e : snapshot.elements) {
    if (e.state == ElemState::kDead) continue;
    out.element_names.push_back(e.name);
    out.element_sets.push_back(e.sets);
  }
  return out;
}

template Instance live_instance<double>(const Snapshot<double>&);
template Instance live_instance<Rational>(const Snapshot<Rational>&);

}  // namespace dynsc
