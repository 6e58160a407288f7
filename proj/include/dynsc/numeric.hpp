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

#include <cmath>
#include <vector>

#include "dynsc/rational.hpp"
#include "dynsc/types.hpp"

namespace dynsc {

// Comparison and conversion policy for the two numeric modes. Fast-float mode
// compares with relative slack kTolerance * scale (scale is normally c_s), so a
// weight that lands on a threshold up to rounding is classified the same way
// the exact mode classifies it.
template <class Num>
struct Arith;

template <>
struct Arith<double> {
  static constexpr bool kExact = false;
  static constexpr double kTolerance = 1e-9;

  static double from_rational(const Rational& r) { return r.get_d(); }
  static double to_double(double x) { return x; }

  static bool at_least(double a, double b, double scale) {
    return a >= b - kTolerance * scale;
  }
  static bool at_most(double a, double b, double scale) {
    return a <= b + kTolerance * scale;
  }
  static bool equal(double a, double b, double scale) {
    return std::abs(a - b) <= kTolerance * scale;
  }
};

template <>
struct Arith<Rational> {
  static constexpr bool kExact = true;

  static Rational from_rational(const Rational& r) { return r; }
  static double to_double(const Rational& x) { return x.get_d(); }

  static bool at_least(const Rational& a, const Rational& b, const Rational&) {
    return a >= b;
  }
  static bool at_most(const Rational& a, const Rational& b, const Rational&) {
    return a <= b;
  }
  static bool equal(const Rational& a, const Rational& b, const Rational&) {
    return a == b;
  }
};

// (1+eps)^{-i} for every level i in [0, L], plus the constants derived from
// eps. Tables are computed in exact arithmetic and converted once, so the
// float table carries a single rounding per entry.
template <class Num>
struct LevelGeometry {
  Rational epsilon;
  Level max_level = 0;
  Num eps;
  Num one_plus_eps;
  Num inv_one_plus_eps;
  double log_one_plus_eps = 0.0;
  std::vector<Num> neg_pow;

  static LevelGeometry make(const Rational& epsilon, Level max_level) {
    LevelGeometry g;
    g.epsilon = epsilon;
    g.max_level = max_level;
    const Rational base = 1 + epsilon;
    const Rational inv = 1 / base;
    g.eps = Arith<Num>::from_rational(epsilon);
    g.one_plus_eps = Arith<Num>::from_rational(base);
    g.inv_one_plus_eps = Arith<Num>::from_rational(inv);
    g.log_one_plus_eps = std::log1p(epsilon.get_d());
    g.neg_pow.reserve(static_cast<std::size_t>(max_level) + 1);
    Rational p = 1;
    for (Level i = 0; i <= max_level; ++i) {
      g.neg_pow.push_back(Arith<Num>::from_rational(p));
      p *= inv;
    }
    return g;
  }

  const Num& weight_at(Level level) const {
    return neg_pow[static_cast<std::size_t>(level)];
  }

  Num tight_threshold(const Num& cost) const { return cost * inv_one_plus_eps; }
};

// Tight iff c_s/(1+eps) <= W <= c_s under the mode's comparison rule.
template <class Num>
bool is_tight_weight(const Num& weight, const Num& cost, const Num& threshold) {
  return Arith<Num>::at_least(weight, threshold, cost) &&
         Arith<Num>::at_most(weight, cost, cost);
}

}  // namespace dynsc
