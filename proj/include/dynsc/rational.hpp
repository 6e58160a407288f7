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
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dynsc {

using Rational = mpq_class;

// Parses "p/q" or a bare integer. Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_fraction(std::string_view text);

// Parses a plain decimal such as "1", "0.05" or "12.500" into an exact rational.
// Exponent notation and signs other than a leading '-' are rejected.
std::optional<Rational> parse_decimal(std::string_view text);

// Shortest terminating decimal for values whose reduced denominator is 2^a 5^b;
// anything else is rendered as "p/q".
std::string to_decimal_string(const Rational& value);

// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& value);

// floor(value * n) for non-negative n.
std::int64_t floor_times(const Rational& value, std::int64_t n);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace dynsc
