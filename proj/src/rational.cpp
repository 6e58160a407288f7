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

#include "dynsc/rational.hpp"

#include <algorithm>
#include <cctype>

namespace dynsc {
namespace {

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::optional<mpz_class> parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (!all_digits(text)) return std::nullopt;
  mpz_class value(std::string(text), 10);
  if (negative) value = -value;
  return value;
}

}  // namespace

std::optional<Rational> parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto whole = parse_integer(text);
    if (!whole) return std::nullopt;
    return Rational(*whole);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  Rational value(*num, *den);
  value.canonicalize();
  return value;
}

std::optional<Rational> parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(int_part)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac_part)) return std::nullopt;

  mpz_class num(std::string(int_part) + std::string(frac_part), 10);
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  Rational value(negative ? mpz_class(-num) : num, den);
  value.canonicalize();
  return value;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_fraction_string(value);

  const int digits = std::max(twos, fives);
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = value.get_num() * scale / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) {
      body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  return negative ? "-" + body : body;
}

std::int64_t floor_times(const Rational& value, std::int64_t n) {
  mpz_class product = value.get_num() * n;
  mpz_class quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), product.get_mpz_t(), value.get_den().get_mpz_t());
  return quotient.get_si();
}

}  // namespace dynsc
