// Copyright 2026 The wvg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wvg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wvg {

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto bad = [&] {
    return std::invalid_argument("not a rational number: '" + std::string(raw) +
                                 "'");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) throw bad();
    const mpz_class d = parse_integer(den);
    if (d == 0) throw bad();
    Rational out(parse_integer(num), d);
    out.canonicalize();
    return out;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) throw bad();
    if ((!whole.empty() && !is_integer_text(whole)) ||
        (!frac.empty() && !is_integer_text(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw bad();
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const mpz_class int_part = whole.empty() ? mpz_class(0) : parse_integer(whole);
    const mpz_class frac_part = frac.empty() ? mpz_class(0) : parse_integer(frac);
    Rational out(int_part * scale + frac_part, scale);
    out.canonicalize();
    return negative ? Rational(-out) : out;
  }
  if (!is_integer_text(text)) throw bad();
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_str();
}

std::vector<std::string> format_rationals(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

}  // namespace wvg
