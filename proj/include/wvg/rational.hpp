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

#ifndef WVG_RATIONAL_HPP_
#define WVG_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wvg {

// Exact rational used for quotas, weights and normalized indices.
using Rational = mpq_class;

// Accepts "p", "p/q" and finite decimals such as "0.25". Throws
// std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

std::vector<std::string> format_rationals(const std::vector<Rational>& values);

}  // namespace wvg

#endif  // WVG_RATIONAL_HPP_
