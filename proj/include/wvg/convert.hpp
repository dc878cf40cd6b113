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

#ifndef WVG_CONVERT_HPP_
#define WVG_CONVERT_HPP_

#include <optional>
#include <string>

#include "wvg/game.hpp"

namespace wvg {

// Worst-case cost class of turning one representation into another.
enum class Complexity { polynomial, exponential, unknown };

std::string to_string(Complexity complexity);

Complexity conversion_complexity(RepKind from, RepKind to);

struct ConversionResult {
  enum class Status { ok, not_weighted, not_linear, not_canonical, refused };
  Status status = Status::ok;
  std::optional<GameRep> game;
  std::string message;
  // Cost class of the route actually taken.
  Complexity complexity = Complexity::polynomial;
};

std::string to_string(ConversionResult::Status status);

// Converts between any two representation languages. Conversions that are
// not known to be polynomial are refused unless allow_exponential is set.
ConversionResult convert(const GameRep& input, RepKind target, bool allow_exponential);

}  // namespace wvg

#endif  // WVG_CONVERT_HPP_
