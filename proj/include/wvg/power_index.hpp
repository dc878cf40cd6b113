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

#ifndef WVG_POWER_INDEX_HPP_
#define WVG_POWER_INDEX_HPP_

#include <cstdint>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/rational.hpp"

namespace wvg {

struct BanzhafIndex {
  // raw[i - 1]: coalitions without player i that lose, but win with i.
  std::vector<std::uint64_t> raw;
  // raw / sum(raw); the uniform vector when every raw count is 0.
  std::vector<Rational> normalized;
  bool degenerate = false;
};

BanzhafIndex banzhaf(const WinTable& table);
BanzhafIndex banzhaf(const SimpleGame& game);
BanzhafIndex banzhaf(const GameRep& game);
BanzhafIndex banzhaf(const WeightedForm& form);

// Euclidean distance, in floating point. Throws std::invalid_argument on a
// length mismatch.
double euclidean_error(const std::vector<Rational>& index,
                       const std::vector<double>& target);

}  // namespace wvg

#endif  // WVG_POWER_INDEX_HPP_
