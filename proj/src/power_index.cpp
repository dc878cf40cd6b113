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

#include "wvg/power_index.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace wvg {

namespace {

constexpr std::uint64_t kLowerHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

BanzhafIndex banzhaf(const WinTable& table) {
  const int n = table.n();
  const auto& words = table.words();
  // Only the low 2^n bits of a lone word are coalitions.
  const std::uint64_t valid = n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1;
  BanzhafIndex out;
  out.raw.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t swings = 0;
    if (i < 6) {
      const int shift = 1 << i;
      for (std::uint64_t word : words) {
        const std::uint64_t without = word & kLowerHalf[i] & valid;
        const std::uint64_t with = (word >> shift) & kLowerHalf[i] & valid;
        swings += static_cast<std::uint64_t>(std::popcount(with & ~without));
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t k = 0; k < words.size(); ++k) {
        if ((k & stride) != 0) continue;
        swings += static_cast<std::uint64_t>(std::popcount(words[k | stride] & ~words[k]));
      }
    }
    out.raw[static_cast<std::size_t>(i)] = swings;
  }
  mpz_class total = 0;
  for (std::uint64_t r : out.raw) total += mpz_class(std::to_string(r));
  if (total == 0) {
    out.degenerate = true;
    out.normalized.assign(static_cast<std::size_t>(n), Rational(1, static_cast<unsigned long>(n)));
    return out;
  }
  for (std::uint64_t r : out.raw) {
    Rational value(mpz_class(std::to_string(r)), total);
    value.canonicalize();
    out.normalized.push_back(value);
  }
  return out;
}

BanzhafIndex banzhaf(const SimpleGame& game) {
  if (game.table()) return banzhaf(*game.table());
  return banzhaf(truth_table(GameRep::from_list(RepKind::min_winning, game.n(), game.min_winning())));
}

BanzhafIndex banzhaf(const GameRep& game) { return banzhaf(truth_table(game)); }

BanzhafIndex banzhaf(const WeightedForm& form) { return banzhaf(truth_table(form)); }

double euclidean_error(const std::vector<Rational>& index,
                       const std::vector<double>& target) {
  if (index.size() != target.size()) {
    throw std::invalid_argument("power index and target differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const double d = index[i].get_d() - target[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace wvg
