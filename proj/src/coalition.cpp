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

#include "wvg/coalition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wvg {

namespace {

std::uint64_t bit_of(int player) { return std::uint64_t{1} << (player - 1); }

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must lie in [1, 64], got " +
                                std::to_string(n));
  }
}

// Shared implementation of the sorted componentwise dominance test: every
// prefix {1..k} holds at least as many members of `lhs` as of `rhs`.
bool dominates(std::uint64_t lhs, std::uint64_t rhs, int n) {
  int lhs_count = 0;
  int rhs_count = 0;
  for (int bit = 0; bit < n; ++bit) {
    lhs_count += static_cast<int>((lhs >> bit) & 1U);
    rhs_count += static_cast<int>((rhs >> bit) & 1U);
    if (lhs_count < rhs_count) return false;
  }
  return true;
}

}  // namespace

Coalition::Coalition(int n, std::uint64_t bits) : bits_(bits), n_(n) {
  check_player_count(n);
  if ((bits & ~player_mask(n)) != 0) {
    throw std::invalid_argument("coalition has members beyond player n");
  }
}

Coalition Coalition::of(int n, std::initializer_list<int> players) {
  return of(n, std::vector<int>(players));
}

Coalition Coalition::of(int n, const std::vector<int>& players) {
  check_player_count(n);
  std::uint64_t bits = 0;
  for (int p : players) {
    if (p < 1 || p > n) {
      throw std::invalid_argument("player " + std::to_string(p) +
                                  " out of range");
    }
    bits |= bit_of(p);
  }
  return Coalition(n, bits);
}

Coalition Coalition::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  check_player_count(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '1') {
      bits |= bit_of(i + 1);
    } else if (text[i] != '0') {
      throw std::invalid_argument("coalition bitstring may only contain 0/1: " +
                                  std::string(text));
    }
  }
  return Coalition(n, bits);
}

int Coalition::size() const { return std::popcount(bits_); }

Coalition Coalition::with(int player) const {
  return Coalition(n_, bits_ | bit_of(player));
}

Coalition Coalition::without(int player) const {
  return Coalition(n_, bits_ & ~bit_of(player));
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

int Coalition::last() const {
  return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
}

int Coalition::gap() const {
  // Bit k (player k + 1) is in S while bit k - 1 (player k) is not.
  const std::uint64_t starts = bits_ & ~(bits_ << 1) & ~std::uint64_t{1};
  return starts == 0 ? 0 : 63 - std::countl_zero(starts);
}

std::string Coalition::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::vector<int> characteristic_vector(const Coalition& s) {
  std::vector<int> out(static_cast<std::size_t>(s.n()), 0);
  for (int p : s.players()) out[static_cast<std::size_t>(p - 1)] = 1;
  return out;
}

PositionalRep positional_rep(const Coalition& s) {
  PositionalRep out = s.players();
  out.resize(static_cast<std::size_t>(s.n()), 0);
  return out;
}

std::strong_ordering pr_lexi_compare(const Coalition& s, const Coalition& t) {
  const std::uint64_t diff = s.bits() ^ t.bits();
  if (diff == 0) return std::strong_ordering::equal;
  // All members below the first differing player agree. The coalition that
  // holds that player compares less iff the other one still has a later
  // member at that position of its positional representation.
  const int bit = std::countr_zero(diff);
  const std::uint64_t above = bit == 63 ? 0 : ~std::uint64_t{0} << (bit + 1);
  if ((s.bits() >> bit) & 1U) {
    return (t.bits() & above) != 0 ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  return (s.bits() & above) != 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
}

std::optional<Coalition> fill_up(const Coalition& s) {
  // b(S) + 1 must be a player.
  if (s.last() == s.n()) return std::nullopt;
  return s.with(s.last() + 1);
}

std::optional<Coalition> bottom_right_shift(const Coalition& s) {
  const int b = s.last();
  if (b == 0 || b == s.n()) return std::nullopt;
  return s.without(b).with(b + 1);
}

Coalition truncation(const Coalition& s) {
  return Coalition(s.n(), s.bits() & player_mask(s.gap()));
}

std::optional<Coalition> immediate_successor(const Coalition& s) {
  if (!s.contains(s.n())) return fill_up(s);
  return bottom_right_shift(s.without(s.n()));
}

std::optional<Coalition> right_truncation(const Coalition& s, int i) {
  if (i < 0 || i > s.size()) return std::nullopt;
  std::uint64_t bits = s.bits();
  for (int k = 0; k < i; ++k) {
    bits &= ~(std::uint64_t{1} << (63 - std::countl_zero(bits)));
  }
  return Coalition(s.n(), bits);
}

std::vector<Coalition> direct_left_shifts(const Coalition& s) {
  std::vector<Coalition> out;
  for (int p : s.players()) {
    if (p >= 2 && !s.contains(p - 1)) out.push_back(s.without(p).with(p - 1));
  }
  return out;
}

std::vector<Coalition> direct_right_shifts(const Coalition& s) {
  std::vector<Coalition> out;
  for (int p : s.players()) {
    if (p < s.n() && !s.contains(p + 1)) {
      out.push_back(s.without(p).with(p + 1));
    }
  }
  return out;
}

bool is_proper_left_shift(const Coalition& shifted, const Coalition& s) {
  if (shifted == s || shifted.size() != s.size()) return false;
  return dominates(shifted.bits(), s.bits(), s.n());
}

bool is_proper_right_shift(const Coalition& shifted, const Coalition& s) {
  return is_proper_left_shift(s, shifted);
}

bool contains_left_shift_of(const Coalition& s, const Coalition& base) {
  const int need = base.size();
  if (s.size() < need) return false;
  // The `need` lowest-numbered members of s form the best candidate.
  std::uint64_t best = 0;
  std::uint64_t rest = s.bits();
  for (int k = 0; k < need; ++k) {
    best |= rest & (~rest + 1);
    rest &= rest - 1;
  }
  return dominates(best, base.bits(), s.n());
}

void sort_pr_lexi(CoalitionList& list) {
  std::sort(list.begin(), list.end(), PrLexiLess{});
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

bool is_pr_lexi_sorted(const CoalitionList& list) {
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (pr_lexi_compare(list[i - 1], list[i]) >= 0) return false;
  }
  return true;
}

bool is_antichain(const CoalitionList& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i != j && list[i].is_subset_of(list[j])) return false;
    }
  }
  return true;
}

std::strong_ordering compare_lists(const CoalitionList& a,
                                   const CoalitionList& b) {
  return std::lexicographical_compare_three_way(
      a.begin(), a.end(), b.begin(), b.end(), pr_lexi_compare);
}

std::vector<std::string> to_strings(const CoalitionList& list) {
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const auto& c : list) out.push_back(c.to_string());
  return out;
}

}  // namespace wvg
