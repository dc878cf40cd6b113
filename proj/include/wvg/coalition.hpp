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

#ifndef WVG_COALITION_HPP_
#define WVG_COALITION_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wvg {

inline constexpr int kMaxPlayers = 64;

// Bit mask with the low n bits set.
constexpr std::uint64_t player_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A subset of the players {1, ..., n}. Player i is stored at bit i - 1.
//
// The text form is a bitstring of length n whose leftmost character is
// player 1, so "1100" is {1, 2} when n = 4.
class Coalition {
 public:
  Coalition() = default;
  Coalition(int n, std::uint64_t bits);

  static Coalition empty(int n) { return Coalition(n, 0); }
  static Coalition grand(int n) { return Coalition(n, player_mask(n)); }
  static Coalition of(int n, std::initializer_list<int> players);
  static Coalition of(int n, const std::vector<int>& players);
  // Parses the bitstring form. Throws std::invalid_argument.
  static Coalition parse(std::string_view text);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_grand() const { return bits_ == player_mask(n_); }
  bool contains(int player) const {
    return (bits_ >> (player - 1)) & 1U;
  }
  bool is_subset_of(const Coalition& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  Coalition with(int player) const;
  Coalition without(int player) const;
  Coalition complement() const { return Coalition(n_, ~bits_ & player_mask(n_)); }

  // Members in increasing order.
  std::vector<int> players() const;
  // b(S): highest-numbered member, 0 for the empty coalition.
  int last() const;
  // a(S): largest j with j not in S and j + 1 in S, or 0.
  int gap() const;

  std::string to_string() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

// Positional representation: members in increasing order, zero padded to
// length n.
using PositionalRep = std::vector<int>;

std::vector<int> characteristic_vector(const Coalition& s);
PositionalRep positional_rep(const Coalition& s);

// Total order on coalitions by lexicographic comparison of positional
// representations. The empty coalition is least.
std::strong_ordering pr_lexi_compare(const Coalition& s, const Coalition& t);

struct PrLexiLess {
  bool operator()(const Coalition& s, const Coalition& t) const {
    return pr_lexi_compare(s, t) < 0;
  }
};

// The operations below return std::nullopt where they are undefined.
std::optional<Coalition> fill_up(const Coalition& s);
std::optional<Coalition> bottom_right_shift(const Coalition& s);
Coalition truncation(const Coalition& s);
std::optional<Coalition> immediate_successor(const Coalition& s);
// Removes the i highest-numbered members.
std::optional<Coalition> right_truncation(const Coalition& s, int i);

std::vector<Coalition> direct_left_shifts(const Coalition& s);
std::vector<Coalition> direct_right_shifts(const Coalition& s);

// True iff shifted != s, both have the same cardinality, and the j-th
// smallest member of `shifted` is at most the j-th smallest member of s.
bool is_proper_left_shift(const Coalition& shifted, const Coalition& s);
bool is_proper_right_shift(const Coalition& shifted, const Coalition& s);

// True iff s contains some left-shift (proper or not) of `base`.
bool contains_left_shift_of(const Coalition& s, const Coalition& base);

using CoalitionList = std::vector<Coalition>;

// Sorts in PR-lexi order and removes duplicates.
void sort_pr_lexi(CoalitionList& list);
bool is_pr_lexi_sorted(const CoalitionList& list);
// No member is a subset of another member.
bool is_antichain(const CoalitionList& list);
std::strong_ordering compare_lists(const CoalitionList& a,
                                   const CoalitionList& b);

std::vector<std::string> to_strings(const CoalitionList& list);

}  // namespace wvg

#endif  // WVG_COALITION_HPP_
