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

#ifndef WVG_GAME_HPP_
#define WVG_GAME_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wvg/coalition.hpp"
#include "wvg/rational.hpp"

namespace wvg {

// Largest player count for which a full truth table is kept.
inline constexpr int kMaxTablePlayers = 26;

// Thrown when a roof/ceiling operation receives a game whose players are
// not ordered 1 >= 2 >= ... >= n by desirability.
class NotCanonicalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a coalition listing is not closed the way a monotone game
// requires.
class NonMonotoneError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Weighted form [q; w_1, ..., w_n]: S wins iff w(S) >= q.
struct WeightedForm {
  Rational quota;
  std::vector<Rational> weights;

  int n() const { return static_cast<int>(weights.size()); }
  Rational weight_of(const Coalition& s) const;
  bool wins(const Coalition& s) const { return weight_of(s) >= quota; }
  WeightedForm scaled(const Rational& lambda) const;
  // Smallest integer multiple of this form.
  WeightedForm integral() const;
  // "q;w1,w2,..." shorthand.
  std::string to_string() const;
  static WeightedForm parse(std::string_view text);
};

// Truth table over all 2^n coalitions, one bit per coalition mask.
class WinTable {
 public:
  WinTable() = default;
  explicit WinTable(int n);

  int n() const { return n_; }
  bool wins(std::uint64_t mask) const {
    return (words_[mask >> 6] >> (mask & 63)) & 1U;
  }
  void set(std::uint64_t mask) {
    words_[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  }
  // Marks every superset of `mask`.
  void add_upset(std::uint64_t mask);
  // Marks every superset of every marked coalition.
  void close_upward();
  std::uint64_t count() const;
  // Coalition mask m is bit m % 64 of word m / 64.
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const WinTable&, const WinTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// A monotone simple game held as its PR-lexi sorted minimal winning
// coalitions. Small games also carry a truth table so that evaluation is a
// bit lookup.
class SimpleGame {
 public:
  SimpleGame() = default;
  // Throws std::invalid_argument unless `min_winning` is an antichain over n
  // players.
  SimpleGame(int n, CoalitionList min_winning);
  // Trusted constructor: `min_winning` is sorted and `table` matches it.
  SimpleGame(int n, CoalitionList min_winning, WinTable table);

  int n() const { return n_; }
  const CoalitionList& min_winning() const { return min_winning_; }
  const std::optional<WinTable>& table() const { return table_; }

  bool wins(std::uint64_t mask) const;
  bool wins(const Coalition& s) const { return wins(s.bits()); }

 private:
  int n_ = 0;
  CoalitionList min_winning_;
  std::optional<WinTable> table_;
};

// The representation languages for simple games.
enum class RepKind {
  winning,
  losing,
  min_winning,
  max_losing,
  roof,
  ceiling,
  weights,
};

std::string to_string(RepKind kind);
// Accepts "w", "l", "wmin", "lmax", "roof", "ceil", "weights".
RepKind parse_rep_kind(std::string_view text);

class GameRep {
 public:
  // Sorts the list in PR-lexi order. Throws std::invalid_argument when the
  // list is malformed for its kind.
  static GameRep from_list(RepKind kind, int n, CoalitionList coalitions);
  static GameRep from_weights(WeightedForm form);

  RepKind kind() const { return kind_; }
  int n() const { return n_; }
  const CoalitionList& coalitions() const { return coalitions_; }
  const WeightedForm& weights() const { return *weights_; }

  bool eval(const Coalition& s) const;

 private:
  RepKind kind_ = RepKind::min_winning;
  int n_ = 0;
  CoalitionList coalitions_;
  std::optional<WeightedForm> weights_;
};

WinTable truth_table(const GameRep& game);
WinTable truth_table(const WeightedForm& form);

// Players grouped into equal-desirability classes, most desirable first.
struct DesirabilityOrder {
  std::vector<std::vector<int>> classes;
  friend bool operator==(const DesirabilityOrder&,
                         const DesirabilityOrder&) = default;
};

enum class Desirability { more, equal, less, incomparable };

// Compares players i and j by the swap test on minimal winning coalitions.
Desirability desirability_compare(const SimpleGame& game, int i, int j);

// Linear, but the players need relabelling. permutation[k] is the original
// player that becomes player k + 1.
struct NotCanonical {
  DesirabilityOrder order;
  std::vector<int> permutation;
};
struct NotLinear {
  int first = 0;
  int second = 0;
};
using LinearityCheck = std::variant<DesirabilityOrder, NotCanonical, NotLinear>;

LinearityCheck check_linear_canonical(const SimpleGame& game);
// Fast path: adjacent swap tests only. Returns the classes when the game is
// canonical linear.
std::optional<DesirabilityOrder> canonical_order(const SimpleGame& game);

// Relabels players: player permutation[k] becomes player k + 1.
Coalition permute(const Coalition& s, const std::vector<int>& permutation);
Coalition unpermute(const Coalition& s, const std::vector<int>& permutation);

// Minimal members of an upward closed family. Throws NonMonotoneError.
CoalitionList mwc_from_w(int n, const CoalitionList& winning);
// Maximal members of a downward closed family. Throws NonMonotoneError.
CoalitionList mlc_from_l(int n, const CoalitionList& losing);

// Brute-force scans over all 2^n coalitions of a truth table.
CoalitionList min_winning_of(const WinTable& table);
CoalitionList max_losing_of(const WinTable& table);

// Minimal winning coalitions whose direct right-shifts all lose. Throws
// NotCanonicalError.
CoalitionList roofs_from_mwc(const SimpleGame& game);
// Maximal losing coalitions whose direct left-shifts all win. Throws
// NotCanonicalError.
CoalitionList ceilings_from_mlc(int n, const CoalitionList& max_losing);

// Members of the roof (ceiling) family among the given coalitions.
bool is_roof(const SimpleGame& game, const Coalition& s);
bool is_ceiling(const SimpleGame& game, const Coalition& s);

// Coalition whose 4-player blocks encode the i bits of k, most significant
// bit first: a 0 bit selects the two middle players of its block, a 1 bit
// the two outer ones.
Coalition encoding_coalition(std::uint64_t k, int i);
// The canonical linear game on 4i players whose roofs are the 2^i encoding
// coalitions.
GameRep ibit_roof_game(int i);

// Expands a roof or ceiling form into its minimal winning coalitions by
// sweeping all 2^n coalitions.
CoalitionList min_winning_from_shift_form(const GameRep& game);

}  // namespace wvg

#endif  // WVG_GAME_HPP_
