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

#include "wvg/game.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace wvg {

namespace {

constexpr std::uint64_t kLowerHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

void check_table_size(int n) {
  if (n < 1 || n > kMaxTablePlayers) {
    throw std::invalid_argument("truth tables support 1..26 players, got " +
                                std::to_string(n));
  }
}

void check_members(int n, const CoalitionList& list) {
  for (const auto& c : list) {
    if (c.n() != n) {
      throw std::invalid_argument("coalition " + c.to_string() +
                                  " does not have " + std::to_string(n) +
                                  " players");
    }
  }
}

// Can `j` be replaced by `i` in every minimal winning coalition that holds j
// but not i without the coalition losing?
bool swap_holds(const SimpleGame& game, int i, int j) {
  const std::uint64_t bit_i = std::uint64_t{1} << (i - 1);
  const std::uint64_t bit_j = std::uint64_t{1} << (j - 1);
  for (const auto& s : game.min_winning()) {
    const std::uint64_t bits = s.bits();
    if ((bits & bit_j) != 0 && (bits & bit_i) == 0 &&
        !game.wins((bits & ~bit_j) | bit_i)) {
      return false;
    }
  }
  return true;
}

std::unordered_set<std::uint64_t> mask_set(const CoalitionList& list) {
  std::unordered_set<std::uint64_t> out;
  out.reserve(list.size() * 2);
  for (const auto& c : list) out.insert(c.bits());
  return out;
}

}  // namespace

Rational WeightedForm::weight_of(const Coalition& s) const {
  Rational total = 0;
  for (int p : s.players()) total += weights[static_cast<std::size_t>(p - 1)];
  return total;
}

WeightedForm WeightedForm::scaled(const Rational& lambda) const {
  WeightedForm out{quota * lambda, weights};
  for (auto& w : out.weights) w *= lambda;
  return out;
}

WeightedForm WeightedForm::integral() const {
  mpz_class lcm = quota.get_den();
  for (const auto& w : weights) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
  }
  WeightedForm out = scaled(Rational(lcm));
  mpz_class gcd = out.quota.get_num();
  for (const auto& w : out.weights) {
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w.get_num_mpz_t());
  }
  if (gcd > 1) out = out.scaled(Rational(mpz_class(1), gcd));
  return out;
}

std::string WeightedForm::to_string() const {
  std::ostringstream out;
  out << format_rational(quota) << ';';
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != 0) out << ',';
    out << format_rational(weights[i]);
  }
  return out.str();
}

WeightedForm WeightedForm::parse(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 2) {
    throw std::invalid_argument("weighted form must look like 'q;w1,...,wn'");
  }
  WeightedForm out;
  out.quota = parse_rational(parts[0]);
  for (auto item : split(parts[1], ',')) {
    out.weights.push_back(parse_rational(item));
  }
  if (out.weights.empty() || out.n() > kMaxPlayers) {
    throw std::invalid_argument("weighted form needs 1..64 weights");
  }
  if (out.quota < 0 ||
      std::any_of(out.weights.begin(), out.weights.end(),
                  [](const Rational& w) { return w < 0; })) {
    throw std::invalid_argument("quota and weights must be nonnegative");
  }
  return out;
}

WinTable::WinTable(int n) : n_(n) {
  check_table_size(n);
  words_.assign(n >= 6 ? std::size_t{1} << (n - 6) : 1, 0);
}

void WinTable::add_upset(std::uint64_t mask) {
  const std::uint64_t free = ~mask & player_mask(n_);
  std::uint64_t extra = free;
  while (true) {
    set(mask | extra);
    if (extra == 0) break;
    extra = (extra - 1) & free;
  }
}

void WinTable::close_upward() {
  for (int d = 0; d < n_; ++d) {
    if (d < 6) {
      const int shift = 1 << d;
      for (auto& word : words_) word |= (word & kLowerHalf[d]) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (d - 6);
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((k & stride) == 0) words_[k | stride] |= words_[k];
      }
    }
  }
}

std::uint64_t WinTable::count() const {
  std::uint64_t total = 0;
  for (auto word : words_) total += static_cast<std::uint64_t>(std::popcount(word));
  return total;
}

SimpleGame::SimpleGame(int n, CoalitionList min_winning)
    : n_(n), min_winning_(std::move(min_winning)) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must lie in [1, 64]");
  }
  check_members(n, min_winning_);
  sort_pr_lexi(min_winning_);
  if (!is_antichain(min_winning_)) {
    throw std::invalid_argument("minimal winning coalitions must form an antichain");
  }
  if (n <= kMaxTablePlayers) {
    WinTable table(n);
    for (const auto& c : min_winning_) table.set(c.bits());
    table.close_upward();
    table_ = std::move(table);
  }
}

SimpleGame::SimpleGame(int n, CoalitionList min_winning, WinTable table)
    : n_(n), min_winning_(std::move(min_winning)), table_(std::move(table)) {}

bool SimpleGame::wins(std::uint64_t mask) const {
  if (table_) return table_->wins(mask);
  return std::any_of(min_winning_.begin(), min_winning_.end(),
                     [mask](const Coalition& c) { return (c.bits() & ~mask) == 0; });
}

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::winning: return "w";
    case RepKind::losing: return "l";
    case RepKind::min_winning: return "wmin";
    case RepKind::max_losing: return "lmax";
    case RepKind::roof: return "roof";
    case RepKind::ceiling: return "ceil";
    case RepKind::weights: return "weights";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view text) {
  for (RepKind kind : {RepKind::winning, RepKind::losing, RepKind::min_winning,
                       RepKind::max_losing, RepKind::roof, RepKind::ceiling,
                       RepKind::weights}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown representation '" + std::string(text) +
                              "' (expected w, l, wmin, lmax, roof, ceil, weights)");
}

GameRep GameRep::from_list(RepKind kind, int n, CoalitionList coalitions) {
  if (kind == RepKind::weights) {
    throw std::invalid_argument("weights form has no coalition list");
  }
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must lie in [1, 64]");
  }
  check_members(n, coalitions);
  sort_pr_lexi(coalitions);
  const bool needs_antichain = kind == RepKind::min_winning ||
                               kind == RepKind::max_losing ||
                               kind == RepKind::roof || kind == RepKind::ceiling;
  if (needs_antichain && !is_antichain(coalitions)) {
    throw std::invalid_argument(to_string(kind) + " list is not an antichain");
  }
  if (kind == RepKind::roof || kind == RepKind::ceiling) {
    for (const auto& a : coalitions) {
      for (const auto& b : coalitions) {
        if (a == b) continue;
        // A roof above a left-shift of another roof is not minimal; dually
        // for ceilings via complements.
        const bool redundant =
            kind == RepKind::roof
                ? contains_left_shift_of(a, b)
                : contains_left_shift_of(b.complement(), a.complement());
        if (redundant) {
          throw std::invalid_argument(to_string(kind) + " list contains " +
                                      a.to_string() + " dominated by " +
                                      b.to_string());
        }
      }
    }
  }
  GameRep out;
  out.kind_ = kind;
  out.n_ = n;
  out.coalitions_ = std::move(coalitions);
  return out;
}

GameRep GameRep::from_weights(WeightedForm form) {
  if (form.n() < 1 || form.n() > kMaxPlayers) {
    throw std::invalid_argument("weighted form needs 1..64 weights");
  }
  GameRep out;
  out.kind_ = RepKind::weights;
  out.n_ = form.n();
  out.weights_ = std::move(form);
  return out;
}

bool GameRep::eval(const Coalition& s) const {
  if (s.n() != n_) throw std::invalid_argument("coalition size mismatch");
  const auto& list = coalitions_;
  switch (kind_) {
    case RepKind::winning:
    case RepKind::losing: {
      const bool member = std::binary_search(list.begin(), list.end(), s, PrLexiLess{});
      return kind_ == RepKind::winning ? member : !member;
    }
    case RepKind::min_winning:
      return std::any_of(list.begin(), list.end(),
                         [&](const Coalition& c) { return c.is_subset_of(s); });
    case RepKind::max_losing:
      return std::none_of(list.begin(), list.end(),
                          [&](const Coalition& c) { return s.is_subset_of(c); });
    case RepKind::roof:
      return std::any_of(list.begin(), list.end(), [&](const Coalition& r) {
        return contains_left_shift_of(s, r);
      });
    case RepKind::ceiling: {
      // S loses iff S lies inside a right-shift of some ceiling, i.e. its
      // complement contains a left-shift of the ceiling's complement.
      const Coalition rest = s.complement();
      return std::none_of(list.begin(), list.end(), [&](const Coalition& c) {
        return contains_left_shift_of(rest, c.complement());
      });
    }
    case RepKind::weights:
      return weights_->wins(s);
  }
  return false;
}

WinTable truth_table(const GameRep& game) {
  if (game.kind() == RepKind::weights) return truth_table(game.weights());
  const int n = game.n();
  WinTable table(n);
  if (game.kind() == RepKind::min_winning) {
    for (const auto& c : game.coalitions()) table.set(c.bits());
    table.close_upward();
    return table;
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (game.eval(Coalition(n, mask))) table.set(mask);
  }
  return table;
}

WinTable truth_table(const WeightedForm& form) {
  const int n = form.n();
  WinTable table(n);
  const WeightedForm ints = form.integral();
  mpz_class sum_all = 0;
  for (const auto& w : ints.weights) sum_all += w.get_num();
  const std::uint64_t total = std::uint64_t{1} << n;
  // Gray-code walk keeps a running weight sum.
  if (sum_all.fits_slong_p()) {
    std::vector<long> w;
    for (const auto& x : ints.weights) w.push_back(x.get_num().get_si());
    const long quota = ints.quota > sum_all ? sum_all.get_si() + 1
                                            : ints.quota.get_num().get_si();
    long sum = 0;
    std::uint64_t mask = 0;
    if (sum >= quota) table.set(mask);
    for (std::uint64_t step = 1; step < total; ++step) {
      const int bit = std::countr_zero(step);
      mask ^= std::uint64_t{1} << bit;
      sum += ((mask >> bit) & 1U) ? w[static_cast<std::size_t>(bit)]
                                  : -w[static_cast<std::size_t>(bit)];
      if (sum >= quota) table.set(mask);
    }
    return table;
  }
  mpz_class sum = 0;
  std::uint64_t mask = 0;
  const mpz_class quota = ints.quota.get_num();
  if (sum >= quota) table.set(mask);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    mask ^= std::uint64_t{1} << bit;
    const mpz_class& wb = ints.weights[static_cast<std::size_t>(bit)].get_num();
    if ((mask >> bit) & 1U) {
      sum += wb;
    } else {
      sum -= wb;
    }
    if (sum >= quota) table.set(mask);
  }
  return table;
}

Desirability desirability_compare(const SimpleGame& game, int i, int j) {
  if (i < 1 || j < 1 || i > game.n() || j > game.n()) {
    throw std::invalid_argument("player index out of range");
  }
  if (i == j) return Desirability::equal;
  const bool i_over_j = swap_holds(game, i, j);
  const bool j_over_i = swap_holds(game, j, i);
  if (i_over_j && j_over_i) return Desirability::equal;
  if (i_over_j) return Desirability::more;
  if (j_over_i) return Desirability::less;
  return Desirability::incomparable;
}

LinearityCheck check_linear_canonical(const SimpleGame& game) {
  if (auto order = canonical_order(game)) return *order;
  const int n = game.n();
  std::vector<std::vector<char>> over(static_cast<std::size_t>(n + 1),
                                      std::vector<char>(static_cast<std::size_t>(n + 1), 1));
  std::vector<int> dominated(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      over[i][j] = swap_holds(game, i, j) ? 1 : 0;
      dominated[static_cast<std::size_t>(i)] += over[i][j];
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!over[i][j] && !over[j][i]) return NotLinear{i, j};
    }
  }
  // In a total preorder, more desirable players dominate more players.
  std::vector<int> permutation(static_cast<std::size_t>(n));
  std::iota(permutation.begin(), permutation.end(), 1);
  std::stable_sort(permutation.begin(), permutation.end(), [&](int a, int b) {
    return dominated[static_cast<std::size_t>(a)] > dominated[static_cast<std::size_t>(b)];
  });
  DesirabilityOrder order;
  for (int p : permutation) {
    if (!order.classes.empty()) {
      const int prev = order.classes.back().front();
      if (over[prev][p] && over[p][prev]) {
        order.classes.back().push_back(p);
        continue;
      }
    }
    order.classes.push_back({p});
  }
  return NotCanonical{std::move(order), std::move(permutation)};
}

std::optional<DesirabilityOrder> canonical_order(const SimpleGame& game) {
  DesirabilityOrder order;
  order.classes.push_back({1});
  for (int i = 1; i < game.n(); ++i) {
    if (!swap_holds(game, i, i + 1)) return std::nullopt;
    if (swap_holds(game, i + 1, i)) {
      order.classes.back().push_back(i + 1);
    } else {
      order.classes.push_back({i + 1});
    }
  }
  return order;
}

Coalition permute(const Coalition& s, const std::vector<int>& permutation) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    if (s.contains(permutation[k])) bits |= std::uint64_t{1} << k;
  }
  return Coalition(s.n(), bits);
}

Coalition unpermute(const Coalition& s, const std::vector<int>& permutation) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    if ((s.bits() >> k) & 1U) bits |= std::uint64_t{1} << (permutation[k] - 1);
  }
  return Coalition(s.n(), bits);
}

CoalitionList mwc_from_w(int n, const CoalitionList& winning) {
  check_members(n, winning);
  const auto members = mask_set(winning);
  CoalitionList out;
  for (std::uint64_t bits : members) {
    bool minimal = true;
    for (int p = 1; p <= n; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << (p - 1);
      if ((bits & bit) == 0) {
        if (!members.contains(bits | bit)) {
          throw NonMonotoneError("winning list is not closed under supersets");
        }
      } else if (members.contains(bits & ~bit)) {
        minimal = false;
      }
    }
    if (minimal) out.emplace_back(n, bits);
  }
  sort_pr_lexi(out);
  return out;
}

CoalitionList mlc_from_l(int n, const CoalitionList& losing) {
  check_members(n, losing);
  const auto members = mask_set(losing);
  CoalitionList out;
  for (std::uint64_t bits : members) {
    bool maximal = true;
    for (int p = 1; p <= n; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << (p - 1);
      if ((bits & bit) != 0) {
        if (!members.contains(bits & ~bit)) {
          throw NonMonotoneError("losing list is not closed under subsets");
        }
      } else if (members.contains(bits | bit)) {
        maximal = false;
      }
    }
    if (maximal) out.emplace_back(n, bits);
  }
  sort_pr_lexi(out);
  return out;
}

CoalitionList min_winning_of(const WinTable& table) {
  const int n = table.n();
  CoalitionList out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!table.wins(mask)) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      if (table.wins(mask & ~(rest & (~rest + 1)))) minimal = false;
    }
    if (minimal) out.emplace_back(n, mask);
  }
  sort_pr_lexi(out);
  return out;
}

CoalitionList max_losing_of(const WinTable& table) {
  const int n = table.n();
  CoalitionList out;
  const std::uint64_t full = player_mask(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (table.wins(mask)) continue;
    bool maximal = true;
    for (std::uint64_t rest = ~mask & full; rest != 0 && maximal; rest &= rest - 1) {
      if (!table.wins(mask | (rest & (~rest + 1)))) maximal = false;
    }
    if (maximal) out.emplace_back(n, mask);
  }
  sort_pr_lexi(out);
  return out;
}

bool is_roof(const SimpleGame& game, const Coalition& s) {
  for (const auto& shifted : direct_right_shifts(s)) {
    if (game.wins(shifted)) return false;
  }
  return true;
}

bool is_ceiling(const SimpleGame& game, const Coalition& s) {
  if (game.wins(s)) return false;
  const std::uint64_t full = player_mask(game.n());
  for (std::uint64_t rest = ~s.bits() & full; rest != 0; rest &= rest - 1) {
    if (!game.wins(s.bits() | (rest & (~rest + 1)))) return false;
  }
  for (const auto& shifted : direct_left_shifts(s)) {
    if (!game.wins(shifted)) return false;
  }
  return true;
}

CoalitionList roofs_from_mwc(const SimpleGame& game) {
  if (!canonical_order(game)) {
    throw NotCanonicalError("roofs are only defined for canonical linear games");
  }
  CoalitionList out;
  for (const auto& s : game.min_winning()) {
    if (is_roof(game, s)) out.push_back(s);
  }
  return out;
}

CoalitionList ceilings_from_mlc(int n, const CoalitionList& max_losing) {
  check_members(n, max_losing);
  // The dual game (S wins iff its complement loses) has the complements of
  // the maximal losing coalitions as minimal winning coalitions and the
  // same desirability order.
  CoalitionList dual;
  for (const auto& c : max_losing) dual.push_back(c.complement());
  if (!canonical_order(SimpleGame(n, dual))) {
    throw NotCanonicalError("ceilings are only defined for canonical linear games");
  }
  const auto loses = [&](const Coalition& s) {
    return std::any_of(max_losing.begin(), max_losing.end(),
                       [&](const Coalition& c) { return s.is_subset_of(c); });
  };
  CoalitionList out;
  for (const auto& c : max_losing) {
    const auto shifts = direct_left_shifts(c);
    if (std::none_of(shifts.begin(), shifts.end(), loses)) out.push_back(c);
  }
  sort_pr_lexi(out);
  return out;
}

Coalition encoding_coalition(std::uint64_t k, int i) {
  const int n = 4 * i;
  std::vector<int> players;
  for (int j = 1; j <= i; ++j) {
    const int base = 4 * (j - 1);
    if ((k >> (i - j)) & 1U) {
      players.push_back(base + 1);
      players.push_back(base + 4);
    } else {
      players.push_back(base + 2);
      players.push_back(base + 3);
    }
  }
  return Coalition::of(n, players);
}

GameRep ibit_roof_game(int i) {
  if (i < 1 || 4 * i > kMaxPlayers) {
    throw std::invalid_argument("i-bit roof game needs 1 <= i <= 16");
  }
  CoalitionList roofs;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << i); ++k) {
    roofs.push_back(encoding_coalition(k, i));
  }
  return GameRep::from_list(RepKind::roof, 4 * i, std::move(roofs));
}

CoalitionList min_winning_from_shift_form(const GameRep& game) {
  return min_winning_of(truth_table(game));
}

}  // namespace wvg
