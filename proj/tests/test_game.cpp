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

#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "wvg/game.hpp"

using wvg::Coalition;
using wvg::CoalitionList;
using wvg::GameRep;
using wvg::RepKind;
using wvg::SimpleGame;

namespace {

Coalition C(int n, std::initializer_list<int> players) { return Coalition::of(n, players); }

CoalitionList parse_list(std::initializer_list<const char*> texts) {
  CoalitionList out;
  for (const char* t : texts) out.push_back(Coalition::parse(t));
  return out;
}

// [4; 3, 2, 2, 1]
const CoalitionList kFourPlayer = parse_list({"1100", "1010", "0110", "1001"});

CoalitionList from_masks(int n, const std::set<oracle::Mask>& masks) {
  CoalitionList out;
  for (auto m : masks) out.emplace_back(n, m);
  return out;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(wvg::parse_rational("3/4") == wvg::Rational(3, 4));
  CHECK(wvg::parse_rational("0.25") == wvg::Rational(1, 4));
  CHECK(wvg::parse_rational("-2") == wvg::Rational(-2));
  CHECK(wvg::format_rational(wvg::Rational(6, 4)) == "3/2");
  CHECK(wvg::format_rational(wvg::Rational(5)) == "5");
  CHECK_THROWS_AS(wvg::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(wvg::parse_rational("x"), std::invalid_argument);
}

TEST_CASE("weighted form shorthand") {
  const auto form = wvg::WeightedForm::parse("4;3,2,2,1");
  CHECK(form.n() == 4);
  CHECK(form.quota == 4);
  CHECK(form.to_string() == "4;3,2,2,1");
  CHECK(form.wins(C(4, {2, 3})));
  CHECK_FALSE(form.wins(C(4, {4})));
  CHECK(wvg::WeightedForm::parse("1/2;1/3,1/6").integral().to_string() == "3;2,1");
  CHECK(wvg::WeightedForm::parse("0;0,0").integral().to_string() == "0;0,0");
  CHECK_THROWS_AS(wvg::WeightedForm::parse("1;-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(wvg::WeightedForm::parse("1"), std::invalid_argument);
}

TEST_CASE("eval examples") {
  const auto weights = GameRep::from_weights(wvg::WeightedForm::parse("4;3,2,2,1"));
  CHECK(weights.eval(C(4, {2, 3})));
  CHECK_FALSE(weights.eval(C(4, {4})));
  const auto dictator = GameRep::from_list(RepKind::min_winning, 3, {C(3, {1})});
  CHECK_FALSE(dictator.eval(C(3, {2, 3})));
  CHECK(dictator.eval(C(3, {1, 3})));
}

TEST_CASE("malformed representations are rejected") {
  CHECK_THROWS_AS(GameRep::from_list(RepKind::min_winning, 3, {C(3, {1}), C(3, {1, 2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GameRep::from_list(RepKind::roof, 3, {C(3, {1}), C(3, {2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GameRep::from_list(RepKind::weights, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGame(3, {C(3, {1}), C(3, {1, 3})}), std::invalid_argument);
  CHECK_THROWS_AS(wvg::parse_rep_kind("wmax"), std::invalid_argument);
}

TEST_CASE("eval agrees across representations") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& node : corpus::games(n)) {
      const auto truth = oracle::table_of(n, node.wmin());
      const std::vector<GameRep> forms = {
          GameRep::from_list(RepKind::min_winning, n, node.wmin()),
          GameRep::from_list(RepKind::max_losing, n, from_masks(n, oracle::maximal_losing(n, truth))),
          GameRep::from_list(RepKind::roof, n, from_masks(n, oracle::roofs(n, truth))),
          GameRep::from_list(RepKind::ceiling, n, from_masks(n, oracle::ceilings(n, truth))),
          GameRep::from_weights(node.witness),
          GameRep::from_weights(node.witness.integral()),
      };
      CoalitionList winning;
      CoalitionList losing;
      for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
        (truth[s] ? winning : losing).emplace_back(n, s);
      }
      const auto w = GameRep::from_list(RepKind::winning, n, winning);
      const auto l = GameRep::from_list(RepKind::losing, n, losing);
      for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
        const Coalition c(n, s);
        for (const auto& form : forms) REQUIRE(form.eval(c) == truth[s]);
        REQUIRE(w.eval(c) == truth[s]);
        REQUIRE(l.eval(c) == truth[s]);
      }
      for (const auto& form : forms) {
        const auto table = wvg::truth_table(form);
        for (oracle::Mask s = 0; s <= oracle::full(n); ++s) REQUIRE(table.wins(s) == truth[s]);
      }
    }
  }
}

TEST_CASE("weighted truth tables match direct evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<long> w;
    long total = 0;
    for (int p = 0; p < n; ++p) {
      w.push_back(static_cast<long>(rng() % 20));
      total += w.back();
    }
    const long quota = static_cast<long>(rng() % static_cast<std::uint64_t>(total + 2));
    wvg::WeightedForm form{wvg::Rational(quota), {}};
    for (long x : w) form.weights.emplace_back(x);
    const auto table = wvg::truth_table(form);
    const auto truth = oracle::weighted_table(quota, w);
    for (oracle::Mask s = 0; s <= oracle::full(n); ++s) REQUIRE(table.wins(s) == truth[s]);
  }
}

TEST_CASE("upward closure matches the superset oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<oracle::Mask> seeds;
    for (int k = 0; k < 3; ++k) seeds.push_back(rng() & oracle::full(n));
    wvg::WinTable closed(n);
    wvg::WinTable upsets(n);
    for (auto s : seeds) {
      closed.set(s);
      upsets.add_upset(s);
    }
    closed.close_upward();
    CHECK(closed == upsets);
    const auto truth = oracle::table_of(n, seeds);
    std::uint64_t wins = 0;
    for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
      REQUIRE(closed.wins(s) == truth[s]);
      wins += truth[s] ? 1 : 0;
    }
    CHECK(closed.count() == wins);
  }
}

TEST_CASE("desirability examples") {
  const SimpleGame game(4, kFourPlayer);
  CHECK(wvg::desirability_compare(game, 2, 3) == wvg::Desirability::equal);
  CHECK(wvg::desirability_compare(game, 1, 4) == wvg::Desirability::more);
  CHECK(wvg::desirability_compare(game, 4, 1) == wvg::Desirability::less);
  CHECK(wvg::desirability_compare(game, 3, 3) == wvg::Desirability::equal);
  const SimpleGame split(4, parse_list({"1100", "0011"}));
  CHECK(wvg::desirability_compare(split, 1, 3) == wvg::Desirability::incomparable);
}

TEST_CASE("swap test agrees with the full subset oracle") {
  for (const auto& wmin : std::vector<CoalitionList>{kFourPlayer, parse_list({"1100", "0011"}),
                                                      parse_list({"11000", "10110", "01101"})}) {
    const int n = wmin.front().n();
    const SimpleGame game(n, wmin);
    const auto truth = oracle::table_of(n, wmin);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const bool ij = oracle::at_least_as_desirable(n, truth, i, j);
        const bool ji = oracle::at_least_as_desirable(n, truth, j, i);
        const auto got = wvg::desirability_compare(game, i, j);
        if (ij && ji) CHECK(got == wvg::Desirability::equal);
        if (ij && !ji) CHECK(got == wvg::Desirability::more);
        if (!ij && ji) CHECK(got == wvg::Desirability::less);
        if (!ij && !ji) CHECK(got == wvg::Desirability::incomparable);
      }
    }
  }
}

TEST_CASE("linearity and canonicity") {
  {
    const auto check = wvg::check_linear_canonical(SimpleGame(4, kFourPlayer));
    REQUIRE(std::holds_alternative<wvg::DesirabilityOrder>(check));
    CHECK(std::get<wvg::DesirabilityOrder>(check).classes ==
          std::vector<std::vector<int>>{{1}, {2, 3}, {4}});
  }
  {
    const auto check = wvg::check_linear_canonical(SimpleGame(4, parse_list({"1100", "0011"})));
    CHECK(std::holds_alternative<wvg::NotLinear>(check));
  }
  {
    const auto check = wvg::check_linear_canonical(SimpleGame(4, {}));
    REQUIRE(std::holds_alternative<wvg::DesirabilityOrder>(check));
    CHECK(std::get<wvg::DesirabilityOrder>(check).classes ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}});
  }
  {
    // Player 3 is a dictator.
    const auto check = wvg::check_linear_canonical(SimpleGame(3, {C(3, {3})}));
    REQUIRE(std::holds_alternative<wvg::NotCanonical>(check));
    const auto& relabel = std::get<wvg::NotCanonical>(check);
    CHECK(relabel.permutation.front() == 3);
    CHECK(wvg::permute(C(3, {3}), relabel.permutation) == C(3, {1}));
    CHECK(wvg::unpermute(C(3, {1}), relabel.permutation) == C(3, {3}));
  }
}

TEST_CASE("linearity matches the oracle on every antichain of four players") {
  for (const auto& wmin : wvg::enumerate_antichains(4)) {
    const SimpleGame game(4, wmin);
    const auto truth = oracle::table_of(4, wmin);
    bool linear = true;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        if (!oracle::at_least_as_desirable(4, truth, i, j) &&
            !oracle::at_least_as_desirable(4, truth, j, i)) {
          linear = false;
        }
      }
    }
    const bool canonical = oracle::is_canonical_linear(4, truth);
    const auto check = wvg::check_linear_canonical(game);
    CHECK(std::holds_alternative<wvg::NotLinear>(check) == !linear);
    CHECK(std::holds_alternative<wvg::DesirabilityOrder>(check) == canonical);
    CHECK(wvg::canonical_order(game).has_value() == canonical);
    if (const auto* relabel = std::get_if<wvg::NotCanonical>(&check)) {
      CoalitionList moved;
      for (const auto& s : wmin) moved.push_back(wvg::permute(s, relabel->permutation));
      CHECK(oracle::is_canonical_linear(4, oracle::table_of(4, moved)));
    }
  }
}

TEST_CASE("minimal and maximal members") {
  CoalitionList winning;
  for (oracle::Mask s = 0; s < 8; ++s) {
    if (s & 1U) winning.emplace_back(3, s);
  }
  CHECK(wvg::mwc_from_w(3, winning) == CoalitionList{C(3, {1})});
  CHECK(wvg::mlc_from_l(1, {Coalition::empty(1)}) == CoalitionList{Coalition::empty(1)});
  CoalitionList majority;
  for (oracle::Mask s = 0; s < 8; ++s) {
    if (oracle::popcount(s) >= 2) majority.emplace_back(3, s);
  }
  CHECK(wvg::to_strings(wvg::mwc_from_w(3, majority)) ==
        std::vector<std::string>{"110", "101", "011"});
  CHECK_THROWS_AS(wvg::mwc_from_w(3, {C(3, {1})}), wvg::NonMonotoneError);
  CHECK_THROWS_AS(wvg::mlc_from_l(3, {C(3, {1, 2})}), wvg::NonMonotoneError);
}

TEST_CASE("roofs and ceilings") {
  const SimpleGame game(4, kFourPlayer);
  const auto truth = oracle::table_of(4, kFourPlayer);
  CHECK(wvg::roofs_from_mwc(game) == CoalitionList{C(4, {1, 4}), C(4, {2, 3})});
  CHECK(oracle::mask_set(wvg::roofs_from_mwc(game)) == oracle::roofs(4, truth));
  const auto losing = from_masks(4, oracle::maximal_losing(4, truth));
  CHECK(wvg::ceilings_from_mlc(4, losing) == CoalitionList{C(4, {1}), C(4, {2, 4})});
  CHECK(wvg::roofs_from_mwc(SimpleGame(4, {})).empty());
  CHECK_THROWS_AS(wvg::roofs_from_mwc(SimpleGame(3, {C(3, {3})})), wvg::NotCanonicalError);
  CHECK_THROWS_AS(wvg::ceilings_from_mlc(3, {C(3, {1, 2})}), wvg::NotCanonicalError);
}

TEST_CASE("shift closure in canonical games") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& node : corpus::games(n)) {
      for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
        for (oracle::Mask t = 0; t <= oracle::full(n); ++t) {
          if (!wvg::is_proper_left_shift(Coalition(n, t), Coalition(n, s))) continue;
          if (node.game.wins(s)) REQUIRE(node.game.wins(t));
          if (!node.game.wins(t)) REQUIRE_FALSE(node.game.wins(s));
        }
      }
    }
  }
}

TEST_CASE("encoding coalitions") {
  CHECK(wvg::encoding_coalition(2, 2) == C(8, {1, 4, 6, 7}));
  CHECK(wvg::encoding_coalition(5, 3) == C(12, {1, 4, 6, 7, 9, 12}));
  CHECK(wvg::encoding_coalition(0, 1) == C(4, {2, 3}));
}

TEST_CASE("i-bit roof games") {
  const auto two = wvg::ibit_roof_game(2);
  CHECK(two.n() == 8);
  CHECK(oracle::mask_set(two.coalitions()) ==
        oracle::mask_set({C(8, {2, 3, 6, 7}), C(8, {2, 3, 5, 8}), C(8, {1, 4, 6, 7}),
                          C(8, {1, 4, 5, 8})}));
  for (int i = 2; i <= 3; ++i) {
    const auto game = wvg::ibit_roof_game(i);
    const int n = 4 * i;
    CHECK(game.coalitions().size() == (std::size_t{1} << i));
    const auto wmin = wvg::min_winning_from_shift_form(game);
    const auto truth = oracle::table_of(n, wmin);
    for (oracle::Mask s = 0; s <= oracle::full(n); ++s) {
      REQUIRE(game.eval(Coalition(n, s)) == truth[s]);
    }
    CHECK(oracle::roofs(n, truth) == oracle::mask_set(game.coalitions()));
    CHECK(oracle::is_canonical_linear(n, truth));
    const auto ceilings = oracle::ceilings(n, truth);
    const auto lmax = from_masks(n, oracle::maximal_losing(n, truth));
    CHECK(oracle::mask_set(wvg::ceilings_from_mlc(n, lmax)) == ceilings);
  }
}
