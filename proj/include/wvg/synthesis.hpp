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

#ifndef WVG_SYNTHESIS_HPP_
#define WVG_SYNTHESIS_HPP_

#include <optional>
#include <vector>

#include "wvg/coalition.hpp"
#include "wvg/game.hpp"

namespace wvg {

// Minimal winning coalitions whose bottom right-shift loses or is
// undefined, in PR-lexi order. The empty coalition is a shelter only in the
// all-winning game, where it is the sole minimal winning coalition.
CoalitionList shelters(const SimpleGame& game);

// Maximal losing coalitions of a canonical linear game, generated from its
// PR-lexi sorted shelters in O(n^3 t) time. An empty shelter list yields
// {N}; the shelter list {{}} yields no coalitions. Coalitions are returned in the order they are produced, which is
// increasing in PR-lexi order.
CoalitionList hop_skip_jump(const CoalitionList& shelters, int n);

// All ceilings of a canonical linear game, generated from candidates built
// around each minimal winning coalition plus the prefixes {1..b}. Throws
// NotCanonicalError.
CoalitionList ceilings_from_mwc(const SimpleGame& game);

// Linear constraints on a weight vector with the quota fixed at 1.
struct FeasibilityProblem {
  int n = 0;
  CoalitionList at_least;       // w(S) >= 1
  CoalitionList strictly_less;  // w(S) < 1
  bool ordered = false;         // w_1 >= w_2 >= ... >= w_n
  // variable_of[p - 1] is the shared variable of player p. Empty means one
  // variable per player.
  std::vector<int> variable_of;
};

// Maximizes the margin t in w(S) <= 1 - t over the strict rows and accepts
// iff t > 0. Returns the weighted form [1; w] on success.
std::optional<WeightedForm> solve_feasibility(const FeasibilityProblem& problem);

// Weights from the full minimal winning / maximal losing lists. Returns
// std::nullopt when the game is not weighted.
std::optional<WeightedForm> synth_weights(const SimpleGame& game,
                                          const CoalitionList& max_losing);

// Weights from roofs and ceilings with one variable per desirability class
// and the ordering constraints of a canonical game.
std::optional<WeightedForm> synth_weights_compact(
    int n, const CoalitionList& roofs, const CoalitionList& ceilings,
    const DesirabilityOrder& classes);

// Everything the enumeration keeps about a canonical weighted voting game.
struct CwvgCertificate {
  DesirabilityOrder order;
  CoalitionList roofs;
  CoalitionList ceilings;
  WeightedForm witness;
};

// Decides whether the game is canonical and weighted, without ever listing
// the maximal losing coalitions.
std::optional<CwvgCertificate> certify_cwvg(const SimpleGame& game);

// Maximal losing coalitions of any linear game given by its minimal
// winning coalitions (relabels to canonical order and back). Returns
// std::nullopt when the game is not linear.
std::optional<CoalitionList> max_losing_of_linear(const SimpleGame& game);

// Minimal winning coalitions of a linear game given by its maximal losing
// coalitions, via the dual game. Returns std::nullopt when not linear.
std::optional<CoalitionList> min_winning_of_linear(int n,
                                                   const CoalitionList& max_losing);

// Full weight synthesis for a game given by minimal winning coalitions:
// linearity check, relabelling, shelters, Hop-Skip-and-Jump and the LP.
// Weights are reported in the original player labels.
struct WeightSynthesis {
  enum class Outcome { weighted, not_weighted, not_linear };
  Outcome outcome = Outcome::not_linear;
  std::optional<WeightedForm> form;
};
WeightSynthesis weights_from_mwc(const SimpleGame& game);

}  // namespace wvg

#endif  // WVG_SYNTHESIS_HPP_
