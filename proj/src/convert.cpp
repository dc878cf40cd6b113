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

#include "wvg/convert.hpp"

#include <array>

#include "wvg/synthesis.hpp"

namespace wvg {

namespace {

using Status = ConversionResult::Status;

constexpr Complexity P = Complexity::polynomial;
constexpr Complexity E = Complexity::exponential;
constexpr Complexity U = Complexity::unknown;

// Rows: source, columns: target, both in RepKind order
// (w, l, wmin, lmax, roof, ceil, weights). wmin <-> lmax is polynomial for
// linear games and is special-cased below.
constexpr std::array<std::array<Complexity, 7>, 7> kTable = {{
    {P, E, P, P, P, P, P},
    {E, P, P, P, P, P, P},
    {E, E, P, E, P, P, P},
    {E, E, E, P, P, P, P},
    {E, E, E, E, P, E, U},
    {E, E, E, E, E, P, U},
    {E, E, E, E, E, U, P},
}};

std::size_t index_of(RepKind kind) { return static_cast<std::size_t>(kind); }

ConversionResult failure(Status status, std::string message) {
  return ConversionResult{status, std::nullopt, std::move(message), {}};
}

ConversionResult success(GameRep game) {
  return ConversionResult{Status::ok, std::move(game), {}, {}};
}

// Every coalition of the table that wins (or loses).
CoalitionList scan(const WinTable& table, bool winning) {
  CoalitionList out;
  for (std::uint64_t mask = 0; mask <= player_mask(table.n()); ++mask) {
    if (table.wins(mask) == winning) out.emplace_back(table.n(), mask);
  }
  return out;
}

ConversionResult roofs_or_ceilings(const SimpleGame& game, RepKind target) {
  const LinearityCheck check = check_linear_canonical(game);
  if (std::holds_alternative<NotLinear>(check)) {
    return failure(Status::not_linear, "the game is not linear");
  }
  if (std::holds_alternative<NotCanonical>(check)) {
    return failure(Status::not_canonical,
                   "roofs and ceilings need players ordered by desirability");
  }
  if (target == RepKind::roof) {
    return success(GameRep::from_list(RepKind::roof, game.n(), roofs_from_mwc(game)));
  }
  return success(GameRep::from_list(RepKind::ceiling, game.n(), ceilings_from_mwc(game)));
}

ConversionResult weights_of(const SimpleGame& game) {
  const WeightSynthesis result = weights_from_mwc(game);
  switch (result.outcome) {
    case WeightSynthesis::Outcome::weighted:
      return success(GameRep::from_weights(result.form->integral()));
    case WeightSynthesis::Outcome::not_weighted:
      return failure(Status::not_weighted, "no weights realize this game");
    case WeightSynthesis::Outcome::not_linear:
      break;
  }
  return failure(Status::not_weighted, "the game is not linear, hence not weighted");
}

ConversionResult from_min_winning(const SimpleGame& game, RepKind target,
                                  const std::optional<CoalitionList>& max_losing) {
  const int n = game.n();
  switch (target) {
    case RepKind::min_winning:
      return success(GameRep::from_list(RepKind::min_winning, n, game.min_winning()));
    case RepKind::max_losing: {
      if (max_losing) return success(GameRep::from_list(RepKind::max_losing, n, *max_losing));
      if (game.table()) {
        return success(GameRep::from_list(RepKind::max_losing, n, max_losing_of(*game.table())));
      }
      break;
    }
    case RepKind::roof:
    case RepKind::ceiling:
      return roofs_or_ceilings(game, target);
    case RepKind::weights:
      return weights_of(game);
    case RepKind::winning:
    case RepKind::losing:
      if (game.table()) {
        return success(GameRep::from_list(target, n, scan(*game.table(), target == RepKind::winning)));
      }
      break;
  }
  return failure(Status::refused, "too many players for an exhaustive sweep");
}

}  // namespace

std::string to_string(Complexity complexity) {
  switch (complexity) {
    case Complexity::polynomial: return "P";
    case Complexity::exponential: return "EXP";
    case Complexity::unknown: return "?";
  }
  return "?";
}

std::string to_string(ConversionResult::Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::not_weighted: return "not_weighted";
    case Status::not_linear: return "not_linear";
    case Status::not_canonical: return "not_canonical";
    case Status::refused: return "refused";
  }
  return "refused";
}

Complexity conversion_complexity(RepKind from, RepKind to) {
  return kTable[index_of(from)][index_of(to)];
}

namespace {

// `cost_of_route` is lowered to polynomial when the linear shortcut applies.
ConversionResult route(const GameRep& input, RepKind target, bool allow_exponential,
                       Complexity& cost_of_route) {
  const int n = input.n();
  const RepKind source = input.kind();
  const Complexity cost = conversion_complexity(source, target);
  cost_of_route = cost;

  // Minimal winning and maximal losing lists convert into each other in
  // polynomial time when the game is linear.
  if (source == RepKind::min_winning && target == RepKind::max_losing) {
    cost_of_route = Complexity::polynomial;
    const SimpleGame game(n, input.coalitions());
    if (auto losing = max_losing_of_linear(game)) {
      return success(GameRep::from_list(RepKind::max_losing, n, std::move(*losing)));
    }
    cost_of_route = Complexity::exponential;
  } else if (source == RepKind::max_losing && target == RepKind::min_winning) {
    cost_of_route = Complexity::polynomial;
    if (auto winning = min_winning_of_linear(n, input.coalitions())) {
      return success(GameRep::from_list(RepKind::min_winning, n, std::move(*winning)));
    }
    cost_of_route = Complexity::exponential;
  } else if (source == RepKind::min_winning && cost == Complexity::polynomial) {
    return from_min_winning(SimpleGame(n, input.coalitions()), target, std::nullopt);
  } else if (source == RepKind::max_losing && cost == Complexity::polynomial) {
    if (target == RepKind::max_losing) return success(input);
    if (target == RepKind::ceiling) {
      try {
        return success(GameRep::from_list(RepKind::ceiling, n, ceilings_from_mlc(n, input.coalitions())));
      } catch (const NotCanonicalError& e) {
        return failure(Status::not_canonical, e.what());
      }
    }
    auto winning = min_winning_of_linear(n, input.coalitions());
    if (!winning) {
      return failure(Status::not_linear, "the game is not linear");
    }
    return from_min_winning(SimpleGame(n, std::move(*winning)), target, input.coalitions());
  }

  if (cost != Complexity::polynomial && !allow_exponential) {
    return failure(Status::refused,
                   "converting " + to_string(source) + " to " + to_string(target) +
                       " is " + to_string(cost) +
                       " and can blow up exponentially; pass --allow-exponential");
  }
  if (source == target) return success(input);
  if (n > kMaxTablePlayers) {
    return failure(Status::refused, "too many players for an exhaustive sweep");
  }
  // Exhaustive route through the truth table.
  const WinTable table = truth_table(input);
  if (target == RepKind::winning || target == RepKind::losing) {
    return success(GameRep::from_list(target, n, scan(table, target == RepKind::winning)));
  }
  const SimpleGame game(n, min_winning_of(table));
  return from_min_winning(game, target, max_losing_of(table));
}

}  // namespace

ConversionResult convert(const GameRep& input, RepKind target, bool allow_exponential) {
  Complexity cost = Complexity::polynomial;
  ConversionResult result = route(input, target, allow_exponential, cost);
  result.complexity = cost;
  return result;
}

}  // namespace wvg
