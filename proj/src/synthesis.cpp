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

#include "wvg/synthesis.hpp"

#include <algorithm>
#include <unordered_set>

#include "wvg/lp.hpp"

namespace wvg {

namespace {

WeightedForm all_losing_form(int n) {
  return WeightedForm{Rational(1), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
}

WeightedForm all_winning_form(int n) {
  return WeightedForm{Rational(0), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
}

bool is_all_winning(const CoalitionList& min_winning) {
  return min_winning.size() == 1 && min_winning.front().is_empty();
}

// Players p..q as a coalition mask; empty when p > q.
std::uint64_t interval(int p, int q) {
  if (p > q) return 0;
  return player_mask(q) & ~player_mask(p - 1);
}

std::vector<int> class_map(int n, const DesirabilityOrder& order) {
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < order.classes.size(); ++k) {
    for (int p : order.classes[k]) out[static_cast<std::size_t>(p - 1)] = static_cast<int>(k);
  }
  return out;
}

}  // namespace

CoalitionList shelters(const SimpleGame& game) {
  CoalitionList out;
  for (const auto& s : game.min_winning()) {
    const auto shifted = bottom_right_shift(s);
    if (!shifted || !game.wins(*shifted)) out.push_back(s);
  }
  return out;
}

CoalitionList hop_skip_jump(const CoalitionList& shelter_list, int n) {
  CoalitionList out;
  if (shelter_list.empty()) {
    out.push_back(Coalition::grand(n));
    return out;
  }
  // An empty shelter means the empty coalition wins: nothing loses.
  if (shelter_list.front().is_empty()) return out;

  std::size_t next_index = 0;
  // std::nullopt once the list is exhausted; it never matches `current`.
  std::optional<Coalition> next = shelter_list.front();
  Coalition current = Coalition::empty(n);
  while (true) {
    while (!next || current != next->without(next->last())) {
      if (!current.contains(n)) {
        current = *fill_up(current);
      } else {
        out.push_back(current);
        const auto moved = bottom_right_shift(truncation(current));
        if (!moved) return out;
        current = *moved;
      }
    }
    if (!next->contains(n)) {
      current = *bottom_right_shift(*next);
    } else {
      out.push_back(current);
      const auto successor = immediate_successor(*next);
      if (!successor) return out;
      current = *successor;
    }
    ++next_index;
    next = next_index < shelter_list.size()
               ? std::optional<Coalition>(shelter_list[next_index])
               : std::nullopt;
  }
}

CoalitionList ceilings_from_mwc(const SimpleGame& game) {
  if (!canonical_order(game)) {
    throw NotCanonicalError("ceilings are only defined for canonical linear games");
  }
  const int n = game.n();
  if (is_all_winning(game.min_winning())) return {};

  std::unordered_set<std::uint64_t> candidates;
  // Ceilings without a gap are the prefixes {1..b}, including the empty
  // and the grand coalition.
  for (int b = 0; b <= n; ++b) candidates.insert(player_mask(b));
  for (const auto& s : game.min_winning()) {
    const int b = s.last();
    const int a = s.gap();
    const std::uint64_t drop_last = s.bits() & ~interval(b, b);
    const bool shifted_form = a >= 2 && s.contains(a - 1);
    const std::uint64_t shift_gap =
        shifted_form ? (s.bits() & ~interval(a - 1, a - 1)) | interval(a, a) : 0;
    for (int k = 0; k <= n - b; ++k) {
      const std::uint64_t tail = interval(b + 1, b + k);
      candidates.insert(drop_last | tail);
      if (shifted_form) candidates.insert(shift_gap | tail);
    }
  }
  CoalitionList out;
  for (std::uint64_t bits : candidates) {
    const Coalition c(n, bits);
    if (is_ceiling(game, c)) out.push_back(c);
  }
  sort_pr_lexi(out);
  return out;
}

std::optional<WeightedForm> solve_feasibility(const FeasibilityProblem& problem) {
  const int n = problem.n;
  std::vector<int> variable_of = problem.variable_of;
  if (variable_of.empty()) {
    for (int p = 0; p < n; ++p) variable_of.push_back(p);
  }
  if (variable_of.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("variable map must cover every player");
  }
  const int num_weights = *std::max_element(variable_of.begin(), variable_of.end()) + 1;
  const int margin = num_weights;

  lp::Problem lp;
  lp.num_vars = num_weights + 1;
  lp.objective.assign(static_cast<std::size_t>(lp.num_vars), 0);
  lp.objective[static_cast<std::size_t>(margin)] = 1;

  const auto row_for = [&](const Coalition& s) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(lp.num_vars), 0);
    for (int p : s.players()) ++coeffs[static_cast<std::size_t>(variable_of[static_cast<std::size_t>(p - 1)])];
    return coeffs;
  };
  for (const auto& s : problem.at_least) {
    lp.rows.push_back({row_for(s), lp::Sense::at_least, 1});
  }
  for (const auto& s : problem.strictly_less) {
    auto coeffs = row_for(s);
    coeffs[static_cast<std::size_t>(margin)] = 1;
    lp.rows.push_back({std::move(coeffs), lp::Sense::at_most, 1});
  }
  if (problem.ordered) {
    for (int p = 1; p < n; ++p) {
      const int hi = variable_of[static_cast<std::size_t>(p - 1)];
      const int lo = variable_of[static_cast<std::size_t>(p)];
      if (hi == lo) continue;
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(lp.num_vars), 0);
      coeffs[static_cast<std::size_t>(hi)] = 1;
      coeffs[static_cast<std::size_t>(lo)] = -1;
      lp.rows.push_back({std::move(coeffs), lp::Sense::at_least, 0});
    }
  }
  {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(lp.num_vars), 0);
    coeffs[static_cast<std::size_t>(margin)] = 1;
    lp.rows.push_back({std::move(coeffs), lp::Sense::at_most, 1});
  }

  const lp::Solution solution = lp::maximize(lp);
  if (solution.status != lp::Status::optimal || sgn(solution.objective) <= 0) {
    return std::nullopt;
  }
  WeightedForm form{Rational(1), {}};
  for (int p = 0; p < n; ++p) {
    form.weights.push_back(solution.x[static_cast<std::size_t>(variable_of[static_cast<std::size_t>(p)])]);
  }
  return form;
}

std::optional<WeightedForm> synth_weights(const SimpleGame& game,
                                          const CoalitionList& max_losing) {
  const int n = game.n();
  if (game.min_winning().empty()) return all_losing_form(n);
  if (is_all_winning(game.min_winning())) return all_winning_form(n);
  FeasibilityProblem problem;
  problem.n = n;
  problem.at_least = game.min_winning();
  problem.strictly_less = max_losing;
  return solve_feasibility(problem);
}

std::optional<WeightedForm> synth_weights_compact(int n, const CoalitionList& roofs,
                                                  const CoalitionList& ceilings,
                                                  const DesirabilityOrder& classes) {
  if (roofs.empty()) return all_losing_form(n);
  if (is_all_winning(roofs)) return all_winning_form(n);
  FeasibilityProblem problem;
  problem.n = n;
  problem.at_least = roofs;
  problem.strictly_less = ceilings;
  problem.ordered = true;
  problem.variable_of = class_map(n, classes);
  return solve_feasibility(problem);
}

std::optional<CwvgCertificate> certify_cwvg(const SimpleGame& game) {
  auto order = canonical_order(game);
  if (!order) return std::nullopt;
  CwvgCertificate cert;
  cert.order = std::move(*order);
  cert.ceilings = ceilings_from_mwc(game);
  for (const auto& s : game.min_winning()) {
    if (is_roof(game, s)) cert.roofs.push_back(s);
  }
  auto witness = synth_weights_compact(game.n(), cert.roofs, cert.ceilings, cert.order);
  if (!witness) return std::nullopt;
  cert.witness = std::move(*witness);
  return cert;
}

std::optional<CoalitionList> max_losing_of_linear(const SimpleGame& game) {
  const LinearityCheck check = check_linear_canonical(game);
  if (std::holds_alternative<NotLinear>(check)) return std::nullopt;
  if (std::holds_alternative<DesirabilityOrder>(check)) {
    return hop_skip_jump(shelters(game), game.n());
  }
  const auto& permutation = std::get<NotCanonical>(check).permutation;
  CoalitionList relabelled;
  for (const auto& s : game.min_winning()) relabelled.push_back(permute(s, permutation));
  const SimpleGame canonical(game.n(), std::move(relabelled));
  CoalitionList out;
  for (const auto& s : hop_skip_jump(shelters(canonical), game.n())) {
    out.push_back(unpermute(s, permutation));
  }
  sort_pr_lexi(out);
  return out;
}

std::optional<CoalitionList> min_winning_of_linear(int n,
                                                   const CoalitionList& max_losing) {
  CoalitionList dual;
  for (const auto& c : max_losing) dual.push_back(c.complement());
  const auto dual_losing = max_losing_of_linear(SimpleGame(n, std::move(dual)));
  if (!dual_losing) return std::nullopt;
  CoalitionList out;
  for (const auto& c : *dual_losing) out.push_back(c.complement());
  sort_pr_lexi(out);
  return out;
}

WeightSynthesis weights_from_mwc(const SimpleGame& game) {
  WeightSynthesis out;
  const LinearityCheck check = check_linear_canonical(game);
  if (std::holds_alternative<NotLinear>(check)) return out;
  std::vector<int> permutation;
  SimpleGame canonical = game;
  if (const auto* relabel = std::get_if<NotCanonical>(&check)) {
    permutation = relabel->permutation;
    CoalitionList relabelled;
    for (const auto& s : game.min_winning()) relabelled.push_back(permute(s, permutation));
    canonical = SimpleGame(game.n(), std::move(relabelled));
  }
  const CoalitionList losing = hop_skip_jump(shelters(canonical), game.n());
  auto form = synth_weights(canonical, losing);
  if (!form) {
    out.outcome = WeightSynthesis::Outcome::not_weighted;
    return out;
  }
  if (!permutation.empty()) {
    std::vector<Rational> weights(form->weights.size());
    for (std::size_t k = 0; k < permutation.size(); ++k) {
      weights[static_cast<std::size_t>(permutation[k] - 1)] = form->weights[k];
    }
    form->weights = std::move(weights);
  }
  out.outcome = WeightSynthesis::Outcome::weighted;
  out.form = std::move(form);
  return out;
}

}  // namespace wvg
