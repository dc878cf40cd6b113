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

#include "wvg/io.hpp"

#include <stdexcept>
#include <string>

namespace wvg {

namespace {

Rational rational_field(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw std::invalid_argument("rationals must be strings such as \"3/4\" or integers");
}

}  // namespace

Json to_json(const WeightedForm& form) {
  return Json{{"n", form.n()},
              {"tag", "weights"},
              {"q", format_rational(form.quota)},
              {"w", format_rationals(form.weights)}};
}

Json to_json(const GameRep& game) {
  if (game.kind() == RepKind::weights) return to_json(game.weights());
  Json doc{{"n", game.n()},
           {"tag", to_string(game.kind())},
           {"coalitions", to_strings(game.coalitions())}};
  if (game.kind() == RepKind::max_losing || game.kind() == RepKind::ceiling) {
    doc["all_winning"] = game.coalitions().empty();
  }
  return doc;
}

GameRep game_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("game must be a JSON object");
  if (!doc.contains("tag")) throw std::invalid_argument("game needs a \"tag\"");
  const RepKind kind = parse_rep_kind(doc.at("tag").get<std::string>());
  if (kind == RepKind::weights) {
    WeightedForm form;
    form.quota = rational_field(doc.at("q"));
    for (const auto& w : doc.at("w")) form.weights.push_back(rational_field(w));
    if (doc.contains("n") && doc.at("n").get<int>() != form.n()) {
      throw std::invalid_argument("\"n\" disagrees with the weight count");
    }
    return GameRep::from_weights(std::move(form));
  }
  const int n = doc.at("n").get<int>();
  CoalitionList list;
  for (const auto& text : doc.at("coalitions")) {
    const Coalition c = Coalition::parse(text.get<std::string>());
    if (c.n() != n) throw std::invalid_argument("coalition " + c.to_string() + " has wrong length");
    list.push_back(c);
  }
  if (doc.contains("all_winning") && doc.at("all_winning").get<bool>() != list.empty()) {
    throw std::invalid_argument("\"all_winning\" disagrees with the coalition list");
  }
  return GameRep::from_list(kind, n, std::move(list));
}

Json to_json(const BanzhafIndex& index) {
  return Json{{"raw", index.raw},
              {"normalized", format_rationals(index.normalized)},
              {"degenerate", index.degenerate}};
}

Json node_record(const PosetNode& node) {
  return Json{{"rank", node.rank()},
              {"wmin", to_strings(node.wmin())},
              {"weights", to_json(node.witness.integral())}};
}

Json summary_record(int n, const EnumerationSummary& summary) {
  return Json{{"summary", true},
              {"n", n},
              {"total", summary.total},
              {"histogram", summary.histogram},
              {"complete", summary.complete}};
}

Json to_json(const Improvement& step) {
  return Json{{"seconds", step.elapsed_seconds},
              {"game", step.game_number},
              {"error", step.error},
              {"weights", to_json(step.weights.integral())},
              {"wmin", to_strings(step.wmin)},
              {"index", format_rationals(step.index)}};
}

Json to_json(const SolveReport& report) {
  Json doc{{"exhausted", report.exhausted},
           {"games_scored", report.games_scored},
           {"seconds", report.elapsed_seconds},
           {"improvements", report.improvements.size()}};
  doc["best"] = report.best ? to_json(*report.best) : Json(nullptr);
  return doc;
}

}  // namespace wvg
