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

#ifndef WVG_IO_HPP_
#define WVG_IO_HPP_

#include <json.hpp>

#include "wvg/design.hpp"
#include "wvg/enumeration.hpp"
#include "wvg/game.hpp"
#include "wvg/power_index.hpp"

namespace wvg {

using Json = nlohmann::json;

// {"n", "tag", "coalitions"} for list forms, {"n", "tag": "weights", "q",
// "w"} for the weighted form. Lmax and ceiling forms also carry
// "all_winning".
Json to_json(const GameRep& game);
// Throws std::invalid_argument on malformed input.
GameRep game_from_json(const Json& doc);

Json to_json(const WeightedForm& form);
Json to_json(const BanzhafIndex& index);

// One JSONL line of the enumeration stream.
Json node_record(const PosetNode& node);
Json summary_record(int n, const EnumerationSummary& summary);

Json to_json(const Improvement& step);
Json to_json(const SolveReport& report);

}  // namespace wvg

#endif  // WVG_IO_HPP_
