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

#ifndef WVG_ENUMERATION_HPP_
#define WVG_ENUMERATION_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "wvg/coalition.hpp"
#include "wvg/game.hpp"

namespace wvg {

// Largest n accepted by default; larger runs need an explicit override.
inline constexpr int kDefaultEnumerationCap = 9;

// A canonical weighted voting game as a vertex of the graded poset ordered
// by inclusion of minimal winning coalitions.
struct PosetNode {
  SimpleGame game;
  CoalitionList ceilings;
  WeightedForm witness;

  int n() const { return game.n(); }
  const CoalitionList& wmin() const { return game.min_winning(); }
  int rank() const { return static_cast<int>(game.min_winning().size()); }
};

// The all-losing game: no minimal winning coalitions, ceiling {N}.
PosetNode bottom_node(int n);

// Rebuilds a node from its minimal winning coalitions. Returns std::nullopt
// unless the list describes a canonical weighted voting game.
std::optional<PosetNode> make_node(int n, const CoalitionList& wmin);

struct Extension {
  Coalition added;
  SimpleGame game;  // parent's coalitions plus `added`
};

// Candidate children: the parent's list plus one right-truncation of one of
// its ceilings, deduplicated, keeping only antichains.
std::vector<Extension> extensions(const PosetNode& node);

// Decides whether `candidate` (canonical, weighted) is kept when reached by
// adding `added`: no coalition PR-lexi earlier than `added` may be removable
// leaving a canonical weighted voting game. `is_cwvg` is queried with the
// sorted list minus one coalition.
using CwvgOracle = std::function<bool(const CoalitionList&)>;
bool duplicates_check(const SimpleGame& candidate, const Coalition& added,
                      const CwvgOracle& is_cwvg);

// The oracle above backed by the linear program.
bool is_cwvg_by_lp(int n, const CoalitionList& wmin);

enum class Traversal { breadth_first, depth_first };

struct EnumerateOptions {
  Traversal order = Traversal::breadth_first;
  // Worker threads for breadth-first expansion; 0 reads WVG_THREADS and
  // falls back to 1.
  int threads = 0;
  // Breadth-first only: write rank-XXXX.json after each completed rank.
  std::optional<std::filesystem::path> checkpoint_dir;
  // Continue from the newest checkpoint in checkpoint_dir.
  bool resume = false;
  const std::atomic<bool>* stop = nullptr;
};

struct EnumerationSummary {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> histogram;  // index = rank
  bool complete = false;
};

// Return false to stop the enumeration.
using NodeVisitor = std::function<bool(const PosetNode&)>;

// Emits every canonical weighted voting game on n players exactly once,
// starting with the all-losing game. Breadth-first emits rank by rank and,
// within a rank, in increasing list order.
EnumerationSummary enumerate_cwvg(int n, const EnumerateOptions& options,
                                  const NodeVisitor& visit);

std::vector<std::uint64_t> count_by_rank(int n, const EnumerateOptions& options = {});

// Every antichain of subsets of {1..n}, by brute force over all families of
// coalitions. Throws std::invalid_argument for n > 4.
std::vector<CoalitionList> enumerate_antichains(int n);

// Number of worker threads requested through WVG_THREADS, at least 1.
int threads_from_env();

}  // namespace wvg

#endif  // WVG_ENUMERATION_HPP_
