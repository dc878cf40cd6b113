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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wvg/design.hpp"
#include "wvg/enumeration.hpp"
#include "wvg/power_index.hpp"
#include "wvg/synthesis.hpp"

namespace {

using oracle::Mask;
using wvg::Coalition;
using wvg::CoalitionList;
using wvg::PosetNode;
using wvg::Rational;
using wvg::SimpleGame;
using MaskFamily = std::set<Mask>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<PosetNode> collect(int n, wvg::Traversal order) {
  std::vector<PosetNode> out;
  wvg::EnumerateOptions options;
  options.order = order;
  wvg::enumerate_cwvg(n, options, [&](const PosetNode& node) {
    out.push_back(node);
    return true;
  });
  return out;
}

const std::vector<PosetNode>& corpus(int n) {
  static std::map<int, std::vector<PosetNode>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, collect(n, wvg::Traversal::breadth_first)).first;
  return it->second;
}

CoalitionList from_masks(int n, const std::set<Mask>& masks) {
  CoalitionList out;
  for (Mask m : masks) out.emplace_back(n, m);
  return out;
}

SimpleGame two_bit_game() {
  return SimpleGame(8, wvg::min_winning_from_shift_form(wvg::ibit_roof_game(2)));
}

// Criterion 1: totals per player count.
Outcome table_of_totals() {
  const std::vector<std::uint64_t> expected = {3, 5, 10, 27, 119, 1113, 29375};
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 7; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t total = 0;
    for (auto c : wvg::count_by_rank(n)) total += c;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && total == expected[static_cast<std::size_t>(n - 1)];
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn=%d:%llu (%.2fs)", n == 1 ? "" : " ", n,
                  static_cast<unsigned long long>(total), seconds);
    detail += buf;
  }
  return {pass, detail};
}

// Criterion 2: HSJ against the brute-force maximal losing scan.
Outcome hsj_equivalence() {
  std::vector<SimpleGame> games;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& node : corpus(n)) games.push_back(node.game);
  }
  const std::size_t corpus_size = games.size();
  games.push_back(two_bit_game());
  std::size_t agree = 0;
  for (const auto& game : games) {
    const auto truth = oracle::table_of(game.n(), game.min_winning());
    const auto hsj = wvg::hop_skip_jump(wvg::shelters(game), game.n());
    if (oracle::mask_set(hsj) == oracle::maximal_losing(game.n(), truth) && hsj.size() == oracle::mask_set(hsj).size()) {
      ++agree;
    }
  }
  return {corpus_size == 164 && agree == games.size(),
          std::to_string(agree) + "/" + std::to_string(games.size()) + " games (" +
              std::to_string(corpus_size) + " enumerated + 2-bit)"};
}

// Criterion 3: ceilings from minimal winning coalitions against the ceiling
// filter applied to the HSJ output.
Outcome ceilings_cross_check() {
  std::size_t agree = 0;
  std::size_t total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& node : corpus(n)) {
      ++total;
      const auto truth = oracle::table_of(n, node.wmin());
      MaskFamily filtered;
      for (Mask s : oracle::masks(wvg::hop_skip_jump(wvg::shelters(node.game), n))) {
        bool all_win = true;
        for (Mask left : oracle::direct_shifts(n, s, -1)) all_win = all_win && truth[left];
        if (all_win) filtered.insert(s);
      }
      if (oracle::mask_set(wvg::ceilings_from_mwc(node.game)) == filtered) ++agree;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " games"};
}

// Criterion 4: brute-force antichains filtered by canonicity and weights.
Outcome antichain_cross_oracle() {
  constexpr int n = 4;
  constexpr Mask kCoalitions = Mask{1} << n;
  // Every weighted table with small integer weights; four players never need
  // larger ones.
  std::set<oracle::Table> weighted;
  for (long a = 0; a <= 7; ++a)
    for (long b = 0; b <= 7; ++b)
      for (long c = 0; c <= 7; ++c)
        for (long d = 0; d <= 7; ++d)
          for (long q = 0; q <= a + b + c + d + 1; ++q) weighted.insert(oracle::weighted_table(q, {a, b, c, d}));
  std::set<MaskFamily> filtered;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << kCoalitions); ++family) {
    std::vector<Mask> members;
    for (Mask s = 0; s < kCoalitions; ++s) {
      if ((family >> s) & 1U) members.push_back(s);
    }
    bool antichain = true;
    for (Mask x : members)
      for (Mask y : members) antichain = antichain && (x == y || (x & y) != x);
    if (!antichain) continue;
    const auto truth = oracle::table_of(n, members);
    if (oracle::is_canonical_linear(n, truth) && weighted.count(truth) == 1) {
      filtered.insert(MaskFamily(members.begin(), members.end()));
    }
  }
  std::set<MaskFamily> enumerated;
  for (const auto& node : corpus(n)) enumerated.insert(oracle::mask_set(node.wmin()));
  return {filtered.size() == 27 && filtered == enumerated,
          "filtered " + std::to_string(filtered.size()) + ", enumerated " + std::to_string(enumerated.size()) +
              (filtered == enumerated ? ", sets equal" : ", sets differ")};
}

// Criterion 5: exactly once, cover law, and traversal independence.
Outcome exactly_once_and_cover() {
  bool pass = true;
  std::string detail;
  for (int n = 1; n <= 6; ++n) {
    const auto& bfs = corpus(n);
    std::set<MaskFamily> seen;
    std::map<int, std::set<MaskFamily>> by_rank;
    for (const auto& node : bfs) {
      seen.insert(oracle::mask_set(node.wmin()));
      by_rank[node.rank()].insert(oracle::mask_set(node.wmin()));
    }
    const bool unique = seen.size() == bfs.size();
    bool covered = true;
    for (const auto& [rank, family] : by_rank) {
      if (rank == 0) continue;
      for (const auto& wmin : family) {
        bool found = false;
        for (Mask s : wmin) {
          MaskFamily parent = wmin;
          parent.erase(s);
          found = found || by_rank[rank - 1].count(parent) == 1;
        }
        covered = covered && found;
      }
    }
    std::set<MaskFamily> dfs;
    std::size_t dfs_count = 0;
    for (const auto& node : collect(n, wvg::Traversal::depth_first)) {
      dfs.insert(oracle::mask_set(node.wmin()));
      ++dfs_count;
    }
    const bool same = dfs == seen && dfs_count == bfs.size();
    pass = pass && unique && covered && same;
    detail += (n == 1 ? "" : " ") + std::string("n=") + std::to_string(n) + (unique && covered && same ? ":ok" : ":bad");
  }
  return {pass, detail};
}

// Criterion 6: roof and ceiling counts of the i-bit games.
Outcome ibit_fixture() {
  bool pass = true;
  std::string detail;
  for (int i = 2; i <= 3; ++i) {
    const int n = 4 * i;
    const SimpleGame game(n, wvg::min_winning_from_shift_form(wvg::ibit_roof_game(i)));
    const auto truth = oracle::table_of(n, game.min_winning());
    const auto roofs = wvg::roofs_from_mwc(game);
    const auto ceilings = wvg::ceilings_from_mwc(game);
    const auto scanned = oracle::ceilings(n, truth);
    const bool ok = roofs.size() == (std::size_t{1} << i) && oracle::mask_set(roofs) == oracle::roofs(n, truth) &&
                    oracle::mask_set(ceilings) == scanned && ceilings.size() == scanned.size();
    pass = pass && ok;
    detail += (i == 2 ? "" : "; ") + std::to_string(i) + "-bit: " + std::to_string(roofs.size()) + " roofs, " +
              std::to_string(ceilings.size()) + " ceilings (scan " + std::to_string(scanned.size()) + ")";
  }
  return {pass, detail};
}

// Criterion 7: Banzhaf sums, the near-unanimity example, and monotonicity.
Outcome banzhaf_properties() {
  std::size_t checked = 0;
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& node : corpus(n)) {
      const auto index = wvg::banzhaf(node.game);
      Rational sum = 0;
      for (const auto& v : index.normalized) sum += v;
      if (!index.degenerate) pass = pass && sum == 1;
      for (std::size_t k = 1; k < index.normalized.size(); ++k) {
        pass = pass && index.normalized[k] <= index.normalized[k - 1];
      }
      ++checked;
    }
  }
  const auto example = wvg::banzhaf(wvg::WeightedForm::parse("1000;997,1,1,1")).normalized;
  const bool quarter = example == std::vector<Rational>(4, Rational(1, 4));
  return {pass && quarter, std::to_string(checked) + " games; [1000;997,1,1,1] -> " +
                               (quarter ? "(1/4,1/4,1/4,1/4)" : "wrong")};
}

// Criterion 8: the three-player landscape.
Outcome three_player_landscape() {
  std::set<std::vector<Rational>> points;
  for (const auto& node : corpus(3)) points.insert(wvg::banzhaf(node.game).normalized);
  bool pass = corpus(3).size() == 10 && points.size() == 4;
  std::mt19937_64 rng(2026);
  int solved = 0;
  for (int k = 0; k < 200; ++k) {
    const auto report = wvg::solve_pvgd(wvg::sample_canonical_target(3, rng), 3);
    if (report.exhausted && report.best && points.count(report.best->index) == 1) ++solved;
  }
  pass = pass && solved == 200;
  return {pass, std::to_string(points.size()) + " distinct indices; " + std::to_string(solved) +
                    "/200 solves exhausted inside the set"};
}

// Criterion 9: scaling a weighting keeps the game and its index.
Outcome scaling_invariance() {
  std::mt19937_64 rng(99);
  int agree = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto& games = corpus(n);
    const auto& node = games[rng() % games.size()];
    const Rational lambda(static_cast<long>(1 + rng() % 1000), static_cast<long>(1 + rng() % 1000));
    const auto scaled = node.witness.scaled(lambda);
    if (wvg::truth_table(scaled).words() == wvg::truth_table(node.witness).words() &&
        wvg::banzhaf(scaled).normalized == wvg::banzhaf(node.witness).normalized) {
      ++agree;
    }
  }
  return {agree == 100, std::to_string(agree) + "/100 pairs"};
}

// Criterion 10: the anytime contract at eight players.
Outcome anytime_contract() {
  wvg::SolveOptions options;
  options.game_budget = 10000;
  const auto target = wvg::sample_canonical_target(8, std::uint64_t{1});
  const auto report = wvg::solve_pvgd(target, 8, options);
  bool decreasing = !report.improvements.empty();
  for (std::size_t k = 1; k < report.improvements.size(); ++k) {
    decreasing = decreasing && report.improvements[k].error < report.improvements[k - 1].error;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu improvements, best error %.6f, %llu games, exhausted=%s, %.2fs",
                report.improvements.size(), report.best ? report.best->error : -1.0,
                static_cast<unsigned long long>(report.games_scored), report.exhausted ? "true" : "false",
                report.elapsed_seconds);
  return {decreasing && !report.exhausted && report.games_scored == 10000, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"totals 3,5,10,27,119,1113,29375 for n=1..7", table_of_totals},
      {"hop-skip-and-jump equals the maximal losing scan", hsj_equivalence},
      {"ceilings from MWCs equal the filtered HSJ output", ceilings_cross_check},
      {"antichain filter at n=4 yields the enumerated 27 games", antichain_cross_oracle},
      {"exactly once, cover law, BFS equals DFS for n<=6", exactly_once_and_cover},
      {"i-bit games have 4 and 8 roofs, ceilings match scan", ibit_fixture},
      {"Banzhaf sums to 1, monotone, near-unanimity example", banzhaf_properties},
      {"three players give 4 index points, solves exhaust", three_player_landscape},
      {"scaling keeps winning set and index", scaling_invariance},
      {"n=8 anytime stream strictly decreasing, budget stops", anytime_contract},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Outcome outcome = criteria[k].second();
    if (!outcome.pass) ++failures;
    std::printf("%s [%2zu] %s: %s\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
