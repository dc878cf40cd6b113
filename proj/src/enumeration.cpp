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

#include "wvg/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "wvg/synthesis.hpp"

namespace wvg {

namespace {

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using KeySet = std::unordered_set<Key, KeyHash>;

Key key_of(const CoalitionList& list) {
  Key key;
  key.reserve(list.size());
  for (const auto& c : list) key.push_back(c.bits());
  return key;
}

bool stopped(const EnumerateOptions& options) {
  return options.stop != nullptr && options.stop->load(std::memory_order_relaxed);
}

bool node_less(const PosetNode& a, const PosetNode& b) {
  return compare_lists(a.wmin(), b.wmin()) < 0;
}

// Kept children of one parent, unsorted.
void expand(const PosetNode& parent, const CwvgOracle& is_cwvg,
            std::vector<PosetNode>& out) {
  for (auto& ext : extensions(parent)) {
    if (!canonical_order(ext.game)) continue;
    if (!duplicates_check(ext.game, ext.added, is_cwvg)) continue;
    auto cert = certify_cwvg(ext.game);
    if (!cert) continue;
    out.push_back(PosetNode{std::move(ext.game), std::move(cert->ceilings),
                            std::move(cert->witness)});
  }
}

std::vector<PosetNode> expand_frontier(const std::vector<PosetNode>& frontier,
                                       const CwvgOracle& is_cwvg, int threads,
                                       const EnumerateOptions& options) {
  std::vector<PosetNode> children;
  if (threads <= 1 || frontier.size() < 2) {
    for (const auto& parent : frontier) {
      if (stopped(options)) break;
      expand(parent, is_cwvg, children);
    }
    return children;
  }
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      std::vector<PosetNode> local;
      while (!stopped(options)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        expand(frontier[i], is_cwvg, local);
      }
      std::lock_guard<std::mutex> lock(merge);
      for (auto& node : local) children.push_back(std::move(node));
    });
  }
  for (auto& w : workers) w.join();
  return children;
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, int rank) {
  std::string name = std::to_string(rank);
  name.insert(0, name.size() < 4 ? 4 - name.size() : 0, '0');
  return dir / ("rank-" + name + ".json");
}

void write_checkpoint(const std::filesystem::path& dir, int n, int rank,
                      const EnumerationSummary& summary,
                      const std::vector<PosetNode>& frontier) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["rank"] = rank;
  doc["total"] = summary.total;
  doc["histogram"] = summary.histogram;
  auto& nodes = doc["frontier"] = nlohmann::json::array();
  for (const auto& node : frontier) nodes.push_back(to_strings(node.wmin()));
  std::filesystem::create_directories(dir);
  const auto target = checkpoint_path(dir, rank);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

struct Checkpoint {
  int rank = 0;
  EnumerationSummary summary;
  std::vector<PosetNode> frontier;
};

std::optional<Checkpoint> read_latest_checkpoint(const std::filesystem::path& dir, int n) {
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  std::optional<std::filesystem::path> latest;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("rank-", 0) != 0 || entry.path().extension() != ".json") continue;
    if (!latest || name > latest->filename().string()) latest = entry.path();
  }
  if (!latest) return std::nullopt;
  std::ifstream in(*latest);
  const auto doc = nlohmann::json::parse(in);
  if (doc.at("n").get<int>() != n) {
    throw std::invalid_argument("checkpoint " + latest->string() + " is for a different n");
  }
  Checkpoint cp;
  cp.rank = doc.at("rank").get<int>();
  cp.summary.total = doc.at("total").get<std::uint64_t>();
  cp.summary.histogram = doc.at("histogram").get<std::vector<std::uint64_t>>();
  for (const auto& entry : doc.at("frontier")) {
    CoalitionList wmin;
    for (const auto& text : entry) wmin.push_back(Coalition::parse(text.get<std::string>()));
    auto node = make_node(n, wmin);
    if (!node) throw std::invalid_argument("checkpoint holds a game that is not a CWVG");
    cp.frontier.push_back(std::move(*node));
  }
  return cp;
}

void record(EnumerationSummary& summary, const PosetNode& node) {
  const auto rank = static_cast<std::size_t>(node.rank());
  if (summary.histogram.size() <= rank) summary.histogram.resize(rank + 1, 0);
  ++summary.histogram[rank];
  ++summary.total;
}

EnumerationSummary breadth_first(int n, const EnumerateOptions& options,
                                 const NodeVisitor& visit) {
  EnumerationSummary summary;
  std::vector<PosetNode> frontier;
  int rank = 0;
  std::optional<Checkpoint> cp;
  if (options.resume && options.checkpoint_dir) {
    cp = read_latest_checkpoint(*options.checkpoint_dir, n);
  }
  if (cp) {
    rank = cp->rank;
    summary = std::move(cp->summary);
    frontier = std::move(cp->frontier);
  } else {
    frontier.push_back(bottom_node(n));
    record(summary, frontier.front());
    if (!visit(frontier.front())) return summary;
    if (options.checkpoint_dir) write_checkpoint(*options.checkpoint_dir, n, 0, summary, frontier);
  }
  const int threads = options.threads > 0 ? options.threads : threads_from_env();
  while (!frontier.empty()) {
    if (stopped(options)) return summary;
    KeySet previous;
    for (const auto& node : frontier) previous.insert(key_of(node.wmin()));
    const CwvgOracle in_previous = [&previous](const CoalitionList& list) {
      return previous.count(key_of(list)) > 0;
    };
    auto children = expand_frontier(frontier, in_previous, threads, options);
    if (stopped(options)) return summary;
    std::sort(children.begin(), children.end(), node_less);
    ++rank;
    for (const auto& child : children) {
      record(summary, child);
      if (!visit(child) || stopped(options)) return summary;
    }
    frontier = std::move(children);
    if (options.checkpoint_dir) {
      write_checkpoint(*options.checkpoint_dir, n, rank, summary, frontier);
    }
  }
  summary.complete = true;
  return summary;
}

EnumerationSummary depth_first(int n, const EnumerateOptions& options,
                               const NodeVisitor& visit) {
  EnumerationSummary summary;
  const CwvgOracle by_lp = [n](const CoalitionList& list) { return is_cwvg_by_lp(n, list); };
  std::vector<PosetNode> stack;
  stack.push_back(bottom_node(n));
  while (!stack.empty()) {
    if (stopped(options)) return summary;
    PosetNode node = std::move(stack.back());
    stack.pop_back();
    record(summary, node);
    if (!visit(node)) return summary;
    std::vector<PosetNode> children;
    expand(node, by_lp, children);
    std::sort(children.begin(), children.end(), node_less);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
  }
  summary.complete = true;
  return summary;
}

}  // namespace

PosetNode bottom_node(int n) { return *make_node(n, {}); }

std::optional<PosetNode> make_node(int n, const CoalitionList& wmin) {
  SimpleGame game(n, wmin);
  auto cert = certify_cwvg(game);
  if (!cert) return std::nullopt;
  return PosetNode{std::move(game), std::move(cert->ceilings), std::move(cert->witness)};
}

std::vector<Extension> extensions(const PosetNode& node) {
  std::vector<Extension> out;
  const int n = node.n();
  const auto& wmin = node.wmin();
  std::unordered_set<std::uint64_t> seen;
  for (const auto& ceiling : node.ceilings) {
    for (int i = 0; i <= ceiling.size(); ++i) {
      const Coalition added = *right_truncation(ceiling, i);
      if (!seen.insert(added.bits()).second) continue;
      const bool covered = std::any_of(wmin.begin(), wmin.end(), [&](const Coalition& s) {
        return added.is_subset_of(s);
      });
      if (covered) continue;
      CoalitionList list = wmin;
      list.insert(std::upper_bound(list.begin(), list.end(), added, PrLexiLess{}), added);
      WinTable table = node.game.table() ? *node.game.table() : WinTable(n);
      if (!node.game.table()) {
        for (const auto& s : wmin) table.add_upset(s.bits());
      }
      table.add_upset(added.bits());
      out.push_back(Extension{added, SimpleGame(n, std::move(list), std::move(table))});
    }
  }
  return out;
}

bool duplicates_check(const SimpleGame& candidate, const Coalition& added,
                      const CwvgOracle& is_cwvg) {
  const auto& wmin = candidate.min_winning();
  for (std::size_t k = 0; k < wmin.size(); ++k) {
    if (pr_lexi_compare(wmin[k], added) >= 0) break;
    // Removing a coalition that is not a roof leaves a winning right-shift
    // of it behind, so the smaller game cannot be canonical.
    if (!is_roof(candidate, wmin[k])) continue;
    CoalitionList smaller;
    smaller.reserve(wmin.size() - 1);
    for (std::size_t j = 0; j < wmin.size(); ++j) {
      if (j != k) smaller.push_back(wmin[j]);
    }
    if (is_cwvg(smaller)) return false;
  }
  return true;
}

bool is_cwvg_by_lp(int n, const CoalitionList& wmin) {
  return certify_cwvg(SimpleGame(n, wmin)).has_value();
}

EnumerationSummary enumerate_cwvg(int n, const EnumerateOptions& options,
                                  const NodeVisitor& visit) {
  if (n < 1 || n > kMaxTablePlayers) {
    throw std::invalid_argument("player count out of range for enumeration");
  }
  if (options.order == Traversal::depth_first) return depth_first(n, options, visit);
  return breadth_first(n, options, visit);
}

std::vector<std::uint64_t> count_by_rank(int n, const EnumerateOptions& options) {
  return enumerate_cwvg(n, options, [](const PosetNode&) { return true; }).histogram;
}

std::vector<CoalitionList> enumerate_antichains(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("antichain enumeration needs 1 <= n <= 4");
  const std::uint64_t coalitions = std::uint64_t{1} << n;
  std::vector<CoalitionList> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << coalitions); ++family) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t c = 0; c < coalitions; ++c) {
      if ((family >> c) & 1U) members.push_back(c);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < members.size() && antichain; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j && (members[i] & ~members[j]) == 0) {
          antichain = false;
          break;
        }
      }
    }
    if (!antichain) continue;
    CoalitionList list;
    for (std::uint64_t c : members) list.emplace_back(n, c);
    sort_pr_lexi(list);
    out.push_back(std::move(list));
  }
  return out;
}

int threads_from_env() {
  const char* text = std::getenv("WVG_THREADS");
  if (text == nullptr) return 1;
  try {
    return std::max(1, std::stoi(text));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace wvg
