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

#include "wvg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wvg/convert.hpp"
#include "wvg/design.hpp"
#include "wvg/enumeration.hpp"
#include "wvg/io.hpp"
#include "wvg/power_index.hpp"

namespace wvg {

namespace {

constexpr int kStandardCap = 7;

// Raised for bad input that CLI11 cannot catch itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool interrupted(const std::atomic<bool>* stop) {
  return stop != nullptr && stop->load(std::memory_order_relaxed);
}

Traversal parse_order(const std::string& text) {
  if (text == "bfs" || text == "breadth-first") return Traversal::breadth_first;
  if (text == "dfs" || text == "depth-first") return Traversal::depth_first;
  throw UsageError("order must be bfs or dfs");
}

void check_n(int n, bool extended) {
  const int cap = extended ? kDefaultEnumerationCap : kStandardCap;
  if (n < 1 || n > cap) {
    throw UsageError("-n must lie in [1, " + std::to_string(cap) + "]" +
                     (extended ? "" : "; pass --extended for up to 9 players"));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Opens --output when given, otherwise writes to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::string cleaned = text;
  std::replace_if(cleaned.begin(), cleaned.end(),
                  [](char c) { return c == ',' || c == '[' || c == ']' || c == '\n' || c == '\t'; },
                  ' ');
  std::istringstream in(cleaned);
  while (in >> item) {
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') {
      item = item.substr(1, item.size() - 2);
    }
    out.push_back(parse_rational(item).get_d());
  }
  return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += format_rational(values[i]);
  }
  return out;
}

std::string join_doubles(const std::vector<double>& values) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << values[i];
  }
  return out.str();
}

struct EnumerateArgs {
  int n = 0;
  std::string order = "bfs";
  bool extended = false;
  std::string output;
  std::string checkpoint_dir;
  bool resume = false;
  int threads = 0;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, const std::atomic<bool>* stop) {
  check_n(args.n, args.extended);
  EnumerateOptions options;
  options.order = parse_order(args.order);
  options.threads = args.threads;
  options.stop = stop;
  options.resume = args.resume;
  if (!args.checkpoint_dir.empty()) {
    if (options.order != Traversal::breadth_first) {
      throw UsageError("checkpoints need breadth-first order");
    }
    options.checkpoint_dir = args.checkpoint_dir;
  } else if (args.resume) {
    throw UsageError("--resume needs --checkpoint-dir");
  }
  Sink sink(args.output, out);
  const auto summary = enumerate_cwvg(args.n, options, [&](const PosetNode& node) {
    *sink << node_record(node).dump() << '\n';
    return true;
  });
  *sink << summary_record(args.n, summary).dump() << '\n';
  (*sink).flush();
  return summary.complete ? kExitOk : kExitInterrupted;
}

struct CountArgs {
  int n = 0;
  bool extended = false;
  int threads = 0;
};

int cmd_count(const CountArgs& args, std::ostream& out, const std::atomic<bool>* stop) {
  check_n(args.n, args.extended);
  EnumerateOptions options;
  options.threads = args.threads;
  options.stop = stop;
  const auto summary = enumerate_cwvg(args.n, options, [](const PosetNode&) { return true; });
  out << summary_record(args.n, summary).dump() << '\n';
  return summary.complete ? kExitOk : kExitInterrupted;
}

struct ConvertArgs {
  std::string input;
  std::string game;
  std::string to;
  bool allow_exponential = false;
  std::string output;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out) {
  if (args.input.empty() == args.game.empty()) {
    throw UsageError("give exactly one of --input and --game");
  }
  const std::string text = args.input.empty() ? args.game : read_file(args.input);
  GameRep game;
  try {
    game = game_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed game: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed game: ") + e.what());
  }
  const RepKind target = parse_rep_kind(args.to);
  const ConversionResult result = convert(game, target, args.allow_exponential);
  Json doc{{"result", to_string(result.status)}};
  if (result.game) doc["game"] = to_json(*result.game);
  if (!result.message.empty()) doc["message"] = result.message;
  doc["complexity"] = to_string(result.complexity);
  Sink sink(args.output, out);
  *sink << doc.dump() << '\n';
  return result.status == ConversionResult::Status::ok ? kExitOk : kExitDomain;
}

struct BanzhafArgs {
  std::string weights;
  std::string input;
  bool json = false;
};

int cmd_banzhaf(const BanzhafArgs& args, std::ostream& out) {
  if (args.weights.empty() == args.input.empty()) {
    throw UsageError("give exactly one of --weights and --input");
  }
  GameRep game;
  try {
    game = args.weights.empty() ? game_from_json(Json::parse(read_file(args.input)))
                                : GameRep::from_weights(WeightedForm::parse(args.weights));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed game: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed game: ") + e.what());
  }
  if (game.n() > kMaxTablePlayers) throw UsageError("banzhaf supports at most 26 players");
  const BanzhafIndex index = banzhaf(game);
  if (args.json) {
    out << to_json(index).dump() << '\n';
  } else {
    out << join_rationals(index.normalized) << '\n';
  }
  return kExitOk;
}

struct SolveArgs {
  std::string target;
  std::string target_file;
  int n = 0;
  std::string order = "bfs";
  std::uint64_t games_budget = 0;
  double time_budget = 0.0;
  bool sort = false;
  bool extended = false;
  std::string report;
  int threads = 0;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, const std::atomic<bool>* stop) {
  if (args.target.empty() == args.target_file.empty()) {
    throw UsageError("give exactly one of --target and --target-file");
  }
  std::vector<double> raw;
  try {
    raw = parse_vector(args.target.empty() ? read_file(args.target_file) : args.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed target: ") + e.what());
  }
  const int n = args.n > 0 ? args.n : static_cast<int>(raw.size());
  if (static_cast<int>(raw.size()) != n) throw UsageError("target length must equal -n");
  const bool budgeted = args.games_budget > 0 || args.time_budget > 0.0;
  if (budgeted) {
    check_n(n, true);
  } else {
    check_n(n, args.extended);
  }
  std::vector<int> permutation;
  TargetIndex target;
  try {
    if (args.sort) {
      auto canonical = canonicalize_target(raw);
      target = std::move(canonical.target);
      permutation = std::move(canonical.permutation);
    } else {
      target = make_target(raw);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed target: ") + e.what());
  }

  SolveOptions options;
  options.order = parse_order(args.order);
  options.threads = args.threads;
  options.stop = stop;
  if (args.games_budget > 0) options.game_budget = args.games_budget;
  if (args.time_budget > 0.0) options.time_budget_seconds = args.time_budget;
  options.on_improvement = [&](const Improvement& step) {
    Json line = to_json(step);
    if (!permutation.empty()) line["weights_original_labels"] = to_json(restore_labels(step.weights, permutation).integral());
    out << line.dump() << '\n';
    out.flush();
  };
  const SolveReport report = solve_pvgd(target, n, options);
  Json final_report = to_json(report);
  final_report["final"] = true;
  if (!permutation.empty()) final_report["permutation"] = permutation;
  out << final_report.dump() << '\n';
  out.flush();
  if (!args.report.empty()) {
    std::ofstream file(args.report);
    if (!file) throw UsageError("cannot write " + args.report);
    file << final_report.dump(2) << '\n';
  }
  return interrupted(stop) ? kExitInterrupted : kExitOk;
}

struct SampleArgs {
  int n = 0;
  std::uint64_t seed = 1;
  int count = 1;
};

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  if (args.n < 1 || args.n > kMaxPlayers) throw UsageError("-n must lie in [1, 64]");
  if (args.count < 1) throw UsageError("--count must be positive");
  std::mt19937_64 rng(args.seed);
  for (int k = 0; k < args.count; ++k) {
    out << join_doubles(sample_canonical_target(args.n, rng).p) << '\n';
  }
  return kExitOk;
}

struct ExperimentArgs {
  int experiment = 0;
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  int instances = 100;
  std::uint64_t seed = 1;
  std::uint64_t games_budget = 10000;
  std::string order = "bfs";
  bool extended = false;
  std::string output;
  int threads = 0;
};

int cmd_experiments(const ExperimentArgs& args, std::ostream& out, const std::atomic<bool>* stop) {
  ExperimentConfig config;
  config.experiment = args.experiment;
  config.n_min = args.n_min > 0 ? args.n_min : args.n;
  config.n_max = args.n_max > 0 ? args.n_max : (args.n > 0 ? args.n : config.n_min);
  config.instances = args.instances;
  config.seed = args.seed;
  config.game_budget = args.games_budget;
  config.order = parse_order(args.order);
  config.threads = args.threads;
  config.stop = stop;
  if (config.experiment != 4) check_n(config.n_max, args.extended);
  check_n(config.n_min, true);
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(args.output, out);
  const bool finished = run_experiment(config, *sink);
  (*sink).flush();
  return finished ? kExitOk : kExitInterrupted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* stop) {
  CLI::App app{"Weighted voting game enumeration, synthesis and design", "wvg"};
  app.require_subcommand(1);

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every canonical weighted voting game as JSONL");
  enumerate->add_option("-n", enumerate_args.n, "Number of players")->required();
  enumerate->add_option("--order", enumerate_args.order, "bfs or dfs");
  enumerate->add_flag("--extended", enumerate_args.extended, "Allow up to 9 players");
  enumerate->add_option("-o,--output", enumerate_args.output, "Write JSONL here instead of stdout");
  enumerate->add_option("--checkpoint-dir", enumerate_args.checkpoint_dir, "Write rank checkpoints here");
  enumerate->add_flag("--resume", enumerate_args.resume, "Continue from the newest checkpoint");
  enumerate->add_option("--threads", enumerate_args.threads, "Worker threads (default WVG_THREADS)");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count canonical weighted voting games per rank");
  count->add_option("-n", count_args.n, "Number of players")->required();
  count->add_flag("--extended", count_args.extended, "Allow up to 9 players");
  count->add_option("--threads", count_args.threads, "Worker threads (default WVG_THREADS)");

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a game between representations");
  convert_cmd->add_option("-i,--input", convert_args.input, "Game JSON file");
  convert_cmd->add_option("--game", convert_args.game, "Game JSON text");
  convert_cmd->add_option("--to", convert_args.to, "w, l, wmin, lmax, roof, ceil or weights")->required();
  convert_cmd->add_flag("--allow-exponential", convert_args.allow_exponential,
                        "Permit conversions that may take exponential time");
  convert_cmd->add_option("-o,--output", convert_args.output, "Write JSON here instead of stdout");

  BanzhafArgs banzhaf_args;
  auto* banzhaf_cmd = app.add_subcommand("banzhaf", "Normalized Banzhaf index of a game");
  banzhaf_cmd->add_option("--weights", banzhaf_args.weights, "Weighted form \"q;w1,w2,...\"");
  banzhaf_cmd->add_option("-i,--input", banzhaf_args.input, "Game JSON file");
  banzhaf_cmd->add_flag("--json", banzhaf_args.json, "Print raw and normalized values as JSON");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Anytime search for the game closest to a target Banzhaf index");
  solve->add_option("--target", solve_args.target, "Comma separated target, e.g. 0.6,0.2,0.2");
  solve->add_option("--target-file", solve_args.target_file, "File holding the target vector");
  solve->add_option("-n", solve_args.n, "Number of players (default: target length)");
  solve->add_option("--order", solve_args.order, "bfs or dfs");
  solve->add_option("--games-budget", solve_args.games_budget, "Stop after scoring this many games");
  solve->add_option("--time-budget", solve_args.time_budget, "Stop after this many seconds");
  solve->add_flag("--sort", solve_args.sort, "Sort a non-canonical target and report the permutation");
  solve->add_flag("--extended", solve_args.extended, "Allow exhaustive runs up to 9 players");
  solve->add_option("--report", solve_args.report, "Write the final report JSON here");
  solve->add_option("--threads", solve_args.threads, "Worker threads (default WVG_THREADS)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Sample uniform canonical target indices");
  sample->add_option("-n", sample_args.n, "Number of players")->required();
  sample->add_option("--seed", sample_args.seed, "Random seed");
  sample->add_option("--count", sample_args.count, "Number of targets");

  ExperimentArgs experiment_args;
  auto* experiments = app.add_subcommand("experiments", "Run an experiment and print CSV");
  experiments->add_option("--exp", experiment_args.experiment, "Experiment 1, 2, 3 or 4")->required();
  experiments->add_option("-n", experiment_args.n, "Single player count");
  experiments->add_option("--n-min", experiment_args.n_min, "Smallest player count");
  experiments->add_option("--n-max", experiment_args.n_max, "Largest player count");
  experiments->add_option("--instances", experiment_args.instances, "Targets per player count");
  experiments->add_option("--seed", experiment_args.seed, "Random seed");
  experiments->add_option("--games-budget", experiment_args.games_budget, "Experiment 4 game budget");
  experiments->add_option("--order", experiment_args.order, "bfs or dfs");
  experiments->add_flag("--extended", experiment_args.extended, "Allow up to 9 players");
  experiments->add_option("-o,--output", experiment_args.output, "Write CSV here instead of stdout");
  experiments->add_option("--threads", experiment_args.threads, "Worker threads (default WVG_THREADS)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(enumerate_args, out, stop);
    if (count->parsed()) return cmd_count(count_args, out, stop);
    if (convert_cmd->parsed()) return cmd_convert(convert_args, out);
    if (banzhaf_cmd->parsed()) return cmd_banzhaf(banzhaf_args, out);
    if (solve->parsed()) return cmd_solve(solve_args, out, stop);
    if (sample->parsed()) return cmd_sample(sample_args, out);
    if (experiments->parsed()) return cmd_experiments(experiment_args, out, stop);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace wvg
