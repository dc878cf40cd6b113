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

#ifndef WVG_DESIGN_HPP_
#define WVG_DESIGN_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "wvg/coalition.hpp"
#include "wvg/enumeration.hpp"
#include "wvg/game.hpp"
#include "wvg/rational.hpp"

namespace wvg {

inline constexpr double kTargetSumTolerance = 1e-12;

// A target power index: non-negative, non-increasing, summing to 1.
struct TargetIndex {
  std::vector<double> p;
  int n() const { return static_cast<int>(p.size()); }
};

// Throws std::invalid_argument unless p is a canonical target.
TargetIndex make_target(std::vector<double> p);

// Sorts a general target into non-increasing order. permutation[k] is the
// original player that becomes player k + 1.
struct CanonicalTarget {
  TargetIndex target;
  std::vector<int> permutation;
};
CanonicalTarget canonicalize_target(const std::vector<double>& p);

// Weights of a canonical solution, relabelled to the original players.
WeightedForm restore_labels(const WeightedForm& form, const std::vector<int>& permutation);

// Uniform point of the unit simplex from sorted uniform spacings, sorted
// non-increasing.
TargetIndex sample_canonical_target(int n, std::mt19937_64& rng);
TargetIndex sample_canonical_target(int n, std::uint64_t seed);

struct Improvement {
  double elapsed_seconds = 0.0;
  std::uint64_t game_number = 0;  // 1-based position in the stream
  double error = 0.0;
  WeightedForm weights;
  CoalitionList wmin;
  std::vector<Rational> index;
};

struct SolveReport {
  std::vector<Improvement> improvements;  // strictly decreasing error
  std::optional<Improvement> best;
  bool exhausted = false;
  std::uint64_t games_scored = 0;
  double elapsed_seconds = 0.0;
};

struct SolveOptions {
  Traversal order = Traversal::breadth_first;
  std::optional<std::uint64_t> game_budget;
  std::optional<double> time_budget_seconds;
  int threads = 0;
  const std::atomic<bool>* stop = nullptr;
  // Called for every improvement as soon as it is found.
  std::function<void(const Improvement&)> on_improvement;
};

// Anytime search over canonical weighted voting games for the Banzhaf
// index closest to the target. Ties keep the earlier game.
SolveReport solve_pvgd(const TargetIndex& target, int n, const SolveOptions& options = {});

struct MonotoneOptimum {
  CoalitionList wmin;
  std::vector<Rational> index;
  double error = 0.0;
};

// Exact optimum over all monotone simple games, n <= 4.
MonotoneOptimum solve_monotonic_pvgd(const TargetIndex& target, int n);

struct ExperimentConfig {
  int experiment = 1;  // 1: timings, 2: rank histograms, 3: optimal errors,
                       // 4: bounded convergence traces
  int n_min = 1;
  int n_max = 1;
  int instances = 100;
  std::uint64_t seed = 1;
  std::uint64_t game_budget = 10000;
  Traversal order = Traversal::breadth_first;
  int threads = 0;
  const std::atomic<bool>* stop = nullptr;
};

// Throws std::invalid_argument on a bad configuration.
void validate(const ExperimentConfig& config);

// Writes the experiment's CSV, header first. Returns false if interrupted.
bool run_experiment(const ExperimentConfig& config, std::ostream& csv);

}  // namespace wvg

#endif  // WVG_DESIGN_HPP_
