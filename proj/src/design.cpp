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

#include "wvg/design.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "wvg/power_index.hpp"

namespace wvg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool stop_requested(const std::atomic<bool>* stop) {
  return stop != nullptr && stop->load(std::memory_order_relaxed);
}

}  // namespace

TargetIndex make_target(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("target must have at least one entry");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0) {
      throw std::invalid_argument("target entries must be finite and non-negative");
    }
    if (i > 0 && p[i] > p[i - 1]) {
      throw std::invalid_argument("target must be non-increasing; canonicalize it first");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kTargetSumTolerance) {
    throw std::invalid_argument("target entries must sum to 1");
  }
  return TargetIndex{std::move(p)};
}

CanonicalTarget canonicalize_target(const std::vector<double>& p) {
  std::vector<int> permutation(p.size());
  std::iota(permutation.begin(), permutation.end(), 1);
  std::stable_sort(permutation.begin(), permutation.end(), [&](int a, int b) {
    return p[static_cast<std::size_t>(a - 1)] > p[static_cast<std::size_t>(b - 1)];
  });
  std::vector<double> sorted;
  for (int player : permutation) sorted.push_back(p[static_cast<std::size_t>(player - 1)]);
  return CanonicalTarget{make_target(std::move(sorted)), std::move(permutation)};
}

WeightedForm restore_labels(const WeightedForm& form, const std::vector<int>& permutation) {
  WeightedForm out{form.quota, std::vector<Rational>(form.weights.size())};
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    out.weights[static_cast<std::size_t>(permutation[k] - 1)] = form.weights[k];
  }
  return out;
}

TargetIndex sample_canonical_target(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("target needs n >= 1");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> cuts;
  for (int i = 0; i + 1 < n; ++i) cuts.push_back(uniform(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> p;
  double previous = 0.0;
  for (double c : cuts) {
    p.push_back(c - previous);
    previous = c;
  }
  p.push_back(1.0 - previous);
  std::sort(p.begin(), p.end(), std::greater<>());
  return TargetIndex{std::move(p)};
}

TargetIndex sample_canonical_target(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_canonical_target(n, rng);
}

SolveReport solve_pvgd(const TargetIndex& target, int n, const SolveOptions& options) {
  if (target.n() != n) throw std::invalid_argument("target length must equal n");
  const auto start = Clock::now();
  SolveReport report;
  EnumerateOptions enumerate;
  enumerate.order = options.order;
  enumerate.threads = options.threads;
  enumerate.stop = options.stop;
  const auto summary = enumerate_cwvg(n, enumerate, [&](const PosetNode& node) {
    if (options.game_budget && report.games_scored >= *options.game_budget) return false;
    if (options.time_budget_seconds && seconds_since(start) >= *options.time_budget_seconds) {
      return false;
    }
    if (stop_requested(options.stop)) return false;
    ++report.games_scored;
    BanzhafIndex index = banzhaf(node.game);
    const double error = euclidean_error(index.normalized, target.p);
    if (report.best && error >= report.best->error) return true;
    Improvement found{seconds_since(start), report.games_scored, error, node.witness,
                      node.wmin(), std::move(index.normalized)};
    report.improvements.push_back(found);
    report.best = std::move(found);
    if (options.on_improvement) options.on_improvement(*report.best);
    return true;
  });
  report.exhausted = summary.complete;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

MonotoneOptimum solve_monotonic_pvgd(const TargetIndex& target, int n) {
  if (target.n() != n) throw std::invalid_argument("target length must equal n");
  std::optional<MonotoneOptimum> best;
  for (auto& wmin : enumerate_antichains(n)) {
    BanzhafIndex index = banzhaf(SimpleGame(n, wmin));
    const double error = euclidean_error(index.normalized, target.p);
    if (best && error >= best->error) continue;
    best = MonotoneOptimum{std::move(wmin), std::move(index.normalized), error};
  }
  return *best;
}

void validate(const ExperimentConfig& config) {
  if (config.experiment < 1 || config.experiment > 4) {
    throw std::invalid_argument("experiment must be 1, 2, 3 or 4");
  }
  if (config.n_min < 1 || config.n_max < config.n_min ||
      config.n_max > kDefaultEnumerationCap) {
    throw std::invalid_argument("need 1 <= n_min <= n_max <= 9");
  }
  if (config.instances < 1) throw std::invalid_argument("instances must be positive");
  if (config.experiment == 4 && config.game_budget == 0) {
    throw std::invalid_argument("experiment 4 needs a positive game budget");
  }
}

bool run_experiment(const ExperimentConfig& config, std::ostream& csv) {
  validate(config);
  EnumerateOptions enumerate;
  enumerate.order = config.order;
  enumerate.threads = config.threads;
  enumerate.stop = config.stop;
  const auto keep_going = [&](const PosetNode&) { return !stop_requested(config.stop); };

  switch (config.experiment) {
    case 1: {
      csv << "n,games,seconds\n";
      for (int n = config.n_min; n <= config.n_max; ++n) {
        const auto start = Clock::now();
        const auto summary = enumerate_cwvg(n, enumerate, keep_going);
        if (!summary.complete) return false;
        csv << n << ',' << summary.total << ',' << seconds_since(start) << '\n';
      }
      return true;
    }
    case 2: {
      csv << "n,rank,count\n";
      for (int n = config.n_min; n <= config.n_max; ++n) {
        const auto summary = enumerate_cwvg(n, enumerate, keep_going);
        if (!summary.complete) return false;
        for (std::size_t rank = 0; rank < summary.histogram.size(); ++rank) {
          csv << n << ',' << rank << ',' << summary.histogram[rank] << '\n';
        }
      }
      return true;
    }
    case 3: {
      csv << "n,instances,mean_error,worst_error,stddev_error\n";
      for (int n = config.n_min; n <= config.n_max; ++n) {
        // The optimal error depends only on the set of reachable indices.
        std::set<std::vector<double>> indices;
        const auto summary = enumerate_cwvg(n, enumerate, [&](const PosetNode& node) {
          std::vector<double> point;
          for (const auto& v : banzhaf(node.game).normalized) point.push_back(v.get_d());
          indices.insert(std::move(point));
          return !stop_requested(config.stop);
        });
        if (!summary.complete) return false;
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(n));
        std::vector<double> errors;
        for (int k = 0; k < config.instances; ++k) {
          const TargetIndex target = sample_canonical_target(n, rng);
          double best = INFINITY;
          for (const auto& point : indices) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
              const double d = point[static_cast<std::size_t>(i)] - target.p[static_cast<std::size_t>(i)];
              sum += d * d;
            }
            best = std::min(best, std::sqrt(sum));
          }
          errors.push_back(best);
        }
        const double mean = std::accumulate(errors.begin(), errors.end(), 0.0) /
                            static_cast<double>(errors.size());
        double spread = 0.0;
        for (double e : errors) spread += (e - mean) * (e - mean);
        csv << n << ',' << config.instances << ',' << mean << ','
            << *std::max_element(errors.begin(), errors.end()) << ','
            << std::sqrt(spread / static_cast<double>(errors.size())) << '\n';
      }
      return true;
    }
    default: {
      csv << "n,instance,game_number,seconds,error\n";
      for (int n = config.n_min; n <= config.n_max; ++n) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(n));
        for (int k = 0; k < config.instances; ++k) {
          const TargetIndex target = sample_canonical_target(n, rng);
          SolveOptions options;
          options.order = config.order;
          options.threads = config.threads;
          options.stop = config.stop;
          options.game_budget = config.game_budget;
          const SolveReport report = solve_pvgd(target, n, options);
          for (const auto& step : report.improvements) {
            csv << n << ',' << k << ',' << step.game_number << ',' << step.elapsed_seconds
                << ',' << step.error << '\n';
          }
          if (stop_requested(config.stop)) return false;
        }
      }
      return true;
    }
  }
}

}  // namespace wvg
