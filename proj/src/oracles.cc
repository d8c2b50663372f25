// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eppt/oracles.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eppt/simplex.h"

namespace eppt {
namespace {

constexpr double kCostSlack = 1e-9;

void CheckEnumerable(const Instance& instance) {
  if (instance.num_programs() > kMaxEnumerablePrograms) {
    throw InstanceTooLargeError("instance has " +
                                std::to_string(instance.num_programs()) +
                                " programs; enumeration supports at most " +
                                std::to_string(kMaxEnumerablePrograms));
  }
}

void Enumerate(const Instance& instance, int j, double remaining,
               std::vector<bool>& current, StrategySpace& out) {
  if (j == instance.num_programs()) {
    out.feasible.push_back(DeterministicStrategy{current});
    return;
  }
  Enumerate(instance, j + 1, remaining, current, out);
  const double c = instance.costs()[j];
  if (c <= remaining + kCostSlack) {
    current[j] = true;
    Enumerate(instance, j + 1, remaining - c, current, out);
    current[j] = false;
  }
}

// Coverage bitmap of a strategy over households.
std::vector<bool> CoverageOf(const Instance& instance,
                             const DeterministicStrategy& s) {
  std::vector<bool> covered(instance.num_households(), false);
  for (int j = 0; j < s.size(); ++j) {
    if (!s.selected[j]) continue;
    for (int i : instance.programs()[j].covers) covered[i] = true;
  }
  return covered;
}

bool IsSubset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::vector<DeterministicStrategy> PruneDominated(
    const Instance& instance, std::vector<DeterministicStrategy> strategies) {
  std::vector<std::vector<bool>> cover;
  std::vector<int> size;
  for (const auto& s : strategies) {
    cover.push_back(CoverageOf(instance, s));
    size.push_back(static_cast<int>(
        std::count(cover.back().begin(), cover.back().end(), true)));
  }
  std::vector<int> order(strategies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return size[a] > size[b]; });
  // Keep one representative per maximal coverage set.
  std::vector<int> kept;
  for (int k : order) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](int m) {
      return IsSubset(cover[k], cover[m]);
    });
    if (!dominated) kept.push_back(k);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<DeterministicStrategy> out;
  for (int k : kept) out.push_back(std::move(strategies[k]));
  return out;
}

}  // namespace

StrategySpace EnumerateFeasible(const Instance& instance) {
  CheckEnumerable(instance);
  StrategySpace space;
  std::vector<bool> current(instance.num_programs(), false);
  Enumerate(instance, 0, instance.budget(), current, space);
  return space;
}

DeterministicOptimum OptDeterministic(const Instance& instance) {
  const StrategySpace space = EnumerateFeasible(instance);
  DeterministicOptimum best;
  bool have = false;
  for (const DeterministicStrategy& s : space.feasible) {
    StrategyOutcome o = Evaluate(instance, s);
    if (!have || o.equity > best.value + 1e-12 ||
        (o.equity >= best.value - 1e-12 &&
         o.total_cost < best.outcome.total_cost)) {
      best.value = o.equity;
      best.outcome = std::move(o);
      have = true;
    }
  }
  return best;
}

RandomizedOptimum OptRandomized(const Instance& instance,
                                RandomizedOracleOptions options) {
  std::vector<DeterministicStrategy> atoms =
      EnumerateFeasible(instance).feasible;
  if (options.prune_dominated) {
    atoms = PruneDominated(instance, std::move(atoms));
  }
  if (static_cast<int>(atoms.size()) > kMaxDistributionAtoms) {
    throw InstanceTooLargeError(
        std::to_string(atoms.size()) +
        " feasible strategies exceed the distribution LP limit");
  }
  const int k = static_cast<int>(atoms.size());
  const int num_groups = instance.num_groups();
  std::vector<std::vector<double>> ratios(k);
  for (int a = 0; a < k; ++a) {
    ratios[a] = Evaluate(instance, atoms[a]).group_ratios;
  }

  lp::LinearProgram program;
  const int t = program.AddVariable("t", 1.0, 1.0);
  for (int a = 0; a < k; ++a) {
    program.AddVariable("q_" + std::to_string(a), 0.0, 1.0);
  }
  for (int g = 0; g < num_groups; ++g) {
    std::vector<lp::Term> terms = {{t, 1.0}};
    for (int a = 0; a < k; ++a) {
      if (ratios[a][g] != 0) terms.push_back({1 + a, -ratios[a][g]});
    }
    program.AddRow("equity_" + std::to_string(g), std::move(terms),
                   lp::RowSense::kLessEqual, 0.0);
  }
  std::vector<lp::Term> simplex_row;
  for (int a = 0; a < k; ++a) simplex_row.push_back({1 + a, 1.0});
  program.AddRow("distribution", std::move(simplex_row), lp::RowSense::kEqual,
                 1.0);

  const lp::Solution sol = lp::DenseSimplexSolver().Solve(program);
  if (sol.status != lp::SolveStatus::kOptimal) {
    throw std::runtime_error(std::string("distribution LP not solved: ") +
                             lp::SolveStatusName(sol.status));
  }
  RandomizedOptimum out;
  out.value = sol.values[t];
  for (int a = 0; a < k; ++a) {
    const double q = sol.values[1 + a];
    if (q <= 0) continue;
    out.strategy.atoms.push_back(atoms[a]);
    out.strategy.weights.push_back(q);
  }
  return out;
}

}  // namespace eppt
