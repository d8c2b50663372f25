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

#include "eppt/baselines.h"

#include <algorithm>
#include <vector>

#include "eppt/rng.h"

namespace eppt {
namespace {

constexpr double kBudgetSlack = 1e-12;
constexpr double kGainTie = 1e-12;

// Incremental coverage bookkeeping shared by both baselines.
class CoverageState {
 public:
  explicit CoverageState(const Instance& instance)
      : instance_(instance),
        covered_(instance.num_households(), false),
        counts_(instance.num_groups(), 0),
        scratch_(instance.num_groups(), 0) {}

  bool AllCovered() const { return num_covered_ == instance_.num_households(); }
  double Equity() const { return EquityFromCounts(instance_, counts_); }

  // Equity and newly covered count if program j were added.
  std::pair<double, int> Preview(int j) {
    std::copy(counts_.begin(), counts_.end(), scratch_.begin());
    int fresh = 0;
    for (int i : instance_.programs()[j].covers) {
      if (covered_[i]) continue;
      ++fresh;
      for (int g : instance_.groups_of(i)) ++scratch_[g];
    }
    return {EquityFromCounts(instance_, scratch_), fresh};
  }

  void Add(int j) {
    for (int i : instance_.programs()[j].covers) {
      if (covered_[i]) continue;
      covered_[i] = true;
      ++num_covered_;
      for (int g : instance_.groups_of(i)) ++counts_[g];
    }
  }

 private:
  const Instance& instance_;
  std::vector<bool> covered_;
  std::vector<int> counts_;
  std::vector<int> scratch_;
  int num_covered_ = 0;
};

}  // namespace

StrategyOutcome Greedy(const Instance& instance) {
  const int n = instance.num_programs();
  std::vector<bool> open(n, false);
  CoverageState state(instance);
  double remaining = instance.budget();
  while (!state.AllCovered()) {
    int best = -1;
    double best_equity = 0.0;
    int best_fresh = 0;
    for (int j = 0; j < n; ++j) {
      const double cost = instance.costs()[j];
      if (open[j] || cost > remaining + kBudgetSlack) continue;
      const auto [equity, fresh] = state.Preview(j);
      bool better = best < 0;
      if (!better) {
        if (equity > best_equity + kGainTie) {
          better = true;
        } else if (equity >= best_equity - kGainTie) {
          better = fresh > best_fresh ||
                   (fresh == best_fresh && cost < instance.costs()[best]);
        }
      }
      if (better) {
        best = j;
        best_equity = equity;
        best_fresh = fresh;
      }
    }
    if (best < 0) break;
    open[best] = true;
    remaining -= instance.costs()[best];
    state.Add(best);
  }
  return Evaluate(instance, DeterministicStrategy{open});
}

StrategyOutcome Uniform(const Instance& instance, std::uint64_t seed) {
  Rng rng(seed);
  const int n = instance.num_programs();
  std::vector<bool> open(n, false);
  CoverageState state(instance);
  double remaining = instance.budget();
  // Unaffordable programs never become affordable again, so drawing from
  // the whole pool and discarding those draws is uniform over the affordable
  // ones.
  std::vector<int> pool(n);
  for (int j = 0; j < n; ++j) pool[j] = j;
  while (!pool.empty() && !state.AllCovered()) {
    const size_t k = rng.UniformIndex(pool.size());
    const int j = pool[k];
    pool[k] = pool.back();
    pool.pop_back();
    if (instance.costs()[j] > remaining + kBudgetSlack) continue;
    open[j] = true;
    remaining -= instance.costs()[j];
    state.Add(j);
  }
  return Evaluate(instance, DeterministicStrategy{open});
}

}  // namespace eppt
