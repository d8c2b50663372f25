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

// Exact oracles for small instances: the feasible strategy space, the best
// deterministic strategy and the best randomized strategy (a distribution
// over feasible strategies found by LP). They refuse instances that are too
// large instead of approximating.

#ifndef EPPT_ORACLES_H_
#define EPPT_ORACLES_H_

#include <vector>

#include "eppt/model.h"

namespace eppt {

inline constexpr int kMaxEnumerablePrograms = 20;
inline constexpr int kMaxDistributionAtoms = 100'000;

class InstanceTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StrategySpace {
  std::vector<DeterministicStrategy> feasible;

  int count() const { return static_cast<int>(feasible.size()); }
};

// Every selection with total cost <= B, in lexicographic order of the
// selection bits (program 0 most significant, unselected first).
StrategySpace EnumerateFeasible(const Instance& instance);

struct DeterministicOptimum {
  StrategyOutcome outcome;
  double value = 0.0;
};

// Ties in equity go to the cheaper strategy.
DeterministicOptimum OptDeterministic(const Instance& instance);

struct RandomizedStrategy {
  std::vector<DeterministicStrategy> atoms;
  std::vector<double> weights;
};

struct RandomizedOptimum {
  RandomizedStrategy strategy;
  double value = 0.0;
};

struct RandomizedOracleOptions {
  // Drop strategies whose coverage is contained in another feasible
  // strategy's coverage before building the distribution LP.
  bool prune_dominated = false;
};

// max t  s.t.  t <= sum_k q_k ratio_g(phi_k) for every g,  sum_k q_k = 1.
RandomizedOptimum OptRandomized(const Instance& instance,
                                RandomizedOracleOptions options = {});

}  // namespace eppt

#endif  // EPPT_ORACLES_H_
