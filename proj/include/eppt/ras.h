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

// Randomized allocation by weighted dependent rounding.
//
// Starting from the LP optimum x*, the rounding repeatedly picks two
// fractional entries X_p, X_q and moves them along the direction that keeps
// c_p X_p + c_q X_q fixed until one of them hits 0 or 1:
//
//   alpha = min(1 - X_p, X_q c_q / c_p)    (X_p goes up)
//   beta  = min(X_p, (1 - X_q) c_q / c_p)  (X_p goes down)
//
//   with probability beta / (alpha + beta):  X_p += alpha, X_q -= c_p alpha /
//   c_q otherwise:                               X_p -= beta,  X_q += c_p beta
//   / c_q
//
// When a single fractional entry X_j remains it is set to 1 with probability
// X_j and to 0 otherwise. Each step keeps E[X_j] unchanged, never increases
// E[prod_{j in S} (1 - X_j)] for any S, and only the final single-entry step
// can change the total cost (by at most c_j). Consequently the output costs
// at most B in expectation and at most B + max_j c_j on every run, and each
// household is covered with probability at least (1 - 1/e) y*_i.
//
// Entries within kIntegralityTol of 0 or 1 are snapped and treated as
// integral. Zero-cost programs are opened outright and never paired.

#ifndef EPPT_RAS_H_
#define EPPT_RAS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eppt/model.h"

namespace eppt {

inline constexpr double kIntegralityTol = 1e-9;

// Largest program count ExactExpectation() accepts.
inline constexpr int kMaxExactPrograms = 24;

inline bool IsFractional(double v) {
  return v > kIntegralityTol && v < 1.0 - kIntegralityTol;
}
double SnapIntegral(double v);

// A (possibly fractional) allocation over the programs. The costs are
// borrowed, typically from Instance::costs(), and must outlive the vector.
class AllocationVector {
 public:
  AllocationVector(std::vector<double> values, std::span<const double> costs);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  std::span<const double> values() const { return values_; }
  std::span<const double> costs() const { return costs_; }
  double WeightedSum() const;
  bool IsIntegral() const;

  void Set(int j, double v) { values_[j] = v; }

 private:
  std::vector<double> values_;
  std::span<const double> costs_;
};

struct TwistStep {
  int p = -1;
  int q = -1;
  double alpha = 0.0;
  double beta = 0.0;

  double prob_up() const { return beta / (alpha + beta); }
};

// Throws std::invalid_argument unless X_p and X_q are both strictly
// fractional, p != q and both costs are positive.
TwistStep PlanTwist(const AllocationVector& x, int p, int q);

// Applies the "up" (X_p += alpha) or "down" (X_p -= beta) branch in place.
// The entry that reaches its bound is set exactly to 0 or 1.
void ApplyTwistBranch(AllocationVector& x, const TwistStep& step, bool up);

// One pairwise step; `coin` is uniform on [0, 1) and selects the up branch
// when coin < prob_up.
AllocationVector Twist(const AllocationVector& x, int p, int q, double coin);

// Final step for a lone fractional entry: X_j <- 1 when coin < X_j, else 0.
// An entry within tolerance of 0 or 1 is only snapped. Throws when any other
// entry is still fractional.
AllocationVector RoundSingle(const AllocationVector& x, int j, double coin);

enum class PairPolicy {
  // The two fractional entries with the lowest indices (default).
  kLowestIndices,
  kHighestIndices,
};

// Next pair under the policy; {p, -1} when exactly one entry is fractional
// and nullopt when the vector is integral.
std::optional<std::pair<int, int>> SelectPair(const AllocationVector& x,
                                              PairPolicy policy);

// Snaps x* to the tolerance and opens zero-cost programs.
AllocationVector PrepareRounding(std::span<const double> x_star,
                                 std::span<const double> costs);

struct RasResult {
  StrategyOutcome outcome;
  int twist_steps = 0;
  int single_rounds = 0;

  int coins() const { return twist_steps + single_rounds; }
};

// One run of the rounding. Reproducible for a given seed.
RasResult Ras(const Instance& instance, std::span<const double> x_star,
              std::uint64_t seed,
              PairPolicy policy = PairPolicy::kLowestIndices);

struct TrajectoryLeaf {
  double probability = 0.0;
  std::vector<double> values;
};

// Every leaf of the rounding's branch tree with its probability.
std::vector<TrajectoryLeaf> EnumerateTrajectories(
    std::span<const double> x_star, std::span<const double> costs,
    PairPolicy policy = PairPolicy::kLowestIndices);

struct ExpectationReport {
  std::vector<double> program_open;       // E[X_j]
  std::vector<double> household_covered;  // E[Y_i]
  std::vector<double> group_coverage;     // E[|covered ∩ g| / |g|]
  double equity = 0.0;                    // min_g E[ratio_g]
  double realized_equity = 0.0;           // E[min_g ratio_g]
  double cost = 0.0;                      // E[sum_j c_j X_j]
  double max_cost = 0.0;                  // largest leaf cost
  double prob_over_budget = 0.0;
  long long leaves = 0;
};

// Exact expectations over the whole branch tree. Throws
// std::invalid_argument when the instance has more than kMaxExactPrograms
// programs.
ExpectationReport ExactExpectation(
    const Instance& instance, std::span<const double> x_star,
    PairPolicy policy = PairPolicy::kLowestIndices);

}  // namespace eppt

#endif  // EPPT_RAS_H_
