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

#include "eppt/ras.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "eppt/rng.h"

namespace eppt {

double SnapIntegral(double v) {
  if (v <= kIntegralityTol) return 0.0;
  if (v >= 1.0 - kIntegralityTol) return 1.0;
  return v;
}

AllocationVector::AllocationVector(std::vector<double> values,
                                   std::span<const double> costs)
    : values_(std::move(values)), costs_(costs) {
  if (values_.size() != costs_.size()) {
    throw std::invalid_argument("allocation and cost vectors differ in size");
  }
  for (double v : values_) {
    if (!(v >= -kIntegralityTol && v <= 1.0 + kIntegralityTol)) {
      throw std::invalid_argument("allocation entry outside [0, 1]");
    }
  }
}

double AllocationVector::WeightedSum() const {
  double s = 0.0;
  for (int j = 0; j < size(); ++j) s += costs_[j] * values_[j];
  return s;
}

bool AllocationVector::IsIntegral() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](double v) { return IsFractional(v); });
}

TwistStep PlanTwist(const AllocationVector& x, int p, int q) {
  if (p == q || p < 0 || q < 0 || p >= x.size() || q >= x.size()) {
    throw std::invalid_argument("twist needs two distinct valid indices");
  }
  if (!IsFractional(x[p]) || !IsFractional(x[q])) {
    throw std::invalid_argument("twist entries must be strictly fractional");
  }
  const double cp = x.costs()[p];
  const double cq = x.costs()[q];
  if (!(cp > 0) || !(cq > 0)) {
    throw std::invalid_argument("twist entries must have positive cost");
  }
  TwistStep step;
  step.p = p;
  step.q = q;
  step.alpha = std::min(1.0 - x[p], x[q] * cq / cp);
  step.beta = std::min(x[p], (1.0 - x[q]) * cq / cp);
  return step;
}

void ApplyTwistBranch(AllocationVector& x, const TwistStep& step, bool up) {
  const int p = step.p;
  const int q = step.q;
  const double ratio = x.costs()[p] / x.costs()[q];
  double xp = x[p];
  double xq = x[q];
  if (up) {
    if (1.0 - xp <= xq / ratio) {
      xq -= ratio * (1.0 - xp);
      xp = 1.0;
    } else {
      xp += xq / ratio;
      xq = 0.0;
    }
  } else {
    if (xp <= (1.0 - xq) / ratio) {
      xq += ratio * xp;
      xp = 0.0;
    } else {
      xp -= (1.0 - xq) / ratio;
      xq = 1.0;
    }
  }
  x.Set(p, SnapIntegral(xp));
  x.Set(q, SnapIntegral(xq));
}

AllocationVector Twist(const AllocationVector& x, int p, int q, double coin) {
  const TwistStep step = PlanTwist(x, p, q);
  AllocationVector out = x;
  ApplyTwistBranch(out, step, coin < step.prob_up());
  return out;
}

AllocationVector RoundSingle(const AllocationVector& x, int j, double coin) {
  for (int k = 0; k < x.size(); ++k) {
    if (k != j && IsFractional(x[k])) {
      throw std::invalid_argument("more than one fractional entry remains");
    }
  }
  AllocationVector out = x;
  const double v = x[j];
  if (IsFractional(v)) {
    out.Set(j, coin < v ? 1.0 : 0.0);
  } else {
    out.Set(j, SnapIntegral(v));
  }
  return out;
}

std::optional<std::pair<int, int>> SelectPair(const AllocationVector& x,
                                              PairPolicy policy) {
  int first = -1;
  const int n = x.size();
  for (int k = 0; k < n; ++k) {
    const int j = policy == PairPolicy::kLowestIndices ? k : n - 1 - k;
    if (!IsFractional(x[j])) continue;
    if (first < 0) {
      first = j;
    } else {
      return std::make_pair(first, j);
    }
  }
  if (first >= 0) return std::make_pair(first, -1);
  return std::nullopt;
}

AllocationVector PrepareRounding(std::span<const double> x_star,
                                 std::span<const double> costs) {
  std::vector<double> values(x_star.begin(), x_star.end());
  for (size_t j = 0; j < values.size(); ++j) {
    values[j] = costs[j] == 0 ? 1.0 : SnapIntegral(values[j]);
  }
  return AllocationVector(std::move(values), costs);
}

namespace {

DeterministicStrategy ToStrategy(const AllocationVector& x) {
  DeterministicStrategy s = DeterministicStrategy::None(x.size());
  for (int j = 0; j < x.size(); ++j) s.selected[j] = x[j] > 0.5;
  return s;
}

}  // namespace

RasResult Ras(const Instance& instance, std::span<const double> x_star,
              std::uint64_t seed, PairPolicy policy) {
  if (static_cast<int>(x_star.size()) != instance.num_programs()) {
    throw InvalidInstanceError("x* length does not match program count");
  }
  Rng rng(seed);
  AllocationVector x = PrepareRounding(x_star, instance.costs());
  RasResult result;

  // Walking the fractional entries in policy order with a carried survivor
  // visits exactly the pairs SelectPair() would return: a twist leaves at
  // most one of its pair fractional, and that survivor precedes every
  // fractional entry not yet visited.
  const int n = x.size();
  int carry = -1;
  for (int k = 0; k < n; ++k) {
    const int j = policy == PairPolicy::kLowestIndices ? k : n - 1 - k;
    if (!IsFractional(x[j])) continue;
    if (carry < 0) {
      carry = j;
      continue;
    }
    const TwistStep step = PlanTwist(x, carry, j);
    ApplyTwistBranch(x, step, rng.Uniform01() < step.prob_up());
    ++result.twist_steps;
    if (IsFractional(x[carry])) continue;
    carry = IsFractional(x[j]) ? j : -1;
  }
  if (carry >= 0) {
    x.Set(carry, rng.Uniform01() < x[carry] ? 1.0 : 0.0);
    ++result.single_rounds;
  }
  result.outcome = Evaluate(instance, ToStrategy(x));
  return result;
}

namespace {

template <typename Visit>
void WalkTrajectories(AllocationVector& x, double probability,
                      PairPolicy policy, Visit& visit) {
  const auto pair = SelectPair(x, policy);
  if (!pair) {
    visit(probability, x);
    return;
  }
  const auto [p, q] = *pair;
  if (q < 0) {
    const double v = x[p];
    x.Set(p, 1.0);
    WalkTrajectories(x, probability * v, policy, visit);
    x.Set(p, 0.0);
    WalkTrajectories(x, probability * (1.0 - v), policy, visit);
    x.Set(p, v);
    return;
  }
  const TwistStep step = PlanTwist(x, p, q);
  const double xp = x[p];
  const double xq = x[q];
  const double up = step.prob_up();
  ApplyTwistBranch(x, step, true);
  WalkTrajectories(x, probability * up, policy, visit);
  x.Set(p, xp);
  x.Set(q, xq);
  ApplyTwistBranch(x, step, false);
  WalkTrajectories(x, probability * (1.0 - up), policy, visit);
  x.Set(p, xp);
  x.Set(q, xq);
}

}  // namespace

std::vector<TrajectoryLeaf> EnumerateTrajectories(
    std::span<const double> x_star, std::span<const double> costs,
    PairPolicy policy) {
  if (static_cast<int>(x_star.size()) > kMaxExactPrograms) {
    throw std::invalid_argument("too many programs for exact enumeration");
  }
  AllocationVector x = PrepareRounding(x_star, costs);
  std::vector<TrajectoryLeaf> leaves;
  auto visit = [&](double prob, const AllocationVector& leaf) {
    leaves.push_back(TrajectoryLeaf{
        prob, std::vector<double>(leaf.values().begin(), leaf.values().end())});
  };
  WalkTrajectories(x, 1.0, policy, visit);
  return leaves;
}

ExpectationReport ExactExpectation(const Instance& instance,
                                   std::span<const double> x_star,
                                   PairPolicy policy) {
  const int num_programs = instance.num_programs();
  if (num_programs > kMaxExactPrograms) {
    throw std::invalid_argument(
        "instance has " + std::to_string(num_programs) +
        " programs; exact expectation supports at most " +
        std::to_string(kMaxExactPrograms));
  }
  if (static_cast<int>(x_star.size()) != num_programs) {
    throw InvalidInstanceError("x* length does not match program count");
  }
  ExpectationReport report;
  report.program_open.assign(num_programs, 0.0);
  report.household_covered.assign(instance.num_households(), 0.0);
  report.group_coverage.assign(instance.num_groups(), 0.0);
  report.max_cost = -std::numeric_limits<double>::infinity();

  std::vector<bool> covered(instance.num_households());
  std::vector<int> counts(instance.num_groups());
  auto visit = [&](double prob, const AllocationVector& leaf) {
    ++report.leaves;
    std::fill(covered.begin(), covered.end(), false);
    std::fill(counts.begin(), counts.end(), 0);
    double cost = 0.0;
    for (int j = 0; j < num_programs; ++j) {
      if (leaf[j] < 0.5) continue;
      report.program_open[j] += prob;
      cost += instance.costs()[j];
      for (int i : instance.programs()[j].covers) covered[i] = true;
    }
    for (int i = 0; i < instance.num_households(); ++i) {
      if (!covered[i]) continue;
      report.household_covered[i] += prob;
      for (int g : instance.groups_of(i)) ++counts[g];
    }
    for (int g = 0; g < instance.num_groups(); ++g) {
      report.group_coverage[g] +=
          prob * counts[g] /
          static_cast<double>(instance.groups()[g].members.size());
    }
    report.realized_equity += prob * EquityFromCounts(instance, counts);
    report.cost += prob * cost;
    report.max_cost = std::max(report.max_cost, cost);
    if (cost > instance.budget() + 1e-9) report.prob_over_budget += prob;
  };
  AllocationVector x = PrepareRounding(x_star, instance.costs());
  WalkTrajectories(x, 1.0, policy, visit);

  report.equity = 1.0;
  for (double r : report.group_coverage) {
    report.equity = std::min(report.equity, r);
  }
  return report;
}

}  // namespace eppt
