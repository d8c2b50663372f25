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

// Instance representation for the equity-promotion budget allocation
// problem: needy households, candidate programs (bus lines and virtual
// ride-hailing lines), protected groups and a budget. Equity of a selection
// is the minimum coverage ratio over all groups.

#ifndef EPPT_MODEL_H_
#define EPPT_MODEL_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eppt {

enum class ProgramKind { kBusLine, kVirtualRideHail };

const char* ProgramKindName(ProgramKind kind);
ProgramKind ParseProgramKind(const std::string& name);

struct Household {
  std::string id;
  // Cost of enrolling this household in the ride-hailing program. Unset when
  // the household is not eligible for ride-hailing.
  std::optional<double> ride_hail_cost;
  // A household may belong to zero, one or several protected groups.
  std::vector<std::string> group_ids;
};

struct Program {
  std::string id;
  double cost = 0.0;
  // Indices into Instance::households().
  std::vector<int> covers;
  ProgramKind kind = ProgramKind::kBusLine;
};

struct Group {
  std::string id;
  // Indices into Instance::households(); never empty.
  std::vector<int> members;
};

// Thrown for malformed instances and strategies.
class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by Normalize() when the scaled budget falls below the largest
// program cost. Callers may retry with the override flag.
class BudgetBelowOneError : public std::domain_error {
 public:
  BudgetBelowOneError(double normalized_budget);
  double normalized_budget() const { return normalized_budget_; }

 private:
  double normalized_budget_;
};

// Immutable after construction. Groups are derived from the households'
// group_ids in order of first appearance.
class Instance {
 public:
  Instance(std::vector<Household> households, std::vector<Program> programs,
           double budget);

  const std::vector<Household>& households() const { return households_; }
  const std::vector<Program>& programs() const { return programs_; }
  const std::vector<Group>& groups() const { return groups_; }
  double budget() const { return budget_; }

  int num_households() const { return static_cast<int>(households_.size()); }
  int num_programs() const { return static_cast<int>(programs_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }

  // Programs j with household in S_j, ascending.
  const std::vector<int>& programs_covering(int household) const {
    return covering_[household];
  }
  // Group indices the household belongs to, ascending.
  const std::vector<int>& groups_of(int household) const {
    return memberships_[household];
  }
  std::span<const double> costs() const { return costs_; }

  double TotalCost() const;
  Instance WithBudget(double budget) const;
  Instance WithPrograms(std::vector<Program> programs) const;

 private:
  std::vector<Household> households_;
  std::vector<Program> programs_;
  std::vector<Group> groups_;
  double budget_;
  std::vector<double> costs_;
  std::vector<std::vector<int>> covering_;
  std::vector<std::vector<int>> memberships_;
};

struct DeterministicStrategy {
  std::vector<bool> selected;

  static DeterministicStrategy None(int num_programs);
  static DeterministicStrategy FromIndices(int num_programs,
                                           std::span<const int> indices);
  std::vector<int> Indices() const;
  int size() const { return static_cast<int>(selected.size()); }
};

struct StrategyOutcome {
  DeterministicStrategy strategy;
  double total_cost = 0.0;
  // Covered household indices, ascending.
  std::vector<int> covered;
  // Indexed like Instance::groups().
  std::vector<double> group_ratios;
  double equity = 0.0;
};

struct NormalizedInstance {
  Instance instance;
  // Original max cost; raw money = normalized money * scale.
  double scale = 1.0;
};

// Divides every cost (program costs and defined ride-hailing costs) and the
// budget by the largest cost, so that the largest cost becomes 1.
NormalizedInstance Normalize(const Instance& instance,
                             bool allow_budget_below_one = false);

// Appends one virtual ride-hailing program per household with a defined
// ride-hailing cost. Households that already have one are skipped.
Instance InjectRideHailing(const Instance& instance);

// Coverage and equity of a selection. Feasibility is not enforced.
StrategyOutcome Evaluate(const Instance& instance,
                         const DeterministicStrategy& strategy);

// Equity from per-group covered counts: min over groups of count/|g|.
// An instance with no groups has equity 1.
double EquityFromCounts(const Instance& instance,
                        std::span<const int> covered_per_group);

bool IsFeasible(const Instance& instance, const DeterministicStrategy& strategy,
                double tol = 1e-9);

// Program mix under study: bus lines only, or bus lines plus ride-hailing.
enum class Scenario { kBusOnly, kCombined };

const char* ScenarioName(Scenario scenario);
Scenario ParseScenario(const std::string& name);

// kBusOnly drops virtual ride-hailing programs; kCombined injects them.
Instance ApplyScenario(const Instance& instance, Scenario scenario);

}  // namespace eppt

#endif  // EPPT_MODEL_H_
