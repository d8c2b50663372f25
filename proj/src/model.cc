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

#include "eppt/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace eppt {

const char* ProgramKindName(ProgramKind kind) {
  switch (kind) {
    case ProgramKind::kBusLine:
      return "bus_line";
    case ProgramKind::kVirtualRideHail:
      return "virtual_ride_hail";
  }
  return "unknown";
}

ProgramKind ParseProgramKind(const std::string& name) {
  if (name == "bus_line") return ProgramKind::kBusLine;
  if (name == "virtual_ride_hail") return ProgramKind::kVirtualRideHail;
  throw InvalidInstanceError("unknown program kind '" + name + "'");
}

BudgetBelowOneError::BudgetBelowOneError(double normalized_budget)
    : std::domain_error("normalized budget " +
                        std::to_string(normalized_budget) +
                        " is below the largest program cost"),
      normalized_budget_(normalized_budget) {}

Instance::Instance(std::vector<Household> households,
                   std::vector<Program> programs, double budget)
    : households_(std::move(households)),
      programs_(std::move(programs)),
      budget_(budget) {
  if (!std::isfinite(budget_) || budget_ < 0) {
    throw InvalidInstanceError("budget must be a finite nonnegative number");
  }
  const int n = num_households();
  std::unordered_set<std::string> seen;
  for (const Household& h : households_) {
    if (!seen.insert(h.id).second) {
      throw InvalidInstanceError("duplicate household id '" + h.id + "'");
    }
    if (h.ride_hail_cost.has_value() &&
        (!std::isfinite(*h.ride_hail_cost) || *h.ride_hail_cost < 0)) {
      throw InvalidInstanceError("household '" + h.id +
                                 "' has a negative ride-hailing cost");
    }
  }
  seen.clear();
  covering_.assign(n, {});
  for (int j = 0; j < num_programs(); ++j) {
    Program& p = programs_[j];
    if (!seen.insert(p.id).second) {
      throw InvalidInstanceError("duplicate program id '" + p.id + "'");
    }
    if (!std::isfinite(p.cost) || p.cost < 0) {
      throw InvalidInstanceError("program '" + p.id + "' has a negative cost");
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.covers.erase(std::unique(p.covers.begin(), p.covers.end()),
                   p.covers.end());
    if (p.covers.empty()) {
      throw InvalidInstanceError("program '" + p.id + "' covers nobody");
    }
    if (p.covers.front() < 0 || p.covers.back() >= n) {
      throw InvalidInstanceError("program '" + p.id +
                                 "' covers an unknown household");
    }
    if (p.kind == ProgramKind::kVirtualRideHail && p.covers.size() != 1) {
      throw InvalidInstanceError("virtual program '" + p.id +
                                 "' must cover exactly one household");
    }
    for (int i : p.covers) covering_[i].push_back(j);
    costs_.push_back(p.cost);
  }

  std::unordered_map<std::string, int> group_index;
  memberships_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (const std::string& gid : households_[i].group_ids) {
      auto [it, inserted] =
          group_index.emplace(gid, static_cast<int>(groups_.size()));
      if (inserted) groups_.push_back(Group{gid, {}});
      std::vector<int>& members = groups_[it->second].members;
      if (members.empty() || members.back() != i) members.push_back(i);
    }
  }
  for (int g = 0; g < num_groups(); ++g) {
    for (int i : groups_[g].members) memberships_[i].push_back(g);
  }
  for (auto& m : memberships_) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
}

double Instance::TotalCost() const {
  return std::accumulate(costs_.begin(), costs_.end(), 0.0);
}

Instance Instance::WithBudget(double budget) const {
  return Instance(households_, programs_, budget);
}

Instance Instance::WithPrograms(std::vector<Program> programs) const {
  return Instance(households_, std::move(programs), budget_);
}

DeterministicStrategy DeterministicStrategy::None(int num_programs) {
  return DeterministicStrategy{std::vector<bool>(num_programs, false)};
}

DeterministicStrategy DeterministicStrategy::FromIndices(
    int num_programs, std::span<const int> indices) {
  DeterministicStrategy s = None(num_programs);
  for (int j : indices) {
    if (j < 0 || j >= num_programs) {
      throw InvalidInstanceError("program index out of range");
    }
    s.selected[j] = true;
  }
  return s;
}

std::vector<int> DeterministicStrategy::Indices() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (selected[j]) out.push_back(j);
  }
  return out;
}

NormalizedInstance Normalize(const Instance& instance,
                             bool allow_budget_below_one) {
  if (instance.num_programs() == 0) {
    throw InvalidInstanceError("cannot normalize an instance with no programs");
  }
  double max_cost = 0.0;
  for (double c : instance.costs()) max_cost = std::max(max_cost, c);
  for (const Household& h : instance.households()) {
    if (h.ride_hail_cost) max_cost = std::max(max_cost, *h.ride_hail_cost);
  }
  if (!(max_cost > 0)) {
    throw InvalidInstanceError("all program costs are zero");
  }
  std::vector<Household> households = instance.households();
  for (Household& h : households) {
    if (h.ride_hail_cost) *h.ride_hail_cost /= max_cost;
  }
  std::vector<Program> programs = instance.programs();
  for (Program& p : programs) p.cost /= max_cost;
  const double budget = instance.budget() / max_cost;
  if (budget < 1.0 && !allow_budget_below_one) {
    throw BudgetBelowOneError(budget);
  }
  return NormalizedInstance{
      Instance(std::move(households), std::move(programs), budget), max_cost};
}

Instance InjectRideHailing(const Instance& instance) {
  std::vector<bool> has_virtual(instance.num_households(), false);
  for (const Program& p : instance.programs()) {
    if (p.kind == ProgramKind::kVirtualRideHail)
      has_virtual[p.covers[0]] = true;
  }
  std::vector<Program> programs = instance.programs();
  for (int i = 0; i < instance.num_households(); ++i) {
    const Household& h = instance.households()[i];
    if (!h.ride_hail_cost || has_virtual[i]) continue;
    programs.push_back(Program{
        "rh:" + h.id, *h.ride_hail_cost, {i}, ProgramKind::kVirtualRideHail});
  }
  return instance.WithPrograms(std::move(programs));
}

double EquityFromCounts(const Instance& instance,
                        std::span<const int> covered_per_group) {
  double equity = 1.0;
  for (int g = 0; g < instance.num_groups(); ++g) {
    const double size =
        static_cast<double>(instance.groups()[g].members.size());
    equity = std::min(equity, covered_per_group[g] / size);
  }
  return equity;
}

StrategyOutcome Evaluate(const Instance& instance,
                         const DeterministicStrategy& strategy) {
  if (strategy.size() != instance.num_programs()) {
    throw InvalidInstanceError("strategy length " +
                               std::to_string(strategy.size()) +
                               " does not match program count " +
                               std::to_string(instance.num_programs()));
  }
  StrategyOutcome out;
  out.strategy = strategy;
  std::vector<bool> covered(instance.num_households(), false);
  for (int j = 0; j < instance.num_programs(); ++j) {
    if (!strategy.selected[j]) continue;
    const Program& p = instance.programs()[j];
    out.total_cost += p.cost;
    for (int i : p.covers) covered[i] = true;
  }
  std::vector<int> counts(instance.num_groups(), 0);
  for (int i = 0; i < instance.num_households(); ++i) {
    if (!covered[i]) continue;
    out.covered.push_back(i);
    for (int g : instance.groups_of(i)) ++counts[g];
  }
  out.group_ratios.resize(instance.num_groups());
  for (int g = 0; g < instance.num_groups(); ++g) {
    out.group_ratios[g] =
        counts[g] / static_cast<double>(instance.groups()[g].members.size());
  }
  out.equity = EquityFromCounts(instance, counts);
  return out;
}

bool IsFeasible(const Instance& instance, const DeterministicStrategy& strategy,
                double tol) {
  double cost = 0.0;
  for (int j = 0; j < strategy.size(); ++j) {
    if (strategy.selected[j]) cost += instance.costs()[j];
  }
  return cost <= instance.budget() + tol;
}

const char* ScenarioName(Scenario scenario) {
  return scenario == Scenario::kBusOnly ? "bus_only" : "combined";
}

Scenario ParseScenario(const std::string& name) {
  if (name == "bus_only") return Scenario::kBusOnly;
  if (name == "combined") return Scenario::kCombined;
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

Instance ApplyScenario(const Instance& instance, Scenario scenario) {
  if (scenario == Scenario::kCombined) return InjectRideHailing(instance);
  std::vector<Program> programs;
  for (const Program& p : instance.programs()) {
    if (p.kind == ProgramKind::kBusLine) programs.push_back(p);
  }
  return instance.WithPrograms(std::move(programs));
}

}  // namespace eppt
