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

#include "eppt/lp_benchmark.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eppt {

LpModel BuildLp(const Instance& instance) {
  LpModel model;
  model.num_programs_ = instance.num_programs();
  model.num_households_ = instance.num_households();
  lp::LinearProgram& lp = model.program_;

  lp.AddVariable("t", 1.0, 1.0);
  for (int j = 0; j < instance.num_programs(); ++j) {
    lp.AddVariable("x_" + std::to_string(j), 0.0, 1.0);
  }
  for (int i = 0; i < instance.num_households(); ++i) {
    lp.AddVariable("y_" + std::to_string(i), 0.0, 1.0);
  }

  std::vector<lp::Term> budget;
  for (int j = 0; j < instance.num_programs(); ++j) {
    const double c = instance.costs()[j];
    if (c != 0) budget.push_back({model.x_var(j), c});
  }
  lp.AddRow("budget", std::move(budget), lp::RowSense::kLessEqual,
            instance.budget());

  for (int i = 0; i < instance.num_households(); ++i) {
    std::vector<lp::Term> terms = {{model.y_var(i), 1.0}};
    for (int j : instance.programs_covering(i)) {
      terms.push_back({model.x_var(j), -1.0});
    }
    lp.AddRow("cap_" + std::to_string(i), std::move(terms),
              lp::RowSense::kLessEqual, 0.0);
  }

  for (int g = 0; g < instance.num_groups(); ++g) {
    const auto& members = instance.groups()[g].members;
    const double w = 1.0 / static_cast<double>(members.size());
    std::vector<lp::Term> terms = {{model.t_var(), 1.0}};
    for (int i : members) terms.push_back({model.y_var(i), -w});
    lp.AddRow("equity_" + std::to_string(g), std::move(terms),
              lp::RowSense::kLessEqual, 0.0);
  }
  return model;
}

FractionalSolution SolveLp(const LpModel& model) {
  return SolveLp(model, lp::DenseSimplexSolver());
}

FractionalSolution SolveLp(const LpModel& model, const lp::Solver& solver) {
  const lp::Solution sol = solver.Solve(model.program());
  if (sol.status != lp::SolveStatus::kOptimal) {
    throw std::runtime_error(std::string("benchmark LP not solved: ") +
                             lp::SolveStatusName(sol.status));
  }
  FractionalSolution out;
  out.objective = std::clamp(sol.values[model.t_var()], 0.0, 1.0);
  out.x_star.resize(model.num_programs());
  for (int j = 0; j < model.num_programs(); ++j) {
    out.x_star[j] = std::clamp(sol.values[model.x_var(j)], 0.0, 1.0);
  }
  out.y_star.resize(model.num_households());
  for (int i = 0; i < model.num_households(); ++i) {
    out.y_star[i] = std::clamp(sol.values[model.y_var(i)], 0.0, 1.0);
  }
  return out;
}

FractionalSolution SolveLpLeastSpend(const Instance& instance,
                                     const LpModel& model) {
  return SolveLpLeastSpend(instance, model, lp::DenseSimplexSolver());
}

FractionalSolution SolveLpLeastSpend(const Instance& instance,
                                     const LpModel& model,
                                     const lp::Solver& solver) {
  const FractionalSolution first = SolveLp(model, solver);
  const lp::LinearProgram& base = model.program();
  lp::LinearProgram spend;
  for (int v = 0; v < base.num_variables(); ++v) {
    double objective = 0.0;
    if (v >= model.x_var(0) && v < model.y_var(0)) {
      objective = -instance.costs()[v - model.x_var(0)];
    }
    spend.AddVariable(base.names()[v], objective, base.upper()[v]);
  }
  for (const lp::Row& row : base.rows()) {
    spend.AddRow(row.name, row.terms, row.sense, row.rhs);
  }
  spend.AddRow("optimum", {{model.t_var(), 1.0}}, lp::RowSense::kGreaterEqual,
               std::max(0.0, first.objective - kLeastSpendSlack));
  FractionalSolution out = SolveLp(model.WithProgram(std::move(spend)), solver);
  out.objective = first.objective;
  return out;
}

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBounds:
      return "bounds";
    case ViolationKind::kBudget:
      return "budget";
    case ViolationKind::kCoverageCap:
      return "coverage_cap";
    case ViolationKind::kEquity:
      return "equity";
  }
  return "unknown";
}

std::vector<Violation> VerifySolution(const Instance& instance,
                                      const FractionalSolution& solution,
                                      double tol) {
  std::vector<Violation> out;
  if (static_cast<int>(solution.x_star.size()) != instance.num_programs() ||
      static_cast<int>(solution.y_star.size()) != instance.num_households()) {
    throw InvalidInstanceError("solution dimensions do not match instance");
  }
  auto check_box = [&](double v, int index) {
    const double excess = std::max(-v, v - 1.0);
    if (excess > tol) out.push_back({ViolationKind::kBounds, index, excess});
  };
  check_box(solution.objective, -1);
  for (int j = 0; j < instance.num_programs(); ++j) {
    check_box(solution.x_star[j], j);
  }
  for (int i = 0; i < instance.num_households(); ++i) {
    check_box(solution.y_star[i], i);
  }

  double spend = 0.0;
  for (int j = 0; j < instance.num_programs(); ++j) {
    spend += instance.costs()[j] * solution.x_star[j];
  }
  if (spend - instance.budget() > tol) {
    out.push_back({ViolationKind::kBudget, -1, spend - instance.budget()});
  }

  for (int i = 0; i < instance.num_households(); ++i) {
    double reach = 0.0;
    for (int j : instance.programs_covering(i)) reach += solution.x_star[j];
    const double excess = solution.y_star[i] - std::min(1.0, reach);
    if (excess > tol) out.push_back({ViolationKind::kCoverageCap, i, excess});
  }

  for (int g = 0; g < instance.num_groups(); ++g) {
    const auto& members = instance.groups()[g].members;
    double ratio = 0.0;
    for (int i : members) ratio += solution.y_star[i];
    ratio /= static_cast<double>(members.size());
    const double excess = solution.objective - ratio;
    if (excess > tol) out.push_back({ViolationKind::kEquity, g, excess});
  }
  return out;
}

}  // namespace eppt
