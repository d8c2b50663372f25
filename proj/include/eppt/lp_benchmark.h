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

// The benchmark LP. Its optimum upper-bounds the expected equity of every
// randomized strategy and seeds the rounding in ras.h.
//
//   maximize    t
//   subject to  sum_j c_j x_j <= B
//               y_i - sum_{j : i in S_j} x_j <= 0        for every household
//               t - sum_{i in g} y_i / |g| <= 0           for every group
//               0 <= t, x_j, y_i <= 1
//
// y_i <= 1 lives in the variable bounds rather than in a row.

#ifndef EPPT_LP_BENCHMARK_H_
#define EPPT_LP_BENCHMARK_H_

#include <string>
#include <utility>
#include <vector>

#include "eppt/model.h"
#include "eppt/simplex.h"

namespace eppt {

class LpModel {
 public:
  const lp::LinearProgram& program() const { return program_; }

  int t_var() const { return 0; }
  int x_var(int program) const { return 1 + program; }
  int y_var(int household) const { return 1 + num_programs_ + household; }

  int num_programs() const { return num_programs_; }
  int num_households() const { return num_households_; }
  int num_variables() const { return program_.num_variables(); }
  // Rows of the LP plus the y_i <= 1 caps carried as bounds:
  // 1 + 2|I| + |G|.
  int num_constraints() const { return program_.num_rows() + num_households_; }

  // Same variable layout over another program.
  LpModel WithProgram(lp::LinearProgram program) const {
    LpModel out = *this;
    out.program_ = std::move(program);
    return out;
  }

 private:
  friend LpModel BuildLp(const Instance& instance);
  lp::LinearProgram program_;
  int num_programs_ = 0;
  int num_households_ = 0;
};

struct FractionalSolution {
  std::vector<double> x_star;
  std::vector<double> y_star;
  double objective = 0.0;
};

LpModel BuildLp(const Instance& instance);

// Solves with the embedded dense simplex unless another solver is supplied.
// Throws std::runtime_error if the solver does not report an optimum.
FractionalSolution SolveLp(const LpModel& model);
FractionalSolution SolveLp(const LpModel& model, const lp::Solver& solver);

// An optimum of least spend: a second solve holds t at the optimum (less
// kLeastSpendSlack) and minimizes sum_j c_j x_j. Once the budget stops
// binding, x* no longer depends on it. `objective` is the first solve's t*.
inline constexpr double kLeastSpendSlack = 1e-9;
FractionalSolution SolveLpLeastSpend(const Instance& instance,
                                     const LpModel& model);
FractionalSolution SolveLpLeastSpend(const Instance& instance,
                                     const LpModel& model,
                                     const lp::Solver& solver);

enum class ViolationKind { kBounds, kBudget, kCoverageCap, kEquity };

const char* ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Program, household or group index depending on kind; -1 for budget.
  int index;
  double magnitude;
};

inline constexpr double kVerifyTolerance = 1e-7;

// Re-checks the budget, coverage-cap, equity and box constraints.
std::vector<Violation> VerifySolution(const Instance& instance,
                                      const FractionalSolution& solution,
                                      double tol = kVerifyTolerance);

}  // namespace eppt

#endif  // EPPT_LP_BENCHMARK_H_
