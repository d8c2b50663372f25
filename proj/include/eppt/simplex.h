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

// Dense two-phase primal simplex for small and medium linear programs.
//
// Problems are stated as
//
//   maximize    c^T x
//   subject to  a_r^T x {<=, >=, =} b_r   for every row r
//               0 <= x_j <= u_j           (u_j may be +infinity)
//
// Upper bounds are handled implicitly (bounded-variable simplex), so they do
// not add rows to the tableau.

#ifndef EPPT_SIMPLEX_H_
#define EPPT_SIMPLEX_H_

#include <limits>
#include <string>
#include <vector>

namespace eppt::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int var;
  double coef;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

class LinearProgram {
 public:
  int AddVariable(std::string name, double objective, double upper = kInfinity);
  int AddRow(std::string name, std::vector<Term> terms, RowSense sense,
             double rhs);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Row>& rows() const { return rows_; }

  // Largest violation of rows and bounds by `x` (0 when feasible).
  double MaxViolation(const std::vector<double>& x) const;
  double ObjectiveValue(const std::vector<double>& x) const;

  // Writes the model in CPLEX LP text format.
  std::string ToLpFormat() const;

 private:
  std::vector<double> objective_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* SolveStatusName(SolveStatus status);

struct Solution {
  SolveStatus status = SolveStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> values;
  int iterations = 0;
};

// Swappable solver back end.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual Solution Solve(const LinearProgram& program) const = 0;
};

enum class PricingRule {
  // Bland's rule on every iteration.
  kBland,
  // Largest reduced cost; falls back to Bland's rule after a run of
  // degenerate pivots and returns to Dantzig after the next improving one.
  kDantzigWithBlandFallback,
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::kDantzigWithBlandFallback;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-10;
  int degenerate_run_before_bland = 50;
  int max_iterations = 1'000'000;
};

class DenseSimplexSolver : public Solver {
 public:
  explicit DenseSimplexSolver(SimplexOptions options = {})
      : options_(options) {}
  Solution Solve(const LinearProgram& program) const override;

 private:
  SimplexOptions options_;
};

}  // namespace eppt::lp

#endif  // EPPT_SIMPLEX_H_
