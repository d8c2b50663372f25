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

#include "eppt/simplex.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "eppt/csv.h"

namespace eppt::lp {

int LinearProgram::AddVariable(std::string name, double objective,
                               double upper) {
  if (!(upper >= 0)) throw std::invalid_argument("upper bound must be >= 0");
  objective_.push_back(objective);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  return num_variables() - 1;
}

int LinearProgram::AddRow(std::string name, std::vector<Term> terms,
                          RowSense sense, double rhs) {
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw std::invalid_argument("row '" + name + "' references unknown var");
    }
  }
  rows_.push_back(Row{std::move(name), std::move(terms), sense, rhs});
  return num_rows() - 1;
}

double LinearProgram::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max({worst, -x[j], x[j] - upper_[j]});
  }
  for (const Row& row : rows_) {
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coef * x[t.var];
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

double LinearProgram::ObjectiveValue(const std::vector<double>& x) const {
  double z = 0.0;
  for (int j = 0; j < num_variables(); ++j) z += objective_[j] * x[j];
  return z;
}

namespace {

void AppendLinear(std::ostringstream& out, const std::vector<Term>& terms,
                  const std::vector<std::string>& names) {
  bool first = true;
  for (const Term& t : terms) {
    if (t.coef == 0) continue;
    out << (t.coef < 0 ? (first ? "-" : " -") : (first ? "" : " +")) << ' '
        << csv::FormatDouble(std::abs(t.coef)) << ' ' << names[t.var];
    first = false;
  }
  if (first) out << "0 " << names.front();
}

}  // namespace

std::string LinearProgram::ToLpFormat() const {
  std::ostringstream out;
  out << "\\ generated by eppt\nMaximize\n obj: ";
  std::vector<Term> obj;
  for (int j = 0; j < num_variables(); ++j) {
    if (objective_[j] != 0) obj.push_back({j, objective_[j]});
  }
  AppendLinear(out, obj, names_);
  out << "\nSubject To\n";
  for (const Row& row : rows_) {
    out << ' ' << row.name << ": ";
    AppendLinear(out, row.terms, names_);
    switch (row.sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
    }
    out << csv::FormatDouble(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < num_variables(); ++j) {
    if (std::isinf(upper_[j])) {
      out << ' ' << names_[j] << " >= 0\n";
    } else {
      out << " 0 <= " << names_[j] << " <= " << csv::FormatDouble(upper_[j])
          << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

const char* SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Bounded-variable tableau. Columns: structural, then one slack per
// inequality row, then one artificial per row lacking a +1 slack.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : options_(options),
        m_(lp.num_rows()),
        num_structural_(lp.num_variables()) {
    std::vector<std::vector<Term>> row_terms(m_);
    std::vector<double> rhs(m_);
    std::vector<RowSense> sense(m_);
    int slacks = 0;
    int artificials = 0;
    for (int r = 0; r < m_; ++r) {
      const lp::Row& row = lp.rows()[r];
      const double sign = row.rhs < 0 ? -1.0 : 1.0;
      rhs[r] = sign * row.rhs;
      sense[r] = row.sense;
      if (sign < 0 && row.sense != RowSense::kEqual) {
        sense[r] = row.sense == RowSense::kLessEqual ? RowSense::kGreaterEqual
                                                     : RowSense::kLessEqual;
      }
      for (const Term& t : row.terms)
        row_terms[r].push_back({t.var, sign * t.coef});
      if (sense[r] != RowSense::kEqual) ++slacks;
      if (sense[r] != RowSense::kLessEqual) ++artificials;
    }
    first_artificial_ = num_structural_ + slacks;
    n_ = first_artificial_ + artificials;
    a_.assign(static_cast<size_t>(m_) * n_, 0.0);
    upper_.assign(n_, kInfinity);
    std::copy(lp.upper().begin(), lp.upper().end(), upper_.begin());
    state_.assign(n_, VarState::kAtLower);
    basis_.assign(m_, -1);
    beta_ = rhs;

    int next_slack = num_structural_;
    int next_artificial = first_artificial_;
    for (int r = 0; r < m_; ++r) {
      double* row = Row(r);
      for (const Term& t : row_terms[r]) row[t.var] += t.coef;
      if (sense[r] == RowSense::kLessEqual) {
        row[next_slack] = 1.0;
        basis_[r] = next_slack++;
      } else {
        if (sense[r] == RowSense::kGreaterEqual) row[next_slack++] = -1.0;
        row[next_artificial] = 1.0;
        basis_[r] = next_artificial++;
      }
      state_[basis_[r]] = VarState::kBasic;
    }
    rhs_scale_ = 1.0;
    for (double b : rhs) rhs_scale_ = std::max(rhs_scale_, std::abs(b));
  }

  Solution Solve(const LinearProgram& lp) {
    Solution sol;
    if (first_artificial_ < n_) {
      std::vector<double> phase_one(n_, 0.0);
      for (int j = first_artificial_; j < n_; ++j) phase_one[j] = -1.0;
      const SolveStatus status = Optimize(phase_one);
      if (status == SolveStatus::kIterationLimit) {
        sol.status = status;
        sol.iterations = iterations_;
        return sol;
      }
      double infeasibility = 0.0;
      for (int r = 0; r < m_; ++r) {
        if (basis_[r] >= first_artificial_) infeasibility += beta_[r];
      }
      if (infeasibility > 1e-8 * rhs_scale_) {
        sol.status = SolveStatus::kInfeasible;
        sol.iterations = iterations_;
        return sol;
      }
      DriveOutArtificials();
    }
    std::vector<double> cost(n_, 0.0);
    std::copy(lp.objective().begin(), lp.objective().end(), cost.begin());
    sol.status = Optimize(cost);
    sol.iterations = iterations_;
    if (sol.status != SolveStatus::kOptimal) return sol;

    sol.values.assign(num_structural_, 0.0);
    for (int j = 0; j < num_structural_; ++j) {
      if (state_[j] == VarState::kAtUpper) sol.values[j] = upper_[j];
    }
    for (int r = 0; r < m_; ++r) {
      const int j = basis_[r];
      if (j < num_structural_) {
        sol.values[j] = std::clamp(beta_[r], 0.0, upper_[j]);
      }
    }
    sol.objective = lp.ObjectiveValue(sol.values);
    return sol;
  }

 private:
  double* Row(int r) { return a_.data() + static_cast<size_t>(r) * n_; }

  bool IsArtificial(int j) const { return j >= first_artificial_; }

  SolveStatus Optimize(const std::vector<double>& cost) {
    reduced_.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) reduced_[j] = cost[j];
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0) continue;
      const double* row = Row(r);
      for (int j = 0; j < n_; ++j) reduced_[j] -= cb * row[j];
    }
    for (int r = 0; r < m_; ++r) reduced_[basis_[r]] = 0.0;

    int degenerate_run = 0;
    while (true) {
      if (iterations_ >= options_.max_iterations) {
        return SolveStatus::kIterationLimit;
      }
      const bool bland = options_.pricing == PricingRule::kBland ||
                         degenerate_run >= options_.degenerate_run_before_bland;

      int entering = -1;
      double direction = 0.0;
      double best = 0.0;
      for (int j = 0; j < n_; ++j) {
        if (state_[j] == VarState::kBasic) continue;
        if (phase_two_ && IsArtificial(j)) continue;
        const double d = reduced_[j];
        double score = 0.0;
        double dir = 0.0;
        if (state_[j] == VarState::kAtLower && d > options_.optimality_tol &&
            upper_[j] > 0) {
          score = d;
          dir = 1.0;
        } else if (state_[j] == VarState::kAtUpper &&
                   d < -options_.optimality_tol) {
          score = -d;
          dir = -1.0;
        } else {
          continue;
        }
        if (bland) {
          entering = j;
          direction = dir;
          break;
        }
        if (score > best) {
          best = score;
          entering = j;
          direction = dir;
        }
      }
      if (entering < 0) return SolveStatus::kOptimal;

      // Ratio test. Starting bound is the entering variable's own range.
      double theta = upper_[entering];
      int leave = -1;
      double leave_alpha = 0.0;
      for (int r = 0; r < m_; ++r) {
        const double alpha = direction * Row(r)[entering];
        double limit;
        if (alpha > options_.pivot_tol) {
          limit = std::max(beta_[r], 0.0) / alpha;
        } else if (alpha < -options_.pivot_tol) {
          const double u = upper_[basis_[r]];
          if (std::isinf(u)) continue;
          limit = std::max(u - beta_[r], 0.0) / -alpha;
        } else {
          continue;
        }
        bool take = limit < theta - 1e-12;
        if (!take && leave >= 0 && limit <= theta + 1e-12) {
          take = bland ? basis_[r] < basis_[leave]
                       : std::abs(alpha) > std::abs(leave_alpha);
        }
        if (take) {
          theta = std::min(theta, limit);
          leave = r;
          leave_alpha = alpha;
        }
      }
      if (std::isinf(theta)) return SolveStatus::kUnbounded;
      ++iterations_;

      if (theta > 0) {
        for (int r = 0; r < m_; ++r) {
          const double a = Row(r)[entering];
          if (a != 0) beta_[r] -= theta * direction * a;
        }
      }
      degenerate_run = theta > 1e-12 ? 0 : degenerate_run + 1;

      if (leave < 0) {
        state_[entering] = state_[entering] == VarState::kAtLower
                               ? VarState::kAtUpper
                               : VarState::kAtLower;
        continue;
      }
      const double start =
          state_[entering] == VarState::kAtUpper ? upper_[entering] : 0.0;
      const int leaving = basis_[leave];
      state_[leaving] =
          leave_alpha > 0 ? VarState::kAtLower : VarState::kAtUpper;
      Pivot(leave, entering);
      beta_[leave] = start + direction * theta;
      basis_[leave] = entering;
      state_[entering] = VarState::kBasic;
      for (int r = 0; r < m_; ++r) {
        const double u = upper_[basis_[r]];
        if (beta_[r] < 0 && beta_[r] > -options_.feasibility_tol) beta_[r] = 0;
        if (beta_[r] > u && beta_[r] < u + options_.feasibility_tol)
          beta_[r] = u;
      }
    }
  }

  void Pivot(int r, int e) {
    double* prow = Row(r);
    const double inv = 1.0 / prow[e];
    nonzeros_.clear();
    for (int k = 0; k < n_; ++k) {
      if (prow[k] == 0) continue;
      prow[k] *= inv;
      if (std::abs(prow[k]) < 1e-14) {
        prow[k] = 0;
      } else {
        nonzeros_.push_back(k);
      }
    }
    prow[e] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = Row(i);
      const double f = row[e];
      if (f == 0) continue;
      for (int k : nonzeros_) row[k] -= f * prow[k];
      row[e] = 0.0;
    }
    const double f = reduced_[e];
    if (f != 0) {
      for (int k : nonzeros_) reduced_[k] -= f * prow[k];
      reduced_[e] = 0.0;
    }
  }

  // Replaces zero-level basic artificials by structural or slack columns.
  // Rows where no replacement exists are redundant; their artificial stays
  // basic but is pinned to zero.
  void DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (!IsArtificial(basis_[r])) continue;
      const double* row = Row(r);
      int best = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (state_[j] == VarState::kBasic) continue;
        if (std::abs(row[j]) > 1e-9 &&
            (best < 0 || std::abs(row[j]) > std::abs(row[best]))) {
          best = j;
        }
      }
      if (best < 0) continue;
      const double value =
          state_[best] == VarState::kAtUpper ? upper_[best] : 0.0;
      state_[basis_[r]] = VarState::kAtLower;
      Pivot(r, best);
      beta_[r] = value;
      basis_[r] = best;
      state_[best] = VarState::kBasic;
    }
    for (int j = first_artificial_; j < n_; ++j) upper_[j] = 0.0;
    phase_two_ = true;
  }

  const SimplexOptions& options_;
  int m_;
  int num_structural_;
  int first_artificial_ = 0;
  int n_ = 0;
  std::vector<double> a_;
  std::vector<double> beta_;
  std::vector<double> upper_;
  std::vector<double> reduced_;
  std::vector<int> basis_;
  std::vector<VarState> state_;
  std::vector<int> nonzeros_;
  double rhs_scale_ = 1.0;
  bool phase_two_ = false;
  int iterations_ = 0;
};

}  // namespace

Solution DenseSimplexSolver::Solve(const LinearProgram& program) const {
  Tableau tableau(program, options_);
  return tableau.Solve(program);
}

}  // namespace eppt::lp
