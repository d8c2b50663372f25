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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "eppt/rng.h"

namespace eppt::lp {
namespace {

const DenseSimplexSolver kDantzig;
const DenseSimplexSolver kBland({.pricing = PricingRule::kBland});

TEST(SimplexTest, TextbookMaximization) {
  // max 3x + 5y; x <= 4, 2y <= 12, 3x + 2y <= 18.
  LinearProgram lp;
  const int x = lp.AddVariable("x", 3);
  const int y = lp.AddVariable("y", 5);
  lp.AddRow("c1", {{x, 1}}, RowSense::kLessEqual, 4);
  lp.AddRow("c2", {{y, 2}}, RowSense::kLessEqual, 12);
  lp.AddRow("c3", {{x, 3}, {y, 2}}, RowSense::kLessEqual, 18);
  for (const Solver* s : {static_cast<const Solver*>(&kDantzig),
                          static_cast<const Solver*>(&kBland)}) {
    const Solution sol = s->Solve(lp);
    ASSERT_EQ(sol.status, SolveStatus::kOptimal);
    EXPECT_NEAR(sol.objective, 36, 1e-9);
    EXPECT_NEAR(sol.values[x], 2, 1e-9);
    EXPECT_NEAR(sol.values[y], 6, 1e-9);
  }
}

TEST(SimplexTest, UpperBoundsWithoutRows) {
  LinearProgram lp;
  lp.AddVariable("a", 2, 1.5);
  lp.AddVariable("b", -1, 4);
  const Solution sol = kDantzig.Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 3, 1e-12);
  EXPECT_NEAR(sol.values[1], 0, 1e-12);
}

TEST(SimplexTest, EqualityAndGreaterEqualRows) {
  // max x + y; x + y = 3, x - y >= 1, x <= 2.5.
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1, 2.5);
  const int y = lp.AddVariable("y", 1);
  lp.AddRow("e", {{x, 1}, {y, 1}}, RowSense::kEqual, 3);
  lp.AddRow("g", {{x, 1}, {y, -1}}, RowSense::kGreaterEqual, 1);
  const Solution sol = kDantzig.Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 3, 1e-9);
  EXPECT_LE(lp.MaxViolation(sol.values), 1e-9);
}

TEST(SimplexTest, NegativeRightHandSide) {
  // max -x; -x <= -2  (x >= 2).
  LinearProgram lp;
  const int x = lp.AddVariable("x", -1);
  lp.AddRow("r", {{x, -1}}, RowSense::kLessEqual, -2);
  const Solution sol = kDantzig.Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_NEAR(sol.values[x], 2, 1e-12);
}

TEST(SimplexTest, DetectsInfeasibility) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1, 1);
  lp.AddRow("r", {{x, 1}}, RowSense::kGreaterEqual, 2);
  EXPECT_EQ(kDantzig.Solve(lp).status, SolveStatus::kInfeasible);
}

TEST(SimplexTest, DetectsUnboundedness) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1);
  const int y = lp.AddVariable("y", 0);
  lp.AddRow("r", {{x, 1}, {y, -1}}, RowSense::kLessEqual, 1);
  EXPECT_EQ(kDantzig.Solve(lp).status, SolveStatus::kUnbounded);
}

TEST(SimplexTest, DegenerateCyclingExample) {
  // Beale's example, which cycles under naive largest-coefficient pricing
  // without an anti-cycling rule.
  LinearProgram lp;
  const int x1 = lp.AddVariable("x1", 0.75);
  const int x2 = lp.AddVariable("x2", -150);
  const int x3 = lp.AddVariable("x3", 1.0 / 50);
  const int x4 = lp.AddVariable("x4", -6);
  lp.AddRow("r1", {{x1, 0.25}, {x2, -60}, {x3, -1.0 / 25}, {x4, 9}},
            RowSense::kLessEqual, 0);
  lp.AddRow("r2", {{x1, 0.5}, {x2, -90}, {x3, -1.0 / 50}, {x4, 3}},
            RowSense::kLessEqual, 0);
  lp.AddRow("r3", {{x3, 1}}, RowSense::kLessEqual, 1);
  for (const Solver* s : {static_cast<const Solver*>(&kDantzig),
                          static_cast<const Solver*>(&kBland)}) {
    const Solution sol = s->Solve(lp);
    ASSERT_EQ(sol.status, SolveStatus::kOptimal);
    EXPECT_NEAR(sol.objective, 0.05, 1e-9);
  }
}

TEST(SimplexTest, LpFormatListsRowsAndBounds) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1, 1);
  lp.AddRow("cap", {{x, 2}}, RowSense::kLessEqual, 1);
  const std::string text = lp.ToLpFormat();
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("cap:"), std::string::npos);
  EXPECT_NE(text.find("0 <= x <= 1"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

// Independent oracle: enumerate every basic point of a tiny bounded LP by
// solving each n x n subsystem of tight constraints.
struct Halfspace {
  std::vector<double> a;
  double b;  // a.x <= b
};

std::optional<std::vector<double>> SolveSquare(
    std::vector<std::vector<double>> m, std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    }
    if (std::abs(m[pivot][c]) < 1e-12) return std::nullopt;
    std::swap(m[c], m[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

std::optional<double> VertexOptimum(const std::vector<double>& c,
                                    const std::vector<Halfspace>& hs) {
  const int n = static_cast<int>(c.size());
  const int k = static_cast<int>(hs.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  // Enumerate n-subsets of the halfspaces.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> m(n);
      std::vector<double> rhs(n);
      for (int i = 0; i < n; ++i) {
        m[i] = hs[pick[i]].a;
        rhs[i] = hs[pick[i]].b;
      }
      const auto x = SolveSquare(m, rhs);
      if (!x) return;
      for (const Halfspace& h : hs) {
        double lhs = 0;
        for (int j = 0; j < n; ++j) lhs += h.a[j] * (*x)[j];
        if (lhs > h.b + 1e-9) return;
      }
      double obj = 0;
      for (int j = 0; j < n; ++j) obj += c[j] * (*x)[j];
      if (!best || obj > *best) best = obj;
      return;
    }
    for (int i = start; i < k; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

TEST(SimplexPropertyTest, MatchesVertexEnumeration) {
  int optimal = 0;
  int infeasible = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(DeriveSeed(77, {seed}));
    const int n = 2 + static_cast<int>(rng.UniformIndex(2));
    const int rows = 1 + static_cast<int>(rng.UniformIndex(4));
    LinearProgram lp;
    std::vector<double> c(n);
    std::vector<Halfspace> hs;
    for (int j = 0; j < n; ++j) {
      c[j] = static_cast<double>(rng.UniformIndex(9)) - 4;
      const double upper = 1 + static_cast<double>(rng.UniformIndex(5));
      lp.AddVariable("x" + std::to_string(j), c[j], upper);
      std::vector<double> e(n, 0.0);
      e[j] = 1;
      hs.push_back({e, upper});
      e[j] = -1;
      hs.push_back({e, 0});
    }
    for (int r = 0; r < rows; ++r) {
      std::vector<Term> terms;
      std::vector<double> a(n);
      for (int j = 0; j < n; ++j) {
        a[j] = static_cast<double>(rng.UniformIndex(7)) - 3;
        if (a[j] != 0) terms.push_back({j, a[j]});
      }
      const double b = static_cast<double>(rng.UniformIndex(11)) - 2;
      const int sense = static_cast<int>(rng.UniformIndex(3));
      lp.AddRow("r" + std::to_string(r), terms, static_cast<RowSense>(sense),
                b);
      std::vector<double> neg(n);
      for (int j = 0; j < n; ++j) neg[j] = -a[j];
      if (sense != static_cast<int>(RowSense::kGreaterEqual))
        hs.push_back({a, b});
      if (sense != static_cast<int>(RowSense::kLessEqual))
        hs.push_back({neg, -b});
    }
    const std::optional<double> oracle = VertexOptimum(c, hs);
    for (const Solver* s : {static_cast<const Solver*>(&kDantzig),
                            static_cast<const Solver*>(&kBland)}) {
      const Solution sol = s->Solve(lp);
      if (!oracle) {
        EXPECT_EQ(sol.status, SolveStatus::kInfeasible) << "seed " << seed;
        continue;
      }
      ASSERT_EQ(sol.status, SolveStatus::kOptimal) << "seed " << seed;
      EXPECT_NEAR(sol.objective, *oracle, 1e-7) << "seed " << seed;
      EXPECT_LE(lp.MaxViolation(sol.values), 1e-7) << "seed " << seed;
    }
    oracle ? ++optimal : ++infeasible;
  }
  // The generator must exercise both outcomes.
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 10);
}

}  // namespace
}  // namespace eppt::lp
