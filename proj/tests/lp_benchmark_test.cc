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

#include <gtest/gtest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "eppt/rng.h"
#include "support/fixtures.h"

namespace eppt {
namespace {

TEST(BuildLpTest, TwoGroupToyLayout) {
  const LpModel model = BuildLp(test::TwoGroupToy());
  EXPECT_EQ(model.num_variables(), 5);
  EXPECT_EQ(model.num_constraints(), 1 + 2 * 2 + 2);
  const lp::Row& budget = model.program().rows()[0];
  ASSERT_EQ(budget.terms.size(), 2u);
  EXPECT_EQ(budget.terms[0].var, model.x_var(0));
  EXPECT_EQ(budget.terms[1].var, model.x_var(1));
  EXPECT_EQ(budget.terms[0].coef, 1.0);
  EXPECT_EQ(budget.rhs, 1.0);
  EXPECT_EQ(budget.sense, lp::RowSense::kLessEqual);
  EXPECT_EQ(model.program().objective()[model.t_var()], 1.0);
}

TEST(BuildLpTest, UncoveredHouseholdIsPinnedAtZero) {
  Instance inst({{"a", std::nullopt, {"g"}}, {"b", std::nullopt, {"g"}}},
                {{"p", 1.0, {0}}}, 1.0);
  const FractionalSolution sol = SolveLp(BuildLp(inst));
  EXPECT_NEAR(sol.y_star[1], 0.0, 1e-12);
  EXPECT_NEAR(sol.objective, 0.5, 1e-9);
}

TEST(BuildLpTest, SingleGroupHasOneEquityRow) {
  Instance inst({{"a", std::nullopt, {"g"}}, {"b", std::nullopt, {"g"}}},
                {{"p", 1.0, {0, 1}}}, 1.0);
  const LpModel model = BuildLp(inst);
  EXPECT_EQ(model.program().num_rows(), 1 + 2 + 1);
}

TEST(SolveLpTest, TwoGroupToyHalf) {
  const FractionalSolution sol = SolveLp(BuildLp(test::TwoGroupToy()));
  EXPECT_NEAR(sol.objective, 0.5, 1e-9);
  EXPECT_NEAR(sol.x_star[0], 0.5, 1e-9);
  EXPECT_NEAR(sol.x_star[1], 0.5, 1e-9);
}

TEST(SolveLpTest, AffordableFullCoverage) {
  Instance inst({{"a", std::nullopt, {"g1"}}, {"b", std::nullopt, {"g2"}}},
                {{"p", 1.0, {0, 1}}}, 1.0);
  const FractionalSolution sol = SolveLp(BuildLp(inst));
  EXPECT_NEAR(sol.objective, 1.0, 1e-9);
  EXPECT_NEAR(sol.x_star[0], 1.0, 1e-9);
}

TEST(SolveLpTest, SaturatedBudgetReachesFullSelectionEquity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = test::RandomInstance(seed);
    const Instance rich = inst.WithBudget(inst.TotalCost());
    const double all = Evaluate(rich, DeterministicStrategy{std::vector<bool>(
                                          inst.num_programs(), true)})
                           .equity;
    EXPECT_NEAR(SolveLp(BuildLp(rich)).objective, all, 1e-9) << seed;
  }
}

// Optima of fixed generator instances, computed with an independent LP
// solver (HiGHS) and frozen.
TEST(SolveLpTest, MatchesFrozenReferenceOptima) {
  const std::vector<std::pair<std::uint64_t, double>> cases = {
      {11, 0.893098642364},
      {18, 0.531756460032},
      {28, 0.941841451114},
      {30, 0.857757199040}};
  const lp::DenseSimplexSolver bland({.pricing = lp::PricingRule::kBland});
  for (const auto& [seed, expected] : cases) {
    const LpModel model = BuildLp(test::RandomInstance(seed));
    EXPECT_NEAR(SolveLp(model).objective, expected, 1e-9) << "seed " << seed;
    EXPECT_NEAR(SolveLp(model, bland).objective, expected, 1e-9)
        << "seed " << seed;
  }
}

TEST(VerifySolutionTest, OptimalSolutionIsClean) {
  const Instance inst = test::TwoGroupToy();
  EXPECT_TRUE(VerifySolution(inst, SolveLp(BuildLp(inst))).empty());
}

TEST(VerifySolutionTest, FlagsBudgetOverrun) {
  const Instance inst = test::TwoGroupToy();
  FractionalSolution sol = SolveLp(BuildLp(inst));
  sol.x_star[0] += 0.1;
  const auto v = VerifySolution(inst, sol);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kBudget);
  EXPECT_NEAR(v[0].magnitude, 0.1, 1e-12);
}

TEST(VerifySolutionTest, FlagsCoverageAboveCap) {
  const Instance inst = test::TwoGroupToy();
  FractionalSolution sol = SolveLp(BuildLp(inst));
  sol.y_star[1] = 0.9;
  const auto v = VerifySolution(inst, sol);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kCoverageCap);
  EXPECT_EQ(v[0].index, 1);
}

TEST(VerifySolutionTest, FlagsEquityAboveGroupRatio) {
  const Instance inst = test::TwoGroupToy();
  FractionalSolution sol = SolveLp(BuildLp(inst));
  sol.objective = 0.7;
  const auto v = VerifySolution(inst, sol);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, ViolationKind::kEquity);
}

TEST(LpPropertyTest, SolutionsVerifyAndOptimumGrowsWithBudget) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst = test::RandomInstance(DeriveSeed(3, {seed}));
    const FractionalSolution low = SolveLp(BuildLp(inst));
    EXPECT_TRUE(VerifySolution(inst, low).empty()) << "seed " << seed;
    const Instance more = inst.WithBudget(inst.budget() * 1.5);
    const FractionalSolution high = SolveLp(BuildLp(more));
    EXPECT_GE(high.objective, low.objective - 1e-9) << "seed " << seed;
    EXPECT_LE(high.objective, 1.0 + 1e-12);
  }
}

TEST(SolveLpLeastSpendTest, PrefersCheaperCoverage) {
  // Both programs cover the only household; the cheap one suffices.
  const Instance inst({{"h", std::nullopt, {"g"}}},
                      {{"dear", 1.0, {0}}, {"cheap", 0.5, {0}}}, 2.0);
  const FractionalSolution sol = SolveLpLeastSpend(inst, BuildLp(inst));
  EXPECT_NEAR(sol.objective, 1.0, 1e-12);
  EXPECT_NEAR(sol.x_star[0], 0.0, 1e-9);
  EXPECT_NEAR(sol.x_star[1], 1.0, 1e-9);
}

double Spend(const Instance& inst, const FractionalSolution& sol) {
  double spend = 0.0;
  for (int j = 0; j < inst.num_programs(); ++j) {
    spend += inst.costs()[j] * sol.x_star[j];
  }
  return spend;
}

TEST(SolveLpLeastSpendTest, SameOptimumNoMoreSpendBudgetFree) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = test::RandomInstance(seed);
    const LpModel model = BuildLp(inst);
    const FractionalSolution plain = SolveLp(model);
    const FractionalSolution least = SolveLpLeastSpend(inst, model);
    EXPECT_EQ(least.objective, plain.objective) << seed;
    EXPECT_LE(Spend(inst, least), Spend(inst, plain) + 1e-9) << seed;
    EXPECT_TRUE(VerifySolution(inst, least).empty()) << seed;
    // With the budget raised past the optimal spend, the spend is unchanged.
    const Instance richer = inst.WithBudget(inst.budget() + 1.0);
    const FractionalSolution again = SolveLpLeastSpend(richer, BuildLp(richer));
    if (again.objective <= least.objective + 1e-9) {
      EXPECT_NEAR(Spend(richer, again), Spend(inst, least), 1e-7) << seed;
    }
  }
}

}  // namespace
}  // namespace eppt
