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

// Budget-sweep experiments. For every (budget, scenario) cell the instance
// is normalized, the LP benchmark is solved once for its least-spend
// optimum, each randomized algorithm runs `trials` times and Greedy runs
// once. Trial k of an algorithm uses the same seed in every cell. Results are
// reported in raw money; the normalized budget and LP optimum of each cell
// are kept alongside.
//
// Equity of a randomized algorithm is the minimum over groups of the mean
// per-trial coverage ratio. Its 95% interval is the normal approximation
// mean +/- 1.96 s / sqrt(n), with s the sample deviation of the per-trial
// ratio of that minimizing group.

#ifndef EPPT_EXPERIMENT_H_
#define EPPT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eppt/geo.h"
#include "eppt/ingest.h"
#include "eppt/model.h"
#include "eppt/synthetic.h"

namespace eppt {

enum class Algorithm { kRas, kGreedy, kUniform };

const char* AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& name);

struct ExperimentConfig {
  // Raw money.
  std::vector<double> budgets = {5e6, 7.5e6, 10e6, 12.5e6, 15e6, 17.5e6, 20e6};
  std::vector<Scenario> scenarios = {Scenario::kBusOnly, Scenario::kCombined};
  std::vector<Algorithm> algorithms = {Algorithm::kRas, Algorithm::kGreedy,
                                       Algorithm::kUniform};
  int trials = 1000;
  std::uint64_t seed = 1;
  // Instance source, first match wins: an instance directory, a geodata
  // directory, else the synthetic city.
  std::optional<std::filesystem::path> instance_dir;
  std::optional<std::filesystem::path> geo_dir;
  geo::SyntheticCityParams synthetic;
  int route_count = 20;
  geo::GroupBy group_by = geo::GroupBy::kRace;
  // 0 picks the hardware concurrency.
  int threads = 0;
  bool allow_small_budget = false;

  // Throws std::invalid_argument unless trials >= 1 and the budget,
  // scenario and algorithm lists are nonempty.
  void Validate() const;
};

// Sets one key from a flat config file. Keys: budgets, scenarios,
// algorithms (comma lists), trials, seed, instance, geo, synthetic_seed,
// target_households, route_count, group_by (race|poverty_tier), threads,
// allow_small_budget (true|false). Throws std::invalid_argument on unknown
// keys or bad values.
void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value);

// key=value lines; '#' starts a comment, blank lines are ignored.
ExperimentConfig ReadConfigFile(const std::filesystem::path& path);

// Ingest settings used for geodata and synthetic sources. Route generation
// is seeded from the synthetic seed, so the instance does not depend on the
// trial seed.
geo::IngestOptions IngestOptionsFor(const ExperimentConfig& config);

// Instance before any scenario is applied: households carry ride-hailing
// costs so that either scenario can be derived from it.
Instance LoadBaseInstance(const ExperimentConfig& config);

struct ReportRow {
  double budget = 0.0;  // raw money
  Scenario scenario = Scenario::kBusOnly;
  Algorithm algorithm = Algorithm::kRas;
  double mean_equity = 0.0;
  double approx_ratio = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double mean_cost = 0.0;  // raw money
  double max_cost = 0.0;   // raw money
  int trials = 0;
};

struct CellSummary {
  double budget = 0.0;
  Scenario scenario = Scenario::kBusOnly;
  double normalized_budget = 0.0;
  double scale = 1.0;
  double t_star = 0.0;
  int num_programs = 0;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<CellSummary> cells;
};

// Per-trial statistics for one algorithm in one cell.
struct TrialBatch {
  std::vector<double> equity;
  std::vector<double> cost;  // normalized money
  // trials x groups, row-major.
  std::vector<double> group_ratios;
  int num_groups = 0;

  int size() const { return static_cast<int>(equity.size()); }
};

// Runs RAS or Uniform `trials` times on a normalized instance. Trial k uses
// DeriveSeed(stream_seed, {k}); results do not depend on `threads`.
TrialBatch RunTrials(const Instance& instance, std::span<const double> x_star,
                     Algorithm algorithm, int trials, std::uint64_t stream_seed,
                     int threads);

// Aggregates a batch into a report row. `scale` converts costs back to raw
// money; approx_ratio is mean_equity / t_star, or 1 when t_star is zero.
ReportRow Summarize(const TrialBatch& batch, double t_star, double scale);

ExperimentReport RunExperiment(const Instance& base,
                               const ExperimentConfig& config);
ExperimentReport RunExperiment(const ExperimentConfig& config);

struct ScenarioDelta {
  double budget = 0.0;
  Algorithm algorithm = Algorithm::kRas;
  double bus_only = 0.0;
  double combined = 0.0;
  double delta = 0.0;  // combined - bus_only
};

// One delta per (budget, algorithm) present under both scenarios. Throws
// std::invalid_argument when either scenario is absent from the report.
std::vector<ScenarioDelta> CompareScenarios(const ExperimentReport& report);

// Scenarios whose LP optimum decreases (beyond 1e-7) as the budget grows.
std::vector<Scenario> TStarMonotonicityViolations(
    const ExperimentReport& report);

inline constexpr int kPlotSchemaVersion = 1;

// Writes the results CSV to `csv_path` and the plot data next to it as
// <stem>.plot.json. Output bytes depend only on the report.
//
// CSV header: budget,scenario,algorithm,mean_equity,approx_ratio,ci_low,
//             ci_high,mean_cost,max_cost
// JSON: {schema_version, cells: [{budget, scenario, normalized_budget,
//        scale, t_star, num_programs}], series: [{algorithm, scenario,
//        points: [{budget, mean_equity, approx_ratio, ci_low, ci_high,
//        mean_cost, max_cost}]}]}
void Emit(const ExperimentReport& report,
          const std::filesystem::path& csv_path);

std::string ResultsCsv(const ExperimentReport& report);
std::filesystem::path PlotPathFor(const std::filesystem::path& csv_path);

}  // namespace eppt

#endif  // EPPT_EXPERIMENT_H_
