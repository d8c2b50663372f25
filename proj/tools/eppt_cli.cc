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

// Command-line front end: single-run solvers over an instance directory,
// geodata ingestion and the budget-sweep experiment.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eppt/baselines.h"
#include "eppt/csv.h"
#include "eppt/experiment.h"
#include "eppt/geo_io.h"
#include "eppt/ingest.h"
#include "eppt/instance_io.h"
#include "eppt/lp_benchmark.h"
#include "eppt/oracles.h"
#include "eppt/ras.h"
#include "eppt/rng.h"
#include "eppt/synthetic.h"

namespace {

using eppt::csv::FormatReport;

struct InstanceFlags {
  std::string instance;
  std::optional<double> budget;
  std::optional<std::string> scenario;
  bool allow_small_budget = false;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--instance", f.instance, "Instance directory")->required();
  cmd->add_option("--budget", f.budget, "Budget in raw money");
  cmd->add_option("--scenario", f.scenario, "bus_only or combined")
      ->check(CLI::IsMember({"bus_only", "combined"}));
  cmd->add_flag("--allow-small-budget", f.allow_small_budget,
                "Accept budgets below the largest program cost");
}

eppt::NormalizedInstance LoadNormalized(const InstanceFlags& f) {
  eppt::Instance inst = eppt::ReadInstance(f.instance);
  if (f.scenario)
    inst = eppt::ApplyScenario(inst, eppt::ParseScenario(*f.scenario));
  if (f.budget) inst = inst.WithBudget(*f.budget);
  return eppt::Normalize(inst, f.allow_small_budget);
}

std::ofstream OpenOut(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::string SelectedIds(const eppt::Instance& inst,
                        const eppt::StrategyOutcome& out) {
  std::vector<std::string> ids;
  for (int j : out.strategy.Indices()) ids.push_back(inst.programs()[j].id);
  return eppt::csv::JoinFields(ids, ';');
}

void WriteLogHeader(std::ostream& log) {
  log << "trial,selected,cost,equity\n";
}

void WriteLogRow(std::ostream& log, int trial, const eppt::Instance& inst,
                 const eppt::StrategyOutcome& out, double scale) {
  log << trial << ',' << SelectedIds(inst, out) << ','
      << FormatReport(out.total_cost * scale) << ',' << FormatReport(out.equity)
      << '\n';
}

void PrintRow(const eppt::ReportRow& r, double t_star) {
  std::cout << "t_star=" << FormatReport(t_star)
            << " mean_equity=" << FormatReport(r.mean_equity)
            << " approx_ratio=" << FormatReport(r.approx_ratio) << " ci=["
            << FormatReport(r.ci_low) << ',' << FormatReport(r.ci_high) << ']'
            << " mean_cost=" << FormatReport(r.mean_cost)
            << " max_cost=" << FormatReport(r.max_cost) << '\n';
}

int SolveLpCommand(const InstanceFlags& f, const std::string& out_path,
                   const std::string& lp_out) {
  const eppt::NormalizedInstance norm = LoadNormalized(f);
  const eppt::LpModel model = eppt::BuildLp(norm.instance);
  if (!lp_out.empty()) OpenOut(lp_out) << model.program().ToLpFormat();
  const eppt::FractionalSolution sol = eppt::SolveLp(model);
  const auto violations = eppt::VerifySolution(norm.instance, sol);
  std::cout << "t_star=" << FormatReport(sol.objective)
            << " normalized_budget=" << FormatReport(norm.instance.budget())
            << " scale=" << FormatReport(norm.scale)
            << " violations=" << violations.size() << '\n';
  if (!out_path.empty()) {
    std::ofstream out = OpenOut(out_path);
    out << "program,x_star\n";
    for (int j = 0; j < norm.instance.num_programs(); ++j) {
      out << norm.instance.programs()[j].id << ','
          << eppt::csv::FormatDouble(sol.x_star[j]) << '\n';
    }
  }
  return violations.empty() ? 0 : 1;
}

int TrialsCommand(eppt::Algorithm algorithm, const InstanceFlags& f, int trials,
                  std::uint64_t seed, const std::string& out_path) {
  const eppt::NormalizedInstance norm = LoadNormalized(f);
  const eppt::Instance& inst = norm.instance;
  const eppt::FractionalSolution sol =
      eppt::SolveLpLeastSpend(inst, eppt::BuildLp(inst));
  std::optional<std::ofstream> log;
  if (!out_path.empty()) {
    log = OpenOut(out_path);
    WriteLogHeader(*log);
  }
  eppt::TrialBatch batch;
  batch.num_groups = inst.num_groups();
  const int runs = algorithm == eppt::Algorithm::kGreedy ? 1 : trials;
  for (int k = 0; k < runs; ++k) {
    const std::uint64_t s =
        eppt::DeriveSeed(seed, {static_cast<std::uint64_t>(k)});
    eppt::StrategyOutcome out;
    switch (algorithm) {
      case eppt::Algorithm::kRas:
        out = eppt::Ras(inst, sol.x_star, s).outcome;
        break;
      case eppt::Algorithm::kUniform:
        out = eppt::Uniform(inst, s);
        break;
      case eppt::Algorithm::kGreedy:
        out = eppt::Greedy(inst);
        break;
    }
    batch.equity.push_back(out.equity);
    batch.cost.push_back(out.total_cost);
    batch.group_ratios.insert(batch.group_ratios.end(),
                              out.group_ratios.begin(), out.group_ratios.end());
    if (log) WriteLogRow(*log, k, inst, out, norm.scale);
  }
  PrintRow(eppt::Summarize(batch, sol.objective, norm.scale), sol.objective);
  return 0;
}

int OracleCommand(const InstanceFlags& f, bool prune,
                  const std::string& out_path) {
  const eppt::NormalizedInstance norm = LoadNormalized(f);
  const double opt_d = eppt::OptDeterministic(norm.instance).value;
  const double opt_r =
      eppt::OptRandomized(norm.instance, {.prune_dominated = prune}).value;
  const double t_star = eppt::SolveLp(eppt::BuildLp(norm.instance)).objective;
  std::cout << "opt_d=" << FormatReport(opt_d)
            << " opt_r=" << FormatReport(opt_r)
            << " t_star=" << FormatReport(t_star) << '\n';
  if (!out_path.empty()) {
    OpenOut(out_path) << "opt_d,opt_r,t_star\n"
                      << FormatReport(opt_d) << ',' << FormatReport(opt_r)
                      << ',' << FormatReport(t_star) << '\n';
  }
  return 0;
}

struct IngestFlags {
  std::string geo;
  std::string write_geo;
  std::uint64_t synthetic_seed = 1;
  int target_households = 2000;
  int route_count = 20;
  std::string group_by = "race";
  std::string scenario = "combined";
  double budget = 0.0;
  std::string out;
};

int IngestCommand(const IngestFlags& f) {
  eppt::geo::GeoDataset dataset;
  if (!f.geo.empty()) {
    dataset = eppt::geo::ReadGeoDataset(f.geo);
  } else {
    eppt::geo::SyntheticCityParams params;
    params.seed = f.synthetic_seed;
    params.target_eligible = f.target_households;
    dataset = eppt::geo::GenerateSyntheticCity(params);
  }
  if (!f.write_geo.empty()) eppt::geo::WriteGeoDataset(dataset, f.write_geo);

  eppt::ExperimentConfig config;
  config.route_count = f.route_count;
  config.synthetic.seed = f.synthetic_seed;
  eppt::SetConfigValue(config, "group_by", f.group_by);
  eppt::geo::IngestOptions options = eppt::IngestOptionsFor(config);
  options.build.scenario = eppt::ParseScenario(f.scenario);
  options.budget = f.budget;
  const eppt::geo::IngestResult result = eppt::geo::Ingest(dataset, options);
  eppt::WriteInstance(result.instance, f.out);
  std::cout << "households=" << dataset.households.size()
            << " eligible=" << result.eligible.size()
            << " stops=" << result.stops.size()
            << " routes=" << result.routes.generated << '/'
            << result.routes.requested
            << " programs=" << result.instance.num_programs()
            << " groups=" << result.instance.num_groups() << '\n';
  if (result.routes.exhausted()) {
    std::cerr << "warning: geography supports only " << result.routes.generated
              << " of " << result.routes.requested << " routes\n";
  }
  return 0;
}

struct ExperimentFlags {
  std::string config;
  std::string instance;
  std::string geo;
  std::vector<double> budgets;
  std::vector<std::string> scenarios;
  std::vector<std::string> algorithms;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> synthetic_seed;
  std::optional<int> threads;
  bool allow_small_budget = false;
  std::string out = "results.csv";
};

int ExperimentCommand(const ExperimentFlags& f) {
  eppt::ExperimentConfig config = f.config.empty()
                                      ? eppt::ExperimentConfig{}
                                      : eppt::ReadConfigFile(f.config);
  if (!f.instance.empty()) config.instance_dir = f.instance;
  if (!f.geo.empty()) config.geo_dir = f.geo;
  if (!f.budgets.empty()) config.budgets = f.budgets;
  if (!f.scenarios.empty()) {
    config.scenarios.clear();
    for (const auto& s : f.scenarios)
      config.scenarios.push_back(eppt::ParseScenario(s));
  }
  if (!f.algorithms.empty()) {
    config.algorithms.clear();
    for (const auto& a : f.algorithms)
      config.algorithms.push_back(eppt::ParseAlgorithm(a));
  }
  if (f.trials) config.trials = *f.trials;
  if (f.seed) config.seed = *f.seed;
  if (f.synthetic_seed) config.synthetic.seed = *f.synthetic_seed;
  if (f.threads) config.threads = *f.threads;
  if (f.allow_small_budget) config.allow_small_budget = true;

  const eppt::ExperimentReport report = eppt::RunExperiment(config);
  eppt::Emit(report, f.out);
  std::cout << eppt::ResultsCsv(report);
  for (eppt::Scenario s : eppt::TStarMonotonicityViolations(report)) {
    std::cerr << "warning: LP optimum decreases with budget under "
              << eppt::ScenarioName(s) << '\n';
  }
  const bool both = std::count(config.scenarios.begin(), config.scenarios.end(),
                               eppt::Scenario::kBusOnly) > 0 &&
                    std::count(config.scenarios.begin(), config.scenarios.end(),
                               eppt::Scenario::kCombined) > 0;
  if (both) {
    std::cout << "\nbudget,algorithm,bus_only,combined,delta\n";
    for (const eppt::ScenarioDelta& d : eppt::CompareScenarios(report)) {
      std::cout << FormatReport(d.budget) << ','
                << eppt::AlgorithmName(d.algorithm) << ','
                << FormatReport(d.bus_only) << ',' << FormatReport(d.combined)
                << ',' << FormatReport(d.delta) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equity-aware transit budget allocation"};
  app.require_subcommand(1);

  InstanceFlags inst;
  std::string out;
  std::string lp_out;
  int trials = 1000;
  std::uint64_t seed = 1;
  bool prune = false;

  auto* solve = app.add_subcommand("solve-lp", "Solve the LP benchmark");
  AddInstanceFlags(solve, inst);
  solve->add_option("--out", out, "Write x* as CSV");
  solve->add_option("--lp-out", lp_out, "Write the LP in CPLEX LP format");

  auto add_trial_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    AddInstanceFlags(cmd, inst);
    cmd->add_option("--trials", trials, "Number of trials")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--out", out, "Per-trial log CSV");
    return cmd;
  };
  auto* ras = add_trial_cmd("ras", "LP solve followed by dependent rounding");
  auto* uniform = add_trial_cmd("uniform", "Uniform random baseline");
  auto* greedy = app.add_subcommand("greedy", "Greedy equity baseline");
  AddInstanceFlags(greedy, inst);
  greedy->add_option("--out", out, "Log CSV");

  auto* oracle =
      app.add_subcommand("oracle", "Exact optima on small instances");
  AddInstanceFlags(oracle, inst);
  oracle->add_flag("--prune", prune, "Prune dominated strategies");
  oracle->add_option("--out", out, "Write opt_d,opt_r,t_star CSV");

  IngestFlags ing;
  auto* ingest = app.add_subcommand("ingest", "Build an instance from geodata");
  ingest->add_option("--geo", ing.geo,
                     "Geodata directory (default: synthetic)");
  ingest->add_option("--write-geo", ing.write_geo,
                     "Also write the geodata used");
  ingest->add_option("--synthetic-seed", ing.synthetic_seed,
                     "Seed for the synthetic city and route generation");
  ingest->add_option("--target-households", ing.target_households,
                     "Eligible households in the synthetic city");
  ingest->add_option("--route-count", ing.route_count, "Routes to generate");
  ingest->add_option("--group-by", ing.group_by, "race or poverty_tier")
      ->check(CLI::IsMember({"race", "poverty_tier"}));
  ingest->add_option("--scenario", ing.scenario, "bus_only or combined")
      ->check(CLI::IsMember({"bus_only", "combined"}));
  ingest->add_option("--budget", ing.budget, "Budget stored in the instance");
  ingest->add_option("--out", ing.out, "Instance directory")->required();

  ExperimentFlags exp;
  auto* experiment = app.add_subcommand("experiment", "Budget sweep");
  experiment->add_option("--config", exp.config, "key=value config file");
  experiment->add_option("--instance", exp.instance, "Instance directory");
  experiment->add_option("--geo", exp.geo, "Geodata directory");
  experiment->add_option("--budget", exp.budgets, "Budgets in raw money")
      ->delimiter(',');
  experiment->add_option("--scenario", exp.scenarios, "Scenarios")
      ->delimiter(',')
      ->check(CLI::IsMember({"bus_only", "combined"}));
  experiment->add_option("--algorithm", exp.algorithms, "Algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"ras", "greedy", "uniform"}));
  experiment->add_option("--trials", exp.trials, "Trials per cell")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Master seed");
  experiment->add_option("--synthetic-seed", exp.synthetic_seed,
                         "Seed for the synthetic city");
  experiment->add_option("--threads", exp.threads, "Worker threads");
  experiment->add_flag("--allow-small-budget", exp.allow_small_budget,
                       "Accept budgets below the largest program cost");
  experiment->add_option("--out", exp.out, "Results CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return SolveLpCommand(inst, out, lp_out);
    if (*ras)
      return TrialsCommand(eppt::Algorithm::kRas, inst, trials, seed, out);
    if (*uniform) {
      return TrialsCommand(eppt::Algorithm::kUniform, inst, trials, seed, out);
    }
    if (*greedy) {
      return TrialsCommand(eppt::Algorithm::kGreedy, inst, 1, seed, out);
    }
    if (*oracle) return OracleCommand(inst, prune, out);
    if (*ingest) return IngestCommand(ing);
    if (*experiment) return ExperimentCommand(exp);
  } catch (const eppt::BudgetBelowOneError& e) {
    std::cerr << "error: " << e.what()
              << " (pass --allow-small-budget to continue)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
