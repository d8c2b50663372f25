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

#include "eppt/experiment.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "eppt/baselines.h"
#include "eppt/csv.h"
#include "eppt/geo_io.h"
#include "eppt/instance_io.h"
#include "eppt/lp_benchmark.h"
#include "eppt/ras.h"
#include "eppt/rng.h"
#include "json.hpp"

namespace eppt {
namespace {

constexpr double kZ95 = 1.96;
constexpr std::uint64_t kRouteSeedTag = 0x726f757465;

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  for (const std::string& item : csv::SplitFields(value, ',')) {
    const std::string t = Trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

bool ParseBool(const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("expected true or false, got '" + value + "'");
}

int ParsePositiveInt(const std::string& value, const std::string& key) {
  const long long v = csv::ParseInt(value, key);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(key + " out of range: " + value);
  }
  return static_cast<int>(v);
}

int ResolveThreads(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRas:
      return "ras";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kUniform:
      return "uniform";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "ras") return Algorithm::kRas;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "uniform") return Algorithm::kUniform;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (budgets.empty()) throw std::invalid_argument("no budgets given");
  if (scenarios.empty()) throw std::invalid_argument("no scenarios given");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms given");
  for (double b : budgets) {
    if (!std::isfinite(b) || b < 0) {
      throw std::invalid_argument("budgets must be finite and nonnegative");
    }
  }
}

void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
  if (key == "budgets") {
    config.budgets.clear();
    for (const std::string& b : SplitList(value)) {
      config.budgets.push_back(csv::ParseDouble(b, "budget"));
    }
  } else if (key == "scenarios") {
    config.scenarios.clear();
    for (const std::string& s : SplitList(value)) {
      config.scenarios.push_back(ParseScenario(s));
    }
  } else if (key == "algorithms") {
    config.algorithms.clear();
    for (const std::string& a : SplitList(value)) {
      config.algorithms.push_back(ParseAlgorithm(a));
    }
  } else if (key == "trials") {
    config.trials = ParsePositiveInt(value, key);
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(csv::ParseInt(value, key));
  } else if (key == "instance") {
    config.instance_dir = value;
  } else if (key == "geo") {
    config.geo_dir = value;
  } else if (key == "synthetic_seed") {
    config.synthetic.seed =
        static_cast<std::uint64_t>(csv::ParseInt(value, key));
  } else if (key == "target_households") {
    config.synthetic.target_eligible = ParsePositiveInt(value, key);
  } else if (key == "route_count") {
    config.route_count = ParsePositiveInt(value, key);
  } else if (key == "group_by") {
    if (value == "race") {
      config.group_by = geo::GroupBy::kRace;
    } else if (value == "poverty_tier") {
      config.group_by = geo::GroupBy::kPovertyTier;
    } else {
      throw std::invalid_argument("unknown group_by '" + value + "'");
    }
  } else if (key == "threads") {
    config.threads = ParsePositiveInt(value, key);
  } else if (key == "allow_small_budget") {
    config.allow_small_budget = ParseBool(value);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

ExperimentConfig ReadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  ExperimentConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = Trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" +
                                  std::to_string(line_no) +
                                  ": expected key=value");
    }
    SetConfigValue(config, Trim(body.substr(0, eq)), Trim(body.substr(eq + 1)));
  }
  return config;
}

geo::IngestOptions IngestOptionsFor(const ExperimentConfig& config) {
  geo::IngestOptions options;
  options.route_count = config.route_count;
  options.route_seed = DeriveSeed(config.synthetic.seed, {kRouteSeedTag});
  options.build.group_by = config.group_by;
  options.build.scenario = Scenario::kCombined;
  return options;
}

Instance LoadBaseInstance(const ExperimentConfig& config) {
  if (config.instance_dir) return ReadInstance(*config.instance_dir);
  const geo::GeoDataset dataset =
      config.geo_dir ? geo::ReadGeoDataset(*config.geo_dir)
                     : geo::GenerateSyntheticCity(config.synthetic);
  return geo::Ingest(dataset, IngestOptionsFor(config)).instance;
}

TrialBatch RunTrials(const Instance& instance, std::span<const double> x_star,
                     Algorithm algorithm, int trials, std::uint64_t stream_seed,
                     int threads) {
  if (algorithm == Algorithm::kGreedy) {
    throw std::invalid_argument("greedy is deterministic; run it once");
  }
  TrialBatch batch;
  batch.num_groups = instance.num_groups();
  batch.equity.assign(trials, 0.0);
  batch.cost.assign(trials, 0.0);
  batch.group_ratios.assign(static_cast<size_t>(trials) * batch.num_groups,
                            0.0);

  auto run = [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      const std::uint64_t seed =
          DeriveSeed(stream_seed, {static_cast<std::uint64_t>(k)});
      const StrategyOutcome out = algorithm == Algorithm::kRas
                                      ? Ras(instance, x_star, seed).outcome
                                      : Uniform(instance, seed);
      batch.equity[k] = out.equity;
      batch.cost[k] = out.total_cost;
      std::copy(out.group_ratios.begin(), out.group_ratios.end(),
                batch.group_ratios.begin() +
                    static_cast<size_t>(k) * batch.num_groups);
    }
  };

  const int workers = std::min(ResolveThreads(threads), trials);
  if (workers <= 1) {
    run(0, trials);
    return batch;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      const int begin =
          static_cast<int>(static_cast<long long>(trials) * w / workers);
      const int end =
          static_cast<int>(static_cast<long long>(trials) * (w + 1) / workers);
      pool.emplace_back([&, w, begin, end] {
        try {
          run(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return batch;
}

ReportRow Summarize(const TrialBatch& batch, double t_star, double scale) {
  const int n = batch.size();
  if (n == 0) throw std::invalid_argument("empty trial batch");
  ReportRow row;
  row.trials = n;

  // Per-trial series of the group that attains the minimum mean ratio.
  std::vector<double> series(n);
  if (batch.num_groups == 0) {
    series = batch.equity;
  } else {
    int worst = 0;
    double worst_mean = std::numeric_limits<double>::infinity();
    for (int g = 0; g < batch.num_groups; ++g) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        sum +=
            batch.group_ratios[static_cast<size_t>(k) * batch.num_groups + g];
      }
      if (sum / n < worst_mean) {
        worst_mean = sum / n;
        worst = g;
      }
    }
    for (int k = 0; k < n; ++k) {
      series[k] =
          batch.group_ratios[static_cast<size_t>(k) * batch.num_groups + worst];
    }
  }
  double sum = 0.0;
  for (double v : series) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : series) ss += (v - mean) * (v - mean);
  const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  const double half = kZ95 * sd / std::sqrt(static_cast<double>(n));

  row.mean_equity = mean;
  row.ci_low = mean - half;
  row.ci_high = mean + half;
  row.approx_ratio = t_star > 1e-12 ? mean / t_star : 1.0;
  double cost_sum = 0.0;
  double cost_max = -std::numeric_limits<double>::infinity();
  for (double c : batch.cost) {
    cost_sum += c;
    cost_max = std::max(cost_max, c);
  }
  row.mean_cost = cost_sum / n * scale;
  row.max_cost = cost_max * scale;
  return row;
}

ExperimentReport RunExperiment(const Instance& base,
                               const ExperimentConfig& config) {
  config.Validate();
  ExperimentReport report;
  for (const double budget : config.budgets) {
    for (Scenario scenario : config.scenarios) {
      const NormalizedInstance norm =
          Normalize(ApplyScenario(base, scenario).WithBudget(budget),
                    config.allow_small_budget);
      const Instance& inst = norm.instance;
      const FractionalSolution lp = SolveLpLeastSpend(inst, BuildLp(inst));
      report.cells.push_back(CellSummary{budget, scenario, inst.budget(),
                                         norm.scale, lp.objective,
                                         inst.num_programs()});
      for (Algorithm algorithm : config.algorithms) {
        TrialBatch batch;
        if (algorithm == Algorithm::kGreedy) {
          const StrategyOutcome out = Greedy(inst);
          batch.num_groups = inst.num_groups();
          batch.equity = {out.equity};
          batch.cost = {out.total_cost};
          batch.group_ratios = out.group_ratios;
        } else {
          // Budgets and scenarios share random streams, so comparisons
          // across cells are paired.
          const std::uint64_t stream =
              DeriveSeed(config.seed, {static_cast<std::uint64_t>(algorithm)});
          batch = RunTrials(inst, lp.x_star, algorithm, config.trials, stream,
                            config.threads);
        }
        ReportRow row = Summarize(batch, lp.objective, norm.scale);
        row.budget = budget;
        row.scenario = scenario;
        row.algorithm = algorithm;
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  return RunExperiment(LoadBaseInstance(config), config);
}

std::vector<ScenarioDelta> CompareScenarios(const ExperimentReport& report) {
  std::map<std::pair<double, Algorithm>, const ReportRow*> bus_only;
  std::map<std::pair<double, Algorithm>, const ReportRow*> combined;
  for (const ReportRow& row : report.rows) {
    auto& side = row.scenario == Scenario::kBusOnly ? bus_only : combined;
    side.emplace(std::make_pair(row.budget, row.algorithm), &row);
  }
  if (bus_only.empty() || combined.empty()) {
    throw std::invalid_argument(
        "scenario comparison needs both bus_only and combined rows");
  }
  std::vector<ScenarioDelta> out;
  for (const ReportRow& row : report.rows) {
    if (row.scenario != Scenario::kBusOnly) continue;
    auto it = combined.find({row.budget, row.algorithm});
    if (it == combined.end()) continue;
    const double c = it->second->mean_equity;
    out.push_back(ScenarioDelta{row.budget, row.algorithm, row.mean_equity, c,
                                c - row.mean_equity});
  }
  return out;
}

std::vector<Scenario> TStarMonotonicityViolations(
    const ExperimentReport& report) {
  std::vector<Scenario> out;
  for (Scenario scenario : {Scenario::kBusOnly, Scenario::kCombined}) {
    std::vector<std::pair<double, double>> points;
    for (const CellSummary& c : report.cells) {
      if (c.scenario == scenario) points.emplace_back(c.budget, c.t_star);
    }
    std::sort(points.begin(), points.end());
    for (size_t k = 1; k < points.size(); ++k) {
      if (points[k].second < points[k - 1].second - 1e-7) {
        out.push_back(scenario);
        break;
      }
    }
  }
  return out;
}

std::string ResultsCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "budget,scenario,algorithm,mean_equity,approx_ratio,ci_low,ci_high,"
         "mean_cost,max_cost\n";
  for (const ReportRow& r : report.rows) {
    out << csv::FormatReport(r.budget) << ',' << ScenarioName(r.scenario) << ','
        << AlgorithmName(r.algorithm) << ',' << csv::FormatReport(r.mean_equity)
        << ',' << csv::FormatReport(r.approx_ratio) << ','
        << csv::FormatReport(r.ci_low) << ',' << csv::FormatReport(r.ci_high)
        << ',' << csv::FormatReport(r.mean_cost) << ','
        << csv::FormatReport(r.max_cost) << '\n';
  }
  return out.str();
}

std::filesystem::path PlotPathFor(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_filename(csv_path.stem().string() + ".plot.json");
  return p;
}

void Emit(const ExperimentReport& report,
          const std::filesystem::path& csv_path) {
  using Json = nlohmann::ordered_json;
  if (csv_path.has_parent_path()) {
    std::filesystem::create_directories(csv_path.parent_path());
  }
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + csv_path.string());
    out << ResultsCsv(report);
  }

  Json plot;
  plot["schema_version"] = kPlotSchemaVersion;
  Json cells = Json::array();
  for (const CellSummary& c : report.cells) {
    cells.push_back(Json{{"budget", c.budget},
                         {"scenario", ScenarioName(c.scenario)},
                         {"normalized_budget", c.normalized_budget},
                         {"scale", c.scale},
                         {"t_star", c.t_star},
                         {"num_programs", c.num_programs}});
  }
  plot["cells"] = std::move(cells);

  // Series in order of first appearance.
  std::vector<std::pair<Algorithm, Scenario>> keys;
  for (const ReportRow& r : report.rows) {
    const auto key = std::make_pair(r.algorithm, r.scenario);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(key);
    }
  }
  Json series = Json::array();
  for (const auto& [algorithm, scenario] : keys) {
    Json points = Json::array();
    for (const ReportRow& r : report.rows) {
      if (r.algorithm != algorithm || r.scenario != scenario) continue;
      points.push_back(Json{{"budget", r.budget},
                            {"mean_equity", r.mean_equity},
                            {"approx_ratio", r.approx_ratio},
                            {"ci_low", r.ci_low},
                            {"ci_high", r.ci_high},
                            {"mean_cost", r.mean_cost},
                            {"max_cost", r.max_cost}});
    }
    series.push_back(Json{{"algorithm", AlgorithmName(algorithm)},
                          {"scenario", ScenarioName(scenario)},
                          {"points", std::move(points)}});
  }
  plot["series"] = std::move(series);

  const std::filesystem::path plot_path = PlotPathFor(csv_path);
  std::ofstream out(plot_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + plot_path.string());
  out << plot.dump(2) << '\n';
}

}  // namespace eppt
