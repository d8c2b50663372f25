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

#include "eppt/geo.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "eppt/rng.h"

namespace eppt::geo {
namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double HaversineMiles(LatLon a, LatLon b) {
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double dlat = lat2 - lat1;
  const double dlon = (b.lon - a.lon) * kDegToRad;
  const double s =
      std::sin(dlat / 2) * std::sin(dlat / 2) +
      std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusMiles * std::asin(std::min(1.0, std::sqrt(s)));
}

const char* StopKindName(StopKind kind) {
  return kind == StopKind::kBus ? "bus" : "rail";
}

StopKind ParseStopKind(const std::string& name) {
  if (name == "bus") return StopKind::kBus;
  if (name == "rail") return StopKind::kRail;
  throw std::invalid_argument("unknown stop kind '" + name + "'");
}

namespace {

void ValidateCoordinates(double lat, double lon, const std::string& id) {
  if (!(lat >= -90 && lat <= 90) || !(lon >= -180 && lon <= 180)) {
    throw std::invalid_argument("'" + id + "' has invalid coordinates");
  }
}

}  // namespace

void Validate(const GeoHousehold& household) {
  ValidateCoordinates(household.lat, household.lon, household.id);
  if (!(household.income >= 0)) {
    throw std::invalid_argument("'" + household.id + "' has negative income");
  }
  if (household.household_size < 1) {
    throw std::invalid_argument("'" + household.id +
                                "' has household size below 1");
  }
}

void Validate(const TransitStop& stop) {
  ValidateCoordinates(stop.lat, stop.lon, stop.id);
}

void PovertyGuideline::Validate() const {
  double previous = 0.0;
  for (const auto& [size, threshold] : fpl_100) {
    if (size < 1 || !(threshold > previous)) {
      throw std::invalid_argument(
          "poverty thresholds must be positive and increase with size");
    }
    previous = threshold;
  }
}

double PovertyGuideline::Threshold(int household_size) const {
  auto it = fpl_100.find(household_size);
  if (it == fpl_100.end()) {
    throw std::out_of_range("no poverty threshold for household size " +
                            std::to_string(household_size));
  }
  return it->second;
}

PovertyGuideline PovertyGuideline::Hhs2021() {
  return PovertyGuideline{{{1, 12880},
                           {2, 17420},
                           {3, 21960},
                           {4, 26500},
                           {5, 31040},
                           {6, 35580},
                           {7, 40120},
                           {8, 44660}}};
}

SubsidyAssignment AssignSubsidy(const GeoHousehold& household,
                                const PovertyGuideline& guideline,
                                const SubsidyPolicy& policy) {
  const double fpl = guideline.Threshold(household.household_size);
  int tier = 2;
  if (household.income >= policy.tier1_min * fpl) {
    tier = 1;
  } else if (household.income <= policy.tier3_max * fpl) {
    tier = 3;
  }
  return SubsidyAssignment{tier, policy.per_ride[tier - 1]};
}

TransitDistances NearestTransit(LatLon point,
                                const std::vector<TransitStop>& stops) {
  TransitDistances d{kInf, kInf};
  for (const TransitStop& s : stops) {
    const double miles = HaversineMiles(point, s.position());
    double& slot = s.kind == StopKind::kBus ? d.bus : d.rail;
    slot = std::min(slot, miles);
  }
  return d;
}

std::vector<int> EligibilityFilter(const std::vector<GeoHousehold>& households,
                                   const std::vector<TransitStop>& stops,
                                   const EligibilityRule& rule) {
  const bool has_bus = std::any_of(stops.begin(), stops.end(), [](auto& s) {
    return s.kind == StopKind::kBus;
  });
  const bool has_rail = std::any_of(stops.begin(), stops.end(), [](auto& s) {
    return s.kind == StopKind::kRail;
  });
  if (!has_bus || !has_rail) {
    throw std::invalid_argument(
        "eligibility needs at least one bus stop and one rail stop");
  }
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(households.size()); ++i) {
    const TransitDistances d = NearestTransit(households[i].position(), stops);
    if (d.bus >= rule.bus_min && d.bus <= rule.bus_max &&
        d.rail >= rule.rail_min && d.rail <= rule.rail_max) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<CandidateStop> ClusterStops(
    const std::vector<GeoHousehold>& households,
    const ClusteringParams& params) {
  std::vector<CandidateStop> clusters;
  for (int i = 0; i < static_cast<int>(households.size()); ++i) {
    const LatLon p = households[i].position();
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](auto& c) {
      return HaversineMiles(c.position(), p) <= params.radius_miles;
    });
    if (it == clusters.end()) {
      clusters.push_back(CandidateStop{"", p.lat, p.lon, {i}});
      continue;
    }
    it->members.push_back(i);
    const double n = static_cast<double>(it->members.size());
    it->lat += (p.lat - it->lat) / n;
    it->lon += (p.lon - it->lon) / n;
  }

  std::vector<CandidateStop> kept;
  for (size_t a = 0; a < clusters.size(); ++a) {
    bool connected = clusters.size() == 1;
    for (size_t b = 0; b < clusters.size() && !connected; ++b) {
      connected = a != b && HaversineMiles(clusters[a].position(),
                                           clusters[b].position()) <=
                                params.isolation_miles;
    }
    if (connected) kept.push_back(std::move(clusters[a]));
  }
  for (size_t k = 0; k < kept.size(); ++k) {
    kept[k].id = "stop" + std::to_string(k);
  }
  return kept;
}

const char* ScheduleName(Schedule schedule) {
  return schedule == Schedule::kFullDay ? "full" : "half";
}

double RouteQuarterlyCost(Schedule schedule, const CostParams& params) {
  const double hours = schedule == Schedule::kFullDay ? params.full_day_hours
                                                      : params.half_day_hours;
  return params.rate_per_vehicle_hour * hours * params.days_per_quarter *
         params.vehicles_per_route;
}

double RideHailQuarterlyCost(double per_ride_subsidy,
                             const CostParams& params) {
  return per_ride_subsidy * params.rides_per_quarter;
}

double RideHailQuarterlyCost(int tier, const CostParams& params,
                             const SubsidyPolicy& policy) {
  if (tier < 1 || tier > 3) throw std::invalid_argument("tier must be 1-3");
  return RideHailQuarterlyCost(policy.per_ride[tier - 1], params);
}

RouteGeneration GenerateRoutes(const std::vector<CandidateStop>& stops,
                               const std::vector<TransitStop>& transit,
                               int count, std::uint64_t seed,
                               const RouteParams& params,
                               const CostParams& costs) {
  RouteGeneration result;
  result.requested = count;
  const int n = static_cast<int>(stops.size());

  std::vector<bool> terminal(n, false);
  for (int s = 0; s < n; ++s) {
    for (const TransitStop& t : transit) {
      if (HaversineMiles(stops[s].position(), t.position()) <=
          params.terminal_miles) {
        terminal[s] = true;
        break;
      }
    }
  }

  std::vector<int> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  Rng rng(seed);
  for (int k = n - 1; k > 0; --k) {
    std::swap(starts[k], starts[rng.UniformIndex(k + 1)]);
  }

  std::set<std::vector<int>> seen;
  for (int start : starts) {
    if (result.generated >= count) break;
    std::vector<int> chain = {start};
    std::vector<bool> visited(n, false);
    visited[start] = true;
    while (static_cast<int>(chain.size()) < params.max_stops) {
      const LatLon here = stops[chain.back()].position();
      int next = -1;
      double best = params.max_hop_miles;
      for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        const double d = HaversineMiles(here, stops[s].position());
        if (d <= best) {
          best = d;
          next = s;
        }
      }
      if (next < 0) break;
      visited[next] = true;
      chain.push_back(next);
    }
    int length = static_cast<int>(chain.size());
    while (length >= params.min_stops && !terminal[chain[length - 1]]) {
      --length;
    }
    if (length < params.min_stops) continue;
    chain.resize(length);
    std::vector<int> key = chain;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;

    const std::string id = "route" + std::to_string(result.generated);
    result.routes.push_back(
        CandidateRoute{id + "_full", chain, Schedule::kFullDay,
                       RouteQuarterlyCost(Schedule::kFullDay, costs)});
    result.routes.push_back(
        CandidateRoute{id + "_half", chain, Schedule::kHalfDay,
                       RouteQuarterlyCost(Schedule::kHalfDay, costs)});
    ++result.generated;
  }
  return result;
}

std::vector<int> RouteHouseholds(const CandidateRoute& route,
                                 const std::vector<CandidateStop>& stops,
                                 const std::vector<GeoHousehold>& households,
                                 double radius_miles) {
  // (stop position on route, distance, household index)
  std::vector<std::tuple<int, double, int>> along;
  for (int i = 0; i < static_cast<int>(households.size()); ++i) {
    const LatLon p = households[i].position();
    for (int k = 0; k < static_cast<int>(route.stops.size()); ++k) {
      const double d = HaversineMiles(p, stops[route.stops[k]].position());
      if (d <= radius_miles) {
        along.emplace_back(k, d, i);
        break;
      }
    }
  }
  std::sort(along.begin(), along.end());
  std::vector<int> out;
  out.reserve(along.size());
  for (const auto& entry : along) out.push_back(std::get<2>(entry));
  return out;
}

Instance BuildInstance(const std::vector<GeoHousehold>& households,
                       const PovertyGuideline& guideline,
                       const std::vector<CandidateStop>& stops,
                       const std::vector<CandidateRoute>& routes, double budget,
                       const BuildOptions& options) {
  std::vector<Household> out_households;
  out_households.reserve(households.size());
  for (const GeoHousehold& h : households) {
    const SubsidyAssignment subsidy =
        AssignSubsidy(h, guideline, options.subsidy);
    Household out;
    out.id = h.id;
    out.ride_hail_cost = RideHailQuarterlyCost(subsidy.per_ride, options.costs);
    out.group_ids = {options.group_by == GroupBy::kRace
                         ? h.race
                         : "tier" + std::to_string(subsidy.tier)};
    out_households.push_back(std::move(out));
  }

  std::vector<Program> programs;
  for (const CandidateRoute& route : routes) {
    std::vector<int> along =
        RouteHouseholds(route, stops, households, options.cover_radius_miles);
    if (route.schedule == Schedule::kHalfDay) {
      std::vector<int> half;
      for (size_t k = 0; k < along.size(); k += 2) half.push_back(along[k]);
      along = std::move(half);
    }
    if (along.empty()) continue;
    programs.push_back(Program{route.id, route.quarterly_cost, std::move(along),
                               ProgramKind::kBusLine});
  }
  Instance instance(std::move(out_households), std::move(programs), budget);
  return ApplyScenario(instance, options.scenario);
}

}  // namespace eppt::geo
