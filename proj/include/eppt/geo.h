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

// Geospatial preprocessing: which households qualify, what their
// ride-hailing subsidy is, where candidate bus stops go, which bus routes
// are proposed and what every program costs per quarter. Distances are
// great-circle distances in miles; there is no road network.

#ifndef EPPT_GEO_H_
#define EPPT_GEO_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eppt/model.h"

namespace eppt::geo {

inline constexpr double kEarthRadiusMiles = 3958.8;

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

double HaversineMiles(LatLon a, LatLon b);

struct GeoHousehold {
  std::string id;
  double lat = 0.0;
  double lon = 0.0;
  double income = 0.0;  // per year
  int household_size = 1;
  std::string race;

  LatLon position() const { return {lat, lon}; }
};

enum class StopKind { kBus, kRail };

const char* StopKindName(StopKind kind);
StopKind ParseStopKind(const std::string& name);

struct TransitStop {
  std::string id;
  StopKind kind = StopKind::kBus;
  double lat = 0.0;
  double lon = 0.0;

  LatLon position() const { return {lat, lon}; }
};

// Throws std::invalid_argument on out-of-range coordinates, negative income
// or a household size below 1.
void Validate(const GeoHousehold& household);
void Validate(const TransitStop& stop);

// Annual income at 100% of the federal poverty level by household size.
struct PovertyGuideline {
  std::map<int, double> fpl_100;

  // Throws unless thresholds are positive and strictly increase with size.
  void Validate() const;
  // Throws std::out_of_range for sizes missing from the table.
  double Threshold(int household_size) const;

  // 2021 HHS guideline for the 48 contiguous states, sizes 1 through 8.
  static PovertyGuideline Hhs2021();
};

// Tier boundaries as multiples of the poverty threshold. Incomes at or above
// 200% are tier 1, at or below 175% are tier 3, everything between is tier 2
// (this includes the 175%-185% band).
struct SubsidyPolicy {
  double tier1_min = 2.00;
  double tier3_max = 1.75;
  std::array<double, 3> per_ride = {10.0, 15.0, 20.0};
};

struct SubsidyAssignment {
  int tier = 1;  // 1, 2 or 3
  double per_ride = 0.0;
};

SubsidyAssignment AssignSubsidy(const GeoHousehold& household,
                                const PovertyGuideline& guideline,
                                const SubsidyPolicy& policy = {});

struct EligibilityRule {
  double bus_min = 0.25;
  double bus_max = 3.5;
  double rail_min = 0.5;
  double rail_max = 3.5;
};

struct TransitDistances {
  double bus = 0.0;
  double rail = 0.0;
};

TransitDistances NearestTransit(LatLon point,
                                const std::vector<TransitStop>& stops);

// Indices of households whose nearest bus and nearest rail distances both
// fall inside the rule's closed intervals. Throws std::invalid_argument when
// the stop list lacks bus or rail stops.
std::vector<int> EligibilityFilter(const std::vector<GeoHousehold>& households,
                                   const std::vector<TransitStop>& stops,
                                   const EligibilityRule& rule = {});

struct CandidateStop {
  std::string id;
  double lat = 0.0;
  double lon = 0.0;
  // Indices of the clustered households.
  std::vector<int> members;

  LatLon position() const { return {lat, lon}; }
};

struct ClusteringParams {
  double radius_miles = 0.25;
  double isolation_miles = 3.5;
};

// Leader clustering in input order: a household joins the first cluster
// whose running centroid lies within the radius, otherwise it opens a new
// cluster. One stop per centroid; when there are several stops, those with
// no other stop within the isolation distance are dropped.
std::vector<CandidateStop> ClusterStops(
    const std::vector<GeoHousehold>& households,
    const ClusteringParams& params = {});

enum class Schedule { kFullDay, kHalfDay };

const char* ScheduleName(Schedule schedule);

struct CostParams {
  double rate_per_vehicle_hour = 140.0;
  double full_day_hours = 16.0;
  double half_day_hours = 8.0;
  double days_per_quarter = 91.0;
  double rides_per_quarter = 120.0;
  int vehicles_per_route = 1;
};

double RouteQuarterlyCost(Schedule schedule, const CostParams& params);
double RideHailQuarterlyCost(double per_ride_subsidy, const CostParams& params);
double RideHailQuarterlyCost(int tier, const CostParams& params,
                             const SubsidyPolicy& policy = {});

struct CandidateRoute {
  std::string id;
  // Indices into the candidate stop list, in travel order.
  std::vector<int> stops;
  Schedule schedule = Schedule::kFullDay;
  double quarterly_cost = 0.0;
};

struct RouteParams {
  int min_stops = 10;
  int max_stops = 18;
  double max_hop_miles = 0.75;
  double terminal_miles = 0.75;
};

struct RouteGeneration {
  // Two entries per generated chain: full-day then half-day.
  std::vector<CandidateRoute> routes;
  int requested = 0;
  int generated = 0;

  bool exhausted() const { return generated < requested; }
};

// Nearest-neighbour chains from seeded random starts. A chain grows to the
// closest unvisited stop within max_hop_miles, up to max_stops, and is then
// cut back to the longest prefix of at least min_stops stops whose last stop
// is within terminal_miles of an existing transit stop. Starts that cannot
// produce such a prefix, or that repeat an earlier stop set, are skipped.
RouteGeneration GenerateRoutes(const std::vector<CandidateStop>& stops,
                               const std::vector<TransitStop>& transit,
                               int count, std::uint64_t seed,
                               const RouteParams& params = {},
                               const CostParams& costs = {});

enum class GroupBy { kRace, kPovertyTier };

struct BuildOptions {
  GroupBy group_by = GroupBy::kRace;
  Scenario scenario = Scenario::kCombined;
  double cover_radius_miles = 0.25;
  CostParams costs;
  SubsidyPolicy subsidy;
};

// Households ordered along a route: by first stop within the radius, then
// by distance to that stop, then by index.
std::vector<int> RouteHouseholds(const CandidateRoute& route,
                                 const std::vector<CandidateStop>& stops,
                                 const std::vector<GeoHousehold>& households,
                                 double radius_miles);

// Assembles an Instance over `households` (already filtered). Full-day
// routes cover every household along the route, half-day routes every other
// one. Routes that would cover nobody are left out. Every household gets its
// ride-hailing cost; virtual programs are added only for the combined
// scenario.
Instance BuildInstance(const std::vector<GeoHousehold>& households,
                       const PovertyGuideline& guideline,
                       const std::vector<CandidateStop>& stops,
                       const std::vector<CandidateRoute>& routes, double budget,
                       const BuildOptions& options = {});

}  // namespace eppt::geo

#endif  // EPPT_GEO_H_
