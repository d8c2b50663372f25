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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "eppt/ingest.h"
#include "eppt/synthetic.h"

namespace eppt::geo {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Miles per degree along a meridian, and along the equator.
constexpr double kMilesPerDegree = kEarthRadiusMiles * kPi / 180.0;

double Deg(double miles) { return miles / kMilesPerDegree; }

GeoHousehold At(const std::string& id, double lat, double lon,
                double income = 20000, int size = 1,
                const std::string& race = "r") {
  return GeoHousehold{id, lat, lon, income, size, race};
}

TEST(HaversineTest, MeridianAndEquatorArcs) {
  EXPECT_NEAR(HaversineMiles({0, 0}, {1, 0}), kMilesPerDegree, 1e-9);
  EXPECT_NEAR(HaversineMiles({0, 0}, {0, 1}), kMilesPerDegree, 1e-9);
  EXPECT_NEAR(HaversineMiles({0, 0}, {0, 180}), kEarthRadiusMiles * kPi, 1e-6);
  EXPECT_EQ(HaversineMiles({41.9, -87.6}, {41.9, -87.6}), 0.0);
  EXPECT_NEAR(HaversineMiles({41.9, -87.6}, {41.8, -87.7}),
              HaversineMiles({41.8, -87.7}, {41.9, -87.6}), 1e-12);
}

TEST(ValidateTest, RejectsOutOfRangeRecords) {
  EXPECT_NO_THROW(Validate(At("ok", 41.8, -87.6)));
  EXPECT_THROW(Validate(At("lat", 91, 0)), std::invalid_argument);
  EXPECT_THROW(Validate(At("lon", 0, -181)), std::invalid_argument);
  EXPECT_THROW(Validate(At("income", 0, 0, -1)), std::invalid_argument);
  EXPECT_THROW(Validate(At("size", 0, 0, 1, 0)), std::invalid_argument);
  EXPECT_THROW(Validate(TransitStop{"s", StopKind::kBus, 0, 200}),
               std::invalid_argument);
}

// Six households on the equator, 50 miles apart, each with a private bus
// stop due north and a private rail stop due south at chosen distances.
struct EligibilityCase {
  double bus;
  double rail;
  bool eligible;
};

TEST(EligibilityFilterTest, KeepsExactlyTheInteriorPoints) {
  const std::vector<EligibilityCase> cases = {
      {0.24, 2.00, false},  // bus below lower bound
      {0.26, 0.51, true},   // just inside both lower bounds
      {3.51, 2.00, false},  // bus above upper bound
      {3.49, 3.49, true},   // just inside both upper bounds
      {1.00, 0.49, false},  // rail below lower bound
      {1.00, 3.51, false},  // rail above upper bound
  };
  std::vector<GeoHousehold> households;
  std::vector<TransitStop> stops;
  for (size_t k = 0; k < cases.size(); ++k) {
    const double lon = Deg(50.0 * k);
    households.push_back(At("h" + std::to_string(k), 0, lon));
    stops.push_back(
        {"b" + std::to_string(k), StopKind::kBus, Deg(cases[k].bus), lon});
    stops.push_back(
        {"r" + std::to_string(k), StopKind::kRail, -Deg(cases[k].rail), lon});
  }
  std::vector<int> expected;
  for (size_t k = 0; k < cases.size(); ++k) {
    const TransitDistances d = NearestTransit(households[k].position(), stops);
    EXPECT_NEAR(d.bus, cases[k].bus, 1e-9);
    EXPECT_NEAR(d.rail, cases[k].rail, 1e-9);
    if (cases[k].eligible) expected.push_back(static_cast<int>(k));
  }
  EXPECT_EQ(EligibilityFilter(households, stops), expected);
}

TEST(EligibilityFilterTest, SimpleCases) {
  const std::vector<TransitStop> stops = {
      {"bus", StopKind::kBus, Deg(1.0), 0},
      {"rail", StopKind::kRail, -Deg(2.0), 0}};
  EXPECT_EQ(EligibilityFilter({At("mid", 0, 0)}, stops), std::vector<int>{0});
  const std::vector<TransitStop> near_bus = {
      {"bus", StopKind::kBus, Deg(0.1), 0},
      {"rail", StopKind::kRail, -Deg(2.0), 0}};
  EXPECT_TRUE(EligibilityFilter({At("near", 0, 0)}, near_bus).empty());
  const std::vector<TransitStop> far = {
      {"bus", StopKind::kBus, Deg(4.0), 0},
      {"rail", StopKind::kRail, -Deg(4.0), 0}};
  EXPECT_TRUE(EligibilityFilter({At("far", 0, 0)}, far).empty());
}

TEST(EligibilityFilterTest, NeedsBothStopKinds) {
  const std::vector<TransitStop> bus_only = {{"bus", StopKind::kBus, 0, 0}};
  EXPECT_THROW(EligibilityFilter({At("h", 0, 0)}, bus_only),
               std::invalid_argument);
  EXPECT_THROW(EligibilityFilter({At("h", 0, 0)}, {}), std::invalid_argument);
}

TEST(SubsidyTest, TiersByPercentOfPovertyLine) {
  const PovertyGuideline g = PovertyGuideline::Hhs2021();
  const double fpl = g.Threshold(3);
  auto tier = [&](double pct) {
    return AssignSubsidy(At("h", 0, 0, fpl * pct, 3), g);
  };
  EXPECT_EQ(tier(2.00).tier, 1);
  EXPECT_EQ(tier(2.00).per_ride, 10.0);
  EXPECT_EQ(tier(1.90).tier, 2);
  EXPECT_EQ(tier(1.90).per_ride, 15.0);
  EXPECT_EQ(tier(1.00).tier, 3);
  EXPECT_EQ(tier(1.00).per_ride, 20.0);
  EXPECT_EQ(tier(1.80).tier, 2);
  EXPECT_EQ(tier(1.75).tier, 3);
  EXPECT_EQ(tier(0.0).tier, 3);
  EXPECT_THROW(AssignSubsidy(At("h", 0, 0, 1, 9), g), std::out_of_range);
}

TEST(PovertyGuidelineTest, Validation) {
  EXPECT_NO_THROW(PovertyGuideline::Hhs2021().Validate());
  EXPECT_EQ(PovertyGuideline::Hhs2021().Threshold(4), 26500.0);
  EXPECT_THROW((PovertyGuideline{{{1, 100}, {2, 90}}}).Validate(),
               std::invalid_argument);
  EXPECT_THROW((PovertyGuideline{{{1, 0}}}).Validate(), std::invalid_argument);
}

TEST(CostModelTest, QuarterlyCosts) {
  const CostParams params;
  EXPECT_EQ(RouteQuarterlyCost(Schedule::kFullDay, params), 203840.0);
  EXPECT_EQ(RouteQuarterlyCost(Schedule::kHalfDay, params), 101920.0);
  EXPECT_EQ(RideHailQuarterlyCost(3, params), 2400.0);
  EXPECT_EQ(RideHailQuarterlyCost(1, params), 1200.0);
  EXPECT_THROW(RideHailQuarterlyCost(4, params), std::invalid_argument);
}

TEST(ClusterStopsTest, NearbyPairBecomesOneStopAtMidpoint) {
  const std::vector<GeoHousehold> hh = {At("a", 0, 0), At("b", Deg(0.1), 0)};
  const auto stops = ClusterStops(hh);
  ASSERT_EQ(stops.size(), 1u);
  EXPECT_NEAR(stops[0].lat, Deg(0.05), 1e-12);
  EXPECT_EQ(stops[0].members, (std::vector<int>{0, 1}));
}

TEST(ClusterStopsTest, IsolatedStopIsDropped) {
  const std::vector<GeoHousehold> hh = {At("a", 0, 0), At("b", Deg(1.0), 0),
                                        At("far", Deg(6.0), 0)};
  const auto stops = ClusterStops(hh);
  ASSERT_EQ(stops.size(), 2u);
  EXPECT_EQ(stops[0].members, std::vector<int>{0});
  EXPECT_EQ(stops[1].members, std::vector<int>{1});
}

TEST(ClusterStopsTest, LeaderOrderIsInputOrder) {
  // c is within 0.25 of the first centroid only after b has moved it.
  const std::vector<GeoHousehold> hh = {At("a", 0, 0), At("b", Deg(0.2), 0),
                                        At("c", Deg(0.34), 0)};
  const auto stops = ClusterStops(hh);
  ASSERT_EQ(stops.size(), 1u);
  EXPECT_EQ(stops[0].members.size(), 3u);
}

std::vector<CandidateStop> Grid(int rows, int cols, double spacing) {
  std::vector<CandidateStop> stops;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      stops.push_back({"s" + std::to_string(stops.size()),
                       Deg(r * spacing),
                       Deg(c * spacing),
                       {}});
    }
  }
  return stops;
}

void ExpectValidRoute(const CandidateRoute& route,
                      const std::vector<CandidateStop>& stops,
                      const std::vector<TransitStop>& transit) {
  EXPECT_GE(route.stops.size(), 10u);
  EXPECT_LE(route.stops.size(), 18u);
  for (size_t k = 1; k < route.stops.size(); ++k) {
    EXPECT_LE(HaversineMiles(stops[route.stops[k - 1]].position(),
                             stops[route.stops[k]].position()),
              0.75 + 1e-12);
  }
  double terminal = 1e9;
  for (const TransitStop& t : transit) {
    terminal = std::min(
        terminal,
        HaversineMiles(stops[route.stops.back()].position(), t.position()));
  }
  EXPECT_LE(terminal, 0.75 + 1e-12);
  const std::set<int> unique(route.stops.begin(), route.stops.end());
  EXPECT_EQ(unique.size(), route.stops.size());
}

TEST(GenerateRoutesTest, GridYieldsValidRoute) {
  const auto stops = Grid(4, 6, 0.5);
  const std::vector<TransitStop> transit = {
      {"rail", StopKind::kRail, Deg(1.5), Deg(2.5)}};
  const RouteGeneration gen = GenerateRoutes(stops, transit, 1, 42);
  EXPECT_EQ(gen.generated, 1);
  EXPECT_FALSE(gen.exhausted());
  ASSERT_EQ(gen.routes.size(), 2u);
  EXPECT_EQ(gen.routes[0].schedule, Schedule::kFullDay);
  EXPECT_EQ(gen.routes[1].schedule, Schedule::kHalfDay);
  EXPECT_EQ(gen.routes[0].stops, gen.routes[1].stops);
  EXPECT_EQ(gen.routes[1].quarterly_cost * 2, gen.routes[0].quarterly_cost);
  ExpectValidRoute(gen.routes[0], stops, transit);
}

TEST(GenerateRoutesTest, SparseStopsYieldNothing) {
  const auto stops = Grid(4, 6, 0.8);
  const std::vector<TransitStop> transit = {{"rail", StopKind::kRail, 0, 0}};
  const RouteGeneration gen = GenerateRoutes(stops, transit, 3, 1);
  EXPECT_EQ(gen.generated, 0);
  EXPECT_TRUE(gen.routes.empty());
  EXPECT_TRUE(gen.exhausted());
}

TEST(GenerateRoutesTest, SameSeedSameRoutes) {
  const auto stops = Grid(6, 6, 0.5);
  const std::vector<TransitStop> transit = {{"r", StopKind::kRail, 0, 0}};
  const RouteGeneration a = GenerateRoutes(stops, transit, 4, 9);
  const RouteGeneration b = GenerateRoutes(stops, transit, 4, 9);
  ASSERT_EQ(a.routes.size(), b.routes.size());
  for (size_t k = 0; k < a.routes.size(); ++k) {
    EXPECT_EQ(a.routes[k].stops, b.routes[k].stops);
    ExpectValidRoute(a.routes[k], stops, transit);
  }
}

TEST(BuildInstanceTest, GroupsScenariosAndHalfDayCover) {
  // Three households per stop along a straight line of 12 stops.
  std::vector<CandidateStop> stops = Grid(1, 12, 0.5);
  std::vector<GeoHousehold> hh;
  const char* races[] = {"a", "b", "c"};
  for (size_t s = 0; s < stops.size(); ++s) {
    for (int k = 0; k < 3; ++k) {
      hh.push_back(At("h" + std::to_string(hh.size()),
                      stops[s].lat + Deg(0.01 * k), stops[s].lon, 15000, 1,
                      races[(s + k) % 3]));
    }
  }
  std::vector<int> order(12);
  for (int s = 0; s < 12; ++s) order[s] = s;
  const std::vector<CandidateRoute> routes = {
      {"r_full", order, Schedule::kFullDay, 203840},
      {"r_half", order, Schedule::kHalfDay, 101920}};

  BuildOptions combined;
  const Instance inst = BuildInstance(hh, PovertyGuideline::Hhs2021(), stops,
                                      routes, 1e6, combined);
  EXPECT_EQ(inst.num_groups(), 3);
  EXPECT_EQ(inst.num_programs(), 2 + 36);
  const auto& full = inst.programs()[0].covers;
  const auto& half = inst.programs()[1].covers;
  EXPECT_EQ(full.size(), 36u);
  EXPECT_EQ(half.size(), (full.size() + 1) / 2);
  for (int i = 0; i < inst.num_households(); ++i) {
    EXPECT_TRUE(inst.households()[i].ride_hail_cost.has_value());
  }
  // 15000 is below 175% of the one-person line: tier 3.
  EXPECT_EQ(*inst.households()[0].ride_hail_cost, 2400.0);

  BuildOptions bus_only;
  bus_only.scenario = Scenario::kBusOnly;
  const Instance bus = BuildInstance(hh, PovertyGuideline::Hhs2021(), stops,
                                     routes, 1e6, bus_only);
  EXPECT_EQ(bus.num_programs(), 2);

  BuildOptions by_tier;
  by_tier.group_by = GroupBy::kPovertyTier;
  EXPECT_EQ(BuildInstance(hh, PovertyGuideline::Hhs2021(), stops, routes, 1e6,
                          by_tier)
                .num_groups(),
            1);
}

TEST(RouteHouseholdsTest, OrderedByStopThenDistance) {
  const std::vector<CandidateStop> stops = Grid(1, 3, 0.5);
  const std::vector<GeoHousehold> hh = {
      At("on_third", 0, stops[2].lon), At("near_first", Deg(0.1), 0),
      At("on_first", 0, 0), At("nowhere", Deg(5), 0)};
  const CandidateRoute route{"r", {0, 1, 2}, Schedule::kFullDay, 1};
  EXPECT_EQ(RouteHouseholds(route, stops, hh, 0.25),
            (std::vector<int>{2, 1, 0}));
}

TEST(SyntheticCityTest, ReproducibleAndSupportsTwentyRoutes) {
  SyntheticCityParams params;
  params.seed = 3;
  const GeoDataset a = GenerateSyntheticCity(params);
  const GeoDataset b = GenerateSyntheticCity(params);
  ASSERT_EQ(a.households.size(), b.households.size());
  for (size_t i = 0; i < a.households.size(); ++i) {
    EXPECT_EQ(a.households[i].lat, b.households[i].lat);
    EXPECT_EQ(a.households[i].income, b.households[i].income);
    EXPECT_EQ(a.households[i].race, b.households[i].race);
  }
  IngestOptions options;
  const IngestResult r = Ingest(a, options);
  EXPECT_EQ(r.eligible.size(), 2000u);
  EXPECT_EQ(r.routes.generated, 20);
  EXPECT_EQ(r.routes.routes.size(), 40u);
  for (const CandidateRoute& route : r.routes.routes) {
    ExpectValidRoute(route, r.stops, a.stops);
  }
  for (const GeoHousehold& h : r.eligible_households) {
    const TransitDistances d = NearestTransit(h.position(), a.stops);
    EXPECT_GE(d.bus, 0.25);
    EXPECT_LE(d.bus, 3.5);
    EXPECT_GE(d.rail, 0.5);
    EXPECT_LE(d.rail, 3.5);
  }
  int bus_programs = 0;
  for (const Program& p : r.instance.programs()) {
    bus_programs += p.kind == ProgramKind::kBusLine;
  }
  EXPECT_EQ(bus_programs, 40);
  EXPECT_GE(r.instance.num_groups(), 2);
}

}  // namespace
}  // namespace eppt::geo
