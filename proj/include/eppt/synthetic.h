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

// Seeded synthetic city for exercising the ingest pipeline when no real
// geodata is available. The layout is a rectangle of north-south rail lines
// with a station every mile and a coarse grid of bus lines with a stop every
// half mile. Households cluster in neighbourhoods placed in the gaps of the
// bus grid, each with a locally dominant race label, so that coverage is
// uneven across groups. Neighbourhood centres are chosen close enough to a
// bus line that routes can terminate at existing transit.
//
// Race weights are illustrative, not census figures.

#ifndef EPPT_SYNTHETIC_H_
#define EPPT_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eppt/geo_io.h"

namespace eppt::geo {

struct SyntheticCityParams {
  std::uint64_t seed = 1;
  // Generation stops once this many households pass the eligibility rule.
  int target_eligible = 2000;
  // Hard cap on raw household draws.
  int max_draws = 200'000;
  int neighborhoods = 14;
  double neighborhood_sigma_miles = 0.5;
  // Share of households drawn uniformly over the whole city.
  double background_share = 0.1;
  // Share of a neighbourhood's households carrying its dominant label.
  double dominant_share = 0.6;
  double width_miles = 16.0;
  double height_miles = 24.0;
  // South-west corner.
  double origin_lat = 41.70;
  double origin_lon = -87.85;
  std::vector<double> rail_line_x_miles = {3.0, 8.0, 13.0};
  std::vector<double> bus_line_x_miles = {0.0, 5.5, 10.5, 16.0};
  std::vector<double> bus_line_y_miles = {0.0, 6.0, 12.0, 18.0, 24.0};
  std::vector<std::pair<std::string, double>> race_weights = {
      {"black", 0.32}, {"hispanic", 0.28}, {"white", 0.28}, {"asian", 0.12}};
};

// Returns fewer eligible households than requested when max_draws runs out.
// Throws std::invalid_argument for inconsistent parameters and
// std::runtime_error when no neighbourhood centre fits the layout.
GeoDataset GenerateSyntheticCity(const SyntheticCityParams& params);

}  // namespace eppt::geo

#endif  // EPPT_SYNTHETIC_H_
