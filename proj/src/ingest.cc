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

#include "eppt/ingest.h"

#include <stdexcept>
#include <utility>

namespace eppt::geo {

IngestResult Ingest(const GeoDataset& dataset, const IngestOptions& options) {
  std::vector<int> eligible =
      EligibilityFilter(dataset.households, dataset.stops, options.eligibility);
  if (eligible.empty()) {
    throw std::invalid_argument("no household passes the eligibility rule");
  }
  std::vector<GeoHousehold> households;
  households.reserve(eligible.size());
  for (int i : eligible) households.push_back(dataset.households[i]);
  std::vector<CandidateStop> stops =
      ClusterStops(households, options.clustering);
  RouteGeneration routes = GenerateRoutes(
      stops, dataset.stops, options.route_count, options.route_seed,
      options.route_params, options.build.costs);
  Instance instance =
      BuildInstance(households, dataset.guideline, stops, routes.routes,
                    options.budget, options.build);
  return IngestResult{std::move(eligible), std::move(households),
                      std::move(stops), std::move(routes), std::move(instance)};
}

}  // namespace eppt::geo
