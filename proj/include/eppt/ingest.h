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

// End-to-end preprocessing: eligibility, stop clustering, route generation
// and instance assembly.

#ifndef EPPT_INGEST_H_
#define EPPT_INGEST_H_

#include <cstdint>
#include <vector>

#include "eppt/geo.h"
#include "eppt/geo_io.h"
#include "eppt/model.h"

namespace eppt::geo {

struct IngestOptions {
  EligibilityRule eligibility;
  ClusteringParams clustering;
  RouteParams route_params;
  int route_count = 20;
  std::uint64_t route_seed = 1;
  BuildOptions build;
  double budget = 0.0;
};

struct IngestResult {
  // Indices into the dataset's households.
  std::vector<int> eligible;
  std::vector<GeoHousehold> eligible_households;
  // Indices in CandidateStop::members refer to eligible_households.
  std::vector<CandidateStop> stops;
  RouteGeneration routes;
  Instance instance;
};

IngestResult Ingest(const GeoDataset& dataset, const IngestOptions& options);

}  // namespace eppt::geo

#endif  // EPPT_INGEST_H_
