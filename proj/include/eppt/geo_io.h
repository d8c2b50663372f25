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

// Raw geodata directories for the ingest pipeline:
//
//   geo_households.csv     id,lat,lon,income,household_size,race
//   transit_stops.csv      id,kind,lat,lon
//   poverty_guideline.csv  household_size,fpl_100
//
// kind is bus or rail. Every record is validated on read.

#ifndef EPPT_GEO_IO_H_
#define EPPT_GEO_IO_H_

#include <filesystem>
#include <vector>

#include "eppt/geo.h"

namespace eppt::geo {

struct GeoDataset {
  std::vector<GeoHousehold> households;
  std::vector<TransitStop> stops;
  PovertyGuideline guideline;
};

GeoDataset ReadGeoDataset(const std::filesystem::path& dir);
void WriteGeoDataset(const GeoDataset& dataset,
                     const std::filesystem::path& dir);

}  // namespace eppt::geo

#endif  // EPPT_GEO_IO_H_
