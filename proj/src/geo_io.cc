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

#include "eppt/geo_io.h"

#include <fstream>
#include <stdexcept>
#include <string>

#include "eppt/csv.h"

namespace eppt::geo {
namespace {

const std::vector<std::string> kHouseholdHeader = {
    "id", "lat", "lon", "income", "household_size", "race"};
const std::vector<std::string> kStopHeader = {"id", "kind", "lat", "lon"};
const std::vector<std::string> kGuidelineHeader = {"household_size", "fpl_100"};

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

int ParseSize(const std::string& text) {
  const long long v = csv::ParseInt(text, "household_size");
  if (v < 1 || v > 1'000'000) {
    throw std::invalid_argument("household_size out of range: " + text);
  }
  return static_cast<int>(v);
}

}  // namespace

GeoDataset ReadGeoDataset(const std::filesystem::path& dir) {
  GeoDataset ds;
  const csv::Table hh =
      csv::ReadTable(dir / "geo_households.csv", kHouseholdHeader);
  for (const auto& row : hh.rows) {
    GeoHousehold h{row[0],
                   csv::ParseDouble(row[1], "lat"),
                   csv::ParseDouble(row[2], "lon"),
                   csv::ParseDouble(row[3], "income"),
                   ParseSize(row[4]),
                   row[5]};
    Validate(h);
    ds.households.push_back(std::move(h));
  }
  const csv::Table st = csv::ReadTable(dir / "transit_stops.csv", kStopHeader);
  for (const auto& row : st.rows) {
    TransitStop s{row[0], ParseStopKind(row[1]),
                  csv::ParseDouble(row[2], "lat"),
                  csv::ParseDouble(row[3], "lon")};
    Validate(s);
    ds.stops.push_back(std::move(s));
  }
  const csv::Table pg =
      csv::ReadTable(dir / "poverty_guideline.csv", kGuidelineHeader);
  for (const auto& row : pg.rows) {
    const int size = ParseSize(row[0]);
    if (!ds.guideline.fpl_100.emplace(size, csv::ParseDouble(row[1], "fpl_100"))
             .second) {
      throw std::invalid_argument("duplicate household_size " + row[0]);
    }
  }
  ds.guideline.Validate();
  return ds;
}

void WriteGeoDataset(const GeoDataset& dataset,
                     const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = OpenForWrite(dir / "geo_households.csv");
    out << csv::JoinFields(kHouseholdHeader) << '\n';
    for (const GeoHousehold& h : dataset.households) {
      out << h.id << ',' << csv::FormatDouble(h.lat) << ','
          << csv::FormatDouble(h.lon) << ',' << csv::FormatDouble(h.income)
          << ',' << h.household_size << ',' << h.race << '\n';
    }
  }
  {
    std::ofstream out = OpenForWrite(dir / "transit_stops.csv");
    out << csv::JoinFields(kStopHeader) << '\n';
    for (const TransitStop& s : dataset.stops) {
      out << s.id << ',' << StopKindName(s.kind) << ','
          << csv::FormatDouble(s.lat) << ',' << csv::FormatDouble(s.lon)
          << '\n';
    }
  }
  std::ofstream out = OpenForWrite(dir / "poverty_guideline.csv");
  out << csv::JoinFields(kGuidelineHeader) << '\n';
  for (const auto& [size, fpl] : dataset.guideline.fpl_100) {
    out << size << ',' << csv::FormatDouble(fpl) << '\n';
  }
}

}  // namespace eppt::geo
