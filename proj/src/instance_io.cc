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

#include "eppt/instance_io.h"

#include <fstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eppt/csv.h"

namespace eppt {
namespace {

const std::vector<std::string> kHouseholdHeader = {"id", "ride_hail_cost",
                                                   "group_ids"};
const std::vector<std::string> kProgramHeader = {"id", "cost", "kind",
                                                 "covers"};
const std::vector<std::string> kMetaHeader = {"budget"};

std::vector<std::string> SplitList(const std::string& field) {
  if (field.empty()) return {};
  std::vector<std::string> out;
  for (std::string& item : csv::SplitFields(field, ';')) {
    if (!item.empty()) out.push_back(std::move(item));
  }
  return out;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

Instance ReadInstance(const std::filesystem::path& dir) {
  const csv::Table hh =
      csv::ReadTable(dir / "households.csv", kHouseholdHeader);
  std::vector<Household> households;
  std::unordered_map<std::string, int> index;
  for (const auto& row : hh.rows) {
    Household h;
    h.id = row[0];
    if (!row[1].empty())
      h.ride_hail_cost = csv::ParseDouble(row[1], "ride_hail_cost");
    h.group_ids = SplitList(row[2]);
    index.emplace(h.id, static_cast<int>(households.size()));
    households.push_back(std::move(h));
  }

  const csv::Table pr = csv::ReadTable(dir / "programs.csv", kProgramHeader);
  std::vector<Program> programs;
  for (const auto& row : pr.rows) {
    Program p;
    p.id = row[0];
    p.cost = csv::ParseDouble(row[1], "cost");
    p.kind = ParseProgramKind(row[2]);
    for (const std::string& hid : SplitList(row[3])) {
      auto it = index.find(hid);
      if (it == index.end()) {
        throw InvalidInstanceError("program '" + p.id +
                                   "' covers unknown household '" + hid + "'");
      }
      p.covers.push_back(it->second);
    }
    programs.push_back(std::move(p));
  }

  const csv::Table meta = csv::ReadTable(dir / "meta.csv", kMetaHeader);
  if (meta.rows.size() != 1) {
    throw InvalidInstanceError("meta.csv must contain exactly one row");
  }
  const double budget = csv::ParseDouble(meta.rows[0][0], "budget");
  return Instance(std::move(households), std::move(programs), budget);
}

void WriteInstance(const Instance& instance, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = OpenForWrite(dir / "households.csv");
    out << csv::JoinFields(kHouseholdHeader) << '\n';
    for (const Household& h : instance.households()) {
      out << h.id << ','
          << (h.ride_hail_cost ? csv::FormatDouble(*h.ride_hail_cost) : "")
          << ',' << csv::JoinFields(h.group_ids, ';') << '\n';
    }
  }
  {
    std::ofstream out = OpenForWrite(dir / "programs.csv");
    out << csv::JoinFields(kProgramHeader) << '\n';
    for (const Program& p : instance.programs()) {
      std::vector<std::string> ids;
      ids.reserve(p.covers.size());
      for (int i : p.covers) ids.push_back(instance.households()[i].id);
      out << p.id << ',' << csv::FormatDouble(p.cost) << ','
          << ProgramKindName(p.kind) << ',' << csv::JoinFields(ids, ';')
          << '\n';
    }
  }
  std::ofstream out = OpenForWrite(dir / "meta.csv");
  out << "budget\n" << csv::FormatDouble(instance.budget()) << '\n';
}

}  // namespace eppt
