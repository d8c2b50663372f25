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

// Instance files. An instance is a directory holding three CSV files:
//
//   households.csv  id,ride_hail_cost,group_ids
//   programs.csv    id,cost,kind,covers
//   meta.csv        budget
//
// ride_hail_cost may be empty (household not eligible for ride-hailing).
// group_ids and covers are ';'-separated lists; covers lists household ids.
// kind is bus_line or virtual_ride_hail. Headers must match exactly.

#ifndef EPPT_INSTANCE_IO_H_
#define EPPT_INSTANCE_IO_H_

#include <filesystem>

#include "eppt/model.h"

namespace eppt {

Instance ReadInstance(const std::filesystem::path& dir);
void WriteInstance(const Instance& instance, const std::filesystem::path& dir);

}  // namespace eppt

#endif  // EPPT_INSTANCE_IO_H_
