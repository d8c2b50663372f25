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

#include "support/fixtures.h"

#include <algorithm>
#include <string>
#include <vector>

#include "eppt/rng.h"

namespace eppt::test {

Instance TwoGroupToy() {
  std::vector<Household> households = {{"a", 1.0, {"g1"}}, {"b", 1.0, {"g2"}}};
  std::vector<Program> programs = {
      {"rh:a", 1.0, {0}, ProgramKind::kVirtualRideHail},
      {"rh:b", 1.0, {1}, ProgramKind::kVirtualRideHail}};
  return Instance(std::move(households), std::move(programs), 1.0);
}

Instance RandomInstance(std::uint64_t seed, const RandomSpec& spec) {
  Rng rng(seed);
  auto between = [&](int lo, int hi) {
    return lo + static_cast<int>(rng.UniformIndex(hi - lo + 1));
  };
  const int n = between(spec.min_households, spec.max_households);
  const int m = between(spec.min_programs, spec.max_programs);
  const int groups = between(1, std::min(spec.max_groups, n));

  std::vector<Household> households(n);
  for (int i = 0; i < n; ++i) {
    households[i].id = "h" + std::to_string(i);
    const int g = i < groups ? i : static_cast<int>(rng.UniformIndex(groups));
    households[i].group_ids.push_back("g" + std::to_string(g));
    if (groups > 1 && rng.Uniform01() < spec.overlap) {
      int other = static_cast<int>(rng.UniformIndex(groups - 1));
      if (other >= g) ++other;
      households[i].group_ids.push_back("g" + std::to_string(other));
    }
  }

  std::vector<Program> programs(m);
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    programs[j].id = "p" + std::to_string(j);
    programs[j].cost = 1.0 - rng.Uniform01();
    total += programs[j].cost;
    const double density = 0.15 + 0.35 * rng.Uniform01();
    for (int i = 0; i < n; ++i) {
      if (rng.Uniform01() < density) programs[j].covers.push_back(i);
    }
    if (programs[j].covers.empty()) {
      programs[j].covers.push_back(static_cast<int>(rng.UniformIndex(n)));
    }
  }
  const double budget =
      total > 1.0 ? 1.0 + rng.Uniform01() * (total - 1.0) : 1.0;
  return Instance(std::move(households), std::move(programs), budget);
}

}  // namespace eppt::test
