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

// Fixtures shared by the unit tests and the acceptance gate.

#ifndef EPPT_TESTS_SUPPORT_FIXTURES_H_
#define EPPT_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>

#include "eppt/model.h"

namespace eppt::test {

// Two households a and b in separate groups, no bus lines, one unit-cost
// ride-hailing program each, budget 1. Any deterministic selection leaves
// one group uncovered; mixing the two programs evenly covers each group
// half the time.
Instance TwoGroupToy();

struct RandomSpec {
  int min_households = 2;
  int max_households = 12;
  int min_programs = 2;
  int max_programs = 10;
  int max_groups = 4;
  // Probability that a household joins a second group.
  double overlap = 0.2;
};

// Costs in (0, 1], random nonempty cover sets, 1 to max_groups nonempty
// groups and a budget drawn from [1, max(1, total cost)].
Instance RandomInstance(std::uint64_t seed, const RandomSpec& spec = {});

}  // namespace eppt::test

#endif  // EPPT_TESTS_SUPPORT_FIXTURES_H_
