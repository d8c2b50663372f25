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

// The two experimental baselines. Both respect the budget exactly and stop
// once every household is covered or nothing else is affordable.

#ifndef EPPT_BASELINES_H_
#define EPPT_BASELINES_H_

#include <cstdint>

#include "eppt/model.h"

namespace eppt {

// Repeatedly opens the affordable program with the largest increase in
// equity. Ties go to the program covering more new households, then to the
// cheaper one, then to the lower index.
StrategyOutcome Greedy(const Instance& instance);

// Repeatedly opens a program drawn uniformly from the unopened programs
// that still fit in the remaining budget.
StrategyOutcome Uniform(const Instance& instance, std::uint64_t seed);

}  // namespace eppt

#endif  // EPPT_BASELINES_H_
