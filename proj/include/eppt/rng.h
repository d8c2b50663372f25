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

// Seeded randomness. Every random component takes a 64-bit seed. Streams for
// individual trials are derived from one master seed with DeriveSeed(), so a
// trial can be replayed in isolation:
//
//   s_0     = splitmix64(master)
//   s_{k+1} = splitmix64(s_k ^ splitmix64(path_k + 0x9e3779b97f4a7c15))
//
// Uniform doubles take the top 53 bits of a 64-bit Mersenne Twister draw, so
// results do not depend on the standard library's distribution code.

#ifndef EPPT_RNG_H_
#define EPPT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace eppt {

std::uint64_t SplitMix64(std::uint64_t x);

std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> path);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t UniformIndex(std::uint64_t n);
  double Normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

}  // namespace eppt

#endif  // EPPT_RNG_H_
