// Copyright 2026 The toucan-prep Authors
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

#ifndef TOUCAN_PREP_RANDOM_H_
#define TOUCAN_PREP_RANDOM_H_

#include <cmath>
#include <numbers>
#include <random>

namespace toucan_prep::internal {

// Distributions with identical output on every standard library; the
// std:: distributions are implementation-defined.
class PortableRandom {
 public:
  explicit PortableRandom(uint32_t seed) : engine_(seed) {}

  // Uniform in (0, 1).
  double Uniform() {
    return (static_cast<double>(engine_()) + 0.5) / 4294967296.0;
  }

  double Normal() {
    const double u1 = Uniform();
    const double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937 engine_;
};

}  // namespace toucan_prep::internal

#endif  // TOUCAN_PREP_RANDOM_H_
