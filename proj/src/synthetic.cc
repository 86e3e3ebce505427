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

#include <algorithm>
#include <cmath>

#include "random.h"
#include "toucan_prep/alignment.h"
#include "toucan_prep/errors.h"

namespace toucan_prep {

Matrix SyntheticLogProbs(std::span<const int> class_per_frame,
                         size_t num_classes, const SyntheticOptions& options) {
  if (num_classes == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one class");
  }
  internal::PortableRandom random(options.seed);
  Matrix out(class_per_frame.size(), num_classes);
  for (size_t t = 0; t < out.rows; ++t) {
    const int target = class_per_frame[t];
    if (target < 0 || static_cast<size_t>(target) >= num_classes) {
      throw Error(ErrorCode::kInvalidArgument, "class index out of range");
    }
    double* row = out.row(t);
    for (size_t c = 0; c < num_classes; ++c) {
      row[c] = (static_cast<int>(c) == target ? options.sharpness : 0.0) +
               options.noise * random.Normal();
    }
    const double peak = *std::max_element(row, row + num_classes);
    double sum = 0.0;
    for (size_t c = 0; c < num_classes; ++c) sum += std::exp(row[c] - peak);
    const double lse = peak + std::log(sum);
    for (size_t c = 0; c < num_classes; ++c) row[c] -= lse;
  }
  return out;
}

Matrix AdversarialScores(size_t frames, size_t phones, size_t weak,
                         uint32_t seed) {
  if (phones == 0 || frames < phones || weak >= phones) {
    throw Error(ErrorCode::kInvalidArgument, "bad adversarial dimensions");
  }
  std::vector<int> truth(frames);
  for (size_t t = 0; t < frames; ++t) {
    truth[t] = static_cast<int>(t * phones / frames);
  }
  Matrix out = SyntheticLogProbs(truth, phones, {6.0, 0.5, seed});
  for (size_t t = 0; t < frames; ++t) out(t, weak) = std::log(1e-9);
  return out;
}

}  // namespace toucan_prep
