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

#include <cmath>
#include <numbers>

#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"

namespace toucan_prep {

std::vector<double> RepeatSamples(std::span<const double> samples) {
  std::vector<double> out;
  out.reserve(2 * samples.size());
  for (double s : samples) {
    out.push_back(s);
    out.push_back(s);
  }
  return out;
}

// Bilinear transform of 1 / (1 + s / wc) without frequency prewarping.
FirstOrderLowPass DesignLowPass(double cutoff_hz, double sample_rate) {
  if (!(cutoff_hz > 0.0) || cutoff_hz >= sample_rate / 2.0) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be in (0, Nyquist)");
  }
  const double k = std::numbers::pi * cutoff_hz / sample_rate;
  return {k / (1.0 + k), k / (1.0 + k), (k - 1.0) / (k + 1.0)};
}

std::vector<double> ApplyLowPass(std::span<const double> samples,
                                 const FirstOrderLowPass& filter) {
  std::vector<double> out(samples.size());
  double x1 = 0.0, y1 = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double y = filter.b0 * samples[i] + filter.b1 * x1 - filter.a1 * y1;
    x1 = samples[i];
    y1 = y;
    out[i] = y;
  }
  return out;
}

std::vector<int16_t> FinalizeOutput(std::span<const double> samples_24k) {
  const std::vector<double> filtered =
      ApplyLowPass(RepeatSamples(samples_24k), DesignLowPass(12000.0, 48000.0));
  std::vector<int16_t> pcm(filtered.size());
  for (size_t i = 0; i < pcm.size(); ++i) pcm[i] = ToPcm16(filtered[i]);
  return pcm;
}

}  // namespace toucan_prep
