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

// ITU-R BS.1770-4 integrated loudness and gain normalization.

#ifndef TOUCAN_PREP_LOUDNESS_H_
#define TOUCAN_PREP_LOUDNESS_H_

#include <span>
#include <vector>

namespace toucan_prep {

struct Biquad {
  double b0, b1, b2, a1, a2;  // a0 normalized to 1
};

// The two K-weighting stages (high shelf, then high pass) for a sample rate.
Biquad KWeightingShelf(double sample_rate);
Biquad KWeightingHighPass(double sample_rate);

std::vector<double> KWeight(std::span<const double> samples, double sample_rate);

// Gated integrated loudness in LUFS of a mono signal. Throws
// Error(kTooShort) below one 400 ms block and Error(kUnmeasurable) when no
// block passes the -70 LUFS absolute gate.
double MeasureLoudness(std::span<const double> samples, double sample_rate);

// Plain RMS level in dBFS (full-scale square wave = 0 dBFS).
double MeasureRmsDbfs(std::span<const double> samples);

enum class LoudnessMeasure { kLufs, kRmsDbfs };

struct NormalizeOptions {
  double target = -30.0;
  LoudnessMeasure measure = LoudnessMeasure::kLufs;
  // Scale down after normalization so no sample exceeds full scale; the
  // target is then missed by the reported amount.
  bool peak_safe = false;
  double tolerance_lu = 0.1;
};

struct NormalizeResult {
  std::vector<double> samples;
  double input_level = 0.0;
  double output_level = 0.0;
  double gain_db = 0.0;
  double peak = 0.0;           // max |sample| after gain
  bool peak_warning = false;   // peak exceeded full scale
};

NormalizeResult NormalizeLoudness(std::span<const double> samples,
                                  double sample_rate,
                                  const NormalizeOptions& options);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_LOUDNESS_H_
