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

#include "toucan_prep/loudness.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "toucan_prep/errors.h"

namespace toucan_prep {

namespace {

constexpr double kBlockSeconds = 0.4;
constexpr double kStepSeconds = 0.1;
constexpr double kAbsoluteGate = -70.0;
constexpr double kRelativeGate = -10.0;
constexpr double kOffset = -0.691;

double BlockLoudness(double mean_square) {
  return kOffset + 10.0 * std::log10(mean_square);
}

void Filter(const Biquad& f, std::vector<double>& x) {
  double z1 = 0.0, z2 = 0.0;
  for (double& v : x) {
    const double in = v;
    const double out = f.b0 * in + z1;
    z1 = f.b1 * in - f.a1 * out + z2;
    z2 = f.b2 * in - f.a2 * out;
    v = out;
  }
}

}  // namespace

Biquad KWeightingShelf(double rate) {
  const double f0 = 1681.974450955533;
  const double gain_db = 3.999843853973347;
  const double q = 0.7071752369554196;
  const double k = std::tan(std::numbers::pi * f0 / rate);
  const double vh = std::pow(10.0, gain_db / 20.0);
  const double vb = std::pow(vh, 0.4996667741545416);
  const double a0 = 1.0 + k / q + k * k;
  return {(vh + vb * k / q + k * k) / a0, 2.0 * (k * k - vh) / a0,
          (vh - vb * k / q + k * k) / a0, 2.0 * (k * k - 1.0) / a0,
          (1.0 - k / q + k * k) / a0};
}

Biquad KWeightingHighPass(double rate) {
  const double f0 = 38.13547087602444;
  const double q = 0.5003270373238773;
  const double k = std::tan(std::numbers::pi * f0 / rate);
  const double a0 = 1.0 + k / q + k * k;
  return {1.0, -2.0, 1.0, 2.0 * (k * k - 1.0) / a0, (1.0 - k / q + k * k) / a0};
}

std::vector<double> KWeight(std::span<const double> samples, double rate) {
  std::vector<double> out(samples.begin(), samples.end());
  Filter(KWeightingShelf(rate), out);
  Filter(KWeightingHighPass(rate), out);
  return out;
}

double MeasureLoudness(std::span<const double> samples, double rate) {
  const size_t block = static_cast<size_t>(std::llround(kBlockSeconds * rate));
  const size_t step = static_cast<size_t>(std::llround(kStepSeconds * rate));
  if (samples.size() < block || block == 0) {
    throw Error(ErrorCode::kTooShort,
                "loudness needs at least 400 ms, got " +
                    std::to_string(samples.size() / rate) + " s");
  }
  const std::vector<double> weighted = KWeight(samples, rate);
  // Prefix sums of squares give each block's mean square in O(1).
  std::vector<double> prefix(weighted.size() + 1, 0.0);
  for (size_t i = 0; i < weighted.size(); ++i) {
    prefix[i + 1] = prefix[i] + weighted[i] * weighted[i];
  }
  std::vector<double> powers;
  for (size_t start = 0; start + block <= weighted.size(); start += step) {
    powers.push_back((prefix[start + block] - prefix[start]) / block);
  }
  auto gated_mean = [&](double threshold) {
    double sum = 0.0;
    size_t count = 0;
    for (double z : powers) {
      if (z > 0.0 && BlockLoudness(z) > threshold) {
        sum += z;
        ++count;
      }
    }
    return count > 0 ? sum / count : 0.0;
  };
  const double absolute = gated_mean(kAbsoluteGate);
  if (absolute <= 0.0) {
    throw Error(ErrorCode::kUnmeasurable, "signal below the absolute gate");
  }
  const double relative = gated_mean(BlockLoudness(absolute) + kRelativeGate);
  return BlockLoudness(relative);
}

double MeasureRmsDbfs(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyAudio, "empty audio");
  double sum = 0.0;
  for (double s : samples) sum += s * s;
  const double rms = std::sqrt(sum / samples.size());
  if (rms <= 0.0) throw Error(ErrorCode::kUnmeasurable, "digital silence");
  return 20.0 * std::log10(rms);
}

NormalizeResult NormalizeLoudness(std::span<const double> samples, double rate,
                                  const NormalizeOptions& options) {
  auto measure = [&](std::span<const double> x) {
    return options.measure == LoudnessMeasure::kLufs ? MeasureLoudness(x, rate)
                                                     : MeasureRmsDbfs(x);
  };
  NormalizeResult result;
  result.input_level = measure(samples);
  result.gain_db = options.target - result.input_level;
  auto apply = [&](double gain_db) {
    const double gain = std::pow(10.0, gain_db / 20.0);
    result.samples.assign(samples.begin(), samples.end());
    for (double& v : result.samples) v *= gain;
  };
  apply(result.gain_db);
  result.output_level = measure(result.samples);
  // Gain is linear in the measure, so one correction absorbs rounding.
  for (int i = 0; i < 3 && std::abs(result.output_level - options.target) >
                               0.25 * options.tolerance_lu;
       ++i) {
    result.gain_db += options.target - result.output_level;
    apply(result.gain_db);
    result.output_level = measure(result.samples);
  }
  for (double v : result.samples) result.peak = std::max(result.peak, std::abs(v));
  result.peak_warning = result.peak > 1.0;
  if (options.peak_safe && result.peak_warning) {
    const double scale = 1.0 / result.peak;
    for (double& v : result.samples) v *= scale;
    result.gain_db += 20.0 * std::log10(scale);
    result.peak = 1.0;
    result.output_level = measure(result.samples);
  }
  return result;
}

}  // namespace toucan_prep
