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

#include <numeric>

#include "toucan_prep/errors.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep {

std::vector<double> AveragePerPhone(const FrameTrack& track,
                                    std::span<const int> durations) {
  long total = 0;
  for (int d : durations) {
    if (d < 0) throw Error(ErrorCode::kLengthMismatch, "negative duration");
    total += d;
  }
  if (total != static_cast<long>(track.values.size())) {
    throw Error(ErrorCode::kLengthMismatch,
                "durations sum to " + std::to_string(total) + " but track has " +
                    std::to_string(track.values.size()) + " frames");
  }
  std::vector<double> out;
  out.reserve(durations.size());
  size_t frame = 0;
  for (int d : durations) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < d; ++i, ++frame) {
      const double v = track.values[frame];
      if (track.kind == TrackKind::kPitchHz && v <= 0.0) continue;
      sum += v;
      ++count;
    }
    out.push_back(count > 0 ? sum / count : 0.0);
  }
  return out;
}

std::vector<double> ZeroSilences(std::span<const double> values,
                                 std::span<const PhonemeToken> tokens,
                                 TrackKind kind, const FeatureTable& table) {
  if (values.size() != tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(values.size()) + " values for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  std::vector<double> out(values.begin(), values.end());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const PhonemeToken& token = tokens[i];
    if (token.is_silence) {
      out[i] = 0.0;
    } else if (kind == TrackKind::kPitchHz && !table.IsVoiced(token.symbol)) {
      out[i] = 0.0;
    }
  }
  return out;
}

std::vector<double> NormalizePerUtterance(std::span<const double> values,
                                          NormalizationMode mode) {
  std::vector<double> out(values.begin(), values.end());
  double sum = 0.0;
  size_t count = 0;
  for (double v : values) {
    if (v != 0.0) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) return out;
  const double mean = sum / static_cast<double>(count);
  for (double& v : out) {
    if (v == 0.0) continue;
    v = mode == NormalizationMode::kDivide ? v / mean : v - mean;
  }
  return out;
}

PhoneProsody ComputePhoneProsody(const FrameTrack& pitch,
                                 const FrameTrack& energy,
                                 std::span<const int> durations,
                                 std::span<const PhonemeToken> tokens,
                                 const FeatureTable& table,
                                 NormalizationMode mode) {
  PhoneProsody out;
  out.pitch = NormalizePerUtterance(
      ZeroSilences(AveragePerPhone(pitch, durations), tokens,
                   TrackKind::kPitchHz, table),
      mode);
  out.energy = NormalizePerUtterance(
      ZeroSilences(AveragePerPhone(energy, durations), tokens,
                   TrackKind::kEnergy, table),
      mode);
  return out;
}

}  // namespace toucan_prep
