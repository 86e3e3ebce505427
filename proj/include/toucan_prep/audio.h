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

#ifndef TOUCAN_PREP_AUDIO_H_
#define TOUCAN_PREP_AUDIO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace toucan_prep {

// Mono audio with samples nominally in [-1, 1].
struct Audio {
  int sample_rate = 0;
  std::vector<double> samples;

  double seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// RIFF WAV, mono, 16-bit PCM or 32-bit float. Other layouts raise
// Error(kFormatError).
Audio ReadWav(const std::string& path);
Audio DecodeWav(const std::string& bytes, const std::string& source = "wav");

// Float samples are clamped to [-1, 1] and scaled by 32767 with rounding
// half away from zero.
void WriteWavPcm16(const std::string& path, const Audio& audio);
void WriteWavPcm16(const std::string& path, std::span<const int16_t> samples,
                   int sample_rate);
std::string EncodeWavPcm16(std::span<const int16_t> samples, int sample_rate);
void WriteWavFloat32(const std::string& path, const Audio& audio);

int16_t ToPcm16(double sample);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_AUDIO_H_
