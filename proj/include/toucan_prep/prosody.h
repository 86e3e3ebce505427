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

// Log-mel spectrogram, frame-level pitch and energy on the mel frame grid,
// and their reduction to one normalized value per phone.

#ifndef TOUCAN_PREP_PROSODY_H_
#define TOUCAN_PREP_PROSODY_H_

#include <span>
#include <vector>

#include "toucan_prep/audio.h"
#include "toucan_prep/matrix.h"
#include "toucan_prep/phoneme.h"

namespace toucan_prep {

// Frames are centered: the signal is reflect-padded by n_fft/2 on both
// sides, so T = 1 + len / hop_length.
struct MelConfig {
  int sample_rate = 16000;
  int n_fft = 1024;
  int win_length = 1024;
  int hop_length = 256;
  int n_mels = 80;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_floor = 1e-10;

  // Throws Error(kConfigError).
  void Validate() const;
  double hop_seconds() const {
    return static_cast<double>(hop_length) / sample_rate;
  }
};

size_t FrameCount(size_t num_samples, const MelConfig& config);

// Periodic Hann window of win_length, zero-padded to n_fft and centered.
std::vector<double> AnalysisWindow(const MelConfig& config);

// n_mels x (n_fft/2 + 1) triangular filters on the Slaney mel scale with
// area normalization.
Matrix MelFilterbank(const MelConfig& config);
double HzToMel(double hz);
double MelToHz(double mel);

// T x n_mels, log10(max(floor, mel energy)) of the STFT magnitude.
// Throws SampleRateMismatch or EmptyAudio.
Matrix MelSpectrogram(const Audio& audio, const MelConfig& config);

struct PitchConfig {
  double min_hz = 60.0;
  double max_hz = 400.0;
  double voicing_threshold = 0.45;
  double silence_threshold = 0.03;
  double octave_cost = 0.01;
  double octave_jump_cost = 0.35;
  double voiced_unvoiced_cost = 0.14;
  int max_candidates = 15;
};

enum class TrackKind { kPitchHz, kEnergy };

struct FrameTrack {
  TrackKind kind = TrackKind::kEnergy;
  std::vector<double> values;  // one per mel frame
};

// Autocorrelation pitch with path finding; 0 marks unvoiced frames.
FrameTrack ExtractPitch(const Audio& audio, const MelConfig& mel,
                        const PitchConfig& config = {});

// RMS of each Hann-windowed analysis frame (n_fft samples).
FrameTrack ExtractEnergy(const Audio& audio, const MelConfig& mel);

// Mean per phone span; pitch averages voiced frames only (0 if none).
// Throws Error(kLengthMismatch) if the durations do not sum to the track
// length or contain a negative value.
std::vector<double> AveragePerPhone(const FrameTrack& track,
                                    std::span<const int> durations);

// Pitch of unvoiced consonants and pitch and energy of silence tokens
// become 0. Throws Error(kLengthMismatch).
std::vector<double> ZeroSilences(std::span<const double> values,
                                 std::span<const PhonemeToken> tokens,
                                 TrackKind kind, const FeatureTable& table);

enum class NormalizationMode { kDivide, kSubtract };

// Nonzero values are divided by (or shifted by) the mean of the nonzero
// values; zeros stay zero. All-zero input is returned unchanged.
std::vector<double> NormalizePerUtterance(
    std::span<const double> values,
    NormalizationMode mode = NormalizationMode::kDivide);

struct PhoneProsody {
  std::vector<double> pitch;
  std::vector<double> energy;
};

// Full per-phone chain: average, zero, normalize.
PhoneProsody ComputePhoneProsody(const FrameTrack& pitch,
                                 const FrameTrack& energy,
                                 std::span<const int> durations,
                                 std::span<const PhonemeToken> tokens,
                                 const FeatureTable& table,
                                 NormalizationMode mode);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_PROSODY_H_
