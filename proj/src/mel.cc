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

#include "fft.h"
#include "toucan_prep/errors.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep {

namespace {

constexpr double kMelLinearStep = 200.0 / 3.0;
constexpr double kMelLogStartHz = 1000.0;
constexpr double kMelLogStartMel = kMelLogStartHz / kMelLinearStep;
const double kMelLogStep = std::log(6.4) / 27.0;

// Index into the signal after reflecting (without repeating the edge) as
// many times as needed.
size_t ReflectIndex(long i, long n) {
  if (n == 1) return 0;
  const long period = 2 * (n - 1);
  long m = i % period;
  if (m < 0) m += period;
  return static_cast<size_t>(m < n ? m : period - m);
}

}  // namespace

void MelConfig::Validate() const {
  auto fail = [](const std::string& what) {
    return Error(ErrorCode::kConfigError, "mel config: " + what);
  };
  if (sample_rate <= 0) throw fail("sample_rate must be positive");
  if (hop_length <= 0 || hop_length > win_length) {
    throw fail("need 0 < hop_length <= win_length");
  }
  if (win_length > n_fft) throw fail("win_length must not exceed n_fft");
  if (n_mels < 1) throw fail("n_mels must be >= 1");
  if (fmin < 0.0 || fmax <= fmin || fmax > sample_rate / 2.0) {
    throw fail("need 0 <= fmin < fmax <= sample_rate/2");
  }
  if (!(log_floor > 0.0)) throw fail("log_floor must be positive");
}

size_t FrameCount(size_t num_samples, const MelConfig& config) {
  return 1 + num_samples / static_cast<size_t>(config.hop_length);
}

double HzToMel(double hz) {
  if (hz < kMelLogStartHz) return hz / kMelLinearStep;
  return kMelLogStartMel + std::log(hz / kMelLogStartHz) / kMelLogStep;
}

double MelToHz(double mel) {
  if (mel < kMelLogStartMel) return mel * kMelLinearStep;
  return kMelLogStartHz * std::exp(kMelLogStep * (mel - kMelLogStartMel));
}

std::vector<double> AnalysisWindow(const MelConfig& config) {
  std::vector<double> window(config.n_fft, 0.0);
  const int offset = (config.n_fft - config.win_length) / 2;
  for (int i = 0; i < config.win_length; ++i) {
    window[offset + i] =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / config.win_length);
  }
  return window;
}

Matrix MelFilterbank(const MelConfig& config) {
  const size_t bins = config.n_fft / 2 + 1;
  const double mel_lo = HzToMel(config.fmin);
  const double mel_hi = HzToMel(config.fmax);
  std::vector<double> edges(config.n_mels + 2);
  for (size_t i = 0; i < edges.size(); ++i) {
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    (config.n_mels + 1));
  }
  Matrix bank(config.n_mels, bins);
  for (int m = 0; m < config.n_mels; ++m) {
    const double lo = edges[m], center = edges[m + 1], hi = edges[m + 2];
    const double norm = 2.0 / (hi - lo);
    for (size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * config.sample_rate / config.n_fft;
      const double rise = (f - lo) / (center - lo);
      const double fall = (hi - f) / (hi - center);
      bank(m, k) = norm * std::max(0.0, std::min(rise, fall));
    }
  }
  return bank;
}

namespace internal {

// Calls visit(t, frame) for every centered, reflect-padded analysis frame
// of n_fft samples.
template <typename Visit>
void ForEachFrame(const Audio& audio, const MelConfig& config, Visit visit) {
  if (audio.sample_rate != config.sample_rate) {
    throw Error(ErrorCode::kSampleRateMismatch,
                "audio at " + std::to_string(audio.sample_rate) +
                    " Hz, expected " + std::to_string(config.sample_rate));
  }
  if (audio.samples.empty()) throw Error(ErrorCode::kEmptyAudio, "empty audio");
  config.Validate();
  const long n = static_cast<long>(audio.samples.size());
  const long half = config.n_fft / 2;
  const size_t frames = FrameCount(audio.samples.size(), config);
  std::vector<double> frame(config.n_fft);
  for (size_t t = 0; t < frames; ++t) {
    const long start = static_cast<long>(t) * config.hop_length - half;
    for (long i = 0; i < config.n_fft; ++i) {
      frame[i] = audio.samples[ReflectIndex(start + i, n)];
    }
    visit(t, frame);
  }
}

}  // namespace internal

Matrix MelSpectrogram(const Audio& audio, const MelConfig& config) {
  const std::vector<double> window = AnalysisWindow(config);
  const Matrix bank = MelFilterbank(config);
  internal::RealFft fft(config.n_fft);
  std::vector<double> magnitude(bank.cols);
  Matrix out(FrameCount(audio.samples.size(), config), config.n_mels);
  internal::ForEachFrame(audio, config, [&](size_t t, std::vector<double>& frame) {
    for (size_t i = 0; i < frame.size(); ++i) frame[i] *= window[i];
    const auto& spectrum = fft.Forward(frame);
    for (size_t k = 0; k < magnitude.size(); ++k) {
      magnitude[k] = std::abs(spectrum[k]);
    }
    for (int m = 0; m < config.n_mels; ++m) {
      const double* weights = bank.row(m);
      double energy = 0.0;
      for (size_t k = 0; k < magnitude.size(); ++k) {
        energy += weights[k] * magnitude[k];
      }
      out(t, m) = std::log10(std::max(config.log_floor, energy));
    }
  });
  return out;
}

FrameTrack ExtractEnergy(const Audio& audio, const MelConfig& config) {
  const std::vector<double> window = AnalysisWindow(config);
  FrameTrack track{TrackKind::kEnergy, {}};
  track.values.resize(FrameCount(audio.samples.size(), config));
  internal::ForEachFrame(audio, config, [&](size_t t, std::vector<double>& frame) {
    double sum = 0.0;
    for (size_t i = 0; i < frame.size(); ++i) {
      const double v = frame[i] * window[i];
      sum += v * v;
    }
    track.values[t] = std::sqrt(sum / static_cast<double>(frame.size()));
  });
  return track;
}

}  // namespace toucan_prep
