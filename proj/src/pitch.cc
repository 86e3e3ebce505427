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
#include <numbers>

#include "fft.h"
#include "toucan_prep/errors.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep {

namespace {

struct Candidate {
  double hz = 0.0;  // 0 for the unvoiced candidate
  double strength = 0.0;
};

// Normalized autocorrelation of a frame via |FFT|^2; the inverse transform
// of a real symmetric spectrum is its forward transform divided by N.
void Autocorrelate(std::span<const double> frame, internal::RealFft& fft,
                   std::vector<double>& power, std::vector<double>& padded,
                   std::vector<double>& out) {
  const size_t n = fft.size();
  std::fill(padded.begin(), padded.end(), 0.0);
  std::copy(frame.begin(), frame.end(), padded.begin());
  const auto& spectrum = fft.Forward(padded);
  for (size_t k = 0; k <= n / 2; ++k) {
    power[k] = std::norm(spectrum[k]);
    if (k > 0 && k < n - k) power[n - k] = power[k];
  }
  const auto& back = fft.Forward(power);
  const double zero = back[0].real();
  for (size_t lag = 0; lag < out.size(); ++lag) {
    out[lag] = zero > 0.0 ? back[lag].real() / zero : 0.0;
  }
}

}  // namespace

FrameTrack ExtractPitch(const Audio& audio, const MelConfig& mel,
                        const PitchConfig& config) {
  if (audio.sample_rate != mel.sample_rate) {
    throw Error(ErrorCode::kSampleRateMismatch,
                "audio at " + std::to_string(audio.sample_rate) +
                    " Hz, expected " + std::to_string(mel.sample_rate));
  }
  if (audio.samples.empty()) throw Error(ErrorCode::kEmptyAudio, "empty audio");
  if (!(config.min_hz > 0.0) || config.max_hz <= config.min_hz) {
    throw Error(ErrorCode::kConfigError, "pitch range must satisfy 0 < min < max");
  }
  const double rate = audio.sample_rate;
  const size_t frames = FrameCount(audio.samples.size(), mel);
  FrameTrack track{TrackKind::kPitchHz, std::vector<double>(frames, 0.0)};

  // Three periods of the lowest pitch.
  const size_t width = static_cast<size_t>(std::ceil(3.0 * rate / config.min_hz));
  size_t fft_size = 1;
  while (fft_size < 2 * width) fft_size *= 2;
  const size_t max_lag = std::min(
      width / 2 - 1, static_cast<size_t>(std::ceil(rate / config.min_hz)) + 1);
  const size_t min_lag = std::max<size_t>(
      2, static_cast<size_t>(std::floor(rate / config.max_hz)));

  double global_peak = 0.0;
  for (double s : audio.samples) global_peak = std::max(global_peak, std::abs(s));
  if (global_peak == 0.0) return track;

  std::vector<double> window(width);
  for (size_t i = 0; i < width; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (i + 0.5) / width);
  }
  internal::RealFft fft(fft_size);
  std::vector<double> power(fft_size), padded(fft_size);
  std::vector<double> window_r(max_lag + 2), frame_r(max_lag + 2);
  Autocorrelate(window, fft, power, padded, window_r);

  std::vector<std::vector<Candidate>> candidates(frames);
  std::vector<double> segment(width);
  const long n = static_cast<long>(audio.samples.size());
  for (size_t t = 0; t < frames; ++t) {
    const long start = static_cast<long>(t * mel.hop_length) -
                       static_cast<long>(width / 2);
    double mean = 0.0;
    for (size_t i = 0; i < width; ++i) {
      const long at = start + static_cast<long>(i);
      segment[i] = (at >= 0 && at < n) ? audio.samples[at] : 0.0;
      mean += segment[i];
    }
    mean /= static_cast<double>(width);
    double local_peak = 0.0;
    for (size_t i = 0; i < width; ++i) {
      segment[i] -= mean;
      local_peak = std::max(local_peak, std::abs(segment[i]));
      segment[i] *= window[i];
    }
    std::vector<Candidate>& frame = candidates[t];
    const double unvoiced =
        config.voicing_threshold +
        std::max(0.0, 2.0 - (local_peak / global_peak) /
                               (config.silence_threshold /
                                (1.0 + config.voicing_threshold)));
    frame.push_back({0.0, unvoiced});
    if (local_peak == 0.0) continue;

    Autocorrelate(segment, fft, power, padded, frame_r);
    for (size_t lag = 0; lag < frame_r.size(); ++lag) {
      frame_r[lag] = window_r[lag] > 0.0 ? frame_r[lag] / window_r[lag] : 0.0;
    }
    std::vector<Candidate> voiced;
    for (size_t lag = min_lag; lag <= max_lag; ++lag) {
      const double left = frame_r[lag - 1], mid = frame_r[lag],
                   right = frame_r[lag + 1];
      if (!(mid > left && mid >= right) ||
          mid < 0.5 * config.voicing_threshold) {
        continue;
      }
      const double slope = 0.5 * (right - left);
      const double curvature = 2.0 * mid - left - right;
      const double offset = curvature > 0.0 ? slope / curvature : 0.0;
      double value = mid + 0.5 * slope * offset;
      if (value > 1.0) value = 1.0 / value;
      const double hz = rate / (static_cast<double>(lag) + offset);
      if (hz < config.min_hz || hz > config.max_hz) continue;
      voiced.push_back(
          {hz, value - config.octave_cost * std::log2(config.min_hz / hz)});
    }
    std::stable_sort(voiced.begin(), voiced.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.strength > b.strength;
                     });
    const size_t keep = std::min(voiced.size(),
                                 static_cast<size_t>(std::max(1, config.max_candidates - 1)));
    frame.insert(frame.end(), voiced.begin(), voiced.begin() + keep);
  }

  // Best path: maximize summed strength minus transition costs.
  const double scale = 0.01 / mel.hop_seconds();
  auto transition = [&](const Candidate& a, const Candidate& b) {
    const bool va = a.hz > 0.0, vb = b.hz > 0.0;
    if (!va && !vb) return 0.0;
    if (va != vb) return scale * config.voiced_unvoiced_cost;
    return scale * config.octave_jump_cost * std::abs(std::log2(a.hz / b.hz));
  };
  std::vector<std::vector<double>> score(frames);
  std::vector<std::vector<size_t>> back(frames);
  score[0].resize(candidates[0].size());
  back[0].assign(candidates[0].size(), 0);
  for (size_t i = 0; i < candidates[0].size(); ++i) {
    score[0][i] = candidates[0][i].strength;
  }
  for (size_t t = 1; t < frames; ++t) {
    score[t].resize(candidates[t].size());
    back[t].resize(candidates[t].size());
    for (size_t i = 0; i < candidates[t].size(); ++i) {
      double best = -1e300;
      size_t arg = 0;
      for (size_t p = 0; p < candidates[t - 1].size(); ++p) {
        const double s =
            score[t - 1][p] - transition(candidates[t - 1][p], candidates[t][i]);
        if (s > best) {
          best = s;
          arg = p;
        }
      }
      score[t][i] = best + candidates[t][i].strength;
      back[t][i] = arg;
    }
  }
  size_t state = static_cast<size_t>(
      std::max_element(score[frames - 1].begin(), score[frames - 1].end()) -
      score[frames - 1].begin());
  for (size_t t = frames; t-- > 0;) {
    track.values[t] = candidates[t][state].hz;
    state = back[t][state];
  }
  return track;
}

}  // namespace toucan_prep
