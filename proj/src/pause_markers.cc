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

#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"
#include "toucan_prep/text.h"

namespace toucan_prep {

namespace {

bool IsMarkerToken(const PhonemeToken& token) {
  return token.is_silence && token.symbol.size() == 1 &&
         IsPauseMarkerChar(token.symbol[0]);
}

}  // namespace

PauseValidation ValidatePauseMarkers(std::string_view transcript,
                                     std::span<const int> durations,
                                     std::span<const PhonemeToken> tokens,
                                     std::span<const uint8_t> vad_labels,
                                     int min_silence_frames) {
  if (durations.size() != tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(durations.size()) + " durations for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  std::vector<size_t> frame_start(tokens.size());
  size_t total = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (durations[i] < 0) throw Error(ErrorCode::kLengthMismatch, "negative duration");
    frame_start[i] = total;
    total += static_cast<size_t>(durations[i]);
  }
  if (total != vad_labels.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "durations cover " + std::to_string(total) + " frames, VAD has " +
                    std::to_string(vad_labels.size()));
  }
  std::vector<size_t> marker_offsets;
  for (size_t pos = 0; pos < transcript.size(); ++pos) {
    if (IsPauseMarkerAt(transcript, pos)) marker_offsets.push_back(pos);
  }
  std::vector<size_t> marker_tokens;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (IsMarkerToken(tokens[i])) marker_tokens.push_back(i);
  }
  if (marker_offsets.size() != marker_tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(marker_offsets.size()) +
                    " pause markers in transcript but " +
                    std::to_string(marker_tokens.size()) + " silence tokens");
  }
  PauseValidation result;
  std::vector<bool> drop(transcript.size(), false);
  for (size_t m = 0; m < marker_offsets.size(); ++m) {
    const size_t token = marker_tokens[m];
    PauseDecision decision;
    decision.byte_offset = marker_offsets[m];
    decision.marker = std::string(1, transcript[marker_offsets[m]]);
    decision.frames = durations[token];
    size_t silent = 0;
    for (int f = 0; f < decision.frames; ++f) {
      silent += vad_labels[frame_start[token] + f] == 0;
    }
    decision.nonspeech_fraction =
        decision.frames > 0 ? static_cast<double>(silent) / decision.frames : 0.0;
    decision.kept = decision.frames >= min_silence_frames &&
                    decision.frames > 0 && 2 * silent >= static_cast<size_t>(decision.frames);
    if (!decision.kept) drop[decision.byte_offset] = true;
    result.decisions.push_back(std::move(decision));
  }
  result.transcript.reserve(transcript.size());
  for (size_t i = 0; i < transcript.size(); ++i) {
    if (!drop[i]) result.transcript.push_back(transcript[i]);
  }
  return result;
}

}  // namespace toucan_prep
