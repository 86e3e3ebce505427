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

// Corpus-level preparation: chapter splitting, joint utterances, VAD and
// pause-marker validation, loss-ranked cleaning and the output chain.

#ifndef TOUCAN_PREP_CORPUS_H_
#define TOUCAN_PREP_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "toucan_prep/audio.h"
#include "toucan_prep/phoneme.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep {

struct UtteranceRecord {
  std::string utt_id;
  std::string audio_path;
  double start = 0.0;  // seconds
  double end = 0.0;
  std::string transcript;
  std::optional<std::string> phonemes;
  std::optional<std::vector<int>> durations;
  std::optional<double> alignment_score;
  std::optional<std::vector<double>> pitch;
  std::optional<std::vector<double>> energy;
  std::optional<double> loudness_lufs;
  bool is_joint = false;
  std::vector<std::string> source_ids;
  bool enhanced = false;

  double duration() const { return end - start; }
};

struct SegmentSpan {
  double start = 0.0;
  double end = 0.0;
  std::string text;
};

// Groups aligned segment spans of one chapter into utterances. A value k
// in paragraph_breaks ends a paragraph after span k (0-based). Without any
// breaks every span becomes its own record. Throws Error(kOverlappingSpans)
// for unsorted or overlapping spans and Error(kSpanOutOfBounds) for spans
// outside [0, chapter_seconds] or with end <= start.
std::vector<UtteranceRecord> SplitChapters(
    const std::string& chapter_id, const std::string& audio_path,
    double chapter_seconds, std::span<const SegmentSpan> spans,
    const std::set<size_t>& paragraph_breaks);

struct JoinConfig {
  double pause_seconds = 0.22;
  double max_total_seconds = 15.0;
};

// Greedy joints: from every starting record, append successors while the
// total including pauses stays within the cap. A joint is emitted only if
// it has at least two parts. Joint ids are "<first>+<last>".
std::vector<UtteranceRecord> MakeJointUtterances(
    std::span<const UtteranceRecord> records, const JoinConfig& config = {});

// Parts separated by round(pause * rate) zero samples.
Audio ConcatenateWithPauses(std::span<const Audio> parts, double pause_seconds);

struct CleaningConfig {
  double threshold = 0.1;
  size_t window = 10;
};

struct CleaningReport {
  std::vector<std::string> removed_ids;  // highest loss first
  size_t kept_count = 0;
  struct Step {
    std::string top_id;
    double top_loss = 0.0;
    double next_mean = 0.0;
  };
  std::vector<Step> trace;
};

// Sorts by loss (descending, ties by id) and removes the top sample while
// top - mean(next window) > threshold and at least window + 1 samples
// remain. Throws Error(kTooFewSamples) below window + 1 samples.
CleaningReport CleanByLoss(const std::map<std::string, double>& losses,
                           const CleaningConfig& config = {});

std::map<std::string, double> LoadLosses(const std::string& path);

struct VadConfig {
  double enter_offset_db = -12.0;  // relative to the utterance median
  double exit_offset_db = -18.0;
  double enter_floor_dbfs = -55.0;
  double exit_floor_dbfs = -60.0;
};

// Per mel frame: 1 speech, 0 non-speech. Hysteresis on windowed frame RMS
// in dB: enter speech at max(floor, median + enter offset), leave below
// max(floor, median + exit offset).
std::vector<uint8_t> EnergyVad(const Audio& audio, const MelConfig& mel,
                               const VadConfig& config = {});

// utt_id<TAB>0101... per line.
std::map<std::string, std::vector<uint8_t>> LoadVadLabels(
    const std::string& path);

struct PauseDecision {
  size_t byte_offset = 0;   // in the original transcript
  std::string marker;
  int frames = 0;
  double nonspeech_fraction = 0.0;
  bool kept = false;
};

struct PauseValidation {
  std::string transcript;  // markers that failed removed
  std::vector<PauseDecision> decisions;
};

// A marker in the transcript is kept iff its silence token lasts at least
// min_silence_frames and at least half of those frames are non-speech.
// Markers and silence tokens pair up in order. Throws
// Error(kLengthMismatch) on count mismatches.
PauseValidation ValidatePauseMarkers(std::string_view transcript,
                                     std::span<const int> durations,
                                     std::span<const PhonemeToken> tokens,
                                     std::span<const uint8_t> vad_labels,
                                     int min_silence_frames = 5);

// Output-side chain: repeat every sample (24 kHz -> 48 kHz), first-order
// low-pass at 12 kHz, then 16-bit PCM.
std::vector<double> RepeatSamples(std::span<const double> samples);
struct FirstOrderLowPass {
  double b0, b1, a1;
};
FirstOrderLowPass DesignLowPass(double cutoff_hz, double sample_rate);
std::vector<double> ApplyLowPass(std::span<const double> samples,
                                 const FirstOrderLowPass& filter);
std::vector<int16_t> FinalizeOutput(std::span<const double> samples_24k);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_CORPUS_H_
