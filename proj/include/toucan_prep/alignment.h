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

// Phone/frame alignment over CTC posteriograms: monotonic alignment search
// and a skip-permitting Dijkstra path search for comparison.

#ifndef TOUCAN_PREP_ALIGNMENT_H_
#define TOUCAN_PREP_ALIGNMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toucan_prep/matrix.h"
#include "toucan_prep/phoneme.h"

namespace toucan_prep {

// T x C per-frame log-probabilities over the acoustic model's classes.
struct Posteriogram {
  Matrix values;
  double hop_seconds = 0.0;
  std::vector<std::string> class_symbols;

  // Throws Error(kFormatError) unless T, C >= 1, the symbol count matches C
  // and every row's logsumexp is within tolerance of 0.
  void Validate(double tolerance = 1e-3) const;

  static Posteriogram Read(const std::string& path);
  void Write(const std::string& path) const;
};

struct AlignmentPath {
  std::vector<int> durations;  // frames per transcript phone
  double score = 0.0;          // summed log-likelihood along the path
};

// Probabilities below this are floored before taking the log.
inline constexpr double kProbabilityFloor = 1e-12;

// T x N matrix whose column j is the posteriogram column of transcript[j].
// Throws Error(kSymbolNotInModel).
Matrix Reorder(const Posteriogram& posteriogram,
               std::span<const PhonemeToken> transcript);

// Best monotonic path in which every phone covers at least one frame.
// Ties prefer the later transition, i.e. the earlier phone keeps the frame.
// Throws Error(kTooFewFrames) when T < N.
AlignmentPath MonotonicAlignmentSearch(const Matrix& scores);

// Shortest path over (frame, phone) nodes with node cost -score. Each step
// advances one frame and any number of phones, so phones may be skipped
// (zero duration). The path may start and end on any phone.
AlignmentPath DijkstraAlign(const Matrix& scores);

struct SkipRateReport {
  size_t matrices = 0;
  size_t phones = 0;
  double mas_zero_rate = 0.0;       // fraction of phones with 0 frames
  double dijkstra_zero_rate = 0.0;
};

// Throws Error(kEmptyCorpus).
SkipRateReport CompareSkipRate(std::span<const Matrix> corpus);

// Throws Error(kInvalidArgument) for hop <= 0.
std::vector<double> DurationsToSeconds(std::span<const int> durations,
                                       double hop_seconds);

double ZeroRate(std::span<const int> durations);

// Synthetic posteriograms for tests and demos. Each frame's target class
// (from the ground-truth durations) gets logit `sharpness`, all others 0,
// plus Gaussian noise of std `noise`; rows are log-softmax normalized.
struct SyntheticOptions {
  double sharpness = 6.0;
  double noise = 1.0;
  uint32_t seed = 1;
};
Matrix SyntheticLogProbs(std::span<const int> class_per_frame,
                         size_t num_classes, const SyntheticOptions& options);

// Scores of an N-phone transcript over T frames in which phone `weak` has
// probability ~1e-9 everywhere; the rest follow an even ground truth.
Matrix AdversarialScores(size_t frames, size_t phones, size_t weak,
                         uint32_t seed);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_ALIGNMENT_H_
