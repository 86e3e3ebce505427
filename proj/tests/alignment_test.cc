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
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "toucan_prep/alignment.h"
#include "toucan_prep/matrix.h"
#include "toucan_prep/phoneme.h"

namespace toucan_prep {
namespace {

using testing::TempDir;

Matrix FromProbabilities(std::vector<std::vector<double>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (size_t t = 0; t < rows.size(); ++t) {
    for (size_t j = 0; j < rows[t].size(); ++j) m(t, j) = std::log(rows[t][j]);
  }
  return m;
}

using oracle::BestPath;
using oracle::ExhaustiveAlignment;
using oracle::RandomScores;

PhonemeToken Tok(const char* symbol) {
  PhonemeToken t;
  t.symbol = symbol;
  return t;
}

Posteriogram SmallPosteriogram() {
  Posteriogram p;
  p.class_symbols = {"a", "b", "c"};
  p.hop_seconds = 0.016;
  p.values = FromProbabilities({{0.7, 0.2, 0.1}, {0.1, 0.8, 0.1}, {0.3, 0.3, 0.4}});
  return p;
}

TEST(Reorder, SingleColumn) {
  const Posteriogram p = SmallPosteriogram();
  const std::vector<PhonemeToken> transcript = {Tok("a")};
  const Matrix m = Reorder(p, transcript);
  ASSERT_EQ(m.cols, 1u);
  for (size_t t = 0; t < 3; ++t) EXPECT_DOUBLE_EQ(m(t, 0), p.values(t, 0));
}

TEST(Reorder, RepeatedPhonesRepeatColumns) {
  const Posteriogram p = SmallPosteriogram();
  const std::vector<PhonemeToken> transcript = {Tok("a"), Tok("b"), Tok("a")};
  const Matrix m = Reorder(p, transcript);
  ASSERT_EQ(m.cols, 3u);
  for (size_t t = 0; t < 3; ++t) {
    EXPECT_DOUBLE_EQ(m(t, 0), p.values(t, 0));
    EXPECT_DOUBLE_EQ(m(t, 1), p.values(t, 1));
    EXPECT_DOUBLE_EQ(m(t, 2), m(t, 0));
  }
}

TEST(Reorder, UnknownSymbol) {
  const std::vector<PhonemeToken> transcript = {Tok("a"), Tok("œ̃")};
  EXPECT_ERROR_CODE(Reorder(SmallPosteriogram(), transcript),
                    ErrorCode::kSymbolNotInModel);
}

TEST(Reorder, FloorsTinyProbabilities) {
  Posteriogram p = SmallPosteriogram();
  p.values(0, 2) = -1000.0;
  const std::vector<PhonemeToken> transcript = {Tok("c")};
  EXPECT_DOUBLE_EQ(Reorder(p, transcript)(0, 0), std::log(kProbabilityFloor));
}

TEST(Mas, WorkedExample) {
  const Matrix s = FromProbabilities({{0.9, 0.1}, {0.9, 0.1}, {0.1, 0.9}});
  const AlignmentPath path = MonotonicAlignmentSearch(s);
  EXPECT_EQ(path.durations, (std::vector<int>{2, 1}));
  EXPECT_NEAR(path.score, 3 * std::log(0.9), 1e-12);
  EXPECT_NEAR(ExhaustiveAlignment(s, 1).score, path.score, 1e-12);
}

TEST(Mas, SinglePhoneTakesAllFrames) {
  std::mt19937 rng(1);
  EXPECT_EQ(MonotonicAlignmentSearch(RandomScores(rng, 7, 1)).durations,
            std::vector<int>{7});
}

TEST(Mas, SquareMatrixIsDiagonal) {
  std::mt19937 rng(2);
  EXPECT_EQ(MonotonicAlignmentSearch(RandomScores(rng, 5, 5)).durations,
            std::vector<int>(5, 1));
}

TEST(Mas, TooFewFrames) {
  EXPECT_ERROR_CODE(MonotonicAlignmentSearch(Matrix(2, 3)), ErrorCode::kTooFewFrames);
}

TEST(Mas, TiesPreferTheLaterTransition) {
  EXPECT_EQ(MonotonicAlignmentSearch(Matrix(5, 2)).durations,
            (std::vector<int>{4, 1}));
  EXPECT_EQ(MonotonicAlignmentSearch(Matrix(6, 3)).durations,
            (std::vector<int>{4, 1, 1}));
}

TEST(Mas, MatchesExhaustiveEnumeration) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 1500; ++trial) {
    const size_t N = 1 + rng() % 6;
    const size_t T = N + rng() % (13 - N);
    const Matrix s = RandomScores(rng, T, N);
    const AlignmentPath path = MonotonicAlignmentSearch(s);
    const BestPath best = ExhaustiveAlignment(s, 1);
    ASSERT_NEAR(path.score, best.score, 1e-9) << "T=" << T << " N=" << N;
    ASSERT_EQ(path.durations, best.durations);
  }
}

TEST(Mas, CoverageInvariant) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t N = 1 + rng() % 20;
    const size_t T = N + rng() % 60;
    const AlignmentPath path = MonotonicAlignmentSearch(RandomScores(rng, T, N));
    ASSERT_EQ(path.durations.size(), N);
    int sum = 0;
    for (int d : path.durations) {
      ASSERT_GE(d, 1);
      sum += d;
    }
    ASSERT_EQ(sum, static_cast<int>(T));
  }
}

TEST(Mas, RowShiftLeavesPathUnchanged) {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t N = 1 + rng() % 6;
    const size_t T = N + rng() % 12;
    const Matrix s = RandomScores(rng, T, N);
    Matrix shifted = s;
    for (size_t t = 0; t < T; ++t) {
      const double c = shift(rng);
      for (size_t j = 0; j < N; ++j) shifted(t, j) += c;
    }
    ASSERT_EQ(MonotonicAlignmentSearch(s).durations,
              MonotonicAlignmentSearch(shifted).durations);
  }
}

TEST(Mas, RecoversSyntheticGroundTruth) {
  const std::vector<int> truth = {3, 5, 2, 7, 4};
  std::vector<int> class_per_frame;
  for (size_t j = 0; j < truth.size(); ++j) class_per_frame.insert(class_per_frame.end(), truth[j], static_cast<int>(j));
  const Matrix s = SyntheticLogProbs(class_per_frame, truth.size(), {8.0, 0.5, 3});
  EXPECT_EQ(MonotonicAlignmentSearch(s).durations, truth);
}

TEST(Dijkstra, SkipsTheWeakPhone) {
  const Matrix s = AdversarialScores(30, 3, 1, 9);
  const AlignmentPath dijkstra = DijkstraAlign(s);
  ASSERT_EQ(dijkstra.durations.size(), 3u);
  EXPECT_GT(dijkstra.durations[0], 0);
  EXPECT_EQ(dijkstra.durations[1], 0);
  EXPECT_GT(dijkstra.durations[2], 0);
  const BestPath brute = ExhaustiveAlignment(s, 0);
  EXPECT_NEAR(dijkstra.score, brute.score, 1e-9);
  EXPECT_EQ(brute.durations[1], 0);
  for (int d : MonotonicAlignmentSearch(s).durations) EXPECT_GE(d, 1);
}

TEST(Dijkstra, SingleCell) {
  const Matrix s(1, 1, -0.5);
  EXPECT_EQ(DijkstraAlign(s).durations, std::vector<int>{1});
  EXPECT_EQ(MonotonicAlignmentSearch(s).durations, std::vector<int>{1});
}

TEST(Dijkstra, MatchesExhaustiveSkippingPaths) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t N = 1 + rng() % 5;
    const size_t T = 1 + rng() % 10;
    const Matrix s = RandomScores(rng, T, N);
    const AlignmentPath path = DijkstraAlign(s);
    const BestPath best = ExhaustiveAlignment(s, 0);
    ASSERT_NEAR(path.score, best.score, 1e-9);
    int sum = 0;
    for (int d : path.durations) sum += d;
    ASSERT_EQ(sum, static_cast<int>(T));
  }
}

TEST(CompareSkipRate, AdversarialCorpus) {
  std::vector<Matrix> corpus;
  for (uint32_t i = 0; i < 20; ++i) corpus.push_back(AdversarialScores(40, 6, 1 + i % 4, i));
  const SkipRateReport report = CompareSkipRate(corpus);
  EXPECT_EQ(report.matrices, 20u);
  EXPECT_EQ(report.phones, 120u);
  EXPECT_EQ(report.mas_zero_rate, 0.0);
  EXPECT_GT(report.dijkstra_zero_rate, 0.0);
}

TEST(CompareSkipRate, EmptyCorpus) {
  EXPECT_ERROR_CODE(CompareSkipRate({}), ErrorCode::kEmptyCorpus);
}

TEST(CompareSkipRate, DijkstraNeverBelowMas) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Matrix> corpus;
    for (int i = 0; i < 5; ++i) {
      const size_t N = 1 + rng() % 6;
      corpus.push_back(RandomScores(rng, N + rng() % 10, N));
    }
    const SkipRateReport report = CompareSkipRate(corpus);
    EXPECT_EQ(report.mas_zero_rate, 0.0);
    EXPECT_GE(report.dijkstra_zero_rate, report.mas_zero_rate);
  }
}

TEST(DurationsToSeconds, Examples) {
  const std::vector<int> d = {2, 1};
  const auto s = DurationsToSeconds(d, 0.016);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0], 0.032);
  EXPECT_DOUBLE_EQ(s[1], 0.016);
  EXPECT_TRUE(DurationsToSeconds({}, 0.016).empty());
  EXPECT_ERROR_CODE(DurationsToSeconds(d, 0.0), ErrorCode::kInvalidArgument);
}

TEST(Posteriogram, RoundTripThroughFile) {
  TempDir dir("pgrm");
  const std::vector<int> frames = {0, 0, 1, 2, 2, 2};
  Posteriogram p;
  p.values = SyntheticLogProbs(frames, 3, {});
  p.hop_seconds = 0.016;
  p.class_symbols = {"a", "ɔ̃", ","};
  p.Validate();
  p.Write(dir.file("x.pgrm"));
  const Posteriogram q = Posteriogram::Read(dir.file("x.pgrm"));
  EXPECT_EQ(q.class_symbols, p.class_symbols);
  EXPECT_DOUBLE_EQ(q.hop_seconds, 0.016);
  ASSERT_EQ(q.values.rows, 6u);
  for (size_t i = 0; i < p.values.data.size(); ++i) {
    EXPECT_EQ(q.values.data[i], static_cast<double>(static_cast<float>(p.values.data[i])));
  }
}

TEST(Posteriogram, CorruptFiles) {
  LabeledMatrix m;
  m.values = Matrix(2, 1, 0.0);
  m.hop_seconds = 0.01;
  m.labels = {"a"};
  const std::string bytes = EncodeMatrixFile(kPosteriogramMagic, m);
  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_ERROR_CODE(DecodeMatrixFile(bad_magic, kPosteriogramMagic), ErrorCode::kFormatError);
  EXPECT_ERROR_CODE(DecodeMatrixFile(bytes.substr(0, bytes.size() - 1), kPosteriogramMagic),
                    ErrorCode::kFormatError);
  EXPECT_ERROR_CODE(DecodeMatrixFile(bytes + "x", kPosteriogramMagic), ErrorCode::kFormatError);
  EXPECT_ERROR_CODE(DecodeMatrixFile(bytes, kFeatureMagic), ErrorCode::kFormatError);
  EXPECT_EQ(DecodeMatrixFile(bytes, kPosteriogramMagic).values, m.values);
}

TEST(Posteriogram, ValidateRejectsUnnormalizedRows) {
  Posteriogram p = SmallPosteriogram();
  p.Validate();
  p.values(1, 1) += 0.5;
  EXPECT_ERROR_CODE(p.Validate(), ErrorCode::kFormatError);
  p = SmallPosteriogram();
  p.class_symbols.pop_back();
  EXPECT_ERROR_CODE(p.Validate(), ErrorCode::kFormatError);
}

TEST(Synthetic, RowsAreLogDistributions) {
  std::vector<int> frames(50);
  for (size_t i = 0; i < frames.size(); ++i) frames[i] = static_cast<int>(i % 7);
  const Matrix m = SyntheticLogProbs(frames, 7, {4.0, 2.0, 99});
  for (size_t t = 0; t < m.rows; ++t) {
    double sum = 0.0;
    for (size_t c = 0; c < m.cols; ++c) sum += std::exp(m(t, c));
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
  EXPECT_EQ(SyntheticLogProbs(frames, 7, {4.0, 2.0, 99}), m);
}

}  // namespace
}  // namespace toucan_prep
