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
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "toucan_prep/audio.h"
#include "toucan_prep/corpus.h"
#include "toucan_prep/manifest.h"
#include "toucan_prep/phoneme.h"
#include "toucan_prep/prosody.h"
#include "toucan_prep/text.h"

namespace toucan_prep {
namespace {

using testing::Sine;
using testing::TempDir;

std::vector<UtteranceRecord> WithDurations(const std::vector<double>& seconds) {
  std::vector<UtteranceRecord> records;
  for (size_t i = 0; i < seconds.size(); ++i) {
    UtteranceRecord r;
    r.utt_id = "u" + std::to_string(i);
    r.audio_path = r.utt_id + ".wav";
    r.end = seconds[i];
    r.transcript = "t" + std::to_string(i);
    records.push_back(r);
  }
  return records;
}

std::vector<std::vector<std::string>> Sources(const std::vector<UtteranceRecord>& joints) {
  std::vector<std::vector<std::string>> out;
  for (const auto& j : joints) out.push_back(j.source_ids);
  return out;
}

TEST(SplitChapters, ParagraphGrouping) {
  const std::vector<SegmentSpan> spans = {{0.0, 1.0, "a"}, {1.0, 2.0, "b"}, {2.5, 3.0, "c"}};
  const auto records = SplitChapters("ch1", "ch1.wav", 4.0, spans, {1});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].transcript, "a b");
  EXPECT_DOUBLE_EQ(records[0].start, 0.0);
  EXPECT_DOUBLE_EQ(records[0].end, 2.0);
  EXPECT_EQ(records[1].transcript, "c");
  EXPECT_EQ(records[0].utt_id, "ch1_0000");
  EXPECT_EQ(records[1].utt_id, "ch1_0001");
}

TEST(SplitChapters, NoMarksGivesOneRecordPerSpan) {
  const std::vector<SegmentSpan> spans = {{0.0, 1.0, "a"}, {1.0, 2.0, "b"}, {2.5, 3.0, "c"}};
  EXPECT_EQ(SplitChapters("ch", "ch.wav", 4.0, spans, {}).size(), 3u);
}

TEST(SplitChapters, Errors) {
  const std::vector<SegmentSpan> overlap = {{0.0, 1.5, "a"}, {1.0, 2.0, "b"}};
  EXPECT_ERROR_CODE(SplitChapters("c", "c.wav", 4.0, overlap, {}), ErrorCode::kOverlappingSpans);
  const std::vector<SegmentSpan> outside = {{0.0, 5.0, "a"}};
  EXPECT_ERROR_CODE(SplitChapters("c", "c.wav", 4.0, outside, {}), ErrorCode::kSpanOutOfBounds);
}

TEST(MakeJoints, BoundaryCase) {
  const auto joints = MakeJointUtterances(WithDurations({6, 5, 4}));
  ASSERT_GE(joints.size(), 1u);
  EXPECT_EQ(joints[0].source_ids, (std::vector<std::string>{"u0", "u1"}));
  EXPECT_NEAR(joints[0].duration(), 11.22, 1e-12);
  EXPECT_TRUE(joints[0].is_joint);
  EXPECT_EQ(joints[0].utt_id, "u0+u1");
  EXPECT_EQ(joints[0].transcript, "t0 t1");
  // From #1: 5 + 0.22 + 4 = 9.22.
  EXPECT_EQ(Sources(joints), (std::vector<std::vector<std::string>>{{"u0", "u1"}, {"u1", "u2"}}));
}

TEST(MakeJoints, LongUtteranceStartsNothing) {
  EXPECT_TRUE(MakeJointUtterances(WithDurations({16})).empty());
  EXPECT_TRUE(MakeJointUtterances(WithDurations({16, 1})).size() == 0u);
}

TEST(MakeJoints, SevenShortUtterances) {
  const auto joints = MakeJointUtterances(WithDurations({1, 1, 1, 1, 1, 1, 1}));
  ASSERT_EQ(joints.size(), 6u);
  EXPECT_EQ(joints[0].source_ids.size(), 7u);
  EXPECT_NEAR(joints[0].duration(), 8.32, 1e-12);
}

// Every duration list over a small grid, checked against a direct
// statement of the rule.
TEST(MakeJoints, ExhaustiveSmallLists) {
  const std::vector<double> grid = {0.5, 2.0, 4.78, 5.0, 7.39, 10.0, 14.78, 15.0};
  size_t lists = 0;
  for (size_t len = 1; len <= 4; ++len) {
    std::vector<size_t> idx(len, 0);
    while (true) {
      std::vector<double> d;
      for (size_t i : idx) d.push_back(grid[i]);
      const auto records = WithDurations(d);
      std::vector<std::vector<std::string>> expected;
      for (const auto& group : oracle::ExpectedJoins(d)) {
        std::vector<std::string> ids;
        for (size_t i : group) ids.push_back(records[i].utt_id);
        expected.push_back(ids);
      }
      const auto joints = MakeJointUtterances(records);
      ASSERT_EQ(Sources(joints), expected);
      for (const auto& j : joints) {
        double sum = 0.0;
        for (const auto& id : j.source_ids) sum += d[std::stoul(id.substr(1))];
        EXPECT_LE(j.duration(), 15.0 + 1e-9);
        EXPECT_NEAR(j.duration(), sum + 0.22 * (j.source_ids.size() - 1), 1e-9);
        EXPECT_GE(j.source_ids.size(), 2u);
      }
      ++lists;
      size_t k = 0;
      while (k < len && ++idx[k] == grid.size()) idx[k++] = 0;
      if (k == len) break;
    }
  }
  EXPECT_EQ(lists, 8u + 64u + 512u + 4096u);
}

TEST(ConcatenateWithPauses, InsertsExactSilence) {
  for (int rate : {16000, 24000, 22050, 48000}) {
    Audio a{rate, std::vector<double>(100, 0.5)};
    Audio b{rate, std::vector<double>(50, -0.5)};
    const std::vector<Audio> parts = {a, b, a};
    const Audio out = ConcatenateWithPauses(parts, 0.22);
    const double gap_samples = 0.22 * rate;
    const size_t gap = (out.samples.size() - 250) / 2;
    EXPECT_LE(std::abs(static_cast<double>(gap) - gap_samples), 1.0) << rate;
    for (size_t i = 100; i < 100 + gap; ++i) ASSERT_EQ(out.samples[i], 0.0);
    EXPECT_EQ(out.samples[100 + gap], -0.5);
  }
  const std::vector<Audio> mixed = {Audio{16000, {0.1}}, Audio{24000, {0.1}}};
  EXPECT_ERROR_CODE(ConcatenateWithPauses(mixed, 0.22), ErrorCode::kSampleRateMismatch);
}

std::map<std::string, double> Losses(const std::vector<double>& values) {
  std::map<std::string, double> out;
  for (size_t i = 0; i < values.size(); ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "s%03zu", i);
    out[id] = values[i];
  }
  return out;
}

TEST(CleanByLoss, SingleOutlier) {
  std::vector<double> values(10, 1.0);
  values.push_back(3.0);
  const CleaningReport report = CleanByLoss(Losses(values));
  EXPECT_EQ(report.removed_ids, std::vector<std::string>{"s010"});
  EXPECT_EQ(report.kept_count, 10u);
  ASSERT_EQ(report.trace.size(), 1u);
  EXPECT_DOUBLE_EQ(report.trace[0].top_loss, 3.0);
  EXPECT_DOUBLE_EQ(report.trace[0].next_mean, 1.0);
}

TEST(CleanByLoss, EqualLossesRemoveNothing) {
  EXPECT_TRUE(CleanByLoss(Losses(std::vector<double>(25, 0.7))).removed_ids.empty());
}

// Executing the rule by hand on 2.0, 1.95, ..., 1.05 (step 0.05): every
// gap is 0.275 while 11 samples remain, so the top is removed until only
// the window of 10 is left.
TEST(CleanByLoss, StaircaseStopPoint) {
  std::vector<double> values;
  for (int i = 0; i < 20; ++i) values.push_back(2.0 - 0.05 * i);
  const CleaningReport report = CleanByLoss(Losses(values));
  EXPECT_EQ(report.removed_ids.size(), 10u);
  EXPECT_EQ(report.kept_count, 10u);
  for (const auto& step : report.trace) EXPECT_NEAR(step.top_loss - step.next_mean, 0.275, 1e-9);
}

TEST(CleanByLoss, TooFewSamples) {
  EXPECT_ERROR_CODE(CleanByLoss(Losses(std::vector<double>(10, 1.0))), ErrorCode::kTooFewSamples);
}

TEST(CleanByLoss, RemovalOrderAndThresholdMonotonicity) {
  std::mt19937 rng(99);
  std::exponential_distribution<double> tail(2.0);
  std::uniform_real_distribution<double> threshold(0.1, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> values(11 + rng() % 40);
    for (double& v : values) v = 1.0 + tail(rng);
    const auto losses = Losses(values);
    const CleaningReport base = CleanByLoss(losses);
    for (size_t i = 1; i < base.removed_ids.size(); ++i) {
      ASSERT_GE(losses.at(base.removed_ids[i - 1]), losses.at(base.removed_ids[i]));
    }
    CleaningConfig looser;
    looser.threshold = threshold(rng);
    const CleaningReport other = CleanByLoss(losses, looser);
    for (const auto& id : other.removed_ids) {
      ASSERT_NE(std::find(base.removed_ids.begin(), base.removed_ids.end(), id),
                base.removed_ids.end());
    }
  }
}

TEST(LoadLosses, ParsesAndRejects) {
  TempDir dir("losses");
  testing::WriteText(dir.file("ok.tsv"), "a\t1.5\nb\t0.25\n");
  EXPECT_EQ(LoadLosses(dir.file("ok.tsv")), (std::map<std::string, double>{{"a", 1.5}, {"b", 0.25}}));
  testing::WriteText(dir.file("bad.tsv"), "a\tx\n");
  EXPECT_ERROR_CODE(LoadLosses(dir.file("bad.tsv")), ErrorCode::kParseError);
}

// Windowed frame RMS computed directly, then the documented hysteresis.
std::vector<uint8_t> OracleVad(const std::vector<double>& x) {
  const long n_fft = 1024, hop = 256, len = static_cast<long>(x.size());
  const size_t frames = 1 + x.size() / hop;
  std::vector<double> db(frames);
  for (size_t t = 0; t < frames; ++t) {
    double sum = 0.0;
    for (long n = 0; n < n_fft; ++n) {
      long i = static_cast<long>(t) * hop + n - n_fft / 2;
      while (i < 0 || i >= len) i = i < 0 ? -i : 2 * (len - 1) - i;
      const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / n_fft);
      sum += (w * x[i]) * (w * x[i]);
    }
    db[t] = 20.0 * std::log10(std::max(1e-10, std::sqrt(sum / n_fft)));
  }
  auto sorted = db;
  std::sort(sorted.begin(), sorted.end());
  const double median = frames % 2 ? sorted[frames / 2]
                                   : 0.5 * (sorted[frames / 2 - 1] + sorted[frames / 2]);
  const double enter = std::max(-55.0, median - 12.0);
  const double exit = std::max(-60.0, median - 18.0);
  std::vector<uint8_t> labels(frames);
  bool speech = false;
  for (size_t t = 0; t < frames; ++t) {
    speech = speech ? db[t] >= exit : db[t] >= enter;
    labels[t] = speech;
  }
  return labels;
}

TEST(EnergyVad, SilenceAndTone) {
  const auto silence = EnergyVad(Audio{16000, std::vector<double>(16000, 0.0)}, {});
  EXPECT_TRUE(std::all_of(silence.begin(), silence.end(), [](uint8_t v) { return v == 0; }));
  const auto tone = EnergyVad(Audio{16000, Sine(440.0, 1.0, 16000, 1.0)}, {});
  EXPECT_TRUE(std::all_of(tone.begin(), tone.end(), [](uint8_t v) { return v == 1; }));
}

TEST(EnergyVad, ToneSilenceToneFlipsAtBoundaries) {
  auto x = Sine(300.0, 0.5, 16000, 0.5);
  x.resize(16000, 0.0);
  const auto tail = Sine(300.0, 0.5, 16000, 0.5);
  x.insert(x.end(), tail.begin(), tail.end());
  const auto labels = EnergyVad(Audio{16000, x}, {});
  EXPECT_EQ(labels, OracleVad(x));
  std::vector<size_t> flips;
  for (size_t t = 1; t < labels.size(); ++t) {
    if (labels[t] != labels[t - 1]) flips.push_back(t);
  }
  ASSERT_EQ(flips.size(), 2u);
  EXPECT_LE(std::abs(static_cast<double>(flips[0]) - 8000.0 / 256.0), 2.0);
  EXPECT_LE(std::abs(static_cast<double>(flips[1]) - 16000.0 / 256.0), 2.0);
}

TEST(EnergyVad, MatchesOracleOnNoiseBursts) {
  std::mt19937 rng(4);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x;
    for (int seg = 0; seg < 6; ++seg) {
      const double level = seg % 2 ? 0.3 : 0.002 * trial;
      const int n = 2000 + static_cast<int>(rng() % 6000);
      for (int i = 0; i < n; ++i) x.push_back(level * normal(rng));
    }
    EXPECT_EQ(EnergyVad(Audio{16000, x}, {}), OracleVad(x)) << trial;
  }
}

TEST(LoadVadLabels, Parses) {
  TempDir dir("vad");
  testing::WriteText(dir.file("v.tsv"), "u1\t0011\n");
  EXPECT_EQ(LoadVadLabels(dir.file("v.tsv")).at("u1"), (std::vector<uint8_t>{0, 0, 1, 1}));
  testing::WriteText(dir.file("bad.tsv"), "u1\t0021\n");
  EXPECT_ERROR_CODE(LoadVadLabels(dir.file("bad.tsv")), ErrorCode::kParseError);
}

struct PauseCase {
  std::string transcript = "a, b";
  std::vector<PhonemeToken> tokens = TokenizeIpa("a, b", FeatureTable::Default());
};

TEST(ValidatePauseMarkers, SilentCommaIsKept) {
  PauseCase c;
  const std::vector<int> durations = {10, 20, 10};
  std::vector<uint8_t> vad(40, 1);
  std::fill(vad.begin() + 10, vad.begin() + 30, 0);
  const auto result = ValidatePauseMarkers(c.transcript, durations, c.tokens, vad);
  EXPECT_EQ(result.transcript, "a, b");
  ASSERT_EQ(result.decisions.size(), 1u);
  EXPECT_TRUE(result.decisions[0].kept);
  EXPECT_EQ(result.decisions[0].frames, 20);
  EXPECT_DOUBLE_EQ(result.decisions[0].nonspeech_fraction, 1.0);
}

TEST(ValidatePauseMarkers, ZeroFrameCommaIsRemoved) {
  PauseCase c;
  const std::vector<int> durations = {10, 0, 10};
  const std::vector<uint8_t> vad(20, 0);
  const auto result = ValidatePauseMarkers(c.transcript, durations, c.tokens, vad);
  EXPECT_EQ(result.transcript, "a b");
  EXPECT_FALSE(result.decisions[0].kept);
}

TEST(ValidatePauseMarkers, FilledPauseIsRemoved) {
  PauseCase c;
  const std::vector<int> durations = {10, 20, 10};
  std::vector<uint8_t> vad(40, 1);
  // 9 of 20 frames silent: below half.
  std::fill(vad.begin() + 10, vad.begin() + 19, 0);
  EXPECT_EQ(ValidatePauseMarkers(c.transcript, durations, c.tokens, vad).transcript, "a b");
  // Exactly half silent: kept.
  vad[19] = 0;
  EXPECT_EQ(ValidatePauseMarkers(c.transcript, durations, c.tokens, vad).transcript, "a, b");
}

TEST(ValidatePauseMarkers, ShortSilenceIsRemoved) {
  PauseCase c;
  const std::vector<int> durations = {10, 4, 10};
  const std::vector<uint8_t> vad(24, 0);
  EXPECT_EQ(ValidatePauseMarkers(c.transcript, durations, c.tokens, vad).transcript, "a b");
  EXPECT_EQ(ValidatePauseMarkers(c.transcript, durations, c.tokens, vad, 4).transcript, "a, b");
}

TEST(ValidatePauseMarkers, LengthMismatch) {
  PauseCase c;
  const std::vector<uint8_t> vad(40, 0);
  const std::vector<int> two = {10, 30};
  EXPECT_ERROR_CODE(ValidatePauseMarkers(c.transcript, two, c.tokens, vad),
                    ErrorCode::kLengthMismatch);
  const std::vector<int> three = {10, 20, 10};
  EXPECT_ERROR_CODE(ValidatePauseMarkers("a, b; c", three, c.tokens, vad),
                    ErrorCode::kLengthMismatch);
  const std::vector<uint8_t> short_vad(39, 0);
  EXPECT_ERROR_CODE(ValidatePauseMarkers(c.transcript, three, c.tokens, short_vad),
                    ErrorCode::kLengthMismatch);
}

TEST(ValidatePauseMarkers, DeletesOnlyMarkers) {
  const auto& table = FeatureTable::Default();
  const std::vector<std::string> words = {"bon", "jour", "oui", "non", "peut-être"};
  const std::vector<std::string> markers = {",", ";", "-", "\""};
  std::mt19937 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text, ipa;
    const int n = 1 + rng() % 6;
    for (int i = 0; i < n; ++i) {
      if (!text.empty()) text += ' ';
      const std::string& w = words[rng() % words.size()];
      text += w;
      ipa += (ipa.empty() ? "" : " ") + std::string("ba");
      if (rng() % 2) {
        const std::string& m = markers[rng() % markers.size()];
        text += " " + m;
        ipa += " " + m;
      }
    }
    const auto tokens = TokenizeIpa(ipa, table);
    std::vector<int> durations;
    std::vector<uint8_t> vad;
    for (size_t i = 0; i < tokens.size(); ++i) {
      durations.push_back(rng() % 12);
      for (int f = 0; f < durations.back(); ++f) vad.push_back(rng() % 2);
    }
    const auto result = ValidatePauseMarkers(text, durations, tokens, vad);
    // Output is the input with some marker characters deleted.
    size_t j = 0;
    size_t deleted = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      if (j < result.transcript.size() && result.transcript[j] == text[i]) {
        ++j;
      } else {
        ASSERT_TRUE(IsPauseMarkerAt(text, i)) << text << " -> " << result.transcript;
        ++deleted;
      }
    }
    ASSERT_EQ(j, result.transcript.size());
    size_t dropped = 0;
    for (const auto& d : result.decisions) dropped += !d.kept;
    ASSERT_EQ(deleted, dropped);
  }
}

TEST(OutputChain, RepeatSamples) {
  const std::vector<double> x = {0.25, -0.5};
  EXPECT_EQ(RepeatSamples(x), (std::vector<double>{0.25, 0.25, -0.5, -0.5}));
}

TEST(OutputChain, UnityDcGain) {
  const auto pcm = FinalizeOutput(std::vector<double>(2400, 0.5));
  ASSERT_EQ(pcm.size(), 4800u);
  EXPECT_EQ(pcm.back(), static_cast<int16_t>(std::lround(0.5 * 32767)));
}

double RmsDb(const std::vector<double>& x, size_t skip) {
  double sum = 0.0;
  for (size_t i = skip; i < x.size(); ++i) sum += x[i] * x[i];
  return 10.0 * std::log10(sum / (x.size() - skip));
}

TEST(OutputChain, SixKilohertzAttenuation) {
  const auto tone = Sine(6000.0, 0.5, 48000, 1.0);
  const auto filtered = ApplyLowPass(tone, DesignLowPass(12000.0, 48000.0));
  const double measured = RmsDb(filtered, 4800) - RmsDb(tone, 4800);
  const double closed_form = 20.0 * std::log10(1.0 / std::sqrt(1.0 + 0.25));
  EXPECT_NEAR(measured, closed_form, 0.1);
}

TEST(OutputChain, LengthAndRange) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(rng() % 5000);
    for (double& v : x) v = u(rng);
    const auto pcm = FinalizeOutput(x);
    ASSERT_EQ(pcm.size(), 2 * x.size());
    for (int16_t v : pcm) ASSERT_LE(std::abs(static_cast<int>(v)), 32767);
  }
  EXPECT_EQ(ToPcm16(1.0), 32767);
  EXPECT_EQ(ToPcm16(-1.0), -32767);
  EXPECT_EQ(ToPcm16(2.0), 32767);
  EXPECT_EQ(ToPcm16(-2.0), -32767);
  EXPECT_EQ(ToPcm16(0.5 / 32767), 1);
  EXPECT_EQ(ToPcm16(-0.5 / 32767), -1);
}

TEST(Wav, Pcm16RoundTrip) {
  TempDir dir("wav");
  const std::vector<int16_t> pcm = {0, 1, -1, 32767, -32768, 1234};
  WriteWavPcm16(dir.file("a.wav"), pcm, 48000);
  const Audio a = ReadWav(dir.file("a.wav"));
  EXPECT_EQ(a.sample_rate, 48000);
  ASSERT_EQ(a.samples.size(), pcm.size());
  for (size_t i = 0; i < pcm.size(); ++i) EXPECT_EQ(a.samples[i], pcm[i] / 32768.0);
  EXPECT_EQ(testing::ReadText(dir.file("a.wav")), EncodeWavPcm16(pcm, 48000));
  EXPECT_EQ(testing::ReadText(dir.file("a.wav")).size(), 44u + 2 * pcm.size());
}

TEST(Wav, FloatRoundTripAndErrors) {
  TempDir dir("wavf");
  WriteWavFloat32(dir.file("f.wav"), Audio{16000, {0.25, -0.5, 0.125}});
  EXPECT_EQ(ReadWav(dir.file("f.wav")).samples, (std::vector<double>{0.25, -0.5, 0.125}));
  EXPECT_ERROR_CODE(DecodeWav("RIFF....WAVEjunk"), ErrorCode::kFormatError);
  EXPECT_ERROR_CODE(DecodeWav("hello"), ErrorCode::kFormatError);
  EXPECT_ERROR_CODE(ReadWav(dir.file("missing.wav")), ErrorCode::kIoError);
}

UtteranceRecord FullRecord() {
  UtteranceRecord r;
  r.utt_id = "b";
  r.audio_path = "wavs/b.wav";
  r.start = 0.5;
  r.end = 2.25;
  r.transcript = "Le fils, \"oui\".";
  r.phonemes = "lə fis, \"wi\".";
  r.durations = std::vector<int>{1, 2, 3};
  r.alignment_score = -12.5;
  r.pitch = std::vector<double>{1.0, 0.0};
  r.energy = std::vector<double>{0.5, 1.5};
  r.loudness_lufs = -30.0;
  return r;
}

TEST(Manifest, FieldOrderAndRoundTrip) {
  const UtteranceRecord r = FullRecord();
  const std::string line = RecordToJsonLine(r);
  EXPECT_EQ(line,
            R"({"utt_id":"b","audio_path":"wavs/b.wav","start":0.5,"end":2.25,)"
            R"("transcript":"Le fils, \"oui\".","phonemes":"lə fis, \"wi\".",)"
            R"("durations":[1,2,3],"alignment_score":-12.5,"pitch":[1.0,0.0],)"
            R"("energy":[0.5,1.5],"loudness_lufs":-30.0,"is_joint":false,)"
            R"("source_ids":[],"enhanced":false})");
  EXPECT_EQ(RecordToJsonLine(RecordFromJsonLine(line)), line);
}

TEST(Manifest, SortedByIdAndDuplicatesRejected) {
  UtteranceRecord a = FullRecord();
  a.utt_id = "a";
  const std::string text = SerializeManifest({FullRecord(), a});
  EXPECT_EQ(text.substr(0, 13), R"({"utt_id":"a")");
  const auto parsed = ParseManifest(text, "m");
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(SerializeManifest(parsed), text);
  EXPECT_ERROR_CODE(SerializeManifest({a, a}), ErrorCode::kInvalidArgument);
}

TEST(Manifest, Validation) {
  EXPECT_ERROR_CODE(RecordFromJsonLine(R"({"utt_id":"x","audio_path":"a","start":1,"end":1,"transcript":""})"),
                    ErrorCode::kParseError);
  EXPECT_ERROR_CODE(RecordFromJsonLine(R"({"utt_id":"x","audio_path":"a","start":0,"end":1,"transcript":"","is_joint":true,"source_ids":["y"]})"),
                    ErrorCode::kParseError);
  EXPECT_ERROR_CODE(RecordFromJsonLine("{oops"), ErrorCode::kParseError);
}

}  // namespace
}  // namespace toucan_prep
