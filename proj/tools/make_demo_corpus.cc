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

// Writes the synthetic demo corpus: 20 utterances with WAV audio rendered
// from known phone durations, matching posteriograms, a manifest and a
// loss file. Output is deterministic.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include "CLI11.hpp"
#include "toucan_prep/alignment.h"
#include "toucan_prep/audio.h"
#include "toucan_prep/config.h"
#include "toucan_prep/frontend.h"
#include "toucan_prep/manifest.h"

namespace {

namespace fs = std::filesystem;
using namespace toucan_prep;

constexpr int kSampleRate = 16000;
constexpr int kHop = 256;

const char* const kSentences[] = {
    "Bonjour, je m'appelle Marie.",
    "Le fils du roi est parti.",
    "Il ne veut plus manger.",
    "C'est le plus beau jour.",
    "Elle est plus intelligente que lui.",
    "Deux plus deux font quatre.",
    "Les adoptions sont rares, dit-il.",
    "Nous partons demain ; il fait beau.",
    "Le vent souffle - la mer est grise.",
    "Il a dit « oui » sans hésiter.",
    "Le couvent est ancien.",
    "Mon fils a dix ans.",
    "La maison est grande et belle.",
    "Je lis un livre le soir.",
    "Le bus arrive, vite!",
    "Elle chante une chanson douce.",
    "Les enfants jouent dans le jardin.",
    "Il pleut, mais nous sortons.",
    "Le chat dort sur le lit.",
    "Merci beaucoup, à bientôt.",
};

// Utterance whose dash is spoken through (a filled pause), so pause
// validation has something to remove.
constexpr int kFilledPauseUtterance = 8;

const double kLosses[] = {1.02, 1.05, 0.98, 2.40, 1.01, 0.99, 1.04,
                          1.03, 1.00, 1.06, 0.97, 1.08, 1.02, 1.85,
                          0.99, 1.01, 1.03, 1.00, 1.04, 0.98};

struct Rng {
  explicit Rng(uint32_t seed) : engine(seed) {}
  int Between(int lo, int hi) {
    return lo + static_cast<int>(engine() % static_cast<uint32_t>(hi - lo + 1));
  }
  double Noise() { return (static_cast<double>(engine()) / 4294967295.0) * 2.0 - 1.0; }
  std::mt19937 engine;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic demo corpus", "make-demo-corpus"};
  std::string out_dir = "demo_corpus";
  app.add_option("--output-dir", out_dir);
  CLI11_PARSE(app, argc, argv);

  try {
    const PipelineConfig config = PipelineConfig::Defaults();
    const FeatureTable table =
        FeatureTable::Load(config.paths.feature_table, config.paths.modifiers);
    const HomographDictionary dictionary =
        HomographDictionary::Load(config.paths.dictionary);
    const HomographResolver resolver(dictionary);
    const TagMap tag_map = TagMap::Load(config.paths.tag_map);
    const UnigramTagger tagger = UnigramTagger::Load(config.paths.unigram_lexicon);
    const LexiconG2pProvider g2p = LexiconG2pProvider::Load(config.paths.g2p_lexicon);

    const std::vector<std::string> classes = table.Symbols();
    std::map<std::string, int> class_of;
    for (size_t c = 0; c < classes.size(); ++c) class_of[classes[c]] = static_cast<int>(c);

    fs::create_directories(fs::path(out_dir) / "wavs");
    fs::create_directories(fs::path(out_dir) / "posteriograms");
    std::vector<UtteranceRecord> records;
    std::ofstream losses(fs::path(out_dir) / "losses.tsv", std::ios::trunc);

    for (size_t u = 0; u < std::size(kSentences); ++u) {
      char id[16];
      std::snprintf(id, sizeof(id), "demo_%04zu", u + 1);
      Rng rng(1000 + static_cast<uint32_t>(u));
      const FrontendResult front =
          PhonemizeText(kSentences[u], g2p, tagger, tag_map, resolver);
      const std::vector<PhonemeToken> tokens = TokenizeIpa(front.ipa, table);

      std::vector<int> durations;
      std::vector<int> truth;
      for (const PhonemeToken& token : tokens) {
        int d = token.is_silence ? rng.Between(14, 18)
                : table.IsVowel(token.symbol) ? rng.Between(6, 10)
                                              : rng.Between(3, 6);
        durations.push_back(d);
        truth.insert(truth.end(), d, class_of.at(token.symbol));
      }
      const size_t frames = truth.size();
      Audio audio;
      audio.sample_rate = kSampleRate;
      audio.samples.assign((frames - 1) * kHop + kHop / 2, 0.0);

      const double f0_start = 190.0 + 4.0 * static_cast<double>(u % 7);
      double phase = 0.0;
      size_t first = 0;
      for (size_t i = 0; i < tokens.size(); ++i) {
        const size_t begin = first * kHop;
        const size_t end = std::min(audio.samples.size(),
                                    (first + durations[i]) * kHop);
        first += durations[i];
        const PhonemeToken& token = tokens[i];
        const bool hum = token.is_silence && u == kFilledPauseUtterance &&
                         token.symbol == "-";
        for (size_t n = begin; n < end; ++n) {
          const double progress = static_cast<double>(n) / audio.samples.size();
          const double f0 = f0_start * (1.0 - 0.15 * progress);
          phase += 2.0 * std::numbers::pi * f0 / kSampleRate;
          double v = 0.0;
          if (token.is_silence && !hum) {
            v = 1e-4 * rng.Noise();
          } else if (hum || table.IsVoiced(token.symbol)) {
            const double amp = hum ? 0.2 : table.IsVowel(token.symbol) ? 0.3 : 0.15;
            v = amp * (std::sin(phase) + 0.5 * std::sin(2 * phase) +
                       0.25 * std::sin(3 * phase)) / 1.75;
          } else {
            v = 0.05 * rng.Noise();
          }
          audio.samples[n] = v;
        }
      }
      const std::string wav = "wavs/" + std::string(id) + ".wav";
      WriteWavPcm16((fs::path(out_dir) / wav).string(), audio);

      Posteriogram posteriogram;
      posteriogram.values = SyntheticLogProbs(
          truth, classes.size(), {5.0, 1.0, 5000 + static_cast<uint32_t>(u)});
      posteriogram.hop_seconds = static_cast<double>(kHop) / kSampleRate;
      posteriogram.class_symbols = classes;
      posteriogram.Write(
          (fs::path(out_dir) / "posteriograms" / (std::string(id) + ".pgrm")).string());

      UtteranceRecord record;
      record.utt_id = id;
      record.audio_path = wav;
      record.start = 0.0;
      record.end = audio.seconds();
      record.transcript = kSentences[u];
      records.push_back(std::move(record));
      losses << id << '\t' << kLosses[u] << '\n';
    }
    WriteManifest((fs::path(out_dir) / "manifest.jsonl").string(), records);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
