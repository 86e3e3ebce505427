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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "toucan_prep/alignment.h"
#include "toucan_prep/audio.h"
#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"
#include "toucan_prep/frontend.h"
#include "toucan_prep/g2p_provider.h"
#include "toucan_prep/homograph.h"
#include "toucan_prep/loudness.h"
#include "toucan_prep/manifest.h"
#include "toucan_prep/phoneme.h"
#include "toucan_prep/pos_tagging.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kReferenceHomographAccuracy = 0.84;

std::string ReadInput(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << bytes;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

void RequireOption(const std::string& value, const std::string& name) {
  if (value.empty()) {
    throw Error(ErrorCode::kConfigError, "missing required option " + name);
  }
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. If several items
// fail, the error of the lowest index is rethrown so failures are
// reproducible regardless of scheduling.
template <typename Fn>
void ParallelFor(size_t n, int workers, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t threads =
      std::min(n, static_cast<size_t>(std::max(1, workers)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

fs::path DirOf(const std::string& file) {
  const fs::path parent = fs::path(file).parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

// Audio paths in a manifest are relative to the manifest's directory.
std::string AbsoluteAudio(const fs::path& manifest_dir, const std::string& path) {
  const fs::path p(path);
  return (p.is_absolute() ? p : manifest_dir / p).lexically_normal().string();
}

std::string RelativeAudio(const fs::path& manifest_dir, const std::string& path) {
  return fs::absolute(path)
      .lexically_normal()
      .lexically_relative(fs::absolute(manifest_dir).lexically_normal())
      .generic_string();
}

void RebaseAudioPaths(std::vector<UtteranceRecord>& records,
                      const fs::path& from, const fs::path& to) {
  for (UtteranceRecord& r : records) {
    if (r.audio_path.empty()) continue;
    r.audio_path = RelativeAudio(to, AbsoluteAudio(from, r.audio_path));
  }
}

Audio LoadSpan(const fs::path& manifest_dir, const UtteranceRecord& record) {
  Audio full = ReadWav(AbsoluteAudio(manifest_dir, record.audio_path));
  const auto first = static_cast<size_t>(std::llround(record.start * full.sample_rate));
  const auto last = std::min(
      full.samples.size(),
      static_cast<size_t>(std::llround(record.end * full.sample_rate)));
  if (first >= last) {
    throw Error(ErrorCode::kSpanOutOfBounds,
                record.utt_id + ": span outside " + record.audio_path);
  }
  Audio out;
  out.sample_rate = full.sample_rate;
  out.samples.assign(full.samples.begin() + first, full.samples.begin() + last);
  return out;
}

std::vector<UtteranceRecord> SortedManifest(const std::string& path) {
  std::vector<UtteranceRecord> records = ReadManifest(path);
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.utt_id < b.utt_id; });
  return records;
}

struct Frontend {
  explicit Frontend(const PipelineConfig& config)
      : table(FeatureTable::Load(config.paths.feature_table,
                                 config.paths.modifiers)),
        dictionary(HomographDictionary::Load(config.paths.dictionary)),
        tag_map(TagMap::Load(config.paths.tag_map)) {
    PlusRuleConfig plus;
    plus.LoadConsonantExceptions(config.paths.consonant_exceptions);
    resolver = std::make_unique<HomographResolver>(dictionary, std::move(plus));
    if (config.g2p_provider == "command") {
      g2p = std::make_unique<CommandG2pProvider>(config.g2p_command);
    } else {
      g2p = std::make_unique<LexiconG2pProvider>(
          LexiconG2pProvider::Load(config.paths.g2p_lexicon));
    }
    if (config.tagger == "file") {
      tagger = std::make_unique<FileTagProvider>(
          FileTagProvider::Load(config.tag_file));
    } else {
      tagger = std::make_unique<UnigramTagger>(
          UnigramTagger::Load(config.paths.unigram_lexicon));
    }
  }

  FeatureTable table;
  HomographDictionary dictionary;
  TagMap tag_map;
  std::unique_ptr<HomographResolver> resolver;
  std::unique_ptr<G2pProvider> g2p;
  std::unique_ptr<PosProvider> tagger;
};

std::string BitString(const ArticulatoryVector& vector) {
  std::string out;
  out.reserve(vector.values.size());
  for (uint8_t v : vector.values) out.push_back(v ? '1' : '0');
  return out;
}

Json HomographsJson(const std::vector<HomographRecord>& records) {
  Json out = Json::array();
  for (const HomographRecord& r : records) {
    Json item;
    item["surface"] = r.surface;
    item["tag"] = r.extended_tag;
    item["ipa"] = r.resolution.pronunciation;
    item["method"] = ResolutionMethodName(r.resolution.method);
    if (r.resolution.plus_rule != PlusRule::kNone) {
      item["plus_rule"] = std::string(1, static_cast<char>(r.resolution.plus_rule));
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

void Diagnose(std::string_view level, std::string_view code,
              std::string_view message) {
  Json line;
  line["level"] = level;
  line["code"] = code;
  line["message"] = message;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  std::cerr << line.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
}

void RunPhonemize(const PipelineConfig& config, const PhonemizeOptions& options) {
  const Frontend frontend(config);
  if (!options.manifest.empty()) {
    RequireOption(options.output, "--output");
    std::vector<UtteranceRecord> records = SortedManifest(options.manifest);
    ParallelFor(records.size(), config.parallelism, [&](size_t i) {
      const FrontendResult result =
          PhonemizeText(records[i].transcript, *frontend.g2p, *frontend.tagger,
                        frontend.tag_map, *frontend.resolver);
      // Validate against the feature table before anything downstream.
      TokenizeIpa(result.ipa, frontend.table);
      records[i].transcript = result.cleaned_text;
      records[i].phonemes = result.ipa;
    });
    RebaseAudioPaths(records, DirOf(options.manifest), DirOf(options.output));
    WriteManifest(options.output, std::move(records));
    return;
  }
  const std::string input = ReadInput(options.input);
  std::vector<std::string> lines;
  std::istringstream stream(input);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  std::vector<std::string> outputs(lines.size());
  ParallelFor(lines.size(), config.parallelism, [&](size_t i) {
    const FrontendResult result =
        PhonemizeText(lines[i], *frontend.g2p, *frontend.tagger,
                      frontend.tag_map, *frontend.resolver);
    const std::vector<PhonemeToken> tokens =
        TokenizeIpa(result.ipa, frontend.table);
    if (!options.vectors) {
      outputs[i] = result.ipa + '\n';
      return;
    }
    Json j;
    j["text"] = result.cleaned_text;
    j["ipa"] = result.ipa;
    j["homographs"] = HomographsJson(result.homographs);
    Json items = Json::array();
    for (const PhonemeToken& token : tokens) {
      Json t;
      t["symbol"] = token.symbol;
      t["word"] = token.word_index;
      t["vector"] = BitString(Vectorize(token, frontend.table));
      items.push_back(std::move(t));
    }
    j["tokens"] = std::move(items);
    outputs[i] = j.dump() + '\n';
  });
  std::string out;
  for (const std::string& o : outputs) out += o;
  WriteOutput(options.output, out);
}

void RunAlign(const PipelineConfig& config, const AlignOptions& options) {
  RequireOption(options.manifest, "--manifest");
  RequireOption(options.posteriograms, "--posteriograms");
  RequireOption(options.output, "--output");
  if (options.algo != "mas" && options.algo != "dijkstra") {
    throw Error(ErrorCode::kConfigError, "--algo must be mas or dijkstra");
  }
  const FeatureTable table =
      FeatureTable::Load(config.paths.feature_table, config.paths.modifiers);
  std::vector<UtteranceRecord> records = SortedManifest(options.manifest);
  std::vector<Matrix> scores(records.size());
  ParallelFor(records.size(), config.parallelism, [&](size_t i) {
    UtteranceRecord& record = records[i];
    if (!record.phonemes) {
      throw Error(ErrorCode::kInvalidArgument,
                  record.utt_id + ": no phonemes; run phonemize first");
    }
    const std::vector<PhonemeToken> tokens = TokenizeIpa(*record.phonemes, table);
    const Posteriogram posteriogram = Posteriogram::Read(
        (fs::path(options.posteriograms) / (record.utt_id + ".pgrm")).string());
    scores[i] = Reorder(posteriogram, tokens);
    const AlignmentPath path = options.algo == "mas"
                                   ? MonotonicAlignmentSearch(scores[i])
                                   : DijkstraAlign(scores[i]);
    record.durations = path.durations;
    record.alignment_score = path.score;
  });
  Json report;
  report["algo"] = options.algo;
  report["utterances"] = records.size();
  if (!records.empty()) {
    const SkipRateReport skip = CompareSkipRate(scores);
    report["phones"] = skip.phones;
    report["mas_zero_rate"] = skip.mas_zero_rate;
    report["dijkstra_zero_rate"] = skip.dijkstra_zero_rate;
  }
  RebaseAudioPaths(records, DirOf(options.manifest), DirOf(options.output));
  WriteManifest(options.output, std::move(records));
  WriteOutput(options.report, report.dump(2) + "\n");
}

void RunProsody(const PipelineConfig& config, const ProsodyOptions& options) {
  RequireOption(options.manifest, "--manifest");
  RequireOption(options.output, "--output");
  const FeatureTable table =
      FeatureTable::Load(config.paths.feature_table, config.paths.modifiers);
  if (!options.features_dir.empty()) fs::create_directories(options.features_dir);
  const fs::path manifest_dir = DirOf(options.manifest);
  std::vector<UtteranceRecord> records = SortedManifest(options.manifest);
  ParallelFor(records.size(), config.parallelism, [&](size_t i) {
    UtteranceRecord& record = records[i];
    if (!record.phonemes || !record.durations) {
      throw Error(ErrorCode::kInvalidArgument,
                  record.utt_id + ": needs phonemes and durations");
    }
    const std::vector<PhonemeToken> tokens = TokenizeIpa(*record.phonemes, table);
    const Audio audio = LoadSpan(manifest_dir, record);
    if (!options.features_dir.empty()) {
      LabeledMatrix features{MelSpectrogram(audio, config.mel),
                             config.mel.hop_seconds(), {}};
      for (int m = 0; m < config.mel.n_mels; ++m) {
        features.labels.push_back("mel" + std::to_string(m));
      }
      WriteMatrixFile(
          (fs::path(options.features_dir) / (record.utt_id + ".feat")).string(),
          kFeatureMagic, features);
    }
    const FrameTrack pitch = ExtractPitch(audio, config.mel, config.pitch);
    const FrameTrack energy = ExtractEnergy(audio, config.mel);
    PhoneProsody prosody;
    try {
      prosody = ComputePhoneProsody(pitch, energy, *record.durations, tokens,
                                    table, config.normalization);
    } catch (const Error& e) {
      throw Error(e.code(), record.utt_id + ": " + e.what());
    }
    record.pitch = std::move(prosody.pitch);
    record.energy = std::move(prosody.energy);
  });
  RebaseAudioPaths(records, manifest_dir, DirOf(options.output));
  WriteManifest(options.output, std::move(records));
}

void RunPrep(const PipelineConfig& config, const PrepOptions& options) {
  RequireOption(options.manifest, "--manifest");
  RequireOption(options.output_dir, "--output-dir");
  const fs::path in_dir = DirOf(options.manifest);
  const fs::path out_dir(options.output_dir);
  fs::create_directories(out_dir / "audio");
  std::vector<UtteranceRecord> records = SortedManifest(options.manifest);
  Json report;
  report["input_utterances"] = records.size();

  // Audio of each record, relative to the output directory once rewritten.
  std::vector<std::string> audio_base(records.size(), in_dir.string());

  if (!options.losses.empty()) {
    const CleaningReport cleaning =
        CleanByLoss(LoadLosses(options.losses), config.cleaning);
    Json c;
    c["removed_ids"] = cleaning.removed_ids;
    c["kept_count"] = cleaning.kept_count;
    Json trace = Json::array();
    for (const auto& step : cleaning.trace) {
      trace.push_back({{"top_id", step.top_id},
                       {"top_loss", step.top_loss},
                       {"next_mean", step.next_mean}});
    }
    c["trace"] = std::move(trace);
    report["cleaning"] = std::move(c);
    const std::set<std::string> removed(cleaning.removed_ids.begin(),
                                        cleaning.removed_ids.end());
    std::erase_if(records, [&](const UtteranceRecord& r) {
      return removed.contains(r.utt_id);
    });
  }

  if (options.validate_pauses) {
    const FeatureTable table =
        FeatureTable::Load(config.paths.feature_table, config.paths.modifiers);
    std::map<std::string, std::vector<uint8_t>> external;
    if (!options.vad_labels.empty()) external = LoadVadLabels(options.vad_labels);
    std::vector<Json> decisions(records.size());
    ParallelFor(records.size(), config.parallelism, [&](size_t i) {
      UtteranceRecord& record = records[i];
      if (!record.phonemes || !record.durations) {
        throw Error(ErrorCode::kInvalidArgument,
                    record.utt_id + ": pause validation needs phonemes and durations");
      }
      const std::vector<PhonemeToken> tokens = TokenizeIpa(*record.phonemes, table);
      std::vector<uint8_t> labels;
      if (!external.empty()) {
        auto it = external.find(record.utt_id);
        if (it == external.end()) {
          throw Error(ErrorCode::kLengthMismatch,
                      record.utt_id + ": no VAD labels");
        }
        labels = it->second;
      } else {
        labels = EnergyVad(LoadSpan(in_dir, record), config.mel, config.vad);
      }
      PauseValidation result;
      try {
        result = ValidatePauseMarkers(record.transcript, *record.durations,
                                      tokens, labels, config.min_silence_frames);
      } catch (const Error& e) {
        throw Error(e.code(), record.utt_id + ": " + e.what());
      }
      Json items = Json::array();
      for (const PauseDecision& d : result.decisions) {
        items.push_back({{"offset", d.byte_offset},
                         {"marker", d.marker},
                         {"frames", d.frames},
                         {"nonspeech_fraction", d.nonspeech_fraction},
                         {"kept", d.kept}});
      }
      decisions[i] = {{"utt_id", record.utt_id}, {"markers", std::move(items)}};
      record.transcript = std::move(result.transcript);
    });
    report["pauses"] = decisions;
  }

  if (options.loudness) {
    double target = config.training_loudness;
    if (!options.speaker.empty()) {
      auto it = config.speaker_loudness.find(options.speaker);
      if (it == config.speaker_loudness.end()) {
        throw Error(ErrorCode::kConfigError,
                    "no loudness target for speaker " + options.speaker);
      }
      target = it->second;
    }
    NormalizeOptions normalize;
    normalize.target = target;
    normalize.measure = config.loudness_measure;
    normalize.peak_safe = config.peak_safe;
    std::vector<Json> levels(records.size());
    ParallelFor(records.size(), config.parallelism, [&](size_t i) {
      UtteranceRecord& record = records[i];
      const Audio audio = LoadSpan(in_dir, record);
      const NormalizeResult result =
          NormalizeLoudness(audio.samples, audio.sample_rate, normalize);
      if (result.peak_warning) {
        Diagnose("warning", "peak_over_full_scale",
                 record.utt_id + ": peak " + std::to_string(result.peak) +
                     " after normalization");
      }
      const std::string file = "audio/" + record.utt_id + ".wav";
      WriteWavPcm16((out_dir / file).string(), Audio{audio.sample_rate, result.samples});
      record.audio_path = file;
      record.start = 0.0;
      record.end = static_cast<double>(result.samples.size()) / audio.sample_rate;
      record.loudness_lufs = result.output_level;
      audio_base[i] = out_dir.string();
      levels[i] = {{"utt_id", record.utt_id},
                   {"input", result.input_level},
                   {"output", result.output_level},
                   {"gain_db", result.gain_db}};
    });
    report["loudness"] = {{"target", target}, {"utterances", levels}};
  }

  for (size_t i = 0; i < records.size(); ++i) {
    if (audio_base[i] != out_dir.string()) {
      records[i].audio_path =
          RelativeAudio(out_dir, AbsoluteAudio(in_dir, records[i].audio_path));
    }
  }

  if (options.join) {
    std::vector<UtteranceRecord> joints = MakeJointUtterances(records, config.join);
    std::map<std::string, const UtteranceRecord*> by_id;
    for (const UtteranceRecord& r : records) by_id[r.utt_id] = &r;
    ParallelFor(joints.size(), config.parallelism, [&](size_t i) {
      UtteranceRecord& joint = joints[i];
      std::vector<Audio> parts;
      for (const std::string& id : joint.source_ids) {
        parts.push_back(LoadSpan(out_dir, *by_id.at(id)));
      }
      const Audio audio = ConcatenateWithPauses(parts, config.join.pause_seconds);
      const std::string file = "audio/" + joint.utt_id + ".wav";
      WriteWavPcm16((out_dir / file).string(), audio);
      joint.audio_path = file;
      joint.end = audio.seconds();
      if (options.loudness) {
        joint.loudness_lufs = MeasureLoudness(audio.samples, audio.sample_rate);
      }
    });
    report["joints"] = joints.size();
    records.insert(records.end(), std::make_move_iterator(joints.begin()),
                   std::make_move_iterator(joints.end()));
  }
  report["output_utterances"] = records.size();
  WriteManifest((out_dir / "manifest.jsonl").string(), std::move(records));
  WriteOutput((out_dir / "report.json").string(), report.dump(2) + "\n");
}

void RunEvalHomographs(const PipelineConfig& config, const EvalOptions& options) {
  const std::string gold_path =
      options.gold.empty()
          ? std::string(TOUCAN_PREP_DATA_DIR) + "/gold/homograph_gold.tsv"
          : options.gold;
  const std::vector<GoldItem> gold = LoadGoldSet(gold_path);
  const HomographDictionary dictionary =
      HomographDictionary::Load(config.paths.dictionary);
  const TagMap tag_map = TagMap::Load(config.paths.tag_map);
  PlusRuleConfig plus;
  plus.LoadConsonantExceptions(config.paths.consonant_exceptions);
  const HomographResolver resolver(dictionary, std::move(plus));

  std::string tagger_kind = options.tagger.empty() ? config.tagger : options.tagger;
  std::string tag_file = config.tag_file;
  if (!options.tags.empty()) {
    tagger_kind = "file";
    tag_file = options.tags;
  }
  std::unique_ptr<PosProvider> tagger;
  if (tagger_kind == "file") {
    RequireOption(tag_file, "--tags");
    tagger = std::make_unique<FileTagProvider>(FileTagProvider::Load(tag_file));
  } else if (tagger_kind == "unigram") {
    tagger = std::make_unique<UnigramTagger>(
        UnigramTagger::Load(config.paths.unigram_lexicon));
  } else {
    throw Error(ErrorCode::kConfigError, "--tagger must be unigram or file");
  }
  const AccuracyReport report = EvaluateAccuracy(gold, *tagger, tag_map, resolver);

  Json out;
  out["gold"] = gold_path;
  out["tagger"] = tagger->name();
  out["dictionary_entries"] = dictionary.size();
  out["total"] = report.total;
  out["correct"] = report.correct;
  out["accuracy"] = report.accuracy;
  Json methods;
  for (const auto& [method, stats] : report.by_method) {
    methods[std::string(ResolutionMethodName(method))] = {
        {"total", stats.total}, {"correct", stats.correct}};
  }
  out["by_method"] = std::move(methods);
  Json rules;
  for (const auto& [rule, stats] : report.by_plus_rule) {
    rules[std::string(1, static_cast<char>(rule))] = {{"total", stats.total},
                                                      {"correct", stats.correct}};
  }
  out["by_plus_rule"] = std::move(rules);
  Json misses = Json::array();
  for (const auto& miss : report.misses) {
    misses.push_back({{"sentence", miss.item.sentence},
                      {"token_index", miss.item.token_index},
                      {"gold", miss.item.ipa},
                      {"predicted", miss.predicted.pronunciation},
                      {"method", ResolutionMethodName(miss.predicted.method)},
                      {"tag", miss.tag}});
  }
  out["misses"] = std::move(misses);
  char note[160];
  std::snprintf(note, sizeof(note),
                "published system accuracy %.2f; this run %.4f (%+.4f); "
                "tagger and test set differ from the published evaluation",
                kReferenceHomographAccuracy, report.accuracy,
                report.accuracy - kReferenceHomographAccuracy);
  out["reference_accuracy"] = kReferenceHomographAccuracy;
  out["note"] = note;
  WriteOutput(options.output, out.dump(2) + "\n");
}

void RunFinalize(const PipelineConfig& config, const FinalizeOptions& options) {
  RequireOption(options.input, "--input");
  RequireOption(options.output, "--output");
  Audio audio = ReadWav(options.input);
  if (audio.sample_rate != 24000) {
    throw Error(ErrorCode::kSampleRateMismatch,
                "finalize expects 24000 Hz input, got " +
                    std::to_string(audio.sample_rate));
  }
  std::optional<double> target;
  if (options.has_target) target = options.target;
  if (!options.speaker.empty()) {
    auto it = config.speaker_loudness.find(options.speaker);
    if (it == config.speaker_loudness.end()) {
      throw Error(ErrorCode::kConfigError,
                  "no loudness target for speaker " + options.speaker);
    }
    target = it->second;
  }
  if (target) {
    NormalizeOptions normalize;
    normalize.target = *target;
    normalize.measure = config.loudness_measure;
    normalize.peak_safe = config.peak_safe;
    NormalizeResult result =
        NormalizeLoudness(audio.samples, audio.sample_rate, normalize);
    if (result.peak_warning) {
      Diagnose("warning", "peak_over_full_scale",
               "peak " + std::to_string(result.peak) + " after normalization");
    }
    audio.samples = std::move(result.samples);
  }
  WriteWavPcm16(options.output, FinalizeOutput(audio.samples), 48000);
}

}  // namespace toucan_prep::cli
