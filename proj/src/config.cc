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

#include "toucan_prep/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toml.hpp"
#include "toucan_prep/errors.h"

namespace toucan_prep {

namespace {

namespace fs = std::filesystem;

Error ConfigError(const std::string& what) {
  return Error(ErrorCode::kConfigError, what);
}

std::string Resolve(const std::string& base, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).lexically_normal().string();
}

template <typename T>
void Read(const toml::table& table, std::string_view section,
          std::string_view key, T& out) {
  const toml::node_view<const toml::node> node = table[section][key];
  if (!node) return;
  if constexpr (std::is_same_v<T, std::string>) {
    if (auto v = node.value<std::string>()) {
      out = *v;
      return;
    }
  } else if constexpr (std::is_same_v<T, bool>) {
    if (auto v = node.value<bool>()) {
      out = *v;
      return;
    }
  } else if constexpr (std::is_integral_v<T>) {
    if (node.is_integer()) {
      out = static_cast<T>(*node.value<int64_t>());
      return;
    }
  } else {
    if (auto v = node.value<double>()) {
      out = *v;
      return;
    }
  }
  throw ConfigError("config key " + std::string(section) + "." +
                    std::string(key) + " has the wrong type");
}

}  // namespace

PipelineConfig PipelineConfig::Defaults() {
  const std::string data = TOUCAN_PREP_DATA_DIR;
  PipelineConfig config;
  config.paths.feature_table = data + "/feature_table.tsv";
  config.paths.modifiers = data + "/modifiers.tsv";
  config.paths.dictionary = data + "/homographs.jsonl";
  config.paths.tag_map = data + "/tag_map.tsv";
  config.paths.unigram_lexicon = data + "/unigram_fr.tsv";
  config.paths.g2p_lexicon = data + "/lexicon_fr.tsv";
  config.paths.consonant_exceptions = data + "/h_aspire.txt";
  return config;
}

PipelineConfig PipelineConfig::Parse(std::string_view text,
                                     const std::string& base_dir,
                                     const std::string& source) {
  toml::table table;
  try {
    table = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream what;
    what << source << ":" << e.source().begin.line << ": "
         << e.description();
    throw ConfigError(what.str());
  }
  PipelineConfig c = Defaults();
  PathsConfig& p = c.paths;
  for (auto [key, target] :
       {std::pair<const char*, std::string*>{"feature_table", &p.feature_table},
        {"modifiers", &p.modifiers},
        {"dictionary", &p.dictionary},
        {"tag_map", &p.tag_map},
        {"unigram_lexicon", &p.unigram_lexicon},
        {"g2p_lexicon", &p.g2p_lexicon},
        {"consonant_exceptions", &p.consonant_exceptions}}) {
    std::string value;
    Read(table, "paths", key, value);
    if (!value.empty()) *target = Resolve(base_dir, value);
  }
  Read(table, "g2p", "provider", c.g2p_provider);
  Read(table, "g2p", "command", c.g2p_command);
  Read(table, "tagger", "kind", c.tagger);
  std::string tag_file;
  Read(table, "tagger", "tag_file", tag_file);
  if (!tag_file.empty()) c.tag_file = Resolve(base_dir, tag_file);

  Read(table, "mel", "sample_rate", c.mel.sample_rate);
  Read(table, "mel", "n_fft", c.mel.n_fft);
  Read(table, "mel", "win_length", c.mel.win_length);
  Read(table, "mel", "hop_length", c.mel.hop_length);
  Read(table, "mel", "n_mels", c.mel.n_mels);
  Read(table, "mel", "fmin", c.mel.fmin);
  Read(table, "mel", "fmax", c.mel.fmax);
  Read(table, "mel", "log_floor", c.mel.log_floor);

  Read(table, "pitch", "min_hz", c.pitch.min_hz);
  Read(table, "pitch", "max_hz", c.pitch.max_hz);
  Read(table, "pitch", "voicing_threshold", c.pitch.voicing_threshold);
  Read(table, "pitch", "silence_threshold", c.pitch.silence_threshold);

  std::string mode = "divide";
  Read(table, "prosody", "normalization", mode);
  if (mode == "divide") {
    c.normalization = NormalizationMode::kDivide;
  } else if (mode == "subtract") {
    c.normalization = NormalizationMode::kSubtract;
  } else {
    throw ConfigError("prosody.normalization must be divide or subtract");
  }

  Read(table, "loudness", "training_target", c.training_loudness);
  Read(table, "loudness", "peak_safe", c.peak_safe);
  std::string measure = "lufs";
  Read(table, "loudness", "measure", measure);
  if (measure == "lufs") {
    c.loudness_measure = LoudnessMeasure::kLufs;
  } else if (measure == "rms_dbfs") {
    c.loudness_measure = LoudnessMeasure::kRmsDbfs;
  } else {
    throw ConfigError("loudness.measure must be lufs or rms_dbfs");
  }
  if (const toml::table* speakers = table["loudness"]["speakers"].as_table()) {
    for (const auto& [name, value] : *speakers) {
      const auto target = value.value<double>();
      if (!target) throw ConfigError("loudness.speakers values must be numbers");
      c.speaker_loudness[std::string(name.str())] = *target;
    }
  }

  Read(table, "join", "pause_seconds", c.join.pause_seconds);
  Read(table, "join", "max_total_seconds", c.join.max_total_seconds);
  Read(table, "cleaning", "threshold", c.cleaning.threshold);
  Read(table, "cleaning", "window", c.cleaning.window);
  Read(table, "vad", "enter_offset_db", c.vad.enter_offset_db);
  Read(table, "vad", "exit_offset_db", c.vad.exit_offset_db);
  Read(table, "vad", "enter_floor_dbfs", c.vad.enter_floor_dbfs);
  Read(table, "vad", "exit_floor_dbfs", c.vad.exit_floor_dbfs);
  Read(table, "pauses", "min_silence_frames", c.min_silence_frames);
  Read(table, "runtime", "parallelism", c.parallelism);
  return c;
}

PipelineConfig PipelineConfig::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string base = fs::path(path).parent_path().string();
  return Parse(buffer.str(), base.empty() ? "." : base, path);
}

void PipelineConfig::Validate() const {
  for (const std::string* path :
       {&paths.feature_table, &paths.modifiers, &paths.dictionary,
        &paths.tag_map, &paths.unigram_lexicon, &paths.consonant_exceptions}) {
    if (!fs::is_regular_file(*path)) {
      throw ConfigError("data file not found: " + *path);
    }
  }
  if (g2p_provider == "lexicon") {
    if (!fs::is_regular_file(paths.g2p_lexicon)) {
      throw ConfigError("data file not found: " + paths.g2p_lexicon);
    }
  } else if (g2p_provider == "command") {
    if (g2p_command.empty()) throw ConfigError("g2p.command is required");
  } else {
    throw ConfigError("g2p.provider must be lexicon or command");
  }
  if (tagger == "file") {
    if (!fs::is_regular_file(tag_file)) {
      throw ConfigError("tag file not found: " + tag_file);
    }
  } else if (tagger != "unigram") {
    throw ConfigError("tagger.kind must be unigram or file");
  }
  mel.Validate();
  if (!(pitch.min_hz > 0.0) || pitch.max_hz <= pitch.min_hz ||
      pitch.max_hz >= mel.sample_rate / 2.0) {
    throw ConfigError("pitch range must satisfy 0 < min_hz < max_hz < Nyquist");
  }
  if (!(join.pause_seconds >= 0.0) || !(join.max_total_seconds > 0.0)) {
    throw ConfigError("join parameters must be non-negative");
  }
  if (!(cleaning.threshold >= 0.0) || cleaning.window < 1) {
    throw ConfigError("cleaning.threshold >= 0 and cleaning.window >= 1 required");
  }
  if (vad.exit_offset_db > vad.enter_offset_db ||
      vad.exit_floor_dbfs > vad.enter_floor_dbfs) {
    throw ConfigError("vad exit thresholds must not exceed enter thresholds");
  }
  if (min_silence_frames < 0) throw ConfigError("pauses.min_silence_frames must be >= 0");
  if (parallelism < 1 || parallelism > 256) {
    throw ConfigError("runtime.parallelism must be in [1, 256]");
  }
}

PipelineConfig ResolveConfig(const std::string& cli_path) {
  PipelineConfig config;
  if (!cli_path.empty()) {
    config = PipelineConfig::Load(cli_path);
  } else if (const char* env = std::getenv("TOUCAN_PREP_CONFIG");
             env != nullptr && *env != '\0') {
    config = PipelineConfig::Load(env);
  } else {
    config = PipelineConfig::Defaults();
  }
  config.Validate();
  return config;
}

}  // namespace toucan_prep
