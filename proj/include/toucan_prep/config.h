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

#ifndef TOUCAN_PREP_CONFIG_H_
#define TOUCAN_PREP_CONFIG_H_

#include <map>
#include <string>

#include "toucan_prep/corpus.h"
#include "toucan_prep/loudness.h"
#include "toucan_prep/prosody.h"

namespace toucan_prep {

struct PathsConfig {
  std::string feature_table;
  std::string modifiers;
  std::string dictionary;
  std::string tag_map;
  std::string unigram_lexicon;
  std::string g2p_lexicon;
  std::string consonant_exceptions;
};

struct PipelineConfig {
  PathsConfig paths;
  std::string g2p_provider = "lexicon";  // or "command"
  std::string g2p_command;               // for "command"
  std::string tagger = "unigram";        // or "file"
  std::string tag_file;                  // for "file"
  MelConfig mel;
  PitchConfig pitch;
  NormalizationMode normalization = NormalizationMode::kDivide;
  double training_loudness = -30.0;
  std::map<std::string, double> speaker_loudness = {{"ad", -33.0},
                                                    {"neb", -29.0}};
  LoudnessMeasure loudness_measure = LoudnessMeasure::kLufs;
  bool peak_safe = false;
  JoinConfig join;
  CleaningConfig cleaning;
  VadConfig vad;
  int min_silence_frames = 5;
  int parallelism = 1;

  // Built-in defaults with data files under the installed data directory.
  static PipelineConfig Defaults();
  // Defaults overridden by a TOML file. Relative paths resolve against the
  // file's directory. Throws Error(kConfigError).
  static PipelineConfig Load(const std::string& path);
  static PipelineConfig Parse(std::string_view toml, const std::string& base_dir,
                              const std::string& source = "config");

  // Checks ranges and that referenced files exist. Throws
  // Error(kConfigError).
  void Validate() const;
};

// --config, then $TOUCAN_PREP_CONFIG, then built-in defaults.
PipelineConfig ResolveConfig(const std::string& cli_path);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_CONFIG_H_
