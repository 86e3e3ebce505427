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

#ifndef TOUCAN_PREP_TOOLS_COMMANDS_H_
#define TOUCAN_PREP_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

#include "toucan_prep/config.h"

namespace toucan_prep::cli {

struct PhonemizeOptions {
  std::string input;     // text file, "-" or empty for stdin
  std::string output;    // empty for stdout
  std::string manifest;  // manifest mode when set
  bool vectors = false;
};

struct AlignOptions {
  std::string manifest;
  std::string posteriograms;
  std::string output;
  std::string report;  // empty for stdout
  std::string algo = "mas";
};

struct ProsodyOptions {
  std::string manifest;
  std::string output;
  std::string features_dir;
};

struct PrepOptions {
  std::string manifest;
  std::string output_dir;
  bool join = false;
  bool loudness = false;
  std::string speaker;  // empty: training target
  bool validate_pauses = false;
  std::string vad_labels;
  std::string losses;
};

struct EvalOptions {
  std::string gold;
  std::string tags;     // oracle tag file; overrides the configured tagger
  std::string tagger;   // "unigram" or "file"; empty: configured
  std::string output;   // empty for stdout
};

struct FinalizeOptions {
  std::string input;
  std::string output;
  std::string speaker;
  bool has_target = false;
  double target = 0.0;
};

void RunPhonemize(const PipelineConfig& config, const PhonemizeOptions& options);
void RunAlign(const PipelineConfig& config, const AlignOptions& options);
void RunProsody(const PipelineConfig& config, const ProsodyOptions& options);
void RunPrep(const PipelineConfig& config, const PrepOptions& options);
void RunEvalHomographs(const PipelineConfig& config, const EvalOptions& options);
void RunFinalize(const PipelineConfig& config, const FinalizeOptions& options);

// One JSON line on stderr.
void Diagnose(std::string_view level, std::string_view code,
              std::string_view message);

}  // namespace toucan_prep::cli

#endif  // TOUCAN_PREP_TOOLS_COMMANDS_H_
