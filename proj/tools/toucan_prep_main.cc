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

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "toucan_prep/errors.h"

namespace {

using toucan_prep::ErrorCode;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError:
      return 2;
    case ErrorCode::kIoError:
    case ErrorCode::kParseError:
    case ErrorCode::kFormatError:
    case ErrorCode::kUnknownSymbol:
      return 3;
    default:
      return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = toucan_prep::cli;
  CLI::App app{"French TTS front-end and corpus preparation toolkit",
               "toucan-prep"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "TOML config (default: $TOUCAN_PREP_CONFIG, then built-ins)");

  cli::PhonemizeOptions phonemize;
  auto* phonemize_cmd =
      app.add_subcommand("phonemize", "Text or manifest transcripts to IPA");
  phonemize_cmd->add_option("--input", phonemize.input, "Text file (default stdin)");
  phonemize_cmd->add_option("--output", phonemize.output, "Output file (default stdout)");
  phonemize_cmd->add_option("--manifest", phonemize.manifest,
                            "Phonemize every transcript of a manifest");
  phonemize_cmd->add_flag("--vectors", phonemize.vectors,
                          "Emit JSON lines with articulatory vectors");

  cli::AlignOptions align;
  auto* align_cmd = app.add_subcommand("align", "Durations from posteriograms");
  align_cmd->add_option("--manifest", align.manifest)->required();
  align_cmd->add_option("--posteriograms", align.posteriograms,
                        "Directory of <utt_id>.pgrm files")->required();
  align_cmd->add_option("--output", align.output)->required();
  align_cmd->add_option("--report", align.report, "Skip-rate report (default stdout)");
  align_cmd->add_option("--algo", align.algo, "mas or dijkstra")
      ->check(CLI::IsMember({"mas", "dijkstra"}));

  cli::ProsodyOptions prosody;
  auto* prosody_cmd = app.add_subcommand("prosody", "Per-phone pitch and energy");
  prosody_cmd->add_option("--manifest", prosody.manifest)->required();
  prosody_cmd->add_option("--output", prosody.output)->required();
  prosody_cmd->add_option("--features-dir", prosody.features_dir,
                          "Also write log-mel FEAT files here");

  cli::PrepOptions prep;
  auto* prep_cmd = app.add_subcommand("prep", "Cleaning, pauses, loudness, joints");
  prep_cmd->add_option("--manifest", prep.manifest)->required();
  prep_cmd->add_option("--output-dir", prep.output_dir)->required();
  prep_cmd->add_flag("--join", prep.join, "Add joint utterances");
  prep_cmd->add_flag("--loudness", prep.loudness, "Normalize loudness");
  prep_cmd->add_option("--speaker", prep.speaker, "Speaker loudness target");
  prep_cmd->add_flag("--validate-pauses", prep.validate_pauses,
                     "Drop pause markers without silence");
  prep_cmd->add_option("--vad-labels", prep.vad_labels, "External VAD label file");
  prep_cmd->add_option("--clean", prep.losses, "Loss file for cleaning");

  cli::EvalOptions eval;
  auto* eval_cmd =
      app.add_subcommand("eval-homographs", "Homograph accuracy on a gold set");
  eval_cmd->add_option("--gold", eval.gold, "Gold TSV (default: shipped suite)");
  eval_cmd->add_option("--tags", eval.tags, "Pre-computed tag file");
  eval_cmd->add_option("--tagger", eval.tagger, "unigram or file");
  eval_cmd->add_option("--output", eval.output, "Report file (default stdout)");

  cli::FinalizeOptions finalize;
  auto* finalize_cmd =
      app.add_subcommand("finalize", "24 kHz synthesis output to 48 kHz int16 WAV");
  finalize_cmd->add_option("--input", finalize.input)->required();
  finalize_cmd->add_option("--output", finalize.output)->required();
  finalize_cmd->add_option("--speaker", finalize.speaker, "Speaker loudness target");
  auto* target = finalize_cmd->add_option("--target", finalize.target,
                                          "Loudness target in LUFS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    cli::Diagnose("error", "usage", e.what());
    return 2;
  }
  finalize.has_target = target->count() > 0;

  try {
    const toucan_prep::PipelineConfig config =
        toucan_prep::ResolveConfig(config_path);
    if (*phonemize_cmd) cli::RunPhonemize(config, phonemize);
    if (*align_cmd) cli::RunAlign(config, align);
    if (*prosody_cmd) cli::RunProsody(config, prosody);
    if (*prep_cmd) cli::RunPrep(config, prep);
    if (*eval_cmd) cli::RunEvalHomographs(config, eval);
    if (*finalize_cmd) cli::RunFinalize(config, finalize);
  } catch (const toucan_prep::Error& e) {
    cli::Diagnose("error", toucan_prep::ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    cli::Diagnose("error", "io_error", e.what());
    return 3;
  } catch (const std::exception& e) {
    cli::Diagnose("error", "internal", e.what());
    return 4;
  }
  return 0;
}
