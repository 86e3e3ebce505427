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

#include "toucan_prep/manifest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "toucan_prep/errors.h"
#include "utf8.h"

namespace toucan_prep {

using Json = nlohmann::ordered_json;

std::string RecordToJsonLine(const UtteranceRecord& r) {
  Json j;
  j["utt_id"] = r.utt_id;
  j["audio_path"] = r.audio_path;
  j["start"] = r.start;
  j["end"] = r.end;
  j["transcript"] = r.transcript;
  if (r.phonemes) j["phonemes"] = *r.phonemes;
  if (r.durations) j["durations"] = *r.durations;
  if (r.alignment_score) j["alignment_score"] = *r.alignment_score;
  if (r.pitch) j["pitch"] = *r.pitch;
  if (r.energy) j["energy"] = *r.energy;
  if (r.loudness_lufs) j["loudness_lufs"] = *r.loudness_lufs;
  j["is_joint"] = r.is_joint;
  j["source_ids"] = r.source_ids;
  j["enhanced"] = r.enhanced;
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

UtteranceRecord RecordFromJsonLine(std::string_view line,
                                   const std::string& source, size_t line_no) {
  UtteranceRecord r;
  try {
    const Json j = Json::parse(line);
    r.utt_id = j.at("utt_id").get<std::string>();
    r.audio_path = j.value("audio_path", std::string());
    r.start = j.value("start", 0.0);
    r.end = j.at("end").get<double>();
    r.transcript = j.value("transcript", std::string());
    if (j.contains("phonemes")) r.phonemes = j["phonemes"].get<std::string>();
    if (j.contains("durations")) r.durations = j["durations"].get<std::vector<int>>();
    if (j.contains("alignment_score")) {
      r.alignment_score = j["alignment_score"].get<double>();
    }
    if (j.contains("pitch")) r.pitch = j["pitch"].get<std::vector<double>>();
    if (j.contains("energy")) r.energy = j["energy"].get<std::vector<double>>();
    if (j.contains("loudness_lufs")) r.loudness_lufs = j["loudness_lufs"].get<double>();
    r.is_joint = j.value("is_joint", false);
    r.source_ids = j.value("source_ids", std::vector<std::string>());
    r.enhanced = j.value("enhanced", false);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, line_no, e.what());
  }
  if (r.utt_id.empty()) throw ParseError(source, line_no, "empty utt_id");
  if (!(r.end > r.start)) throw ParseError(source, line_no, "end must exceed start");
  if (r.is_joint && r.source_ids.size() < 2) {
    throw ParseError(source, line_no, "joint record needs >= 2 source_ids");
  }
  return r;
}

std::vector<UtteranceRecord> ParseManifest(std::string_view content,
                                           const std::string& source) {
  std::vector<UtteranceRecord> records;
  size_t line_no = 0;
  for (const std::string& raw : internal::SplitString(content, '\n')) {
    ++line_no;
    const std::string_view line = internal::Trim(raw);
    if (line.empty()) continue;
    records.push_back(RecordFromJsonLine(line, source, line_no));
  }
  return records;
}

std::vector<UtteranceRecord> ReadManifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open manifest " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseManifest(buffer.str(), path);
}

std::string SerializeManifest(std::vector<UtteranceRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.utt_id < b.utt_id; });
  std::string out;
  for (size_t i = 0; i < records.size(); ++i) {
    if (i > 0 && records[i].utt_id == records[i - 1].utt_id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate utt_id " + records[i].utt_id);
    }
    out += RecordToJsonLine(records[i]);
    out += '\n';
  }
  return out;
}

void WriteManifest(const std::string& path,
                   std::vector<UtteranceRecord> records) {
  const std::string bytes = SerializeManifest(std::move(records));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << bytes;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace toucan_prep
