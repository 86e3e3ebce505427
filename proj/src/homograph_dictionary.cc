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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toucan_prep/errors.h"
#include "toucan_prep/homograph.h"
#include "utf8.h"

namespace toucan_prep {

void HomographEntry::Validate() const {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvariantViolation,
                "homograph '" + grapheme + "' has no candidates");
  }
  if (default_index >= candidates.size()) {
    throw Error(ErrorCode::kInvariantViolation,
                "homograph '" + grapheme + "' default index out of range");
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& candidate : candidates) {
    // "\x1f" cannot occur in a tag; it stands for a missing extended tag.
    const std::string extended = candidate.extended_pos.value_or("\x1f");
    if (!seen.emplace(candidate.coarse_pos, extended).second) {
      throw Error(ErrorCode::kInvariantViolation,
                  "homograph '" + grapheme + "' repeats tag pair (" +
                      candidate.coarse_pos + ", " +
                      candidate.extended_pos.value_or("-") + ")");
    }
  }
}

HomographDictionary HomographDictionary::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open dictionary " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path);
}

HomographDictionary HomographDictionary::Parse(std::string_view jsonl,
                                               const std::string& source) {
  HomographDictionary dictionary;
  size_t line_no = 0;
  for (const std::string& raw : internal::SplitString(jsonl, '\n')) {
    ++line_no;
    const std::string_view line = internal::Trim(raw);
    if (line.empty()) continue;
    HomographEntry entry;
    try {
      const nlohmann::json object = nlohmann::json::parse(line);
      entry.grapheme = internal::ToLowerFrench(
          object.at("grapheme").get<std::string>());
      for (const auto& item : object.at("candidates")) {
        HomographCandidate candidate;
        candidate.ipa = item.at("ipa").get<std::string>();
        candidate.coarse_pos = item.at("coarse").get<std::string>();
        if (item.contains("extended") && !item["extended"].is_null()) {
          candidate.extended_pos = item["extended"].get<std::string>();
        }
        entry.candidates.push_back(std::move(candidate));
      }
      entry.default_index = object.value("default", size_t{0});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source, line_no, e.what());
    }
    try {
      dictionary.Add(std::move(entry));
    } catch (const Error& e) {
      throw Error(e.code(),
                  source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return dictionary;
}

void HomographDictionary::Add(HomographEntry entry) {
  entry.Validate();
  if (entries_.contains(entry.grapheme)) {
    throw Error(ErrorCode::kDuplicateGrapheme,
                "duplicate grapheme '" + entry.grapheme + "'");
  }
  std::string key = entry.grapheme;
  entries_.emplace(std::move(key), std::move(entry));
}

const HomographEntry* HomographDictionary::Find(
    std::string_view surface) const {
  auto it = entries_.find(internal::ToLowerFrench(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> HomographDictionary::Graphemes() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [grapheme, entry] : entries_) out.push_back(grapheme);
  return out;
}

}  // namespace toucan_prep
