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
#include <fstream>
#include <sstream>

#include "toucan_prep/errors.h"
#include "toucan_prep/phoneme.h"
#include "utf8.h"

namespace toucan_prep {

namespace {

const std::vector<std::string>& PlaceNames() {
  static const std::vector<std::string> kNames = {
      "bilabial", "labiodental", "dental",         "alveolar",
      "postalveolar", "palatal", "labial_palatal", "labial_velar",
      "velar",    "uvular",      "glottal"};
  return kNames;
}

const std::vector<std::string>& MannerNames() {
  static const std::vector<std::string> kNames = {
      "plosive", "nasal",     "trill",       "tap",
      "fricative", "affricate", "approximant", "lateral_approximant"};
  return kNames;
}

const std::vector<std::string>& HeightNames() {
  static const std::vector<std::string> kNames = {
      "close", "near_close", "close_mid", "mid", "open_mid", "near_open",
      "open"};
  return kNames;
}

const std::vector<std::string>& BacknessNames() {
  static const std::vector<std::string> kNames = {"front", "central", "back"};
  return kNames;
}

// Dimensions only the tokenizer may set; rows in the feature file must not.
bool IsModifierDimension(std::string_view name) {
  return name == "stress" || name == "lengthened" || name == "shortened" ||
         name.starts_with("tone");
}

int CountSet(const std::vector<uint8_t>& row,
             const std::vector<std::string>& names) {
  int n = 0;
  for (const auto& name : names) n += row[FeatureTable::DimensionIndex(name)];
  return n;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ModifierFlag ParseFlag(std::string_view flag, size_t line) {
  if (flag == "stress") return ModifierFlag::kStress;
  if (flag == "lengthened") return ModifierFlag::kLengthened;
  if (flag == "shortened") return ModifierFlag::kShortened;
  if (flag == "tone1") return ModifierFlag::kTone1;
  if (flag == "tone2") return ModifierFlag::kTone2;
  if (flag == "tone3") return ModifierFlag::kTone3;
  if (flag == "tone4") return ModifierFlag::kTone4;
  if (flag == "tone5") return ModifierFlag::kTone5;
  if (flag == "ignore") return ModifierFlag::kIgnore;
  throw ParseError("modifiers", line, "unknown flag '" + std::string(flag) + "'");
}

}  // namespace

const std::vector<std::string>& FeatureTable::DimensionNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names = {"consonant", "vowel"};
    for (const auto* group :
         {&PlaceNames(), &MannerNames()}) {
      names.insert(names.end(), group->begin(), group->end());
    }
    names.push_back("voiced");
    for (const auto* group : {&HeightNames(), &BacknessNames()}) {
      names.insert(names.end(), group->begin(), group->end());
    }
    for (const char* name :
         {"rounded", "nasalized", "silence", "stress", "lengthened",
          "shortened", "tone1", "tone2", "tone3", "tone4", "tone5"}) {
      names.emplace_back(name);
    }
    return names;
  }();
  return kNames;
}

size_t FeatureTable::DimensionIndex(std::string_view name) {
  const auto& names = DimensionNames();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown feature dimension '" + std::string(name) + "'");
  }
  return static_cast<size_t>(it - names.begin());
}

FeatureTable FeatureTable::Load(const std::string& features_path,
                                const std::string& modifiers_path) {
  return Parse(ReadFile(features_path), ReadFile(modifiers_path));
}

const FeatureTable& FeatureTable::Default() {
  static const FeatureTable kTable =
      Load(std::string(TOUCAN_PREP_DATA_DIR) + "/feature_table.tsv",
           std::string(TOUCAN_PREP_DATA_DIR) + "/modifiers.tsv");
  return kTable;
}

FeatureTable FeatureTable::Parse(std::string_view features_tsv,
                                 std::string_view modifiers_tsv) {
  FeatureTable table;
  const size_t dim = Dimension();
  size_t line_no = 0;
  for (const std::string& raw : internal::SplitString(features_tsv, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kVersion = "# version:";
      if (line.starts_with(kVersion)) {
        table.version_ = std::string(internal::Trim(line.substr(kVersion.size())));
      }
      continue;
    }
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2 || cols[0].empty()) {
      throw ParseError("features", line_no, "expected symbol<TAB>features");
    }
    std::vector<uint8_t> row(dim, 0);
    for (const std::string& entry : internal::SplitString(cols[1], ',')) {
      const auto kv = internal::SplitString(internal::Trim(entry), '=');
      if (kv.size() != 2 || (kv[1] != "1" && kv[1] != "0")) {
        throw ParseError("features", line_no, "bad feature entry '" + entry + "'");
      }
      if (IsModifierDimension(kv[0])) {
        throw ParseError("features", line_no,
                         "modifier dimension '" + kv[0] + "' in segment row");
      }
      size_t index;
      try {
        index = DimensionIndex(kv[0]);
      } catch (const Error&) {
        throw ParseError("features", line_no, "unknown feature '" + kv[0] + "'");
      }
      row[index] = kv[1] == "1" ? 1 : 0;
    }
    const bool consonant = row[DimensionIndex("consonant")];
    const bool vowel = row[DimensionIndex("vowel")];
    const bool silence = row[DimensionIndex("silence")];
    if (silence) {
      if (std::count(row.begin(), row.end(), 1) != 1) {
        throw ParseError("features", line_no,
                         "silence rows set only the silence flag");
      }
    } else if (consonant == vowel) {
      throw ParseError("features", line_no,
                       "segment must be exactly one of consonant/vowel");
    } else if (consonant && (CountSet(row, PlaceNames()) != 1 ||
                             CountSet(row, MannerNames()) != 1)) {
      throw ParseError("features", line_no,
                       "consonant needs exactly one place and one manner");
    } else if (vowel && (CountSet(row, HeightNames()) != 1 ||
                         CountSet(row, BacknessNames()) != 1)) {
      throw ParseError("features", line_no,
                       "vowel needs exactly one height and one backness");
    }
    if (!table.features_.emplace(cols[0], std::move(row)).second) {
      throw ParseError("features", line_no, "duplicate symbol " + cols[0]);
    }
    table.max_symbol_length_ = std::max(
        table.max_symbol_length_, internal::DecodeUtf8(cols[0]).size());
  }

  line_no = 0;
  for (const std::string& raw : internal::SplitString(modifiers_tsv, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 3) {
      throw ParseError("modifiers", line_no,
                       "expected symbol<TAB>flag<TAB>direction");
    }
    const std::u32string symbol = internal::DecodeUtf8(cols[0]);
    if (symbol.size() != 1) {
      throw ParseError("modifiers", line_no, "modifier must be one code point");
    }
    AttachDirection direction;
    if (cols[2] == "prev") {
      direction = AttachDirection::kPrevious;
    } else if (cols[2] == "next") {
      direction = AttachDirection::kNext;
    } else {
      throw ParseError("modifiers", line_no, "direction must be prev or next");
    }
    if (table.features_.contains(cols[0])) {
      throw ParseError("modifiers", line_no,
                       "modifier also listed as a segment: " + cols[0]);
    }
    Modifier modifier{symbol[0], ParseFlag(cols[1], line_no), direction};
    if (!table.modifiers_.emplace(symbol[0], modifier).second) {
      throw ParseError("modifiers", line_no, "duplicate modifier " + cols[0]);
    }
  }
  return table;
}

bool FeatureTable::HasSymbol(std::string_view symbol) const {
  return features_.find(symbol) != features_.end();
}

const std::vector<uint8_t>* FeatureTable::Features(
    std::string_view symbol) const {
  auto it = features_.find(symbol);
  return it == features_.end() ? nullptr : &it->second;
}

bool FeatureTable::IsSilence(std::string_view symbol) const {
  const auto* row = Features(symbol);
  return row != nullptr && (*row)[DimensionIndex("silence")] != 0;
}

bool FeatureTable::IsVowel(std::string_view symbol) const {
  const auto* row = Features(symbol);
  return row != nullptr && (*row)[DimensionIndex("vowel")] != 0;
}

bool FeatureTable::IsConsonant(std::string_view symbol) const {
  const auto* row = Features(symbol);
  return row != nullptr && (*row)[DimensionIndex("consonant")] != 0;
}

bool FeatureTable::IsVoiced(std::string_view symbol) const {
  const auto* row = Features(symbol);
  if (row == nullptr) return false;
  // Vowels are voiced whether or not the row spells it out.
  return (*row)[DimensionIndex("voiced")] != 0 ||
         (*row)[DimensionIndex("vowel")] != 0;
}

const Modifier* FeatureTable::FindModifier(char32_t cp) const {
  auto it = modifiers_.find(cp);
  return it == modifiers_.end() ? nullptr : &it->second;
}

size_t FeatureTable::LongestMatch(std::u32string_view text, size_t pos) const {
  const size_t limit = std::min(max_symbol_length_, text.size() - pos);
  for (size_t len = limit; len > 0; --len) {
    if (HasSymbol(internal::EncodeUtf8(text.substr(pos, len)))) return len;
  }
  return 0;
}

std::vector<std::string> FeatureTable::Symbols() const {
  std::vector<std::string> out;
  out.reserve(features_.size());
  for (const auto& [symbol, row] : features_) out.push_back(symbol);
  return out;
}

}  // namespace toucan_prep
