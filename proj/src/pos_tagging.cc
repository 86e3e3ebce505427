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

#include "toucan_prep/pos_tagging.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "toucan_prep/errors.h"
#include "utf8.h"

namespace toucan_prep {

namespace {

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::map<std::string, std::string> ReadTwoColumns(const std::string& path) {
  std::map<std::string, std::string> out;
  size_t line_no = 0;
  for (std::string line : internal::SplitString(ReadAll(path), '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(path, line_no, "expected two tab-separated columns");
    }
    out[cols[0]] = cols[1];
  }
  return out;
}

bool EndsWith(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() && word.ends_with(suffix);
}

}  // namespace

TagMap::TagMap(std::map<std::string, std::string> mapping)
    : mapping_(mapping.begin(), mapping.end()) {}

TagMap TagMap::Load(const std::string& path) {
  return TagMap(ReadTwoColumns(path));
}

const TagMap& TagMap::Default() {
  static const TagMap kMap =
      Load(std::string(TOUCAN_PREP_DATA_DIR) + "/tag_map.tsv");
  return kMap;
}

std::string TagMap::CoarseOf(std::string_view extended_tag) const {
  auto it = mapping_.find(extended_tag);
  if (it != mapping_.end()) return it->second;
  // A coarse tag given directly is already its own image.
  for (const auto& [extended, coarse] : mapping_) {
    if (coarse == extended_tag) return coarse;
  }
  return "X";
}

FileTagProvider FileTagProvider::Load(const std::string& path) {
  return Parse(ReadAll(path), path);
}

FileTagProvider FileTagProvider::Parse(std::string_view content,
                                       const std::string& source) {
  FileTagProvider provider;
  std::vector<std::string> tokens;
  std::vector<std::string> tags;
  auto flush = [&] {
    if (tokens.empty()) return;
    provider.sentences_[tokens] = tags;
    tokens.clear();
    tags.clear();
  };
  size_t line_no = 0;
  for (std::string line : internal::SplitString(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(source, line_no, "expected token<TAB>extended_tag");
    }
    tokens.push_back(cols[0]);
    tags.push_back(cols[1]);
  }
  flush();
  return provider;
}

std::vector<std::string> FileTagProvider::Tag(
    const std::vector<std::string>& tokens) const {
  if (tokens.empty()) return {};
  auto it = sentences_.find(tokens);
  if (it == sentences_.end()) {
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    throw Error(ErrorCode::kProviderUnavailable,
                "no pre-computed tags for sentence: " + joined);
  }
  return it->second;
}

UnigramTagger::UnigramTagger(std::map<std::string, std::string> lexicon) {
  for (auto& [word, tag] : lexicon) {
    lexicon_.emplace(internal::ToLowerFrench(word), std::move(tag));
  }
}

UnigramTagger UnigramTagger::Load(const std::string& path) {
  return UnigramTagger(ReadTwoColumns(path));
}

std::string UnigramTagger::TagWord(std::string_view word,
                                   bool sentence_initial) const {
  const std::u32string cps = internal::DecodeUtf8(word);
  if (cps.empty() ||
      std::none_of(cps.begin(), cps.end(), internal::IsWordChar)) {
    return "PUNCT";
  }
  const std::string lower = internal::ToLowerFrench(word);
  if (auto it = lexicon_.find(lower); it != lexicon_.end()) return it->second;
  if (std::all_of(lower.begin(), lower.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return "CHIF";
  }
  if (!sentence_initial && lower != word) return "PROPN";
  if (EndsWith(lower, "ment")) return "ADV";
  if (EndsWith(lower, "ées")) return "VPPFP";
  if (EndsWith(lower, "ée")) return "VPPFS";
  if (EndsWith(lower, "és")) return "VPPMP";
  if (EndsWith(lower, "é")) return "VPPMS";
  if (EndsWith(lower, "er") || EndsWith(lower, "ir") ||
      EndsWith(lower, "ons") || EndsWith(lower, "ez")) {
    return "VERB";
  }
  if (EndsWith(lower, "euse") || EndsWith(lower, "ive") ||
      EndsWith(lower, "able") || EndsWith(lower, "ible")) {
    return "ADJFS";
  }
  if (EndsWith(lower, "eux") || EndsWith(lower, "if") ||
      EndsWith(lower, "al")) {
    return "ADJMS";
  }
  if (EndsWith(lower, "tion") || EndsWith(lower, "té")) return "NFS";
  if (EndsWith(lower, "s") || EndsWith(lower, "x")) return "NMP";
  return "NMS";
}

std::vector<std::string> UnigramTagger::Tag(
    const std::vector<std::string>& tokens) const {
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    tags.push_back(TagWord(tokens[i], i == 0));
  }
  return tags;
}

std::vector<TaggedToken> TagSentence(const std::vector<TextToken>& sentence,
                                     size_t sentence_index,
                                     const PosProvider& provider,
                                     const TagMap& tag_map) {
  std::vector<std::string> surfaces;
  surfaces.reserve(sentence.size());
  for (const auto& token : sentence) surfaces.push_back(token.surface);
  const std::vector<std::string> tags = provider.Tag(surfaces);
  if (tags.size() != sentence.size()) {
    throw Error(ErrorCode::kProviderUnavailable,
                "tagger '" + std::string(provider.name()) + "' returned " +
                    std::to_string(tags.size()) + " tags for " +
                    std::to_string(sentence.size()) + " tokens");
  }
  std::vector<TaggedToken> tagged;
  tagged.reserve(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    tagged.push_back({sentence[i].surface, tags[i], tag_map.CoarseOf(tags[i]),
                      sentence_index, i, sentence[i].begin, sentence[i].end});
  }
  return tagged;
}

}  // namespace toucan_prep
