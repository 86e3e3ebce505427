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

#ifndef TOUCAN_PREP_POS_TAGGING_H_
#define TOUCAN_PREP_POS_TAGGING_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toucan_prep/text.h"

namespace toucan_prep {

// Maps extended morphological tags (NMS, VPPFS, ADJFP, ...) to the coarse
// tagset used in the homograph dictionary. File: extended<TAB>coarse.
class TagMap {
 public:
  explicit TagMap(std::map<std::string, std::string> mapping);
  static TagMap Load(const std::string& path);
  static const TagMap& Default();

  // Coarse tags map to themselves; anything unknown maps to "X".
  std::string CoarseOf(std::string_view extended_tag) const;

 private:
  std::map<std::string, std::string, std::less<>> mapping_;
};

struct TaggedToken {
  std::string surface;
  std::string extended_tag;
  std::string coarse_tag;
  size_t sentence_index = 0;
  size_t token_index = 0;
  size_t begin = 0;  // byte span in the source text
  size_t end = 0;
};

// One extended tag per input token; deterministic.
class PosProvider {
 public:
  virtual ~PosProvider() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<std::string> Tag(
      const std::vector<std::string>& tokens) const = 0;
};

// Serves pre-computed tags, e.g. exported from an external neural tagger.
// File: token<TAB>extended_tag per line, blank line between sentences.
// Sentences are matched by their exact token sequence; an unseen sentence
// raises ProviderUnavailable.
class FileTagProvider : public PosProvider {
 public:
  static FileTagProvider Load(const std::string& path);
  static FileTagProvider Parse(std::string_view content,
                               const std::string& source = "tags");

  std::string_view name() const override { return "file"; }
  std::vector<std::string> Tag(
      const std::vector<std::string>& tokens) const override;
  size_t sentence_count() const { return sentences_.size(); }

 private:
  std::map<std::vector<std::string>, std::vector<std::string>> sentences_;
};

// Most-frequent-tag lookup with suffix heuristics for unknown words.
// File: word<TAB>extended_tag (lowercase words).
class UnigramTagger : public PosProvider {
 public:
  explicit UnigramTagger(std::map<std::string, std::string> lexicon);
  static UnigramTagger Load(const std::string& path);

  std::string_view name() const override { return "unigram"; }
  std::vector<std::string> Tag(
      const std::vector<std::string>& tokens) const override;

  std::string TagWord(std::string_view word, bool sentence_initial) const;

 private:
  std::map<std::string, std::string, std::less<>> lexicon_;
};

// Tags one tokenized sentence and attaches coarse tags and positions.
std::vector<TaggedToken> TagSentence(const std::vector<TextToken>& sentence,
                                     size_t sentence_index,
                                     const PosProvider& provider,
                                     const TagMap& tag_map);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_POS_TAGGING_H_
