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

// Rule-based French homograph disambiguation: dictionary lookup keyed by
// coarse and extended POS tags with a default fallback, plus a dedicated
// rule cascade for "plus".

#ifndef TOUCAN_PREP_HOMOGRAPH_H_
#define TOUCAN_PREP_HOMOGRAPH_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toucan_prep/pos_tagging.h"

namespace toucan_prep {

struct HomographCandidate {
  std::string ipa;
  std::string coarse_pos;
  std::optional<std::string> extended_pos;
};

struct HomographEntry {
  std::string grapheme;  // lowercase
  std::vector<HomographCandidate> candidates;
  size_t default_index = 0;

  // Throws Error(kInvariantViolation) on an empty candidate list, an out of
  // range default or a repeated (coarse, extended) pair.
  void Validate() const;
};

// Immutable after loading. JSONL, one entry per line:
//   {"grapheme": "fils", "candidates": [{"ipa": "fis", "coarse": "NOUN",
//    "extended": "NMS"}, ...], "default": 0}
class HomographDictionary {
 public:
  static HomographDictionary Load(const std::string& path);
  static HomographDictionary Parse(std::string_view jsonl,
                                   const std::string& source = "dictionary");

  // Throws DuplicateGrapheme or InvariantViolation.
  void Add(HomographEntry entry);

  // Case-insensitive lookup.
  const HomographEntry* Find(std::string_view surface) const;
  size_t size() const { return entries_.size(); }
  std::vector<std::string> Graphemes() const;

 private:
  std::map<std::string, HomographEntry, std::less<>> entries_;
};

enum class ResolutionMethod {
  kNotHomograph,
  kCoarseMatch,
  kExtendedMatch,
  kDefaultFallback,
  kPlusRule,
};

std::string_view ResolutionMethodName(ResolutionMethod method);

enum class PlusRule : char {
  kNone = 0,
  kNegation = 'a',        // negative "no more" reading
  kConsonantFollows = 'b',
  kLiaison = 'c',         // vowel-initial ADJ/ADV follows
  kPlain = 'd',
};

struct Resolution {
  std::string pronunciation;  // empty for kNotHomograph
  ResolutionMethod method = ResolutionMethod::kNotHomograph;
  PlusRule plus_rule = PlusRule::kNone;
};

// Configuration of the "plus" cascade.
struct PlusRuleConfig {
  std::set<std::string> negation_cues = {"ne", "n'", "non", "sans", "aucun",
                                         "jamais", "rien", "personne"};
  // Vowel-letter words that behave as consonant-initial for liaison
  // (h aspiré and a few others such as "onze").
  std::set<std::string> consonant_initial_exceptions;
  std::set<std::string> liaison_tags = {"ADJ", "ADV"};
  std::string negated_ipa = "ply";
  std::string consonant_ipa = "ply";
  std::string liaison_ipa = "plyz";
  std::string plain_ipa = "plys";

  // Adds one word per line from an exception list (comments with '#').
  void LoadConsonantExceptions(const std::string& path);
  static const PlusRuleConfig& Default();
};

// Whether a word begins with a vowel sound for liaison purposes. Decided
// from the spelling: vowel letters and mute h count as vowels, initial y
// before a vowel and listed exceptions count as consonants.
bool StartsWithVowelSound(std::string_view word, const PlusRuleConfig& config);

class HomographResolver {
 public:
  HomographResolver(const HomographDictionary& dictionary,
                    PlusRuleConfig plus_config = PlusRuleConfig::Default());

  // Lookup order: not in dictionary, "plus" cascade, unique coarse match,
  // extended match, default. Never throws for in-range positions.
  Resolution Resolve(std::span<const TaggedToken> sentence,
                     size_t position) const;
  Resolution Resolve(const TaggedToken& token) const;

  // Requires sentence[position] to be "plus" (any case).
  Resolution ResolvePlus(std::span<const TaggedToken> sentence,
                         size_t position) const;

  const HomographDictionary& dictionary() const { return dictionary_; }

 private:
  const HomographDictionary& dictionary_;
  PlusRuleConfig plus_config_;
};

struct HomographRecord {
  size_t sentence_index = 0;
  size_t token_index = 0;  // index within the sentence
  size_t begin = 0;        // byte span in the annotated text
  size_t end = 0;
  std::string surface;
  std::string extended_tag;
  Resolution resolution;
};

// One record per token that resolves to a homograph pronunciation.
std::vector<HomographRecord> AnnotateText(std::string_view text,
                                          const PosProvider& provider,
                                          const TagMap& tag_map,
                                          const HomographResolver& resolver);

struct GoldItem {
  std::string sentence;
  size_t token_index = 0;
  std::string ipa;
};

// TSV: sentence<TAB>token_index<TAB>ipa. Lines starting with '#' skipped.
std::vector<GoldItem> LoadGoldSet(const std::string& path);
std::vector<GoldItem> ParseGoldSet(std::string_view content,
                                   const std::string& source = "gold");

struct MethodStats {
  size_t total = 0;
  size_t correct = 0;
};

struct AccuracyReport {
  size_t total = 0;
  size_t correct = 0;
  double accuracy = 0.0;
  std::map<ResolutionMethod, MethodStats> by_method;
  std::map<PlusRule, MethodStats> by_plus_rule;
  struct Miss {
    GoldItem item;
    Resolution predicted;
    std::string tag;
  };
  std::vector<Miss> misses;
};

// Exact-match accuracy of resolved pronunciations. Each gold sentence is
// tokenized as one unit. Throws EmptyGoldSet, or InvalidArgument when a
// token index is out of range.
AccuracyReport EvaluateAccuracy(std::span<const GoldItem> gold,
                                const PosProvider& provider,
                                const TagMap& tag_map,
                                const HomographResolver& resolver);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_HOMOGRAPH_H_
