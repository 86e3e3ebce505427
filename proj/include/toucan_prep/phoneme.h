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

#ifndef TOUCAN_PREP_PHONEME_H_
#define TOUCAN_PREP_PHONEME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toucan_prep {

enum class Tone : uint8_t { kNone = 0, kLevel1, kLevel2, kLevel3, kLevel4, kLevel5 };

// One base IPA segment with the nonsegmental modifiers folded in.
struct PhonemeToken {
  std::string symbol;
  bool stress = false;
  bool lengthened = false;
  bool shortened = false;
  Tone tone = Tone::kNone;
  bool is_silence = false;
  int word_index = 0;

  bool operator==(const PhonemeToken&) const = default;
};

// Binary articulatory encoding; the layout is FeatureTable::DimensionNames().
struct ArticulatoryVector {
  std::vector<uint8_t> values;

  bool operator==(const ArticulatoryVector&) const = default;
};

enum class ModifierFlag : uint8_t {
  kStress,
  kLengthened,
  kShortened,
  kTone1,
  kTone2,
  kTone3,
  kTone4,
  kTone5,
  kIgnore,  // linking marks and similar, dropped by the tokenizer
};

enum class AttachDirection : uint8_t { kPrevious, kNext };

struct Modifier {
  char32_t symbol;
  ModifierFlag flag;
  AttachDirection direction;
};

// Immutable lookup table from IPA segments to articulatory features, plus
// the modifier attachment table. Loaded from two TSV files:
//   features:  symbol<TAB>feature=1,feature=1,...
//   modifiers: symbol<TAB>flag<TAB>{prev,next}
class FeatureTable {
 public:
  static FeatureTable Load(const std::string& features_path,
                           const std::string& modifiers_path);
  static FeatureTable Parse(std::string_view features_tsv,
                            std::string_view modifiers_tsv);
  // Table shipped under data/.
  static const FeatureTable& Default();

  static const std::vector<std::string>& DimensionNames();
  static size_t Dimension() { return DimensionNames().size(); }
  // Throws Error(kInvalidArgument) for unknown names.
  static size_t DimensionIndex(std::string_view name);

  bool HasSymbol(std::string_view symbol) const;
  // Segmental features of a symbol, or nullptr.
  const std::vector<uint8_t>* Features(std::string_view symbol) const;
  bool IsSilence(std::string_view symbol) const;
  bool IsVowel(std::string_view symbol) const;
  bool IsConsonant(std::string_view symbol) const;
  bool IsVoiced(std::string_view symbol) const;

  const Modifier* FindModifier(char32_t cp) const;

  // Length in code points of the longest table symbol starting at
  // text[pos], or 0 if none matches.
  size_t LongestMatch(std::u32string_view text, size_t pos) const;

  std::vector<std::string> Symbols() const;
  const std::string& version() const { return version_; }

 private:
  std::map<std::string, std::vector<uint8_t>, std::less<>> features_;
  std::map<char32_t, Modifier> modifiers_;
  size_t max_symbol_length_ = 0;
  std::string version_;
};

// Splits an IPA string into tokens. Modifiers fold into the adjacent
// segment in the direction the table gives; whitespace separates words;
// punctuation becomes silence tokens. A modifier with nothing to attach
// to (word edge, silence) is dropped. Throws UnknownSymbolError with the
// code point index of the offending character.
std::vector<PhonemeToken> TokenizeIpa(std::string_view ipa,
                                      const FeatureTable& table);

// Inverse of TokenizeIpa up to modifier spelling: one IPA string with
// canonical modifier characters and spaces between words.
std::string RenderIpa(std::span<const PhonemeToken> tokens);

// Throws UnknownSymbolError (position = token index).
ArticulatoryVector Vectorize(const PhonemeToken& token,
                             const FeatureTable& table);
std::vector<ArticulatoryVector> Vectorize(std::span<const PhonemeToken> tokens,
                                          const FeatureTable& table);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_PHONEME_H_
