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

#ifndef TOUCAN_PREP_G2P_PROVIDER_H_
#define TOUCAN_PREP_G2P_PROVIDER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace toucan_prep {

// Boundary to a grapheme-to-phoneme backend. Implementations must be
// deterministic: identical text and language give identical output.
class G2pProvider {
 public:
  virtual ~G2pProvider() = default;

  virtual std::string_view name() const = 0;
  virtual bool SupportsLanguage(std::string_view lang) const = 0;
  // Returns IPA with modifier characters; words separated by spaces and
  // punctuation passed through.
  virtual std::string Phonemize(std::string_view text,
                                std::string_view lang) const = 0;
};

// Checks language support (UnsupportedLanguage) and short-circuits empty
// input before calling the provider.
std::string Phonemize(std::string_view text, const G2pProvider& provider,
                      std::string_view lang = "fr");

// Word-level lexicon lookup. Lexicon file: word<TAB>ipa per line; lookups
// are case-insensitive. Unknown words raise OutOfVocabulary.
class LexiconG2pProvider : public G2pProvider {
 public:
  explicit LexiconG2pProvider(std::map<std::string, std::string> lexicon,
                              std::vector<std::string> languages = {"fr"});
  static LexiconG2pProvider Load(const std::string& path);

  std::string_view name() const override { return "lexicon"; }
  bool SupportsLanguage(std::string_view lang) const override;
  std::string Phonemize(std::string_view text,
                        std::string_view lang) const override;

  // Pronunciation of one word, if present.
  const std::string* Lookup(std::string_view word) const;
  size_t size() const { return lexicon_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> lexicon_;
  std::vector<std::string> languages_;
};

// Spawns an external phonemizer as `program --lang <lang> --ipa`, writes
// the text to its stdin and reads IPA from stdout. A missing program,
// nonzero exit or signal raises ProviderUnavailable. The first call sets
// SIGPIPE to ignored for the whole process.
class CommandG2pProvider : public G2pProvider {
 public:
  explicit CommandG2pProvider(std::string program,
                              std::vector<std::string> languages = {"fr"});

  std::string_view name() const override { return program_; }
  bool SupportsLanguage(std::string_view lang) const override;
  std::string Phonemize(std::string_view text,
                        std::string_view lang) const override;

 private:
  std::string program_;
  std::vector<std::string> languages_;
};

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_G2P_PROVIDER_H_
