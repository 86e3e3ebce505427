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

// Text normalization and French word tokenization shared by the phonemizer
// adapters, the homograph resolver and pause-marker validation.

#ifndef TOUCAN_PREP_TEXT_H_
#define TOUCAN_PREP_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toucan_prep {

// NFC-normalizes, drops control characters, maps typographic quotes and
// dashes to ASCII, collapses every Unicode whitespace run to one space and
// strips both ends. Spaces on the inner side of guillemets are dropped.
std::string CleanText(std::string_view raw);

struct TextToken {
  std::string surface;
  size_t begin = 0;  // byte offsets into the tokenized text
  size_t end = 0;
  bool is_punctuation = false;
};

// Whitespace/punctuation split with French elision handling: "l'homme"
// yields "l'" and "homme"; "aujourd'hui" and "peut-être" stay whole.
std::vector<TextToken> TokenizeWords(std::string_view text);

// Sentence boundaries fall after '.', '!', '?' and '…' tokens.
std::vector<std::vector<TextToken>> SplitSentences(std::string_view text);

// Characters that act as pause markers in transcripts: , ; - "
bool IsPauseMarkerChar(char c);

// True when text[pos] is a pause marker character standing on its own.
// A hyphen joining two letters ("peut-être") is not a marker.
bool IsPauseMarkerAt(std::string_view text, size_t pos);

// True for punctuation that ends a clause (used by the `plus` negation rule).
bool IsClauseDelimiter(std::string_view token);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_TEXT_H_
