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

#include "toucan_prep/text.h"

#include <algorithm>
#include <array>

#include "utf8.h"

namespace toucan_prep {

using internal::AppendUtf8;
using internal::DecodeUtf8;

namespace {

constexpr char32_t kGuillemetOpen = U'«';
constexpr char32_t kGuillemetClose = U'»';

// Invisible format characters that survive NFC but carry no text.
bool IsInvisibleFormat(char32_t cp) {
  return cp == 0x200B || cp == 0x200C || cp == 0x200D || cp == 0x2060 ||
         cp == 0xFEFF || cp == 0x00AD;
}

// Returns 0 when cp has no ASCII mapping.
char MapTypography(char32_t cp) {
  switch (cp) {
    case U'“': case U'”': case U'„': case U'‟':
    case U'″': case kGuillemetOpen: case kGuillemetClose:
      return '"';
    case U'‘': case U'’': case U'‚': case U'‛':
    case U'′': case U'‹': case U'›':
      return '\'';
    case U'‐': case U'‑': case U'‒': case U'–':
    case U'—': case U'―': case U'−':
      return '-';
    default:
      return 0;
  }
}

struct CodePoint {
  char32_t value;
  size_t begin;
  size_t end;
};

std::vector<CodePoint> DecodeWithOffsets(std::string_view text) {
  std::vector<CodePoint> out;
  size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    size_t len = c < 0x80 ? 1 : (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3
                                                   : (c & 0xF8) == 0xF0 ? 4
                                                                        : 1;
    len = std::min(len, text.size() - i);
    std::u32string decoded = DecodeUtf8(text.substr(i, len));
    out.push_back({decoded.empty() ? U'�' : decoded[0], i, i + len});
    i += len;
  }
  return out;
}

bool IsApostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

bool IsSentenceFinal(std::string_view surface) {
  if (surface.empty()) return false;
  std::u32string cps = DecodeUtf8(surface);
  return std::all_of(cps.begin(), cps.end(), [](char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…';
  });
}

// Elided forms that detach from the following word.
bool IsElisionPrefix(std::string_view lowered) {
  static constexpr std::array<std::string_view, 14> kPrefixes = {
      "l", "d", "j", "m", "n", "s", "t", "c", "qu", "jusqu", "lorsqu",
      "puisqu", "quoiqu", "presqu"};
  return std::find(kPrefixes.begin(), kPrefixes.end(), lowered) !=
         kPrefixes.end();
}

}  // namespace

std::string CleanText(std::string_view raw) {
  const std::u32string cps = DecodeUtf8(internal::NormalizeNfc(raw));
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  bool after_opener = false;
  for (char32_t cp : cps) {
    if (internal::IsWhitespace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (internal::IsControl(cp) || IsInvisibleFormat(cp)) continue;
    if (cp == kGuillemetClose) pending_space = false;
    if (pending_space && !after_opener) out.push_back(' ');
    pending_space = false;
    after_opener = cp == kGuillemetOpen;
    if (cp == U'…') {
      out += "...";
    } else if (char mapped = MapTypography(cp); mapped != 0) {
      out.push_back(mapped);
    } else {
      AppendUtf8(&out, cp);
    }
  }
  return out;
}

std::vector<TextToken> TokenizeWords(std::string_view text) {
  const std::vector<CodePoint> cps = DecodeWithOffsets(text);
  std::vector<TextToken> tokens;
  auto is_word = [&](size_t k) {
    return k < cps.size() && internal::IsWordChar(cps[k].value);
  };
  size_t i = 0;
  while (i < cps.size()) {
    if (internal::IsWhitespace(cps[i].value)) {
      ++i;
      continue;
    }
    if (is_word(i)) {
      const size_t start = i;
      while (i < cps.size()) {
        if (is_word(i)) {
          ++i;
        } else if (cps[i].value == U'-' && i > start && is_word(i + 1)) {
          ++i;
        } else if (IsApostrophe(cps[i].value) && is_word(i + 1)) {
          std::string prefix(
              text.substr(cps[start].begin, cps[i].begin - cps[start].begin));
          if (IsElisionPrefix(internal::ToLowerFrench(prefix))) {
            ++i;
            break;
          }
          ++i;
        } else {
          break;
        }
      }
      const size_t begin = cps[start].begin;
      const size_t end = cps[i - 1].end;
      tokens.push_back({std::string(text.substr(begin, end - begin)), begin,
                        end, false});
      continue;
    }
    // Punctuation: runs of one repeated character form a single token.
    const size_t start = i;
    while (i + 1 < cps.size() && cps[i + 1].value == cps[start].value) ++i;
    ++i;
    const size_t begin = cps[start].begin;
    const size_t end = cps[i - 1].end;
    tokens.push_back(
        {std::string(text.substr(begin, end - begin)), begin, end, true});
  }
  return tokens;
}

std::vector<std::vector<TextToken>> SplitSentences(std::string_view text) {
  std::vector<std::vector<TextToken>> sentences;
  std::vector<TextToken> current;
  for (TextToken& token : TokenizeWords(text)) {
    const bool final = token.is_punctuation && IsSentenceFinal(token.surface);
    current.push_back(std::move(token));
    if (final) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

bool IsPauseMarkerChar(char c) {
  return c == ',' || c == ';' || c == '-' || c == '"';
}

bool IsPauseMarkerAt(std::string_view text, size_t pos) {
  if (pos >= text.size() || !IsPauseMarkerChar(text[pos])) return false;
  if (text[pos] != '-') return true;
  // Hyphen inside a compound word.
  if (pos == 0) return true;
  size_t prev = pos;
  do {
    --prev;
  } while (prev > 0 &&
           (static_cast<unsigned char>(text[prev]) & 0xC0) == 0x80);
  const std::u32string before = DecodeUtf8(text.substr(prev, pos - prev));
  const std::u32string after = DecodeUtf8(text.substr(pos + 1, 4));
  const bool joins = !before.empty() && !after.empty() &&
                     internal::IsWordChar(before.back()) &&
                     internal::IsWordChar(after.front());
  return !joins;
}

bool IsClauseDelimiter(std::string_view token) {
  if (token.empty()) return false;
  std::u32string cps = DecodeUtf8(token);
  return std::all_of(cps.begin(), cps.end(), [](char32_t cp) {
    return cp == U',' || cp == U';' || cp == U':' || cp == U'.' ||
           cp == U'!' || cp == U'?' || cp == U'…' || cp == U'(' ||
           cp == U')';
  });
}

}  // namespace toucan_prep
