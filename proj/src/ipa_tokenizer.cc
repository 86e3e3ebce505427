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

#include "toucan_prep/errors.h"
#include "toucan_prep/phoneme.h"
#include "utf8.h"

namespace toucan_prep {

namespace {

void ApplyModifier(ModifierFlag flag, PhonemeToken* token) {
  switch (flag) {
    case ModifierFlag::kStress:
      token->stress = true;
      break;
    case ModifierFlag::kLengthened:
      token->lengthened = true;
      token->shortened = false;
      break;
    case ModifierFlag::kShortened:
      token->shortened = true;
      token->lengthened = false;
      break;
    case ModifierFlag::kTone1: token->tone = Tone::kLevel1; break;
    case ModifierFlag::kTone2: token->tone = Tone::kLevel2; break;
    case ModifierFlag::kTone3: token->tone = Tone::kLevel3; break;
    case ModifierFlag::kTone4: token->tone = Tone::kLevel4; break;
    case ModifierFlag::kTone5: token->tone = Tone::kLevel5; break;
    case ModifierFlag::kIgnore: break;
  }
}

}  // namespace

std::vector<PhonemeToken> TokenizeIpa(std::string_view ipa,
                                      const FeatureTable& table) {
  const std::u32string cps = internal::DecodeUtf8(ipa);
  std::vector<PhonemeToken> tokens;
  std::vector<ModifierFlag> pending;
  bool can_attach_previous = false;
  bool word_has_tokens = false;
  int word = 0;
  size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i];
    if (internal::IsWhitespace(cp)) {
      if (word_has_tokens) ++word;
      word_has_tokens = false;
      can_attach_previous = false;
      pending.clear();
      ++i;
      continue;
    }
    if (const Modifier* modifier = table.FindModifier(cp)) {
      if (modifier->direction == AttachDirection::kNext) {
        pending.push_back(modifier->flag);
      } else if (can_attach_previous) {
        ApplyModifier(modifier->flag, &tokens.back());
      }
      ++i;
      continue;
    }
    const size_t len = table.LongestMatch(cps, i);
    if (len == 0) {
      throw UnknownSymbolError(internal::EncodeUtf8(std::u32string(1, cp)), i);
    }
    PhonemeToken token;
    token.symbol = internal::EncodeUtf8(std::u32string_view(cps).substr(i, len));
    token.word_index = word;
    if (table.IsSilence(token.symbol)) {
      token.is_silence = true;
      can_attach_previous = false;
    } else {
      for (ModifierFlag flag : pending) ApplyModifier(flag, &token);
      can_attach_previous = true;
    }
    pending.clear();
    word_has_tokens = true;
    tokens.push_back(std::move(token));
    i += len;
  }
  return tokens;
}

std::string RenderIpa(std::span<const PhonemeToken> tokens) {
  static constexpr const char* kToneLetters[] = {"", "˩", "˨", "˧", "˦", "˥"};
  std::string out;
  int word = tokens.empty() ? 0 : tokens.front().word_index;
  for (const PhonemeToken& token : tokens) {
    if (token.word_index != word && !out.empty()) out.push_back(' ');
    word = token.word_index;
    if (token.stress) out += "ˈ";
    out += token.symbol;
    if (token.lengthened) out += "ː";
    if (token.shortened) out += "̆";
    out += kToneLetters[static_cast<int>(token.tone)];
  }
  return out;
}

ArticulatoryVector Vectorize(const PhonemeToken& token,
                             const FeatureTable& table) {
  const std::vector<uint8_t>* row = table.Features(token.symbol);
  if (row == nullptr) throw UnknownSymbolError(token.symbol, 0);
  ArticulatoryVector vector{*row};
  if (token.is_silence || table.IsSilence(token.symbol)) return vector;
  static const size_t kStress = FeatureTable::DimensionIndex("stress");
  static const size_t kLengthened = FeatureTable::DimensionIndex("lengthened");
  static const size_t kShortened = FeatureTable::DimensionIndex("shortened");
  static const size_t kTone1 = FeatureTable::DimensionIndex("tone1");
  vector.values[kStress] = token.stress ? 1 : 0;
  vector.values[kLengthened] = token.lengthened ? 1 : 0;
  vector.values[kShortened] = token.shortened ? 1 : 0;
  if (token.tone != Tone::kNone) {
    vector.values[kTone1 + static_cast<size_t>(token.tone) - 1] = 1;
  }
  return vector;
}

std::vector<ArticulatoryVector> Vectorize(std::span<const PhonemeToken> tokens,
                                          const FeatureTable& table) {
  std::vector<ArticulatoryVector> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!table.HasSymbol(tokens[i].symbol)) {
      throw UnknownSymbolError(tokens[i].symbol, i);
    }
    out.push_back(Vectorize(tokens[i], table));
  }
  return out;
}

}  // namespace toucan_prep
