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

#include "toucan_prep/frontend.h"

#include <map>

#include "toucan_prep/text.h"

namespace toucan_prep {

FrontendResult PhonemizeText(std::string_view raw, const G2pProvider& provider,
                             const PosProvider& tagger, const TagMap& tag_map,
                             const HomographResolver& resolver,
                             std::string_view lang) {
  FrontendResult result;
  result.cleaned_text = CleanText(raw);
  if (result.cleaned_text.empty()) return result;
  if (!provider.SupportsLanguage(lang)) {
    // Surface the provider's own error for unsupported languages.
    Phonemize(result.cleaned_text, provider, lang);
  }
  result.homographs =
      AnnotateText(result.cleaned_text, tagger, tag_map, resolver);
  std::map<size_t, const std::string*> spliced;
  for (const HomographRecord& record : result.homographs) {
    spliced[record.begin] = &record.resolution.pronunciation;
  }
  for (const TextToken& token : TokenizeWords(result.cleaned_text)) {
    if (token.is_punctuation) {
      result.ipa += token.surface;
      continue;
    }
    if (!result.ipa.empty()) result.ipa += ' ';
    auto it = spliced.find(token.begin);
    result.ipa += it != spliced.end() ? *it->second
                                      : Phonemize(token.surface, provider, lang);
  }
  return result;
}

}  // namespace toucan_prep
