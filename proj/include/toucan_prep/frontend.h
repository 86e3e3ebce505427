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

#ifndef TOUCAN_PREP_FRONTEND_H_
#define TOUCAN_PREP_FRONTEND_H_

#include <string>
#include <string_view>
#include <vector>

#include "toucan_prep/g2p_provider.h"
#include "toucan_prep/homograph.h"
#include "toucan_prep/pos_tagging.h"

namespace toucan_prep {

struct FrontendResult {
  std::string cleaned_text;
  std::string ipa;
  std::vector<HomographRecord> homographs;
};

// clean_text, then per-word phonemization in which every homograph is
// replaced by its resolved pronunciation. Words are separated by spaces;
// punctuation is attached to the preceding word.
FrontendResult PhonemizeText(std::string_view raw, const G2pProvider& provider,
                             const PosProvider& tagger, const TagMap& tag_map,
                             const HomographResolver& resolver,
                             std::string_view lang = "fr");

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_FRONTEND_H_
