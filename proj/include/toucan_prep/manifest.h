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

#ifndef TOUCAN_PREP_MANIFEST_H_
#define TOUCAN_PREP_MANIFEST_H_

#include <span>
#include <string>
#include <vector>

#include "toucan_prep/corpus.h"

namespace toucan_prep {

// JSONL, one UtteranceRecord per line. Field order is fixed and optional
// fields are omitted when unset, so identical records serialize to
// identical bytes.
std::string RecordToJsonLine(const UtteranceRecord& record);
UtteranceRecord RecordFromJsonLine(std::string_view line,
                                   const std::string& source = "manifest",
                                   size_t line_no = 0);

std::vector<UtteranceRecord> ReadManifest(const std::string& path);
std::vector<UtteranceRecord> ParseManifest(std::string_view content,
                                           const std::string& source);

// Writes records sorted by utt_id. Throws Error(kInvalidArgument) on
// duplicate ids.
void WriteManifest(const std::string& path,
                   std::vector<UtteranceRecord> records);
std::string SerializeManifest(std::vector<UtteranceRecord> records);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_MANIFEST_H_
