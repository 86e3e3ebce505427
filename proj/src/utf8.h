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

#ifndef TOUCAN_PREP_SRC_UTF8_H_
#define TOUCAN_PREP_SRC_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace toucan_prep::internal {

// Malformed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(std::string* out, char32_t cp);

std::string NormalizeNfc(std::string_view text);
std::string ToLowerFrench(std::string_view text);

bool IsWhitespace(char32_t cp);
bool IsControl(char32_t cp);
bool IsLetter(char32_t cp);
// Letters, digits and combining marks.
bool IsWordChar(char32_t cp);

std::vector<std::string> SplitString(std::string_view text, char sep);
std::string_view Trim(std::string_view text);

}  // namespace toucan_prep::internal

#endif  // TOUCAN_PREP_SRC_UTF8_H_
