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

#ifndef TOUCAN_PREP_ERRORS_H_
#define TOUCAN_PREP_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace toucan_prep {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  kParseError,
  kFormatError,
  kConfigError,
  // phoneme front-end
  kUnknownSymbol,
  kProviderUnavailable,
  kUnsupportedLanguage,
  kOutOfVocabulary,
  // homographs
  kDuplicateGrapheme,
  kInvariantViolation,
  kEmptyGoldSet,
  // alignment
  kSymbolNotInModel,
  kTooFewFrames,
  kEmptyCorpus,
  // audio and corpus
  kSampleRateMismatch,
  kEmptyAudio,
  kLengthMismatch,
  kOverlappingSpans,
  kSpanOutOfBounds,
  kTooShort,
  kTooFewSamples,
  kUnmeasurable,
};

// Stable snake_case identifier, used in JSON diagnostics.
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception type; callers
// dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by tokenize/vectorize for characters missing from the feature table.
class UnknownSymbolError : public Error {
 public:
  UnknownSymbolError(std::string symbol, size_t position);

  const std::string& symbol() const { return symbol_; }
  size_t position() const { return position_; }

 private:
  std::string symbol_;
  size_t position_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, size_t line, const std::string& what);

  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_ERRORS_H_
