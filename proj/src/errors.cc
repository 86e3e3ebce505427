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

namespace toucan_prep {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIoError: return "io_error";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kFormatError: return "format_error";
    case ErrorCode::kConfigError: return "config_error";
    case ErrorCode::kUnknownSymbol: return "unknown_symbol";
    case ErrorCode::kProviderUnavailable: return "provider_unavailable";
    case ErrorCode::kUnsupportedLanguage: return "unsupported_language";
    case ErrorCode::kOutOfVocabulary: return "out_of_vocabulary";
    case ErrorCode::kDuplicateGrapheme: return "duplicate_grapheme";
    case ErrorCode::kInvariantViolation: return "invariant_violation";
    case ErrorCode::kEmptyGoldSet: return "empty_gold_set";
    case ErrorCode::kSymbolNotInModel: return "symbol_not_in_model";
    case ErrorCode::kTooFewFrames: return "too_few_frames";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kSampleRateMismatch: return "sample_rate_mismatch";
    case ErrorCode::kEmptyAudio: return "empty_audio";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kOverlappingSpans: return "overlapping_spans";
    case ErrorCode::kSpanOutOfBounds: return "span_out_of_bounds";
    case ErrorCode::kTooShort: return "too_short";
    case ErrorCode::kTooFewSamples: return "too_few_samples";
    case ErrorCode::kUnmeasurable: return "unmeasurable";
  }
  return "unknown";
}

UnknownSymbolError::UnknownSymbolError(std::string symbol, size_t position)
    : Error(ErrorCode::kUnknownSymbol,
            "unknown symbol '" + symbol + "' at position " +
                std::to_string(position)),
      symbol_(std::move(symbol)),
      position_(position) {}

ParseError::ParseError(const std::string& source, size_t line,
                       const std::string& what)
    : Error(ErrorCode::kParseError,
            source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace toucan_prep
