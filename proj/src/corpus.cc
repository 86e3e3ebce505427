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

#include <cmath>

#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"

namespace toucan_prep {

namespace {

std::string SpanLabel(size_t i) { return "span " + std::to_string(i); }

}  // namespace

std::vector<UtteranceRecord> SplitChapters(
    const std::string& chapter_id, const std::string& audio_path,
    double chapter_seconds, std::span<const SegmentSpan> spans,
    const std::set<size_t>& paragraph_breaks) {
  for (size_t i = 0; i < spans.size(); ++i) {
    const SegmentSpan& span = spans[i];
    if (span.start < 0.0 || span.end > chapter_seconds || span.end <= span.start) {
      throw Error(ErrorCode::kSpanOutOfBounds,
                  SpanLabel(i) + " outside chapter " + chapter_id);
    }
    if (i > 0 && span.start < spans[i - 1].end) {
      throw Error(ErrorCode::kOverlappingSpans,
                  SpanLabel(i) + " overlaps " + SpanLabel(i - 1) + " in " +
                      chapter_id);
    }
  }
  std::vector<UtteranceRecord> records;
  auto emit = [&](size_t first, size_t last) {
    UtteranceRecord record;
    char id[32];
    std::snprintf(id, sizeof(id), "_%04zu", records.size());
    record.utt_id = chapter_id + id;
    record.audio_path = audio_path;
    record.start = spans[first].start;
    record.end = spans[last].end;
    for (size_t i = first; i <= last; ++i) {
      if (!record.transcript.empty()) record.transcript += ' ';
      record.transcript += spans[i].text;
    }
    records.push_back(std::move(record));
  };
  size_t first = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    const bool boundary = paragraph_breaks.empty() ||
                          paragraph_breaks.contains(i) || i + 1 == spans.size();
    if (boundary) {
      emit(first, i);
      first = i + 1;
    }
  }
  return records;
}

std::vector<UtteranceRecord> MakeJointUtterances(
    std::span<const UtteranceRecord> records, const JoinConfig& config) {
  constexpr double kSlack = 1e-9;
  std::vector<UtteranceRecord> joints;
  for (size_t first = 0; first < records.size(); ++first) {
    double total = records[first].duration();
    size_t last = first;
    while (last + 1 < records.size() &&
           total + config.pause_seconds + records[last + 1].duration() <=
               config.max_total_seconds + kSlack) {
      total += config.pause_seconds + records[last + 1].duration();
      ++last;
    }
    if (last == first) continue;
    UtteranceRecord joint;
    joint.utt_id = records[first].utt_id + "+" + records[last].utt_id;
    joint.start = 0.0;
    joint.end = total;
    joint.is_joint = true;
    for (size_t i = first; i <= last; ++i) {
      if (!joint.transcript.empty()) joint.transcript += ' ';
      joint.transcript += records[i].transcript;
      joint.source_ids.push_back(records[i].utt_id);
    }
    joints.push_back(std::move(joint));
  }
  return joints;
}

Audio ConcatenateWithPauses(std::span<const Audio> parts, double pause_seconds) {
  Audio out;
  if (parts.empty()) return out;
  out.sample_rate = parts.front().sample_rate;
  const size_t gap =
      static_cast<size_t>(std::llround(pause_seconds * out.sample_rate));
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].sample_rate != out.sample_rate) {
      throw Error(ErrorCode::kSampleRateMismatch,
                  "joint parts have different sample rates");
    }
    if (i > 0) out.samples.insert(out.samples.end(), gap, 0.0);
    out.samples.insert(out.samples.end(), parts[i].samples.begin(),
                       parts[i].samples.end());
  }
  return out;
}

}  // namespace toucan_prep
