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

#include "toucan_prep/alignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "toucan_prep/errors.h"

namespace toucan_prep {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

void Posteriogram::Validate(double tolerance) const {
  if (values.rows < 1 || values.cols < 1) {
    throw Error(ErrorCode::kFormatError, "posteriogram needs T >= 1 and C >= 1");
  }
  if (class_symbols.size() != values.cols) {
    throw Error(ErrorCode::kFormatError,
                "posteriogram has " + std::to_string(class_symbols.size()) +
                    " symbols for " + std::to_string(values.cols) + " classes");
  }
  for (size_t t = 0; t < values.rows; ++t) {
    const double* row = values.row(t);
    const double peak = *std::max_element(row, row + values.cols);
    double sum = 0.0;
    for (size_t c = 0; c < values.cols; ++c) sum += std::exp(row[c] - peak);
    const double lse = peak + std::log(sum);
    if (!(std::abs(lse) <= tolerance)) {
      throw Error(ErrorCode::kFormatError,
                  "posteriogram row " + std::to_string(t) +
                      " is not a log-distribution (logsumexp " +
                      std::to_string(lse) + ")");
    }
  }
}

Posteriogram Posteriogram::Read(const std::string& path) {
  LabeledMatrix file = ReadMatrixFile(path, kPosteriogramMagic);
  Posteriogram out{std::move(file.values), file.hop_seconds,
                   std::move(file.labels)};
  try {
    out.Validate();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  return out;
}

void Posteriogram::Write(const std::string& path) const {
  WriteMatrixFile(path, kPosteriogramMagic, {values, hop_seconds, class_symbols});
}

Matrix Reorder(const Posteriogram& posteriogram,
               std::span<const PhonemeToken> transcript) {
  std::map<std::string_view, size_t> column_of;
  for (size_t c = 0; c < posteriogram.class_symbols.size(); ++c) {
    column_of.emplace(posteriogram.class_symbols[c], c);
  }
  const double floor = std::log(kProbabilityFloor);
  Matrix out(posteriogram.values.rows, transcript.size());
  for (size_t j = 0; j < transcript.size(); ++j) {
    auto it = column_of.find(transcript[j].symbol);
    if (it == column_of.end()) {
      throw Error(ErrorCode::kSymbolNotInModel,
                  "symbol '" + transcript[j].symbol + "' not in model");
    }
    for (size_t t = 0; t < out.rows; ++t) {
      out(t, j) = std::max(floor, posteriogram.values(t, it->second));
    }
  }
  return out;
}

AlignmentPath MonotonicAlignmentSearch(const Matrix& scores) {
  const size_t frames = scores.rows;
  const size_t phones = scores.cols;
  if (phones == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty transcript");
  }
  if (frames < phones) {
    throw Error(ErrorCode::kTooFewFrames,
                std::to_string(frames) + " frames for " +
                    std::to_string(phones) + " phones");
  }
  Matrix best(frames, phones, kNegInf);
  best(0, 0) = scores(0, 0);
  for (size_t t = 1; t < frames; ++t) {
    // Phone j is reachable at frame t only if j <= t and enough frames
    // remain for the phones after it.
    const size_t lo = phones - std::min(phones, frames - t);
    const size_t hi = std::min(t, phones - 1);
    for (size_t j = lo; j <= hi; ++j) {
      const double stay = best(t - 1, j);
      const double advance = j > 0 ? best(t - 1, j - 1) : kNegInf;
      best(t, j) = scores(t, j) + std::max(stay, advance);
    }
  }
  AlignmentPath path;
  path.durations.assign(phones, 0);
  path.score = best(frames - 1, phones - 1);
  size_t j = phones - 1;
  for (size_t t = frames - 1;; --t) {
    ++path.durations[j];
    if (t == 0) break;
    if (j > 0 && (j == t || best(t - 1, j - 1) >= best(t - 1, j))) --j;
  }
  return path;
}

AlignmentPath DijkstraAlign(const Matrix& scores) {
  const size_t frames = scores.rows;
  const size_t phones = scores.cols;
  if (frames == 0 || phones == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty score matrix");
  }
  // Every path visits exactly one node per frame, so shifting all costs by
  // the same constant keeps the argmin and makes them non-negative.
  const double top = *std::max_element(scores.data.begin(), scores.data.end());
  auto cost = [&](size_t t, size_t j) { return top - scores(t, j); };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(frames * phones, inf);
  std::vector<size_t> parent(frames * phones, SIZE_MAX);
  using Item = std::tuple<double, size_t, size_t>;  // cost, frame, phone
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (size_t j = 0; j < phones; ++j) {
    dist[j] = cost(0, j);
    queue.emplace(dist[j], 0, j);
  }
  while (!queue.empty()) {
    const auto [d, t, j] = queue.top();
    queue.pop();
    if (d > dist[t * phones + j] || t + 1 == frames) continue;
    for (size_t k = j; k < phones; ++k) {
      const size_t next = (t + 1) * phones + k;
      const double candidate = d + cost(t + 1, k);
      if (candidate < dist[next]) {
        dist[next] = candidate;
        parent[next] = t * phones + j;
        queue.emplace(candidate, t + 1, k);
      }
    }
  }
  size_t end = (frames - 1) * phones;
  for (size_t j = 1; j < phones; ++j) {
    if (dist[(frames - 1) * phones + j] < dist[end]) {
      end = (frames - 1) * phones + j;
    }
  }
  AlignmentPath path;
  path.durations.assign(phones, 0);
  for (size_t node = end; node != SIZE_MAX; node = parent[node]) {
    ++path.durations[node % phones];
    path.score += scores(node / phones, node % phones);
  }
  return path;
}

double ZeroRate(std::span<const int> durations) {
  if (durations.empty()) return 0.0;
  const auto zeros = std::count(durations.begin(), durations.end(), 0);
  return static_cast<double>(zeros) / static_cast<double>(durations.size());
}

SkipRateReport CompareSkipRate(std::span<const Matrix> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "empty corpus");
  SkipRateReport report;
  size_t mas_zeros = 0;
  size_t dijkstra_zeros = 0;
  for (const Matrix& scores : corpus) {
    const AlignmentPath mas = MonotonicAlignmentSearch(scores);
    const AlignmentPath dijkstra = DijkstraAlign(scores);
    mas_zeros += std::count(mas.durations.begin(), mas.durations.end(), 0);
    dijkstra_zeros +=
        std::count(dijkstra.durations.begin(), dijkstra.durations.end(), 0);
    report.phones += scores.cols;
    ++report.matrices;
  }
  const double phones = static_cast<double>(report.phones);
  report.mas_zero_rate = static_cast<double>(mas_zeros) / phones;
  report.dijkstra_zero_rate = static_cast<double>(dijkstra_zeros) / phones;
  return report;
}

std::vector<double> DurationsToSeconds(std::span<const int> durations,
                                       double hop_seconds) {
  if (!(hop_seconds > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "hop must be positive");
  }
  std::vector<double> out;
  out.reserve(durations.size());
  for (int d : durations) out.push_back(d * hop_seconds);
  return out;
}

}  // namespace toucan_prep
