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

#include <algorithm>
#include <fstream>

#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"
#include "utf8.h"

namespace toucan_prep {

CleaningReport CleanByLoss(const std::map<std::string, double>& losses,
                           const CleaningConfig& config) {
  if (losses.size() < config.window + 1) {
    throw Error(ErrorCode::kTooFewSamples,
                "cleaning needs at least " + std::to_string(config.window + 1) +
                    " samples, got " + std::to_string(losses.size()));
  }
  std::vector<std::pair<std::string, double>> ranked(losses.begin(),
                                                     losses.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  CleaningReport report;
  size_t top = 0;
  while (ranked.size() - top >= config.window + 1) {
    double sum = 0.0;
    for (size_t i = 1; i <= config.window; ++i) sum += ranked[top + i].second;
    const double next_mean = sum / static_cast<double>(config.window);
    report.trace.push_back({ranked[top].first, ranked[top].second, next_mean});
    if (!(ranked[top].second - next_mean > config.threshold)) break;
    report.removed_ids.push_back(ranked[top].first);
    ++top;
  }
  report.kept_count = ranked.size() - top;
  return report;
}

std::map<std::string, double> LoadLosses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::map<std::string, double> losses;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2) throw ParseError(path, line_no, "expected utt_id<TAB>loss");
    try {
      size_t used = 0;
      const double loss = std::stod(cols[1], &used);
      if (used != cols[1].size()) throw std::invalid_argument("");
      if (!losses.emplace(cols[0], loss).second) {
        throw ParseError(path, line_no, "duplicate utt_id " + cols[0]);
      }
    } catch (const std::logic_error&) {
      throw ParseError(path, line_no, "bad loss '" + cols[1] + "'");
    }
  }
  return losses;
}

}  // namespace toucan_prep
