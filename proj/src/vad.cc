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
#include <cmath>
#include <fstream>

#include "toucan_prep/corpus.h"
#include "toucan_prep/errors.h"
#include "utf8.h"

namespace toucan_prep {

std::vector<uint8_t> EnergyVad(const Audio& audio, const MelConfig& mel,
                               const VadConfig& config) {
  const FrameTrack energy = ExtractEnergy(audio, mel);
  std::vector<double> db(energy.values.size());
  for (size_t t = 0; t < db.size(); ++t) {
    db[t] = 20.0 * std::log10(std::max(1e-10, energy.values[t]));
  }
  std::vector<double> sorted = db;
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  const double median =
      n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  const double enter = std::max(config.enter_floor_dbfs, median + config.enter_offset_db);
  const double exit = std::max(config.exit_floor_dbfs, median + config.exit_offset_db);
  std::vector<uint8_t> labels(db.size(), 0);
  bool speech = false;
  for (size_t t = 0; t < db.size(); ++t) {
    speech = speech ? db[t] >= exit : db[t] >= enter;
    labels[t] = speech ? 1 : 0;
  }
  return labels;
}

std::map<std::string, std::vector<uint8_t>> LoadVadLabels(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::map<std::string, std::vector<uint8_t>> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2) {
      throw ParseError(path, line_no, "expected utt_id<TAB>labels");
    }
    std::vector<uint8_t> labels;
    labels.reserve(cols[1].size());
    for (char c : cols[1]) {
      if (c != '0' && c != '1') {
        throw ParseError(path, line_no, "labels must be 0 or 1");
      }
      labels.push_back(c == '1');
    }
    out[cols[0]] = std::move(labels);
  }
  return out;
}

}  // namespace toucan_prep
