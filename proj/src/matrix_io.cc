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

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "toucan_prep/errors.h"
#include "toucan_prep/matrix.h"

namespace toucan_prep {

namespace {

template <typename T>
void PutLe(std::string& out, T value) {
  using U = std::conditional_t<sizeof(T) == 4, uint32_t, uint64_t>;
  const U bits = std::bit_cast<U>(value);
  for (size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
  }
}

class Reader {
 public:
  Reader(const std::string& bytes, const std::string& source)
      : bytes_(bytes), source_(source) {}

  template <typename T>
  T GetLe() {
    using U = std::conditional_t<sizeof(T) == 4, uint32_t, uint64_t>;
    Need(sizeof(U));
    U bits = 0;
    for (size_t i = 0; i < sizeof(U); ++i) {
      bits |= static_cast<U>(static_cast<unsigned char>(bytes_[pos_ + i]))
              << (8 * i);
    }
    pos_ += sizeof(U);
    return std::bit_cast<T>(bits);
  }

  std::string GetBytes(size_t n) {
    Need(n);
    std::string out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  void Need(size_t n) const {
    if (bytes_.size() - pos_ < n) {
      throw Error(ErrorCode::kFormatError, source_ + ": truncated file");
    }
  }

  const std::string& bytes_;
  const std::string& source_;
  size_t pos_ = 0;
};

}  // namespace

std::string EncodeMatrixFile(const char* magic, const LabeledMatrix& matrix) {
  if (matrix.labels.size() != matrix.values.cols) {
    throw Error(ErrorCode::kInvalidArgument,
                "label count does not match column count");
  }
  std::string out(magic, 4);
  PutLe<uint32_t>(out, kMatrixFileVersion);
  PutLe<uint32_t>(out, static_cast<uint32_t>(matrix.values.rows));
  PutLe<uint32_t>(out, static_cast<uint32_t>(matrix.values.cols));
  PutLe<double>(out, matrix.hop_seconds);
  for (const std::string& label : matrix.labels) {
    PutLe<uint32_t>(out, static_cast<uint32_t>(label.size()));
    out += label;
  }
  out.reserve(out.size() + 4 * matrix.values.data.size());
  for (double v : matrix.values.data) PutLe<float>(out, static_cast<float>(v));
  return out;
}

LabeledMatrix DecodeMatrixFile(const std::string& bytes, const char* magic,
                               const std::string& source) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), magic, 4) != 0) {
    throw Error(ErrorCode::kFormatError,
                source + ": bad magic, expected " + std::string(magic, 4));
  }
  Reader reader(bytes, source);
  reader.GetBytes(4);
  const uint32_t version = reader.GetLe<uint32_t>();
  if (version != kMatrixFileVersion) {
    throw Error(ErrorCode::kFormatError,
                source + ": unsupported version " + std::to_string(version));
  }
  const uint32_t rows = reader.GetLe<uint32_t>();
  const uint32_t cols = reader.GetLe<uint32_t>();
  LabeledMatrix out;
  out.hop_seconds = reader.GetLe<double>();
  for (uint32_t c = 0; c < cols; ++c) {
    const uint32_t length = reader.GetLe<uint32_t>();
    out.labels.push_back(reader.GetBytes(length));
  }
  out.values = Matrix(rows, cols);
  for (double& v : out.values.data) v = reader.GetLe<float>();
  if (!reader.AtEnd()) {
    throw Error(ErrorCode::kFormatError, source + ": trailing bytes");
  }
  return out;
}

LabeledMatrix ReadMatrixFile(const std::string& path, const char* magic) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return DecodeMatrixFile(buffer.str(), magic, path);
}

void WriteMatrixFile(const std::string& path, const char* magic,
                     const LabeledMatrix& matrix) {
  const std::string bytes = EncodeMatrixFile(magic, matrix);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace toucan_prep
