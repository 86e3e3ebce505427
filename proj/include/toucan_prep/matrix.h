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

#ifndef TOUCAN_PREP_MATRIX_H_
#define TOUCAN_PREP_MATRIX_H_

#include <cstddef>
#include <string>
#include <vector>

namespace toucan_prep {

// Dense row-major matrix of doubles.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(size_t r, size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(size_t r, size_t c) { return data[r * cols + c]; }
  double operator()(size_t r, size_t c) const { return data[r * cols + c]; }
  const double* row(size_t r) const { return data.data() + r * cols; }
  double* row(size_t r) { return data.data() + r * cols; }

  bool operator==(const Matrix&) const = default;
};

// Portable binary container shared by posteriograms ("PGRM") and feature
// files ("FEAT"):
//   char[4] magic, u32 version, u32 rows, u32 cols, f64 hop_seconds,
//   cols x (u32 byte length + UTF-8 label), rows*cols f32 row-major.
// All integers and floats little-endian.
struct LabeledMatrix {
  Matrix values;
  double hop_seconds = 0.0;
  std::vector<std::string> labels;  // one per column
};

inline constexpr char kPosteriogramMagic[] = "PGRM";
inline constexpr char kFeatureMagic[] = "FEAT";
inline constexpr unsigned kMatrixFileVersion = 1;

// Throws Error(kFormatError) on a bad magic, version or truncated payload
// and Error(kIoError) when the file cannot be opened.
LabeledMatrix ReadMatrixFile(const std::string& path, const char* magic);
LabeledMatrix DecodeMatrixFile(const std::string& bytes, const char* magic,
                               const std::string& source = "matrix");
void WriteMatrixFile(const std::string& path, const char* magic,
                     const LabeledMatrix& matrix);
std::string EncodeMatrixFile(const char* magic, const LabeledMatrix& matrix);

}  // namespace toucan_prep

#endif  // TOUCAN_PREP_MATRIX_H_
