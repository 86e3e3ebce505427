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

#ifndef TOUCAN_PREP_FFT_H_
#define TOUCAN_PREP_FFT_H_

#include <complex>
#include <span>
#include <vector>

namespace toucan_prep::internal {

// Real-input forward FFT of a fixed size. Planning is serialized across
// threads; an instance itself must not be shared between threads.
class RealFft {
 public:
  explicit RealFft(size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  size_t size() const { return size_; }
  // input.size() == size(); returns size()/2 + 1 bins.
  const std::vector<std::complex<double>>& Forward(std::span<const double> input);

 private:
  size_t size_;
  double* in_;
  void* out_;
  void* plan_;
  std::vector<std::complex<double>> result_;
};

}  // namespace toucan_prep::internal

#endif  // TOUCAN_PREP_FFT_H_
