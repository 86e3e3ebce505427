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

#include "fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace toucan_prep::internal {

namespace {

std::mutex& PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

RealFft::RealFft(size_t size) : size_(size), result_(size / 2 + 1) {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  in_ = fftw_alloc_real(size);
  out_ = fftw_alloc_complex(size / 2 + 1);
  plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(size), in_,
                               static_cast<fftw_complex*>(out_),
                               FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(in_);
  fftw_free(out_);
}

const std::vector<std::complex<double>>& RealFft::Forward(
    std::span<const double> input) {
  std::copy(input.begin(), input.end(), in_);
  fftw_execute(static_cast<fftw_plan>(plan_));
  const auto* out = static_cast<const fftw_complex*>(out_);
  for (size_t k = 0; k < result_.size(); ++k) {
    result_[k] = {out[k][0], out[k][1]};
  }
  return result_;
}

}  // namespace toucan_prep::internal
