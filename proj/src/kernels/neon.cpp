// Copyright 2026 The pmtnsched Authors.
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

#include <cstddef>

#include "pmtn/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace pmtn::kernels {
namespace {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t y0 = vld1q_f64(y + i);
    float64x2_t y1 = vld1q_f64(y + i + 2);
    y0 = vfmaq_f64(y0, va, vld1q_f64(x + i));
    y1 = vfmaq_f64(y1, va, vld1q_f64(x + i + 2));
    vst1q_f64(y + i, y0);
    vst1q_f64(y + i + 2, y1);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

std::size_t argmax_neon(const double* x, std::size_t n) {
  if (n < 4) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (x[i] > x[best]) best = i;
    }
    return best;
  }
  float64x2_t vmax = vld1q_f64(x);
  std::size_t i = 2;
  for (; i + 2 <= n; i += 2) vmax = vmaxq_f64(vmax, vld1q_f64(x + i));
  double best_value = vmaxvq_f64(vmax);
  for (; i < n; ++i) best_value = x[i] > best_value ? x[i] : best_value;
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] == best_value) return k;
  }
  return 0;
}

std::size_t count_above_neon(const double* x, double tol, std::size_t n) {
  const float64x2_t vtol = vdupq_n_f64(tol);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t gt = vcagtq_f64(vld1q_f64(x + i), vtol);
    count += (vgetq_lane_u64(gt, 0) & 1) + (vgetq_lane_u64(gt, 1) & 1);
  }
  for (; i < n; ++i) count += (x[i] > tol || -x[i] > tol) ? 1 : 0;
  return count;
}

}  // namespace

const KernelTable* neon_table() {
  static const KernelTable table{Isa::kNeon, &axpy_neon,   &scale_neon,
                                 &dot_neon,  &argmax_neon, &count_above_neon};
  return &table;
}

}  // namespace pmtn::kernels

#else

namespace pmtn::kernels {
const KernelTable* neon_table() { return nullptr; }
}  // namespace pmtn::kernels

#endif
