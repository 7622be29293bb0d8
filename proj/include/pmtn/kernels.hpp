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

// Dense double-precision vector kernels used by the simplex inner loops.
//
// Every kernel has a portable scalar reference implementation plus optional
// AVX2+FMA (x86-64) and NEON (AArch64) variants. The variant is chosen once at
// startup from the host CPU features; PMTN_SIMD=scalar|avx2|neon overrides the
// choice, and select_kernels() lets tests pin a specific table.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace pmtn::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// Function table for one instruction set. All pointers are non-null.
struct KernelTable {
  Isa isa;
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // Index of the largest x[i] (first one on ties); n must be > 0.
  std::size_t (*argmax)(const double* x, std::size_t n);
  // Number of entries with |x[i]| > tol.
  std::size_t (*count_above)(const double* x, double tol, std::size_t n);
};

const KernelTable& scalar_table();

// Null when the variant was not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// True when the running CPU can execute the given variant.
bool host_supports(Isa isa);

// All variants compiled in and executable on this host, scalar first.
std::vector<const KernelTable*> available_tables();

// The process-wide table used by default.
const KernelTable& active();

// Overrides the process-wide table. Throws std::invalid_argument when the
// variant is unavailable on this host.
void select_kernels(Isa isa);

}  // namespace pmtn::kernels
