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

#include "pmtn/generator.hpp"

#include <stdexcept>
#include <string>

#include "pmtn/rng.hpp"

namespace pmtn {

namespace {
constexpr std::int64_t kMaxWeight = 30;
}  // namespace

Instance generate_instance(int n, int p, std::uint64_t seed) {
  if (n < 7) {
    throw std::invalid_argument("generator needs n >= 7 (release range [1, p(n-6)]), got n=" +
                                std::to_string(n));
  }
  if (p < 1) throw std::invalid_argument("generator needs p >= 1");
  const std::int64_t max_release = static_cast<std::int64_t>(p) * (n - 6);
  SplitMix64 rng(seed);
  Instance inst;
  inst.p = p;
  inst.jobs.resize(static_cast<std::size_t>(n));
  do {
    for (int j = 0; j < n; ++j) {
      Job& job = inst.jobs[static_cast<std::size_t>(j)];
      job.id = j + 1;
      job.release = rng.uniform(1, max_release);
      job.weight = rng.uniform(1, kMaxWeight);
    }
  } while (requires_idle(inst));
  return inst;
}

Instance generate_family_member(int n, int p, std::uint64_t seed, int index) {
  return generate_instance(n, p, derive_seed(seed, static_cast<std::uint64_t>(index)));
}

}  // namespace pmtn
