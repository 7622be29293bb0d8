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

// Instances and solutions shared by the unit tests and the acceptance run.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "pmtn/instance.hpp"
#include "pmtn/model.hpp"
#include "pmtn/rng.hpp"

namespace pmtn::fixtures {

// n=4, p=2: the four-job example with releases (1,4,3,2).
inline Instance worked_example() {
  return Instance::from_lists(2, {1, 4, 3, 2}, {4, 9, 12, 9});
}

// n=2, p=3: the two-job weight-matrix example.
inline Instance two_job_example() { return Instance::from_lists(3, {1, 3}, {1, 3}); }

inline Schedule schedule_of(std::initializer_list<int> slots) { return Schedule{slots}; }

struct Entry {
  int job, part, interval;
  double value;
};

// Dense x over model.variables() from a sparse list.
inline std::vector<double> solution_of(const BlpModel& model, std::initializer_list<Entry> entries) {
  std::vector<double> x(model.num_variables(), 0.0);
  for (const Entry& e : entries) {
    const auto idx = model.index_of(e.job, e.part, e.interval);
    if (!idx) throw std::invalid_argument("fixture names an excluded variable");
    x[*idx] = e.value;
  }
  return x;
}

// The fractional optimum published for the worked example (value 182).
inline std::vector<double> worked_example_fractional_x(const BlpModel& model) {
  return solution_of(model, {
                                {1, 1, 1, 1.0},
                                {1, 2, 2, 0.5}, {1, 2, 8, 0.5},
                                {2, 1, 5, 0.5}, {2, 1, 7, 0.5},
                                {2, 2, 6, 0.5}, {2, 2, 8, 0.5},
                                {3, 1, 3, 0.5}, {3, 1, 4, 0.5},
                                {3, 2, 4, 0.5}, {3, 2, 5, 0.5},
                                {4, 1, 2, 0.5}, {4, 1, 6, 0.5},
                                {4, 2, 3, 0.5}, {4, 2, 7, 0.5},
                            });
}

// Small instances for oracle comparisons: releases uniform on [1, np-p+1],
// weights uniform on [1, 5].
inline Instance small_random_instance(int n, int p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::int64_t> r(n), w(n);
  for (int j = 0; j < n; ++j) {
    r[j] = rng.uniform(1, static_cast<std::int64_t>(n) * p - p + 1);
    w[j] = rng.uniform(1, 5);
  }
  return Instance::from_lists(p, r, w);
}

}  // namespace pmtn::fixtures
