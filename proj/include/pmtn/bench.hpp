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

// Benchmark families: solve generated instances and summarize them in the
// layout of a results table.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pmtn/bnb.hpp"

namespace pmtn {

struct BenchRow {
  int n = 0;
  int p = 0;
  long instances = 0;
  long wsrpt_optimal_count = 0;
  long lp_integral_count = 0;
  // Alg1/Alg2 counts cover instances whose root relaxation was fractional;
  // on integral roots both reproduce the LP schedule by construction.
  long alg1_optimal_count = 0;
  long alg2_optimal_count = 0;
  double mean_preemptions = 0.0;
  double mean_time_seconds = 0.0;
  long limit_hit_count = 0;
};

struct BenchOutcome {
  int index = 0;
  std::uint64_t seed = 0;  // per-instance seed handed to the generator
  SolveReport report;
};

// Solves instances 0..count-1 of the family (n, p, seed) in index order.
std::vector<BenchOutcome> run_family(int n, int p, int count, std::uint64_t seed,
                                     const SolveConfig& cfg,
                                     const std::function<void(const BenchOutcome&)>& each = {});

// Heuristic optimality is judged against certified optima only.
BenchRow summarize(int n, int p, const std::vector<BenchOutcome>& outcomes);

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

}  // namespace pmtn
