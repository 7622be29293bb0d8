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

// Exhaustive reference solver. It walks the intervals in order and tries
// every released job with work left (and idle, when the instance has idle
// slots to spend), so it shares no code with the LP pipeline.
//
// Building with PMTN_ORACLE_PRUNE cuts branches whose partial cost already
// exceeds the best leaf. Off by default.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pmtn/instance.hpp"
#include "pmtn/model.hpp"

namespace pmtn {

// Largest total work n*p the oracle accepts.
inline constexpr int kOracleMaxWork = 15;

class OracleCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
  bool enumerate_all = false;
  // Optimal schedules kept when enumerate_all is set; counting goes on.
  std::size_t max_schedules = 10000;
};

struct OracleResult {
  std::int64_t optimum = 0;
  Schedule schedule;                       // first optimal leaf found
  std::vector<Schedule> optimal_schedules; // enumerate_all only
  std::uint64_t optimal_count = 0;         // enumerate_all only
  bool truncated = false;                  // more optima than max_schedules
  int min_preemptions = 0;                 // over all optima (enumerate_all)
  std::uint64_t leaves = 0;
};

// Plain total weighted completion time. Instances that need idle time are
// searched over schedules of length schedule_span(inst).
OracleResult brute_force(const Instance& inst, bool enumerate_all = false);

// General objective. Deadlines bound completion times; unavailable intervals
// stay idle. The instance must not need idle time.
OracleResult brute_force(const Instance& inst, const ObjectiveSpec& spec,
                         const OracleOptions& options = {});

// Number of distinct valid schedules of an instance without forced idle.
std::uint64_t enumerate_feasible(const Instance& inst);

// Same, restricted to schedules in which the number of intervals between two
// consecutive parts of a job is a multiple of p (the 0/1 points of the model).
std::uint64_t enumerate_feasible_gap_multiple(const Instance& inst);

}  // namespace pmtn
