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

// Problem data for 1|pmtn; p_j=p; r_j|sum w_j C_j: jobs, instances, schedules,
// and the pure functions that check and score them.
//
// Time is discretized into unit intervals: interval t is (t-1, t], t >= 1.
// A job with release r may occupy interval t iff t >= r.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmtn {

struct Job {
  int id = 0;  // 1-based
  std::int64_t release = 1;
  std::int64_t weight = 1;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::vector<Job> jobs;
  int p = 1;

  int n() const { return static_cast<int>(jobs.size()); }
  // T = n * p, the number of unit intervals when no idle time is needed.
  int horizon() const { return n() * p; }
  const Job& job(int id) const { return jobs[static_cast<std::size_t>(id - 1)]; }

  // Builds jobs 1..n from parallel release/weight lists.
  static Instance from_lists(int p, const std::vector<std::int64_t>& releases,
                             const std::vector<std::int64_t>& weights);

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Slot value for an interval in which the machine idles.
inline constexpr int kIdle = 0;

struct Schedule {
  // slots[t - 1] is the job processed in interval t, or kIdle.
  std::vector<int> slots;

  int length() const { return static_cast<int>(slots.size()); }
  int at(int t) const { return slots[static_cast<std::size_t>(t - 1)]; }

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Human-readable description of one broken invariant.
struct Violation {
  enum class Kind {
    kEmptyInstance,
    kBadProcessingTime,
    kBadJobId,
    kBadRelease,
    kBadWeight,
    kUnknownJob,
    kMultiplicity,
    kRelease,
    kUnexpectedIdle,
  };
  Kind kind;
  int job = 0;  // 0 when not job-specific
  std::string message;
};

std::vector<Violation> validate_instance(const Instance& inst);

// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Instance& inst);

// Number of slots a schedule of `inst` occupies: T when no idle time is
// required, otherwise the end of the last busy block of the greedy sweep.
int schedule_span(const Instance& inst);

// Checks job multiplicity, release dates and (for instances that need no idle
// time) the absence of idle slots. Throws std::invalid_argument when the slot
// count differs from schedule_span(inst).
std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& s);

// C_j for every job id 1..max id in the schedule; entry j-1. Jobs that do not
// occur get 0.
std::vector<int> completion_times(const Schedule& s);

std::int64_t objective_twct(const Instance& inst, const Schedule& s);

// Sum over jobs of (number of maximal contiguous runs - 1).
int count_preemptions(const Schedule& s);

// True when some job has processing strictly inside the span of another job
// and vice versa.
bool has_intersecting_jobs(const Schedule& s);

// True when between every two consecutive parts of a job lie 0 or a multiple
// of p intervals.
bool part_gaps_multiple_of(const Schedule& s, int p);

// True iff the greedy sweep from interval 1 meets an interval with no
// released, unfinished job before all work is done.
bool requires_idle(const Instance& inst);

struct SubInstance {
  int offset = 0;                // interval t of the sub-instance is offset + t
  std::vector<int> job_ids;      // original ids; sub job i+1 is job_ids[i]
  Instance instance;             // releases shifted by -offset
};

// Splits the job set at the idle points of the greedy sweep. Every block
// starts at interval 1 of its own sub-instance.
std::vector<SubInstance> decompose_idle(const Instance& inst);

// Places sub-schedules at their offsets and fills the gaps with kIdle.
Schedule assemble(const Instance& inst, const std::vector<SubInstance>& parts,
                  const std::vector<Schedule>& sub_schedules);

std::string to_string(const Schedule& s);

}  // namespace pmtn
