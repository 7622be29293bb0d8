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

#include "pmtn/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmtn {

Instance Instance::from_lists(int p, const std::vector<std::int64_t>& releases,
                              const std::vector<std::int64_t>& weights) {
  if (releases.size() != weights.size()) {
    throw std::invalid_argument("release and weight lists differ in length");
  }
  Instance inst;
  inst.p = p;
  inst.jobs.reserve(releases.size());
  for (std::size_t i = 0; i < releases.size(); ++i) {
    inst.jobs.push_back(Job{static_cast<int>(i) + 1, releases[i], weights[i]});
  }
  return inst;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.jobs.empty()) {
    out.push_back({Violation::Kind::kEmptyInstance, 0, "instance has no jobs"});
  }
  if (inst.p < 1) {
    out.push_back({Violation::Kind::kBadProcessingTime, 0,
                   "processing time p=" + std::to_string(inst.p) + " is below 1"});
  }
  for (std::size_t i = 0; i < inst.jobs.size(); ++i) {
    const Job& job = inst.jobs[i];
    const int expected = static_cast<int>(i) + 1;
    if (job.id != expected) {
      out.push_back({Violation::Kind::kBadJobId, expected,
                     "job at position " + std::to_string(expected) + " has id " +
                         std::to_string(job.id)});
    }
    if (job.release < 1) {
      out.push_back({Violation::Kind::kBadRelease, expected,
                     "job " + std::to_string(expected) + " release " +
                         std::to_string(job.release) + " is below 1"});
    }
    if (job.weight < 1) {
      out.push_back({Violation::Kind::kBadWeight, expected,
                     "job " + std::to_string(expected) + " weight " +
                         std::to_string(job.weight) + " is below 1"});
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  const auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  throw std::invalid_argument(msg);
}

namespace {

// Jobs in (release, id) order.
std::vector<const Job*> by_release(const Instance& inst) {
  std::vector<const Job*> order;
  order.reserve(inst.jobs.size());
  for (const Job& job : inst.jobs) order.push_back(&job);
  std::stable_sort(order.begin(), order.end(),
                   [](const Job* a, const Job* b) { return a->release < b->release; });
  return order;
}

}  // namespace

int schedule_span(const Instance& inst) {
  std::int64_t busy_until = 0;
  for (const Job* job : by_release(inst)) {
    busy_until = std::max(busy_until, job->release - 1) + inst.p;
  }
  return static_cast<int>(busy_until);
}

bool requires_idle(const Instance& inst) {
  std::int64_t busy_until = 0;
  for (const Job* job : by_release(inst)) {
    if (job->release > busy_until + 1) return true;
    busy_until += inst.p;
  }
  return false;
}

std::vector<SubInstance> decompose_idle(const Instance& inst) {
  require_valid(inst);
  std::vector<SubInstance> blocks;
  std::int64_t busy_until = 0;
  for (const Job* job : by_release(inst)) {
    if (blocks.empty() || job->release > busy_until + 1) {
      SubInstance block;
      block.offset = static_cast<int>(job->release - 1);
      block.instance.p = inst.p;
      blocks.push_back(std::move(block));
      busy_until = job->release - 1;
    }
    blocks.back().job_ids.push_back(job->id);
    busy_until += inst.p;
  }
  for (SubInstance& block : blocks) {
    std::sort(block.job_ids.begin(), block.job_ids.end());
    for (std::size_t i = 0; i < block.job_ids.size(); ++i) {
      const Job& job = inst.job(block.job_ids[i]);
      block.instance.jobs.push_back(
          Job{static_cast<int>(i) + 1, job.release - block.offset, job.weight});
    }
  }
  return blocks;
}

Schedule assemble(const Instance& inst, const std::vector<SubInstance>& parts,
                  const std::vector<Schedule>& sub_schedules) {
  if (parts.size() != sub_schedules.size()) {
    throw std::invalid_argument("assemble: one schedule per sub-instance expected");
  }
  Schedule out;
  out.slots.assign(static_cast<std::size_t>(schedule_span(inst)), kIdle);
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& ids = parts[b].job_ids;
    for (int t = 1; t <= sub_schedules[b].length(); ++t) {
      const int sub_job = sub_schedules[b].at(t);
      const auto slot = static_cast<std::size_t>(parts[b].offset + t - 1);
      if (slot >= out.slots.size()) throw std::invalid_argument("assemble: slot out of range");
      out.slots[slot] = sub_job == kIdle ? kIdle : ids[static_cast<std::size_t>(sub_job - 1)];
    }
  }
  return out;
}

std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& s) {
  require_valid(inst);
  const int span = schedule_span(inst);
  if (s.length() != span) {
    throw std::invalid_argument("schedule has " + std::to_string(s.length()) +
                                " slots, expected " + std::to_string(span));
  }
  std::vector<Violation> out;
  std::vector<int> count(static_cast<std::size_t>(inst.n()) + 1, 0);
  std::vector<int> first_early(static_cast<std::size_t>(inst.n()) + 1, 0);
  const bool idle_allowed = requires_idle(inst);
  for (int t = 1; t <= s.length(); ++t) {
    const int j = s.at(t);
    if (j == kIdle) {
      if (!idle_allowed) {
        out.push_back({Violation::Kind::kUnexpectedIdle, 0,
                       "interval " + std::to_string(t) + " is idle"});
      }
      continue;
    }
    if (j < 1 || j > inst.n()) {
      out.push_back({Violation::Kind::kUnknownJob, 0,
                     "interval " + std::to_string(t) + " holds unknown job " +
                         std::to_string(j)});
      continue;
    }
    ++count[static_cast<std::size_t>(j)];
    if (t < inst.job(j).release && first_early[static_cast<std::size_t>(j)] == 0) {
      first_early[static_cast<std::size_t>(j)] = t;
    }
  }
  for (int j = 1; j <= inst.n(); ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (first_early[idx] != 0) {
      out.push_back({Violation::Kind::kRelease, j,
                     "job " + std::to_string(j) + " processed in interval " +
                         std::to_string(first_early[idx]) + " before its release " +
                         std::to_string(inst.job(j).release)});
    }
    if (count[idx] != inst.p) {
      out.push_back({Violation::Kind::kMultiplicity, j,
                     "job " + std::to_string(j) + " occupies " + std::to_string(count[idx]) +
                         " intervals, expected " + std::to_string(inst.p)});
    }
  }
  return out;
}

std::vector<int> completion_times(const Schedule& s) {
  const int max_id = s.slots.empty() ? 0 : *std::max_element(s.slots.begin(), s.slots.end());
  std::vector<int> completion(static_cast<std::size_t>(std::max(max_id, 0)), 0);
  for (int t = 1; t <= s.length(); ++t) {
    const int j = s.at(t);
    if (j != kIdle) completion[static_cast<std::size_t>(j - 1)] = t;
  }
  return completion;
}

std::int64_t objective_twct(const Instance& inst, const Schedule& s) {
  const auto completion = completion_times(s);
  std::int64_t total = 0;
  for (const Job& job : inst.jobs) {
    const auto idx = static_cast<std::size_t>(job.id - 1);
    if (idx < completion.size()) total += job.weight * completion[idx];
  }
  return total;
}

int count_preemptions(const Schedule& s) {
  std::vector<int> runs;
  int previous = kIdle;
  for (int j : s.slots) {
    if (j != kIdle && j != previous) {
      if (static_cast<std::size_t>(j) >= runs.size()) runs.resize(static_cast<std::size_t>(j) + 1, 0);
      ++runs[static_cast<std::size_t>(j)];
    }
    previous = j;
  }
  int total = 0;
  for (int r : runs) total += r > 0 ? r - 1 : 0;
  return total;
}

namespace {

struct Extent {
  int first = 0;
  int last = 0;
  std::vector<int> slots;
};

std::vector<Extent> extents(const Schedule& s) {
  std::vector<Extent> out;
  for (int t = 1; t <= s.length(); ++t) {
    const int j = s.at(t);
    if (j == kIdle) continue;
    if (static_cast<std::size_t>(j) >= out.size()) out.resize(static_cast<std::size_t>(j) + 1);
    Extent& e = out[static_cast<std::size_t>(j)];
    if (e.first == 0) e.first = t;
    e.last = t;
    e.slots.push_back(t);
  }
  return out;
}

// Some slot of `inner` lies strictly between the first and last slot of `outer`.
bool intersects(const Extent& inner, const Extent& outer) {
  return std::any_of(inner.slots.begin(), inner.slots.end(),
                     [&](int t) { return t > outer.first && t < outer.last; });
}

}  // namespace

bool has_intersecting_jobs(const Schedule& s) {
  const auto ext = extents(s);
  for (std::size_t i = 1; i < ext.size(); ++i) {
    if (ext[i].slots.empty()) continue;
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      if (ext[j].slots.empty()) continue;
      if (intersects(ext[i], ext[j]) && intersects(ext[j], ext[i])) return true;
    }
  }
  return false;
}

bool part_gaps_multiple_of(const Schedule& s, int p) {
  for (const Extent& e : extents(s)) {
    for (std::size_t k = 1; k < e.slots.size(); ++k) {
      if ((e.slots[k] - e.slots[k - 1] - 1) % p != 0) return false;
    }
  }
  return true;
}

std::string to_string(const Schedule& s) {
  std::ostringstream out;
  bool wide = false;
  for (int j : s.slots) wide = wide || j >= 10;
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    if (wide && i > 0) out << ' ';
    if (s.slots[i] == kIdle) {
      out << '-';
    } else {
      out << s.slots[i];
    }
  }
  return out.str();
}

}  // namespace pmtn
