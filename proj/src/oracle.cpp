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

#include "pmtn/oracle.hpp"

#include <limits>
#include <string>

namespace pmtn {
namespace {

void check_cap(const Instance& inst) {
  require_valid(inst);
  if (inst.horizon() > kOracleMaxWork) {
    throw OracleCapExceeded("oracle: n*p = " + std::to_string(inst.horizon()) +
                            " exceeds the cap of " + std::to_string(kOracleMaxWork));
  }
}

class Walker {
 public:
  Walker(const Instance& inst, const ObjectiveSpec& spec, const OracleOptions& options)
      : inst_(inst), spec_(spec), options_(options), remaining_(inst.n() + 1, inst.p) {
    const bool idle_needed = requires_idle(inst);
    if (idle_needed && !spec.is_plain_twct()) {
      throw std::invalid_argument("oracle: objective variants need an instance without idle");
    }
    if (idle_needed) {
      length_ = schedule_span(inst);
    } else {
      int available = 0;
      while (available < inst.horizon()) {
        ++length_;
        if (!spec.unavailable.count(length_)) ++available;
      }
    }
    idle_budget_ = length_ - inst.horizon();
    slots_.assign(length_, kIdle);
  }

  OracleResult run() {
    descend(1, 0);
    if (!found_) throw std::invalid_argument("oracle: no feasible schedule");
    return result_;
  }

 private:
  bool blocked(int t) const { return spec_.unavailable.count(t) > 0; }

  void leaf(std::int64_t cost) {
    ++result_.leaves;
    const bool better = !found_ || cost < result_.optimum;
    if (better) {
      found_ = true;
      result_.optimum = cost;
      result_.schedule.slots = slots_;
      result_.optimal_schedules.clear();
      result_.optimal_count = 0;
      result_.truncated = false;
      result_.min_preemptions = std::numeric_limits<int>::max();
    }
    if (!options_.enumerate_all || cost != result_.optimum) return;
    ++result_.optimal_count;
    Schedule s{slots_};
    result_.min_preemptions = std::min(result_.min_preemptions, count_preemptions(s));
    if (result_.optimal_schedules.size() < options_.max_schedules) {
      result_.optimal_schedules.push_back(std::move(s));
    } else {
      result_.truncated = true;
    }
  }

  void descend(int t, std::int64_t cost) {
#ifdef PMTN_ORACLE_PRUNE
    if (found_ && (options_.enumerate_all ? cost > result_.optimum : cost >= result_.optimum)) {
      return;
    }
#endif
    if (t > length_) {
      leaf(cost);
      return;
    }
    if (blocked(t)) {
      if (idle_budget_ == 0) return;
      --idle_budget_;
      descend(t + 1, cost);
      ++idle_budget_;
      return;
    }
    for (int j = 1; j <= inst_.n(); ++j) {
      if (remaining_[j] == 0 || inst_.job(j).release > t) continue;
      std::int64_t step = 0;
      if (remaining_[j] == 1) {
        if (!spec_.deadlines.empty() && t > spec_.deadlines[j - 1]) continue;
        step = completion_cost(inst_, spec_, j, t);
      }
      --remaining_[j];
      slots_[t - 1] = j;
      descend(t + 1, cost + step);
      slots_[t - 1] = kIdle;
      ++remaining_[j];
    }
    if (idle_budget_ > 0 && spec_.unavailable.empty()) {
      --idle_budget_;
      descend(t + 1, cost);
      ++idle_budget_;
    }
  }

  const Instance& inst_;
  const ObjectiveSpec& spec_;
  const OracleOptions& options_;
  std::vector<int> remaining_;
  std::vector<int> slots_;
  int length_ = 0;
  int idle_budget_ = 0;
  bool found_ = false;
  OracleResult result_;
};

class Counter {
 public:
  Counter(const Instance& inst, bool gap_rule)
      : inst_(inst), gap_rule_(gap_rule), remaining_(inst.n() + 1, inst.p), last_(inst.n() + 1, 0) {}

  std::uint64_t count(int t) {
    if (t > inst_.horizon()) return 1;
    std::uint64_t total = 0;
    for (int j = 1; j <= inst_.n(); ++j) {
      if (remaining_[j] == 0 || inst_.job(j).release > t) continue;
      if (gap_rule_ && last_[j] > 0 && (t - last_[j] - 1) % inst_.p != 0) continue;
      const int before = last_[j];
      --remaining_[j];
      last_[j] = t;
      total += count(t + 1);
      last_[j] = before;
      ++remaining_[j];
    }
    return total;
  }

 private:
  const Instance& inst_;
  bool gap_rule_;
  std::vector<int> remaining_;
  std::vector<int> last_;
};

}  // namespace

OracleResult brute_force(const Instance& inst, bool enumerate_all) {
  OracleOptions options;
  options.enumerate_all = enumerate_all;
  return brute_force(inst, ObjectiveSpec{}, options);
}

OracleResult brute_force(const Instance& inst, const ObjectiveSpec& spec,
                         const OracleOptions& options) {
  check_cap(inst);
  if (spec.kind != ObjectiveKind::kTotalWeightedCompletion &&
      spec.due_dates.size() != static_cast<std::size_t>(inst.n())) {
    throw std::invalid_argument("oracle: tardiness objectives need one due date per job");
  }
  if (!spec.deadlines.empty() && spec.deadlines.size() != static_cast<std::size_t>(inst.n())) {
    throw std::invalid_argument("oracle: deadline list size differs from job count");
  }
  Walker walker(inst, spec, options);
  return walker.run();
}

std::uint64_t enumerate_feasible(const Instance& inst) {
  check_cap(inst);
  if (requires_idle(inst)) return 0;
  return Counter(inst, false).count(1);
}

std::uint64_t enumerate_feasible_gap_multiple(const Instance& inst) {
  check_cap(inst);
  if (requires_idle(inst)) return 0;
  return Counter(inst, true).count(1);
}

}  // namespace pmtn
