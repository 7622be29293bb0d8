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

#include "pmtn/heuristics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pmtn {
namespace {

// Slots of jobs whose variables are all integral, straight from x.
struct Partial {
  Schedule schedule;
  std::vector<char> placed;  // by job id
  IntegralityReport report;
};

Partial place_integral_jobs(const Instance& inst, const BlpModel& model,
                            const std::vector<double>& x, double eps_int) {
  if (x.size() != static_cast<std::size_t>(model.num_variables())) {
    throw std::invalid_argument("solution size does not match the model");
  }
  Partial out;
  LpSolution wrapped;
  wrapped.x = x;
  out.report = analyze_integrality(model, wrapped, eps_int);
  out.schedule.slots.assign(inst.horizon(), kIdle);
  out.placed.assign(inst.n() + 1, 0);
  for (int j : out.report.integral_jobs) out.placed[j] = 1;
  for (int i = 0; i < model.num_variables(); ++i) {
    const Variable& v = model.variables()[i];
    if (!out.placed[v.job] || x[i] < 1.0 - eps_int) continue;
    int& slot = out.schedule.slots[v.interval - 1];
    if (slot != kIdle) throw std::invalid_argument("solution assigns an interval twice");
    slot = v.job;
  }
  return out;
}

// Earliest p free slots at or after the release; all of them must be <= last.
bool place_earliest(Schedule& s, const Job& job, int p, int last) {
  std::vector<int> chosen;
  for (int t = static_cast<int>(std::max<std::int64_t>(job.release, 1));
       t <= last && static_cast<int>(chosen.size()) < p; ++t) {
    if (s.at(t) == kIdle) chosen.push_back(t);
  }
  if (static_cast<int>(chosen.size()) < p) return false;
  for (int t : chosen) s.slots[t - 1] = job.id;
  return true;
}

}  // namespace

Schedule wsrpt(const Instance& inst) {
  const int n = inst.n();
  const int T = inst.horizon();
  std::vector<int> remaining(n + 1, inst.p);
  Schedule s;
  s.slots.assign(T, kIdle);
  for (int t = 1; t <= T; ++t) {
    int best = 0;
    for (int j = 1; j <= n; ++j) {
      const Job& job = inst.job(j);
      if (job.release > t || remaining[j] == 0) continue;
      if (best == 0) {
        best = j;
        continue;
      }
      // p'_j / w_j < p'_b / w_b, compared exactly.
      const std::int64_t lhs = remaining[j] * inst.job(best).weight;
      const std::int64_t rhs = remaining[best] * job.weight;
      const auto key_j = std::make_tuple(lhs, remaining[j], -job.weight);
      const auto key_b = std::make_tuple(rhs, remaining[best], -inst.job(best).weight);
      if (key_j < key_b) best = j;
    }
    if (best == 0) {
      throw std::invalid_argument("wsrpt: no released job at interval " + std::to_string(t) +
                                  "; decompose instances that need idle time first");
    }
    s.slots[t - 1] = best;
    --remaining[best];
  }
  return s;
}

std::optional<Schedule> edf_with_completions(const Instance& inst, const CompletionPlan& plan) {
  const int n = inst.n();
  const int T = inst.horizon();
  const int p = inst.p;
  if (plan.target.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("completion plan size differs from job count");
  }
  Schedule s;
  s.slots.assign(T, kIdle);
  for (int j = 1; j <= n; ++j) {
    const int c = plan.target[j - 1];
    if (c < 1 || c > T) throw std::invalid_argument("completion target outside [1, T]");
    if (c < inst.job(j).release + p - 1) return std::nullopt;
    if (s.at(c) != kIdle) return std::nullopt;
    s.slots[c - 1] = j;
  }
  std::vector<int> remaining(n + 1, p - 1);
  for (int t = 1; t <= T; ++t) {
    if (s.at(t) != kIdle) continue;
    int best = 0;
    for (int j = 1; j <= n; ++j) {
      if (remaining[j] == 0 || inst.job(j).release > t || t >= plan.target[j - 1]) continue;
      if (best == 0 || plan.target[j - 1] < plan.target[best - 1]) best = j;
    }
    if (best == 0) continue;
    s.slots[t - 1] = best;
    --remaining[best];
  }
  for (int j = 1; j <= n; ++j) {
    if (remaining[j] != 0) return std::nullopt;
  }
  return s;
}

std::vector<int> estimated_completions(const BlpModel& model, const std::vector<double>& x,
                                       double eps_int) {
  const int n = model.weights().n();
  const int p = model.weights().p();
  std::vector<int> out(n, 0);
  for (int j = 1; j <= n; ++j) {
    const int first = model.first_index(j, p);
    const int size = model.weights().domain(j, p).size();
    for (int i = first; i < first + size; ++i) {
      if (x[i] > eps_int) out[j - 1] = std::max(out[j - 1], model.variables()[i].interval);
    }
  }
  return out;
}

std::vector<int> algorithm1_order(const Instance& inst, const BlpModel& model,
                                  const std::vector<double>& x, double eps_int) {
  LpSolution wrapped;
  wrapped.x = x;
  std::vector<int> order = analyze_integrality(model, wrapped, eps_int).fractional_jobs;
  const std::vector<int> completion = estimated_completions(model, x, eps_int);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_tuple(completion[a - 1], -inst.job(a).weight, a) <
           std::make_tuple(completion[b - 1], -inst.job(b).weight, b);
  });
  return order;
}

Schedule algorithm1(const Instance& inst, const BlpModel& model, const std::vector<double>& x,
                    double eps_int) {
  Partial part = place_integral_jobs(inst, model, x, eps_int);
  for (int j : algorithm1_order(inst, model, x, eps_int)) {
    if (!place_earliest(part.schedule, inst.job(j), inst.p, inst.horizon())) {
      throw std::logic_error("algorithm1: not enough free intervals for job " + std::to_string(j));
    }
  }
  return part.schedule;
}

Schedule algorithm2(const Instance& inst, const BlpModel& model, const std::vector<double>& x,
                    double eps_int) {
  Partial part = place_integral_jobs(inst, model, x, eps_int);
  const int p = inst.p;

  // Candidate completions (t, j) with x(j, p, t) > eps, in scan order.
  std::vector<std::pair<int, int>> candidates;
  for (int j : part.report.fractional_jobs) {
    const int first = model.first_index(j, p);
    const int size = model.weights().domain(j, p).size();
    for (int i = first; i < first + size; ++i) {
      if (x[i] > eps_int) candidates.emplace_back(model.variables()[i].interval, j);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  // One pass over the sorted candidates is the same as repeatedly taking the
  // smallest unmasked one: a failed (j, t) is masked and never becomes
  // feasible later, since the free slots only shrink.
  for (const auto& [t, j] : candidates) {
    if (part.placed[j]) continue;
    if (place_earliest(part.schedule, inst.job(j), p, t)) part.placed[j] = 1;
  }

  // Masks restored: remaining jobs by smallest candidate t, no deadline.
  std::vector<int> rest;
  for (const auto& [t, j] : candidates) {
    if (!part.placed[j] && std::find(rest.begin(), rest.end(), j) == rest.end()) rest.push_back(j);
  }
  for (int j : part.report.fractional_jobs) {
    if (!part.placed[j] && std::find(rest.begin(), rest.end(), j) == rest.end()) rest.push_back(j);
  }
  for (int j : rest) {
    if (!place_earliest(part.schedule, inst.job(j), p, inst.horizon())) {
      throw std::logic_error("algorithm2: not enough free intervals for job " + std::to_string(j));
    }
    part.placed[j] = 1;
  }
  return part.schedule;
}

}  // namespace pmtn
