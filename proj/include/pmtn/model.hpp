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

// Time-indexed Boolean model of the scheduling problem.
//
// Job j is split into p unit parts j.1 .. j.p; x(j,k,t) = 1 when part k of job
// j runs in interval t. Only variables whose cost is finite are created, so a
// WeightMatrix stores, per (j,k), an interval domain [lo, hi] and the costs on
// that domain. Rows of the model:
//
//   (1) sum_t x(j,k,t) = 1                              per (j,k)
//   (2) sum_{j,k} x(j,k,t) = 1                           per t
//   (3) sum_{t in S(a,b)} x(j,k,t) - x(j,k+1,t+1) >= 0  per j, k < p, (a,b)
//
// with S(a,b) = {b, b+p, ..., b+(a-1)p}, empty for (a,b) = (n,p). Rows (3)
// fix the part order and force the number of intervals between consecutive
// parts of a job to be a multiple of p.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtn/instance.hpp"

namespace pmtn {

enum class ObjectiveKind { kTotalWeightedCompletion, kTotalWeightedTardiness, kWeightedTardyJobs };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kTotalWeightedCompletion;
  std::vector<std::int64_t> due_dates;   // per job, tardiness kinds only
  std::vector<std::int64_t> deadlines;   // per job, empty = none
  std::set<std::int64_t> unavailable;    // real intervals the machine is down

  bool is_plain_twct() const {
    return kind == ObjectiveKind::kTotalWeightedCompletion && deadlines.empty() &&
           unavailable.empty();
  }
};

class ModelInfeasible : public std::runtime_error {
 public:
  ModelInfeasible(int job, int part, const std::string& what)
      : std::runtime_error(what), job_(job), part_(part) {}
  int job() const { return job_; }
  int part() const { return part_; }

 private:
  int job_;
  int part_;
};

struct PartDomain {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int t) const { return t >= lo && t <= hi; }
};

class WeightMatrix {
 public:
  WeightMatrix(int n, int p, std::vector<int> interval_time);

  int n() const { return n_; }
  int p() const { return p_; }
  // Number of model intervals (columns); equals n*p.
  int num_intervals() const { return static_cast<int>(interval_time_.size()); }
  // Real interval represented by model interval t (identity without
  // unavailability periods).
  int real_time(int t) const { return interval_time_[static_cast<std::size_t>(t - 1)]; }

  const PartDomain& domain(int job, int part) const { return domains_[row(job, part)]; }
  // nullopt when x(j,k,t) is excluded (infinite cost).
  std::optional<std::int64_t> cost(int job, int part, int t) const;

  void set_domain(int job, int part, PartDomain d, std::vector<std::int64_t> costs);

 private:
  std::size_t row(int job, int part) const {
    return static_cast<std::size_t>((job - 1) * p_ + (part - 1));
  }

  int n_;
  int p_;
  std::vector<int> interval_time_;
  std::vector<PartDomain> domains_;
  std::vector<std::vector<std::int64_t>> costs_;
};

// Cost of finishing job `job` in real interval `time` under `spec`.
std::int64_t completion_cost(const Instance& inst, const ObjectiveSpec& spec, int job,
                             std::int64_t time);

// Sum of completion_cost over the jobs of a real-time schedule.
std::int64_t objective_value(const Instance& inst, const ObjectiveSpec& spec, const Schedule& s);

// Throws std::invalid_argument when spec and instance disagree (missing due
// dates, wrong list lengths) and ModelInfeasible when a part has no interval.
WeightMatrix build_weights(const Instance& inst, const ObjectiveSpec& spec = {});

// S(a,b) for 1 <= a <= n, 1 <= b <= p; std::out_of_range otherwise.
std::vector<int> t_ab(int a, int b, int n, int p);

struct Variable {
  int job;
  int part;
  int interval;
  friend bool operator==(const Variable&, const Variable&) = default;
};

enum class RowKind { kPartAssignment, kIntervalCapacity, kPartOrder };
enum class RowSense { kEqual, kGreaterEqual };

struct ModelRow {
  RowKind kind;
  RowSense sense;
  double rhs;
  std::vector<int> vars;        // indices into BlpModel::variables
  std::vector<double> coefs;
  // Identification: (job, part) for kinds 1 and 3, interval for kind 2,
  // (a, b) for kind 3.
  int job = 0;
  int part = 0;
  int interval = 0;
  int a = 0;
  int b = 0;
};

class BlpModel {
 public:
  explicit BlpModel(WeightMatrix weights);

  const WeightMatrix& weights() const { return weights_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<double>& costs() const { return costs_; }
  const std::vector<ModelRow>& rows() const { return rows_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }

  // Index of x(j,k,t) or nullopt if the variable was excluded.
  std::optional<int> index_of(int job, int part, int t) const;
  // Contiguous index range [first, first + size) of all variables of (j,k).
  int first_index(int job, int part) const;

  std::size_t count_rows(RowKind kind) const;

 private:
  WeightMatrix weights_;
  std::vector<Variable> variables_;
  std::vector<double> costs_;
  std::vector<int> first_index_;
  std::vector<ModelRow> rows_;
};

// Moves a schedule over model intervals to real time; intervals removed by
// unavailability become idle slots.
Schedule to_real_time(const WeightMatrix& weights, const Schedule& model_schedule);

// Throws ModelInfeasible naming the first (j,k) with an empty domain.
BlpModel build_model(const WeightMatrix& weights);

// 1 + sum of all finite costs: a finite stand-in for "infinity" in dense
// formulations.
std::int64_t big_m_value(const WeightMatrix& weights);

// CPLEX LP text: objective, rows, bounds, binaries. Variable names are
// x_<job>_<part>_<interval>; rows are named by kind and identification.
std::string to_lp_format(const BlpModel& model, bool binary = true);

}  // namespace pmtn
