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

#include "pmtn/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmtn {

WeightMatrix::WeightMatrix(int n, int p, std::vector<int> interval_time)
    : n_(n), p_(p), interval_time_(std::move(interval_time)) {
  domains_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(p));
  costs_.resize(domains_.size());
}

std::optional<std::int64_t> WeightMatrix::cost(int job, int part, int t) const {
  const PartDomain& d = domain(job, part);
  if (!d.contains(t)) return std::nullopt;
  return costs_[row(job, part)][static_cast<std::size_t>(t - d.lo)];
}

void WeightMatrix::set_domain(int job, int part, PartDomain d, std::vector<std::int64_t> costs) {
  if (static_cast<int>(costs.size()) != d.size()) {
    throw std::invalid_argument("cost vector length does not match the domain");
  }
  domains_[row(job, part)] = d;
  costs_[row(job, part)] = std::move(costs);
}

std::int64_t completion_cost(const Instance& inst, const ObjectiveSpec& spec, int job,
                             std::int64_t time) {
  const std::int64_t w = inst.job(job).weight;
  switch (spec.kind) {
    case ObjectiveKind::kTotalWeightedCompletion:
      return w * time;
    case ObjectiveKind::kTotalWeightedTardiness: {
      const std::int64_t due = spec.due_dates[static_cast<std::size_t>(job - 1)];
      return w * std::max<std::int64_t>(0, time - due);
    }
    case ObjectiveKind::kWeightedTardyJobs: {
      const std::int64_t due = spec.due_dates[static_cast<std::size_t>(job - 1)];
      return time > due ? w : 0;
    }
  }
  return 0;
}

std::int64_t objective_value(const Instance& inst, const ObjectiveSpec& spec, const Schedule& s) {
  const std::vector<int> completion = completion_times(s);
  std::int64_t total = 0;
  for (int j = 1; j <= inst.n(); ++j) {
    const int c = j <= static_cast<int>(completion.size()) ? completion[j - 1] : 0;
    if (c == 0) throw std::invalid_argument("objective_value: job " + std::to_string(j) + " missing");
    total += completion_cost(inst, spec, j, c);
  }
  return total;
}

WeightMatrix build_weights(const Instance& inst, const ObjectiveSpec& spec) {
  require_valid(inst);
  const int n = inst.n();
  const int p = inst.p;
  const bool tardiness = spec.kind != ObjectiveKind::kTotalWeightedCompletion;
  if (tardiness && static_cast<int>(spec.due_dates.size()) != n) {
    throw std::invalid_argument("tardiness objectives need one due date per job");
  }
  if (!tardiness && !spec.due_dates.empty()) {
    throw std::invalid_argument("due dates given for a completion-time objective");
  }
  if (!spec.deadlines.empty() && static_cast<int>(spec.deadlines.size()) != n) {
    throw std::invalid_argument("deadlines must be given for every job or none");
  }

  const int horizon = n * p;
  std::vector<int> interval_time;
  interval_time.reserve(static_cast<std::size_t>(horizon));
  for (int real = 1; static_cast<int>(interval_time.size()) < horizon; ++real) {
    if (!spec.unavailable.contains(real)) interval_time.push_back(real);
  }

  WeightMatrix weights(n, p, interval_time);
  for (const Job& job : inst.jobs) {
    // First model interval at or after the release.
    const auto first = std::lower_bound(interval_time.begin(), interval_time.end(), job.release);
    const int release_index = static_cast<int>(first - interval_time.begin()) + 1;
    // Last model interval at or before the deadline.
    int deadline_index = horizon;
    if (!spec.deadlines.empty()) {
      const std::int64_t deadline = spec.deadlines[static_cast<std::size_t>(job.id - 1)];
      const auto last = std::upper_bound(interval_time.begin(), interval_time.end(), deadline);
      deadline_index = static_cast<int>(last - interval_time.begin());
    }
    for (int k = 1; k <= p; ++k) {
      PartDomain d{release_index + k - 1, std::min(horizon - p + k, deadline_index - p + k)};
      if (d.empty()) {
        throw ModelInfeasible(job.id, k,
                              "part " + std::to_string(job.id) + "." + std::to_string(k) +
                                  " has no admissible interval");
      }
      std::vector<std::int64_t> costs(static_cast<std::size_t>(d.size()), 0);
      if (k == p) {
        for (int t = d.lo; t <= d.hi; ++t) {
          costs[static_cast<std::size_t>(t - d.lo)] =
              completion_cost(inst, spec, job.id, weights.real_time(t));
        }
      }
      weights.set_domain(job.id, k, d, std::move(costs));
    }
  }
  return weights;
}

Schedule to_real_time(const WeightMatrix& weights, const Schedule& model_schedule) {
  Schedule out;
  const int T = weights.num_intervals();
  if (model_schedule.length() != T) {
    throw std::invalid_argument("to_real_time: schedule length differs from the model horizon");
  }
  out.slots.assign(T == 0 ? 0 : weights.real_time(T), kIdle);
  for (int t = 1; t <= T; ++t) out.slots[weights.real_time(t) - 1] = model_schedule.at(t);
  return out;
}

std::vector<int> t_ab(int a, int b, int n, int p) {
  if (a < 1 || a > n || b < 1 || b > p) {
    throw std::out_of_range("t_ab: need 1 <= a <= n and 1 <= b <= p");
  }
  std::vector<int> out;
  if (a == n && b == p) return out;
  for (int i = 0; i < a; ++i) out.push_back(b + i * p);
  return out;
}

BlpModel::BlpModel(WeightMatrix weights) : weights_(std::move(weights)) {
  const int n = weights_.n();
  const int p = weights_.p();
  const int horizon = weights_.num_intervals();

  first_index_.reserve(static_cast<std::size_t>(n * p) + 1);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= p; ++k) {
      const PartDomain& d = weights_.domain(j, k);
      if (d.empty()) {
        throw ModelInfeasible(j, k,
                              "part " + std::to_string(j) + "." + std::to_string(k) +
                                  " has an empty domain");
      }
      first_index_.push_back(num_variables());
      for (int t = d.lo; t <= d.hi; ++t) {
        variables_.push_back(Variable{j, k, t});
        costs_.push_back(static_cast<double>(*weights_.cost(j, k, t)));
      }
    }
  }
  first_index_.push_back(num_variables());

  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= p; ++k) {
      ModelRow row{RowKind::kPartAssignment, RowSense::kEqual, 1.0, {}, {}};
      row.job = j;
      row.part = k;
      for (int v = first_index(j, k); v < first_index_[static_cast<std::size_t>((j - 1) * p + k)];
           ++v) {
        row.vars.push_back(v);
        row.coefs.push_back(1.0);
      }
      rows_.push_back(std::move(row));
    }
  }

  for (int t = 1; t <= horizon; ++t) {
    ModelRow row{RowKind::kIntervalCapacity, RowSense::kEqual, 1.0, {}, {}};
    row.interval = t;
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= p; ++k) {
        if (auto v = index_of(j, k, t)) {
          row.vars.push_back(*v);
          row.coefs.push_back(1.0);
        }
      }
    }
    rows_.push_back(std::move(row));
  }

  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k < p; ++k) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= p; ++b) {
          const auto intervals = t_ab(a, b, n, p);
          if (intervals.empty()) continue;
          ModelRow row{RowKind::kPartOrder, RowSense::kGreaterEqual, 0.0, {}, {}};
          row.job = j;
          row.part = k;
          row.a = a;
          row.b = b;
          for (int t : intervals) {
            if (auto v = index_of(j, k, t)) {
              row.vars.push_back(*v);
              row.coefs.push_back(1.0);
            }
          }
          for (int t : intervals) {
            if (auto v = index_of(j, k + 1, t + 1)) {
              row.vars.push_back(*v);
              row.coefs.push_back(-1.0);
            }
          }
          rows_.push_back(std::move(row));
        }
      }
    }
  }
}

std::optional<int> BlpModel::index_of(int job, int part, int t) const {
  if (job < 1 || job > weights_.n() || part < 1 || part > weights_.p()) return std::nullopt;
  const PartDomain& d = weights_.domain(job, part);
  if (!d.contains(t)) return std::nullopt;
  return first_index(job, part) + (t - d.lo);
}

int BlpModel::first_index(int job, int part) const {
  return first_index_[static_cast<std::size_t>((job - 1) * weights_.p() + (part - 1))];
}

std::size_t BlpModel::count_rows(RowKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [&](const ModelRow& r) { return r.kind == kind; }));
}

BlpModel build_model(const WeightMatrix& weights) { return BlpModel(weights); }

std::int64_t big_m_value(const WeightMatrix& weights) {
  std::int64_t total = 1;
  for (int j = 1; j <= weights.n(); ++j) {
    for (int k = 1; k <= weights.p(); ++k) {
      const PartDomain& d = weights.domain(j, k);
      for (int t = d.lo; t <= d.hi; ++t) total += *weights.cost(j, k, t);
    }
  }
  return total;
}

namespace {

std::string var_name(const Variable& v) {
  return "x_" + std::to_string(v.job) + "_" + std::to_string(v.part) + "_" +
         std::to_string(v.interval);
}

std::string row_name(const ModelRow& r) {
  switch (r.kind) {
    case RowKind::kPartAssignment:
      return "assign_" + std::to_string(r.job) + "_" + std::to_string(r.part);
    case RowKind::kIntervalCapacity:
      return "capacity_" + std::to_string(r.interval);
    case RowKind::kPartOrder:
      return "order_" + std::to_string(r.job) + "_" + std::to_string(r.part) + "_" +
             std::to_string(r.a) + "_" + std::to_string(r.b);
  }
  return "row";
}

void write_terms(std::ostringstream& out, const std::vector<std::pair<double, std::string>>& terms) {
  int on_line = 0;
  bool first = true;
  for (const auto& [coef, name] : terms) {
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    const bool negative = coef < 0;
    if (first) {
      out << (negative ? " -" : " ");
    } else {
      out << (negative ? " - " : " + ");
    }
    const double mag = negative ? -coef : coef;
    if (mag != 1.0) out << static_cast<long long>(mag) << ' ';
    out << name;
    first = false;
    ++on_line;
  }
}

}  // namespace

std::string to_lp_format(const BlpModel& model, bool binary) {
  std::ostringstream out;
  out << "\\ time-indexed model: n=" << model.weights().n() << " p=" << model.weights().p()
      << "\nMinimize\n obj:";
  std::vector<std::pair<double, std::string>> terms;
  for (int v = 0; v < model.num_variables(); ++v) {
    if (model.costs()[static_cast<std::size_t>(v)] != 0.0) {
      terms.emplace_back(model.costs()[static_cast<std::size_t>(v)],
                         var_name(model.variables()[static_cast<std::size_t>(v)]));
    }
  }
  if (terms.empty()) {
    out << " 0 " << var_name(model.variables().front());
  } else {
    write_terms(out, terms);
  }
  out << "\nSubject To\n";
  for (const ModelRow& row : model.rows()) {
    // Rows without variables read 0 >= 0 and are not representable in LP text.
    if (row.vars.empty()) continue;
    terms.clear();
    for (std::size_t i = 0; i < row.vars.size(); ++i) {
      terms.emplace_back(row.coefs[i],
                         var_name(model.variables()[static_cast<std::size_t>(row.vars[i])]));
    }
    out << ' ' << row_name(row) << ':';
    write_terms(out, terms);
    out << (row.sense == RowSense::kEqual ? " = " : " >= ") << static_cast<long long>(row.rhs)
        << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables()) out << ' ' << var_name(v) << " >= 0\n";
  if (binary) {
    out << "Binaries\n";
    for (const Variable& v : model.variables()) out << ' ' << var_name(v) << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace pmtn
