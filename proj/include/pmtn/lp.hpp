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

// LP relaxation of the time-indexed model and what we read off its solutions.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmtn/instance.hpp"
#include "pmtn/model.hpp"

namespace pmtn {

// Tolerances. All data are small integers, so distinct schedule objectives
// differ by at least 1 and these never decide between two real optima.
inline constexpr double kEpsFeas = 1e-7;
inline constexpr double kEpsInt = 1e-6;
inline constexpr double kEpsRound = 1e-6;

struct LpRow {
  RowSense sense;
  double rhs;
  std::vector<int> index;
  std::vector<double> value;
};

// min cost.x  s.t. rows, lower <= x <= upper. upper may be +infinity.
struct LpProblem {
  int num_cols = 0;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// Simplex basis. Columns [0, num_cols) are structural; column num_cols + i is
// the logical (slack or artificial) column of row i.
struct Basis {
  std::vector<int> basic;
  std::vector<std::uint8_t> at_upper;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  std::optional<Basis> basis;
  int iterations = 0;
};

class LpIterationLimit : public std::runtime_error {
 public:
  explicit LpIterationLimit(int iterations)
      : std::runtime_error("simplex iteration limit reached after " +
                           std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

class LpBackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LpBackend {
  kSimplex,       // bundled bounded primal simplex, double precision
  kExactSimplex,  // same algorithm over exact rationals
  kExternal,      // external solver via LP text files, see PMTN_LP_SOLVER
};

std::string_view backend_name(LpBackend backend);
// Accepts "simplex", "exact", "external"; std::invalid_argument otherwise.
LpBackend parse_backend(std::string_view name);
// PMTN_LP_BACKEND if set, otherwise kSimplex.
LpBackend default_backend();

struct LpOptions {
  LpBackend backend = default_backend();
  // 0 picks a limit from the problem size.
  int max_iterations = 0;
  // Starting basis; ignored by backends that cannot use it.
  const Basis* warm_start = nullptr;
};

// Same rows and objective as the model; binary restrictions become x >= 0.
// Upper bounds x <= 1 are implied by the assignment rows and left implicit.
LpProblem relax(const BlpModel& model);

// Copy of `lp` with x[var] fixed to value (both bounds).
void fix_variable(LpProblem& lp, int var, double value);

// Throws LpIterationLimit, never returns a non-optimal point as optimal.
LpSolution solve_lp(const LpProblem& lp, const LpOptions& options = {});

// Largest violation of a row or bound by x.
double max_residual(const LpProblem& lp, const std::vector<double>& x);

struct FractionalVar {
  Variable var;
  double value;
};

struct IntegralityReport {
  bool integral = true;
  std::vector<int> integral_jobs;    // J_I
  std::vector<int> fractional_jobs;  // J_F
  std::vector<FractionalVar> fractional_vars;
};

IntegralityReport analyze_integrality(const BlpModel& model, const LpSolution& solution,
                                      double eps_int = kEpsInt);

// Slot t <- the job whose part has x(j,k,t) ~ 1. Requires an integral
// solution (std::invalid_argument otherwise). Intervals are model intervals.
Schedule extract_schedule(const BlpModel& model, const LpSolution& solution,
                          double eps_int = kEpsInt);

// ceil(value - kEpsRound).
std::int64_t lower_bound_int(double objective_value);
std::int64_t lower_bound_int(const LpSolution& solution);

// 0/1 vector of model variables describing `s` (part k of job j is its k-th
// occurrence). Occurrences outside a domain are dropped.
std::vector<double> encode_schedule(const BlpModel& model, const Schedule& s);

// Writes `lp` in CPLEX LP text with columns named c<i>.
std::string to_lp_format(const LpProblem& lp);

}  // namespace pmtn
