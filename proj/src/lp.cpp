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

#include "pmtn/lp.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

#include "pmtn/simplex.hpp"

namespace pmtn {

std::string_view backend_name(LpBackend backend) {
  switch (backend) {
    case LpBackend::kSimplex:
      return "simplex";
    case LpBackend::kExactSimplex:
      return "exact";
    case LpBackend::kExternal:
      return "external";
  }
  return "?";
}

LpBackend parse_backend(std::string_view name) {
  if (name == "simplex") return LpBackend::kSimplex;
  if (name == "exact") return LpBackend::kExactSimplex;
  if (name == "external") return LpBackend::kExternal;
  throw std::invalid_argument("unknown LP backend '" + std::string(name) +
                              "' (expected simplex, exact or external)");
}

LpBackend default_backend() {
  const char* env = std::getenv("PMTN_LP_BACKEND");
  if (env == nullptr || *env == '\0') return LpBackend::kSimplex;
  return parse_backend(env);
}

LpProblem relax(const BlpModel& model) {
  LpProblem lp;
  lp.num_cols = model.num_variables();
  lp.cost = model.costs();
  lp.lower.assign(lp.num_cols, 0.0);
  lp.upper.assign(lp.num_cols, std::numeric_limits<double>::infinity());
  lp.rows.reserve(model.rows().size());
  for (const ModelRow& row : model.rows()) {
    lp.rows.push_back({row.sense, row.rhs, row.vars, row.coefs});
  }
  return lp;
}

void fix_variable(LpProblem& lp, int var, double value) {
  if (var < 0 || var >= lp.num_cols) throw std::out_of_range("fix_variable: bad column");
  lp.lower[var] = value;
  lp.upper[var] = value;
}

namespace {

LpSolution from_result(const simplex::Result<double>& r) {
  LpSolution out;
  out.status = r.status;
  out.x = r.x;
  out.objective_value = r.objective;
  out.basis = r.basis;
  out.iterations = r.iterations;
  return out;
}

LpSolution from_result(const simplex::Result<simplex::Rational>& r) {
  LpSolution out;
  out.status = r.status;
  out.x.reserve(r.x.size());
  for (const auto& v : r.x) out.x.push_back(v.convert_to<double>());
  out.objective_value = r.objective.convert_to<double>();
  out.basis = r.basis;
  out.iterations = r.iterations;
  return out;
}

std::string replace_all(std::string s, std::string_view key, const std::string& value) {
  for (std::size_t at = s.find(key); at != std::string::npos; at = s.find(key, at + value.size())) {
    s.replace(at, key.size(), value);
  }
  return s;
}

// Runs the command in PMTN_LP_SOLVER with {lp} and {sol} substituted. The
// solution file holds "status optimal|infeasible|unbounded", optionally
// "objective <v>", then one "c<i> <value>" line per nonzero column.
LpSolution solve_external(const LpProblem& lp) {
  const char* cmd = std::getenv("PMTN_LP_SOLVER");
  if (cmd == nullptr || *cmd == '\0') {
    throw LpBackendError("external LP backend needs PMTN_LP_SOLVER, e.g. "
                         "\"python3 tools/highs_solve.py {lp} {sol}\"");
  }
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path();
  const std::string stem = "pmtn_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto lp_path = dir / (stem + ".lp");
  const auto sol_path = dir / (stem + ".sol");
  {
    std::ofstream out(lp_path);
    out << to_lp_format(lp);
    if (!out) throw LpBackendError("cannot write " + lp_path.string());
  }
  std::string command = replace_all(cmd, "{lp}", lp_path.string());
  command = replace_all(command, "{sol}", sol_path.string());
  const int rc = std::system(command.c_str());
  std::ifstream in(sol_path);
  std::error_code ignored;
  if (rc != 0 || !in) {
    std::filesystem::remove(lp_path, ignored);
    std::filesystem::remove(sol_path, ignored);
    throw LpBackendError("external LP solver failed: " + command);
  }
  LpSolution out;
  out.x.assign(lp.num_cols, 0.0);
  std::string key;
  bool have_status = false;
  while (in >> key) {
    if (key == "status") {
      std::string status;
      in >> status;
      have_status = true;
      if (status == "optimal") {
        out.status = LpStatus::kOptimal;
      } else if (status == "infeasible") {
        out.status = LpStatus::kInfeasible;
      } else if (status == "unbounded") {
        out.status = LpStatus::kUnbounded;
      } else {
        throw LpBackendError("external LP solver reported status '" + status + "'");
      }
    } else if (key == "objective") {
      in >> out.objective_value;
    } else if (key.size() > 1 && key[0] == 'c') {
      const int col = std::stoi(key.substr(1));
      double v = 0.0;
      in >> v;
      if (col < 0 || col >= lp.num_cols) throw LpBackendError("bad column in solution: " + key);
      out.x[col] = v;
    } else {
      throw LpBackendError("unexpected token in solution file: " + key);
    }
  }
  std::filesystem::remove(lp_path, ignored);
  std::filesystem::remove(sol_path, ignored);
  if (!have_status) throw LpBackendError("solution file without status line");
  out.objective_value = 0.0;
  for (int j = 0; j < lp.num_cols; ++j) out.objective_value += lp.cost[j] * out.x[j];
  return out;
}

}  // namespace

LpSolution solve_lp(const LpProblem& lp, const LpOptions& options) {
  simplex::Options so;
  so.max_iterations = options.max_iterations;
  switch (options.backend) {
    case LpBackend::kSimplex:
      return from_result(simplex::solve<double>(lp, so, options.warm_start));
    case LpBackend::kExactSimplex:
      return from_result(simplex::solve<simplex::Rational>(lp, so, options.warm_start));
    case LpBackend::kExternal:
      return solve_external(lp);
  }
  throw std::invalid_argument("solve_lp: unknown backend");
}

double max_residual(const LpProblem& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_cols; ++j) {
    worst = std::max(worst, lp.lower[j] - x[j]);
    worst = std::max(worst, x[j] - lp.upper[j]);
  }
  for (const LpRow& row : lp.rows) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < row.index.size(); ++k) lhs += row.value[k] * x[row.index[k]];
    const double gap = row.rhs - lhs;
    worst = std::max(worst, row.sense == RowSense::kEqual ? std::abs(gap) : gap);
  }
  return worst;
}

IntegralityReport analyze_integrality(const BlpModel& model, const LpSolution& solution,
                                      double eps_int) {
  IntegralityReport rep;
  const int n = model.weights().n();
  std::vector<char> fractional(n + 1, 0);
  for (int i = 0; i < model.num_variables(); ++i) {
    const double v = solution.x[i];
    if (v > eps_int && v < 1.0 - eps_int) {
      const Variable& var = model.variables()[i];
      rep.fractional_vars.push_back({var, v});
      fractional[var.job] = 1;
    }
  }
  for (int j = 1; j <= n; ++j) {
    (fractional[j] ? rep.fractional_jobs : rep.integral_jobs).push_back(j);
  }
  rep.integral = rep.fractional_jobs.empty();
  return rep;
}

Schedule extract_schedule(const BlpModel& model, const LpSolution& solution, double eps_int) {
  Schedule s;
  s.slots.assign(model.weights().num_intervals(), kIdle);
  for (int i = 0; i < model.num_variables(); ++i) {
    const double v = solution.x[i];
    if (v <= eps_int) continue;
    if (v < 1.0 - eps_int) throw std::invalid_argument("extract_schedule: fractional solution");
    const Variable& var = model.variables()[i];
    int& slot = s.slots[var.interval - 1];
    if (slot != kIdle) throw std::invalid_argument("extract_schedule: interval used twice");
    slot = var.job;
  }
  return s;
}

std::int64_t lower_bound_int(double objective_value) {
  return static_cast<std::int64_t>(std::ceil(objective_value - kEpsRound));
}

std::int64_t lower_bound_int(const LpSolution& solution) {
  return lower_bound_int(solution.objective_value);
}

std::vector<double> encode_schedule(const BlpModel& model, const Schedule& s) {
  std::vector<double> x(model.num_variables(), 0.0);
  std::vector<int> seen(model.weights().n() + 1, 0);
  for (int t = 1; t <= s.length(); ++t) {
    const int j = s.at(t);
    if (j < 1 || j > model.weights().n()) continue;
    const int k = ++seen[j];
    if (k > model.weights().p()) continue;
    if (const auto idx = model.index_of(j, k, t)) x[*idx] = 1.0;
  }
  return x;
}

std::string to_lp_format(const LpProblem& lp) {
  std::ostringstream out;
  out.precision(17);
  auto term = [&](double coef, int col, bool first) {
    if (coef < 0) {
      out << " - ";
    } else if (!first) {
      out << " + ";
    } else {
      out << " ";
    }
    out << std::abs(coef) << " c" << col;
  };
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < lp.num_cols; ++j) {
    if (lp.cost[j] == 0.0) continue;
    term(lp.cost[j], j, first);
    first = false;
    if (j % 8 == 7) out << "\n";
  }
  if (first) out << " 0 c0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const LpRow& row = lp.rows[i];
    bool any = false;
    for (double v : row.value) any = any || v != 0.0;
    if (!any) continue;
    out << " r" << i << ":";
    bool head = true;
    int written = 0;
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      if (row.value[k] == 0.0) continue;
      term(row.value[k], row.index[k], head);
      head = false;
      if (++written % 8 == 0) out << "\n";
    }
    out << (row.sense == RowSense::kEqual ? " = " : " >= ") << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_cols; ++j) {
    out << " " << lp.lower[j] << " <= c" << j;
    if (std::isfinite(lp.upper[j])) {
      out << " <= " << lp.upper[j];
    } else {
      out << " <= +inf";
    }
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace pmtn
