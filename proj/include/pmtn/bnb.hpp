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

// Exact solver: root LP plus the three heuristics, then best-first
// branch-and-bound on the largest fractional variable.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmtn/instance.hpp"
#include "pmtn/lp.hpp"
#include "pmtn/model.hpp"

namespace pmtn {

enum class Method { kIntegralLp, kAlg1, kAlg2, kWsrpt, kBnb };

// "integral-LP", "Alg1", "Alg2", "WSRPT", "BnB".
std::string_view method_name(Method m);

struct Incumbent {
  Schedule schedule;
  std::int64_t objective = 0;
  int preemptions = 0;
  Method source = Method::kBnb;
};

// Returns cand as the new incumbent when it is strictly better, or equally
// good with strictly fewer preemptions; otherwise returns *cur.
Incumbent update_incumbent(const std::optional<Incumbent>& cur, const Schedule& cand,
                           std::int64_t cand_objective, Method source);
// Plain total weighted completion time version.
Incumbent update_incumbent(const std::optional<Incumbent>& cur, const Schedule& cand,
                           const Instance& inst, Method source);

// Largest fractional value; ties to the lexicographically smallest (j,k,t).
// std::invalid_argument when the report has no fractional variable.
Variable branch_variable(const IntegralityReport& report);

struct ProgressEvent {
  long nodes = 0;
  std::size_t open = 0;
  std::int64_t global_lower_bound = 0;
  std::optional<std::int64_t> incumbent;
  double elapsed_seconds = 0.0;
};

struct SolveConfig {
  LpBackend backend = default_backend();
  double time_limit_seconds = 60.0;
  long node_limit = 100000;
  double eps_int = kEpsInt;
  std::function<void(const ProgressEvent&)> progress;
};

struct SolveReport {
  Schedule schedule;
  std::int64_t objective = 0;
  double lower_bound = 0.0;                  // root l_b
  std::int64_t global_lower_bound = 0;       // proven bound at exit
  long nodes_explored = 0;                   // LPs solved, root included
  int preemptions = 0;
  double wall_time_seconds = 0.0;
  Method method = Method::kBnb;
  bool certified = false;
  bool limit_hit = false;
  bool root_integral = false;
  bool solved_at_root = false;               // certified without branching
  // Root heuristic objectives (plain objective only; summed over idle blocks).
  std::optional<std::int64_t> wsrpt_objective;
  std::optional<std::int64_t> alg1_objective;
  std::optional<std::int64_t> alg2_objective;
  bool root_fractional_heuristics = false;   // Alg1/Alg2 ran on a fractional x
  long lp_iterations = 0;
};

// One block without forced idle. Objective per `spec`; the heuristics only
// run for plain total weighted completion time. Throws ModelInfeasible when
// no schedule exists.
SolveReport solve_exact(const Instance& inst, const SolveConfig& cfg = {},
                        const ObjectiveSpec& spec = {});

// Any valid instance: splits at forced idle, solves the blocks and joins the
// results (plain objective).
SolveReport solve(const Instance& inst, const SolveConfig& cfg = {});

}  // namespace pmtn
