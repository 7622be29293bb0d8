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

#include <doctest.h>

#include "fixtures.hpp"
#include "pmtn/generator.hpp"
#include "pmtn/lp.hpp"
#include "pmtn/oracle.hpp"

using namespace pmtn;

namespace {

LpSolution solve_instance(const Instance& inst, LpBackend backend = LpBackend::kSimplex) {
  const BlpModel model = build_model(build_weights(inst));
  LpOptions o;
  o.backend = backend;
  return solve_lp(relax(model), o);
}

}  // namespace

TEST_CASE("relaxation optima of the reference instances") {
  for (LpBackend b : {LpBackend::kSimplex, LpBackend::kExactSimplex}) {
    CAPTURE(backend_name(b));
    const LpSolution ex = solve_instance(fixtures::worked_example(), b);
    REQUIRE(ex.status == LpStatus::kOptimal);
    CHECK(ex.objective_value == doctest::Approx(182.0));
    CHECK(lower_bound_int(ex) == 182);

    const LpSolution one = solve_instance(Instance::from_lists(1, {1}, {5}), b);
    CHECK(one.objective_value == doctest::Approx(5.0));
    CHECK(one.x == std::vector<double>{1.0});

    const LpSolution two = solve_instance(Instance::from_lists(2, {1}, {7}), b);
    CHECK(two.objective_value == doctest::Approx(14.0));
  }
}

TEST_CASE("two-job example relaxes to an integral optimum") {
  const Instance inst = fixtures::two_job_example();
  const BlpModel model = build_model(build_weights(inst));
  const LpSolution sol = solve_lp(relax(model));
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(21.0));
  REQUIRE(analyze_integrality(model, sol).integral);
  const Schedule s = extract_schedule(model, sol);
  CHECK(s == fixtures::schedule_of({1, 1, 1, 2, 2, 2}));
  CHECK(objective_twct(inst, s) == 21);
}

TEST_CASE("contradictory bounds make the relaxation infeasible") {
  const BlpModel model = build_model(build_weights(fixtures::worked_example()));
  LpProblem lp = relax(model);
  // Job 1's first part can only sit in intervals 1..7; forbid all of them.
  for (int t = 1; t <= 7; ++t) fix_variable(lp, *model.index_of(1, 1, t), 0.0);
  CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
}

TEST_CASE("analyze_integrality") {
  const BlpModel model = build_model(build_weights(fixtures::worked_example()));
  LpSolution table;
  table.x = fixtures::worked_example_fractional_x(model);
  const IntegralityReport r = analyze_integrality(model, table);
  CHECK_FALSE(r.integral);
  CHECK(r.integral_jobs.empty());
  CHECK(r.fractional_jobs == std::vector<int>{1, 2, 3, 4});
  CHECK(r.fractional_vars.size() == 14);

  LpSolution single;
  single.x.assign(model.num_variables(), 0.0);
  single.x[*model.index_of(1, 2, 2)] = 0.5;
  const IntegralityReport s = analyze_integrality(model, single);
  CHECK(s.fractional_jobs == std::vector<int>{1});
  CHECK(s.integral_jobs == std::vector<int>{2, 3, 4});

  LpSolution boolean;
  boolean.x = encode_schedule(model, fixtures::schedule_of({1, 1, 3, 3, 4, 4, 2, 2}));
  CHECK(analyze_integrality(model, boolean).integral);
  boolean.x[0] += 0.5e-6;
  CHECK(analyze_integrality(model, boolean).integral);
  CHECK_THROWS_AS(extract_schedule(model, table), std::invalid_argument);
}

TEST_CASE("lower_bound_int rounding") {
  CHECK(lower_bound_int(182.0) == 182);
  CHECK(lower_bound_int(181.5) == 182);
  CHECK(lower_bound_int(181.9999999) == 182);
  CHECK(lower_bound_int(182.0000001) == 182);
  CHECK(lower_bound_int(182.01) == 183);
}

TEST_CASE("encode then extract is the identity on gap-respecting schedules") {
  const Instance inst = fixtures::worked_example();
  const BlpModel model = build_model(build_weights(inst));
  for (auto s : {fixtures::schedule_of({1, 1, 3, 3, 4, 4, 2, 2}),
                 fixtures::schedule_of({1, 4, 4, 3, 3, 2, 2, 1}),
                 fixtures::schedule_of({1, 4, 3, 3, 4, 2, 2, 1})}) {
    LpSolution x;
    x.x = encode_schedule(model, s);
    CHECK(extract_schedule(model, x) == s);
    if (part_gaps_multiple_of(s, inst.p)) CHECK(max_residual(relax(model), x.x) == 0.0);
  }
}

TEST_CASE("returned points are feasible and bound every schedule") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = fixtures::small_random_instance(4, 2, seed);
    if (requires_idle(inst)) continue;
    const BlpModel model = build_model(build_weights(inst));
    const LpProblem lp = relax(model);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(max_residual(lp, sol.x) <= kEpsFeas);
    for (double v : sol.x) CHECK(v <= 1.0 + kEpsFeas);
    CHECK(lower_bound_int(sol) <= brute_force(inst).optimum);
    LpOptions exact;
    exact.backend = LpBackend::kExactSimplex;
    CHECK(solve_lp(lp, exact).objective_value == doctest::Approx(sol.objective_value).epsilon(1e-9));
  }
}

TEST_CASE("warm start after fixing matches a cold solve") {
  const Instance inst = generate_instance(9, 2, 3);
  const BlpModel model = build_model(build_weights(inst));
  const LpProblem lp = relax(model);
  const LpSolution root = solve_lp(lp);
  REQUIRE(root.status == LpStatus::kOptimal);
  for (int col = 0; col < model.num_variables(); col += 17) {
    for (double v : {0.0, 1.0}) {
      LpProblem child = lp;
      fix_variable(child, col, v);
      LpOptions warm;
      warm.warm_start = &*root.basis;
      const LpSolution a = solve_lp(child, warm);
      const LpSolution b = solve_lp(child);
      REQUIRE(a.status == b.status);
      if (a.status == LpStatus::kOptimal) {
        CHECK(a.objective_value == doctest::Approx(b.objective_value).epsilon(1e-9));
        CHECK(a.objective_value >= root.objective_value - 1e-7);
      }
    }
  }
}

TEST_CASE("backend names") {
  CHECK(parse_backend("simplex") == LpBackend::kSimplex);
  CHECK(parse_backend("exact") == LpBackend::kExactSimplex);
  CHECK(parse_backend("external") == LpBackend::kExternal);
  CHECK_THROWS_AS(parse_backend("cplex"), std::invalid_argument);
  CHECK(backend_name(LpBackend::kExactSimplex) == "exact");
}
