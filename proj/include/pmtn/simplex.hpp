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

// Bounded-variable primal simplex on an explicit dense basis inverse, kept
// column-major so that FTRAN is a handful of axpy calls.
//
// Every row gets a logical column: a surplus (-1, bounds [0, inf)) for >= rows
// and an artificial (+1, bounds [0, 0]) for = rows. The cold start basis is
// all logicals. Infeasible basics are removed by a composite phase 1 that
// minimizes the sum of bound violations; artificials that leave the basis
// never return because they are fixed at zero. The same phase 1 repairs a
// warm-start basis after bound changes.
//
// Pricing is Dantzig's rule with a Harris two-pass ratio test. After
// stall_factor * rows consecutive pivots without progress the solver switches
// to Bland's rule until the objective moves again.
//
// Real is double (kernels from pmtn/kernels.hpp, tolerances) or an exact
// rational type (all tolerances zero).

#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "pmtn/kernels.hpp"
#include "pmtn/lp.hpp"

namespace pmtn::simplex {

using Rational = boost::multiprecision::mpq_rational;

struct Options {
  int max_iterations = 0;  // 0 = automatic
  int stall_factor = 5;
  int refactor_interval = 0;  // pivots between reinversions, 0 = automatic
  const kernels::KernelTable* kernels = nullptr;  // nullptr = kernels::active()
};

template <class Real>
struct Result {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Real> x;
  Real objective{};
  Basis basis;
  int iterations = 0;
  int bland_switches = 0;
};

template <class Real>
Result<Real> solve(const LpProblem& lp, const Options& options, const Basis* warm_start);

}  // namespace pmtn::simplex
