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

// Feasible-schedule constructors: WSRPT, the two LP-rounding algorithms and the
// completion-target EDF builder.
//
// The LP-based constructors read x as a vector over BlpModel::variables(), so
// a hand-written solution can be injected. They assume the model was built
// for plain total weighted completion time (model interval == real interval).

#pragma once

#include <optional>
#include <vector>

#include "pmtn/instance.hpp"
#include "pmtn/lp.hpp"
#include "pmtn/model.hpp"

namespace pmtn {

// Unit-grid weighted shortest remaining processing time. At every interval the
// released, unfinished job with the smallest p'/w runs; ties go to the smaller
// p', then the larger w, then the smaller id. Throws std::invalid_argument if
// the instance needs idle time.
Schedule wsrpt(const Instance& inst);

// target[j - 1] is the intended completion interval of job j.
struct CompletionPlan {
  std::vector<int> target;
};

// Pins the last part of every job to its target, then fills each job's other
// p - 1 units earliest-deadline-first. nullopt when the targets cannot all be
// met. Throws std::invalid_argument for a plan of the wrong size or a target
// outside [1, T].
std::optional<Schedule> edf_with_completions(const Instance& inst, const CompletionPlan& plan);

// Latest interval with x(j, p, t) > eps for every job; 0 if there is none.
std::vector<int> estimated_completions(const BlpModel& model, const std::vector<double>& x,
                                       double eps_int = kEpsInt);

// Fractional jobs by estimated completion, then larger weight, then id.
std::vector<int> algorithm1_order(const Instance& inst, const BlpModel& model,
                                  const std::vector<double>& x, double eps_int = kEpsInt);

Schedule algorithm1(const Instance& inst, const BlpModel& model, const std::vector<double>& x,
                    double eps_int = kEpsInt);

Schedule algorithm2(const Instance& inst, const BlpModel& model, const std::vector<double>& x,
                    double eps_int = kEpsInt);

}  // namespace pmtn
