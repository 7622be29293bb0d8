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

#include "pmtn/bench.hpp"

#include <cstdio>

#include "pmtn/generator.hpp"
#include "pmtn/rng.hpp"

namespace pmtn {

std::vector<BenchOutcome> run_family(int n, int p, int count, std::uint64_t seed,
                                     const SolveConfig& cfg,
                                     const std::function<void(const BenchOutcome&)>& each) {
  std::vector<BenchOutcome> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    BenchOutcome o;
    o.index = i;
    o.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    o.report = solve(generate_family_member(n, p, seed, i), cfg);
    if (each) each(o);
    out.push_back(std::move(o));
  }
  return out;
}

BenchRow summarize(int n, int p, const std::vector<BenchOutcome>& outcomes) {
  BenchRow row;
  row.n = n;
  row.p = p;
  row.instances = static_cast<long>(outcomes.size());
  double preemptions = 0.0, seconds = 0.0;
  for (const BenchOutcome& o : outcomes) {
    const SolveReport& r = o.report;
    preemptions += r.preemptions;
    seconds += r.wall_time_seconds;
    if (r.limit_hit) ++row.limit_hit_count;
    if (r.root_integral) ++row.lp_integral_count;
    if (!r.certified) continue;
    if (r.wsrpt_objective == r.objective) ++row.wsrpt_optimal_count;
    if (r.root_integral) continue;
    if (r.alg1_objective == r.objective) ++row.alg1_optimal_count;
    if (r.alg2_objective == r.objective) ++row.alg2_optimal_count;
  }
  if (row.instances > 0) {
    row.mean_preemptions = preemptions / static_cast<double>(row.instances);
    row.mean_time_seconds = seconds / static_cast<double>(row.instances);
  }
  return row;
}

std::string bench_csv_header() {
  return "n,p,instances,wsrpt_optimal_count,lp_integral_count,alg1_optimal_count,"
         "alg2_optimal_count,mean_preemptions,mean_time_seconds,limit_hit_count";
}

std::string to_csv(const BenchRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%d,%ld,%ld,%ld,%ld,%ld,%.4f,%.6f,%ld", r.n, r.p, r.instances,
                r.wsrpt_optimal_count, r.lp_integral_count, r.alg1_optimal_count,
                r.alg2_optimal_count, r.mean_preemptions, r.mean_time_seconds, r.limit_hit_count);
  return buf;
}

}  // namespace pmtn
