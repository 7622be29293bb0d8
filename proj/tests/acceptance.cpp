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

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [criterion...]   (default: all of 1..8)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pmtn/bench.hpp"
#include "pmtn/bnb.hpp"
#include "pmtn/heuristics.hpp"
#include "pmtn/lp.hpp"
#include "pmtn/model.hpp"
#include "pmtn/oracle.hpp"

namespace {

using namespace pmtn;
using Clock = std::chrono::steady_clock;

// Pinned thresholds.
constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kIntegralitySeconds = 900.0;
constexpr double kMinIntegralRate = 0.99;
constexpr double kMaxWsrptMeanGap = 0.001;
constexpr double kWsrptSoftGap = 0.05;
constexpr double kMaxAlg1Gap = 0.07;
constexpr double kMaxAlg2Gap = 0.03;
constexpr double kMinRootRate = 0.995;

constexpr int kSeededInstances = 200;
constexpr std::uint64_t kSeededBase = 1000;
constexpr int kGridMaxHorizon = 8;
constexpr int kGridMaxJobs = 5;
constexpr int kGridMaxWeight = 3;
constexpr int kFamilySize = 1000;
constexpr std::uint64_t kFamilySeed = 2026;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int failures = 0;

void verdict(int id, const char* name, bool pass, const std::string& summary,
             const std::vector<std::string>& details = {}) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, summary.c_str());
  for (const std::string& d : details) std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double rel_gap(std::int64_t value, std::int64_t optimum) {
  return static_cast<double>(value - optimum) / static_cast<double>(optimum);
}

// ---- 1 -------------------------------------------------------------------

void worked_example() {
  const auto start = Clock::now();
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const Instance inst = fixtures::worked_example();
  const BlpModel model = build_model(build_weights(inst));

  const LpSolution root = solve_lp(relax(model));
  expect(root.status == LpStatus::kOptimal && std::abs(root.objective_value - 182.0) < 1e-9,
         fmt("root LP value %.6f, want 182", root.objective_value));

  const std::vector<double> injected = fixtures::worked_example_fractional_x(model);
  const Schedule a1 = algorithm1(inst, model, injected);
  expect(to_string(a1) == "14334221" && objective_twct(inst, a1) == 188,
         fmt("Alg1 on the injected x*: %s = %lld, want (14334221) = 188", to_string(a1).c_str(),
             static_cast<long long>(objective_twct(inst, a1))));
  const Schedule a2 = algorithm2(inst, model, injected);
  expect(to_string(a2) == "11334422" && objective_twct(inst, a2) == 182,
         fmt("Alg2 on the injected x*: %s = %lld, want (11334422) = 182", to_string(a2).c_str(),
             static_cast<long long>(objective_twct(inst, a2))));
  const Schedule w = wsrpt(inst);
  expect(to_string(w) == "14433221" && objective_twct(inst, w) == 182,
         fmt("WSRPT: %s = %lld, want (14433221) = 182", to_string(w).c_str(),
             static_cast<long long>(objective_twct(inst, w))));

  const std::int64_t s1 = objective_twct(inst, algorithm1(inst, model, root.x));
  const std::int64_t s2 = objective_twct(inst, algorithm2(inst, model, root.x));
  expect(s1 >= 182 && s2 >= 182,
         fmt("heuristics on the solver x*: Alg1 %lld, Alg2 %lld, want >= 182",
             static_cast<long long>(s1), static_cast<long long>(s2)));

  const SolveReport r = solve_exact(inst);
  expect(r.certified && r.objective == 182 && r.solved_at_root && r.nodes_explored == 1,
         fmt("solve_exact: objective %lld certified %d at root %d nodes %ld",
             static_cast<long long>(r.objective), r.certified, r.solved_at_root,
             r.nodes_explored));

  const double secs = seconds_since(start);
  expect(secs < kWorkedExampleSeconds, fmt("runtime %.3f s", secs));
  verdict(1, "worked-example", bad.empty(),
          fmt("%zu of 7 checks failed, %.3f s", bad.size(), secs), bad);
}

// ---- 2 -------------------------------------------------------------------

void weight_matrix() {
  const WeightMatrix w = build_weights(fixtures::two_job_example());
  struct Row {
    int job, part, lo, hi;
    std::vector<std::int64_t> cost;
  };
  const std::vector<Row> rows = {
      {1, 1, 1, 4, {0, 0, 0, 0}}, {1, 2, 2, 5, {0, 0, 0, 0}}, {1, 3, 3, 6, {3, 4, 5, 6}},
      {2, 1, 3, 4, {0, 0}},       {2, 2, 4, 5, {0, 0}},       {2, 3, 5, 6, {15, 18}},
  };
  std::vector<std::string> bad;
  for (const Row& r : rows) {
    for (int t = 1; t <= 6; ++t) {
      const auto c = w.cost(r.job, r.part, t);
      const bool finite = t >= r.lo && t <= r.hi;
      if (finite != c.has_value() || (finite && *c != r.cost[t - r.lo])) {
        bad.push_back(fmt("w(%d,%d,%d) = %s", r.job, r.part, t,
                          c ? std::to_string(*c).c_str() : "excluded"));
      }
    }
  }
  verdict(2, "weight-matrix", bad.empty(), fmt("%zu mismatching entries of 36", bad.size()), bad);
}

// ---- 3, 6, 8 on small instances ------------------------------------------

struct SmallStats {
  long instances = 0;
  long mismatches = 0;
  long structure_violations = 0;
  long bound_violations = 0;   // l_b above the optimum
  long bound_gaps = 0;         // a heuristic is optimal but l_b is below
  std::vector<std::string> mismatch_notes, structure_notes, bound_notes;
};

void check_small(const Instance& inst, const std::string& label, SmallStats& st) {
  ++st.instances;
  const SolveReport r = solve(inst);
  const OracleResult o = brute_force(inst, false);
  if (!r.certified || r.objective != o.optimum) {
    ++st.mismatches;
    if (st.mismatch_notes.size() < 10) {
      st.mismatch_notes.push_back(fmt("%s: solver %lld (certified %d), oracle %lld",
                                      label.c_str(), static_cast<long long>(r.objective),
                                      r.certified, static_cast<long long>(o.optimum)));
    }
  }
  if (r.certified &&
      (has_intersecting_jobs(r.schedule) || !part_gaps_multiple_of(r.schedule, inst.p))) {
    ++st.structure_violations;
    if (st.structure_notes.size() < 10) {
      st.structure_notes.push_back(label + ": " + to_string(r.schedule));
    }
  }
  const std::int64_t lb = lower_bound_int(r.lower_bound);
  const bool heuristic_optimal = r.wsrpt_objective == o.optimum ||
                                 r.alg1_objective == o.optimum || r.alg2_objective == o.optimum;
  const bool above = lb > o.optimum;
  const bool gap = heuristic_optimal && lb != o.optimum;
  if (above) ++st.bound_violations;
  if (gap) ++st.bound_gaps;
  if ((above || gap) && st.bound_notes.size() < 10) {
    st.bound_notes.push_back(fmt("%s: ceil(l_b) %lld, oracle %lld", label.c_str(),
                                 static_cast<long long>(lb), static_cast<long long>(o.optimum)));
  }
}

// All multisets of (release, weight) pairs with releases in [1, T-p+1] and
// weights in [1, kGridMaxWeight]; job order does not affect the optimum.
void grid_instances(int n, int p, const auto& visit) {
  const int max_release = n * p - p + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int r = 1; r <= max_release; ++r) {
    for (int w = 1; w <= kGridMaxWeight; ++w) pairs.emplace_back(r, w);
  }
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::int64_t> rel, wt;
    for (int i : pick) {
      rel.push_back(pairs[static_cast<std::size_t>(i)].first);
      wt.push_back(pairs[static_cast<std::size_t>(i)].second);
    }
    visit(Instance::from_lists(p, rel, wt));
    int k = n - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == static_cast<int>(pairs.size()) - 1) --k;
    if (k < 0) break;
    const int v = ++pick[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) pick[static_cast<std::size_t>(i)] = v;
  }
}

// ---- 4, 5, 6, 7 on generated families --------------------------------------

struct FamilyRun {
  int n, p;
  std::vector<BenchOutcome> outcomes;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8};
  auto want = [&](int c) { return wanted.count(c) > 0; };

  if (want(1)) worked_example();
  if (want(2)) weight_matrix();

  SmallStats small;
  double small_seconds = 0.0;
  if (want(3) || want(6) || want(8)) {
    const auto start = Clock::now();
    for (int s = 0; s < kSeededInstances; ++s) {
      const int n = 3 + s % 3;
      const int p = 1 + (s / 3) % 3;
      const std::uint64_t seed = kSeededBase + static_cast<std::uint64_t>(s);
      check_small(fixtures::small_random_instance(n, p, seed), fmt("seed %llu (n=%d p=%d)",
                  static_cast<unsigned long long>(seed), n, p), small);
    }
    for (int n = 1; n <= kGridMaxJobs; ++n) {
      for (int p = 1; n * p <= kGridMaxHorizon; ++p) {
        grid_instances(n, p, [&](const Instance& inst) {
          check_small(inst, fmt("grid n=%d p=%d #%ld", n, p, small.instances), small);
        });
      }
    }
    small_seconds = seconds_since(start);
  }
  if (want(3)) {
    std::vector<std::string> notes = small.mismatch_notes;
    if (small_seconds >= kOracleSeconds) notes.push_back(fmt("runtime %.1f s", small_seconds));
    verdict(3, "oracle-equivalence",
            small.mismatches == 0 && small_seconds < kOracleSeconds,
            fmt("%ld mismatches over %ld instances (%d seeded + grids T <= %d), %.1f s",
                small.mismatches, small.instances, kSeededInstances, kGridMaxHorizon,
                small_seconds),
            notes);
  }

  std::vector<FamilyRun> families;
  double family_seconds = 0.0;
  if (want(4) || want(5) || want(6) || want(7)) {
    const auto start = Clock::now();
    for (auto [n, p] : {std::pair{10, 2}, std::pair{14, 3}}) {
      families.push_back({n, p, run_family(n, p, kFamilySize, kFamilySeed, SolveConfig{})});
    }
    family_seconds = seconds_since(start);
  }

  long total = 0, integral = 0, at_root = 0, certified = 0;
  std::vector<std::string> fractional_seeds, branched;
  for (const FamilyRun& f : families) {
    for (const BenchOutcome& o : f.outcomes) {
      ++total;
      const SolveReport& r = o.report;
      if (r.root_integral) {
        ++integral;
      } else {
        fractional_seeds.push_back(fmt("n=%d p=%d index %d seed %llu", f.n, f.p, o.index,
                                       static_cast<unsigned long long>(o.seed)));
      }
      if (r.solved_at_root) {
        ++at_root;
      } else {
        branched.push_back(fmt("n=%d p=%d index %d seed %llu nodes %ld certified %d", f.n, f.p,
                               o.index, static_cast<unsigned long long>(o.seed),
                               r.nodes_explored, r.certified));
      }
      if (r.certified) ++certified;
    }
  }

  if (want(4)) {
    const double rate = total ? static_cast<double>(integral) / static_cast<double>(total) : 0.0;
    std::vector<std::string> notes;
    for (const FamilyRun& f : families) {
      const BenchRow row = summarize(f.n, f.p, f.outcomes);
      notes.push_back(fmt("n=%d p=%d: %ld/%ld integral", f.n, f.p, row.lp_integral_count,
                          row.instances));
    }
    notes.insert(notes.end(), fractional_seeds.begin(), fractional_seeds.end());
    if (family_seconds >= kIntegralitySeconds) notes.push_back(fmt("runtime %.1f s", family_seconds));
    verdict(4, "lp-integrality", rate >= kMinIntegralRate && family_seconds < kIntegralitySeconds,
            fmt("%.2f%% integral roots (%ld/%ld), %.1f s", 100.0 * rate, integral, total,
                family_seconds),
            notes);
  }

  if (want(5)) {
    double gap_sum = 0.0;
    long gap_count = 0, soft = 0, alg_runs = 0;
    double worst_alg1 = 0.0, worst_alg2 = 0.0;
    std::vector<std::string> notes;
    for (const FamilyRun& f : families) {
      for (const BenchOutcome& o : f.outcomes) {
        const SolveReport& r = o.report;
        if (!r.certified) continue;
        if (r.wsrpt_objective) {
          const double g = rel_gap(*r.wsrpt_objective, r.objective);
          gap_sum += g;
          ++gap_count;
          if (g > kWsrptSoftGap) {
            ++soft;
            notes.push_back(fmt("soft: WSRPT gap %.2f%% on n=%d p=%d seed %llu", 100.0 * g, f.n,
                                f.p, static_cast<unsigned long long>(o.seed)));
          }
        }
        if (r.root_fractional_heuristics && r.alg1_objective && r.alg2_objective) {
          ++alg_runs;
          worst_alg1 = std::max(worst_alg1, rel_gap(*r.alg1_objective, r.objective));
          worst_alg2 = std::max(worst_alg2, rel_gap(*r.alg2_objective, r.objective));
        }
      }
    }
    const double mean = gap_count ? gap_sum / static_cast<double>(gap_count) : 0.0;
    const bool pass = gap_count > 0 && mean <= kMaxWsrptMeanGap && worst_alg1 <= kMaxAlg1Gap &&
                      worst_alg2 <= kMaxAlg2Gap;
    verdict(5, "heuristic-quality", pass,
            fmt("WSRPT mean gap %.4f%% over %ld; %ld above 5%% (soft); Alg1 max %.2f%%, "
                "Alg2 max %.2f%% over %ld fractional roots",
                100.0 * mean, gap_count, soft, 100.0 * worst_alg1, 100.0 * worst_alg2, alg_runs),
            notes);
  }

  if (want(6)) {
    long violations = small.structure_violations;
    long checked = small.instances;
    std::vector<std::string> notes = small.structure_notes;
    for (const FamilyRun& f : families) {
      for (const BenchOutcome& o : f.outcomes) {
        const SolveReport& r = o.report;
        if (!r.certified) continue;
        ++checked;
        if (has_intersecting_jobs(r.schedule) || !part_gaps_multiple_of(r.schedule, f.p)) {
          ++violations;
          notes.push_back(fmt("n=%d p=%d seed %llu: %s", f.n, f.p,
                              static_cast<unsigned long long>(o.seed),
                              to_string(r.schedule).c_str()));
        }
      }
    }
    verdict(6, "schedule-structure", violations == 0,
            fmt("%ld violations over %ld schedules", violations, checked), notes);
  }

  if (want(7)) {
    const double rate = total ? static_cast<double>(at_root) / static_cast<double>(total) : 0.0;
    verdict(7, "root-certification", total > 0 && rate >= kMinRootRate,
            fmt("%.2f%% certified at the root (%ld/%ld), %ld certified overall", 100.0 * rate,
                at_root, total, certified),
            branched);
  }

  if (want(8)) {
    verdict(8, "lower-bound", small.bound_violations == 0 && small.bound_gaps == 0,
            fmt("%ld bounds above the optimum, %ld gaps with an optimal heuristic, %ld instances",
                small.bound_violations, small.bound_gaps, small.instances),
            small.bound_notes);
  }
  return failures == 0 ? 0 : 1;
}
