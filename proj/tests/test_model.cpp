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

#include <optional>

#include "fixtures.hpp"
#include "pmtn/model.hpp"

using namespace pmtn;

TEST_CASE("t_ab") {
  CHECK(t_ab(2, 1, 4, 2) == std::vector<int>{1, 3});
  CHECK(t_ab(4, 2, 4, 2).empty());
  CHECK(t_ab(1, 3, 2, 3) == std::vector<int>{3});
  CHECK_THROWS_AS(t_ab(0, 1, 4, 2), std::out_of_range);
  CHECK_THROWS_AS(t_ab(1, 3, 4, 2), std::out_of_range);
}

TEST_CASE("weight matrix of the two-job example") {
  const WeightMatrix w = build_weights(fixtures::two_job_example());
  // Expected finite entries by (job, part): first interval and costs.
  struct Row {
    int job, part, lo, hi;
    std::vector<std::int64_t> cost;
  };
  const std::vector<Row> rows = {
      {1, 1, 1, 4, {0, 0, 0, 0}}, {1, 2, 2, 5, {0, 0, 0, 0}}, {1, 3, 3, 6, {3, 4, 5, 6}},
      {2, 1, 3, 4, {0, 0}},       {2, 2, 4, 5, {0, 0}},       {2, 3, 5, 6, {15, 18}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.job);
    CAPTURE(r.part);
    CHECK(w.domain(r.job, r.part).lo == r.lo);
    CHECK(w.domain(r.job, r.part).hi == r.hi);
    for (int t = 1; t <= 6; ++t) {
      const auto c = w.cost(r.job, r.part, t);
      if (t < r.lo || t > r.hi) {
        CHECK_FALSE(c.has_value());
      } else {
        REQUIRE(c.has_value());
        CHECK(*c == r.cost[t - r.lo]);
      }
    }
  }
  CHECK(big_m_value(w) == 52);
}

TEST_CASE("weights: single job and objective variants") {
  const WeightMatrix one = build_weights(Instance::from_lists(1, {1}, {5}));
  CHECK(one.cost(1, 1, 1) == std::optional<std::int64_t>(5));
  CHECK(big_m_value(one) == 6);
  CHECK(big_m_value(build_weights(Instance::from_lists(1, {1}, {5}),
                                  ObjectiveSpec{ObjectiveKind::kWeightedTardyJobs, {1}, {}, {}})) == 1);

  ObjectiveSpec deadline;
  deadline.deadlines = {3, 100};
  const WeightMatrix d = build_weights(fixtures::two_job_example(), deadline);
  CHECK(d.domain(1, 3).lo == 3);
  CHECK(d.domain(1, 3).hi == 3);
  CHECK(d.domain(1, 1).hi == 1);
  CHECK(d.domain(1, 2).hi == 2);
  CHECK(d.domain(1, 2).lo == 2);

  ObjectiveSpec impossible;
  impossible.deadlines = {2, 100};
  CHECK_THROWS_AS(build_weights(fixtures::two_job_example(), impossible), ModelInfeasible);

  ObjectiveSpec tardy{ObjectiveKind::kTotalWeightedTardiness, {4, 5}, {}, {}};
  const WeightMatrix t = build_weights(fixtures::two_job_example(), tardy);
  CHECK(t.cost(1, 3, 3) == std::optional<std::int64_t>(0));
  CHECK(t.cost(1, 3, 6) == std::optional<std::int64_t>(2));
  CHECK(t.cost(2, 3, 6) == std::optional<std::int64_t>(3));

  ObjectiveSpec late{ObjectiveKind::kWeightedTardyJobs, {4, 5}, {}, {}};
  const WeightMatrix u = build_weights(fixtures::two_job_example(), late);
  CHECK(u.cost(1, 3, 4) == std::optional<std::int64_t>(0));
  CHECK(u.cost(1, 3, 5) == std::optional<std::int64_t>(1));
  CHECK(u.cost(2, 3, 6) == std::optional<std::int64_t>(3));

  CHECK_THROWS_AS(build_weights(fixtures::two_job_example(),
                                ObjectiveSpec{ObjectiveKind::kTotalWeightedTardiness, {}, {}, {}}),
                  std::invalid_argument);
}

TEST_CASE("unavailable intervals are removed and costs use real time") {
  ObjectiveSpec down;
  down.unavailable = {2};
  const WeightMatrix w = build_weights(Instance::from_lists(2, {1}, {3}), down);
  CHECK(w.num_intervals() == 2);
  CHECK(w.real_time(1) == 1);
  CHECK(w.real_time(2) == 3);
  CHECK(w.cost(1, 2, 2) == std::optional<std::int64_t>(9));
  const Schedule real = to_real_time(w, Schedule{{1, 1}});
  CHECK(real.slots == std::vector<int>{1, kIdle, 1});
}

TEST_CASE("row counts") {
  const BlpModel m = build_model(build_weights(fixtures::two_job_example()));
  CHECK(m.count_rows(RowKind::kPartAssignment) == 6);
  CHECK(m.count_rows(RowKind::kIntervalCapacity) == 6);
  // n * (p - 1) * (n * p - 1) pairs (a, b) with a nonempty S(a, b).
  std::size_t expected = 0;
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k < 3; ++k)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 3; ++b) expected += t_ab(a, b, 2, 3).empty() ? 0 : 1;
  CHECK(expected == 20);
  CHECK(m.count_rows(RowKind::kPartOrder) == expected);

  const BlpModel single = build_model(build_weights(Instance::from_lists(1, {1}, {5})));
  CHECK(single.count_rows(RowKind::kPartAssignment) == 1);
  CHECK(single.count_rows(RowKind::kIntervalCapacity) == 1);
  CHECK(single.count_rows(RowKind::kPartOrder) == 0);
  CHECK(single.num_variables() == 1);

  const BlpModel example = build_model(build_weights(fixtures::worked_example()));
  CHECK(example.num_variables() < 64);
}

TEST_CASE("variables exist exactly on the domains") {
  const Instance inst = fixtures::worked_example();
  const BlpModel m = build_model(build_weights(inst));
  const int n = inst.n(), p = inst.p, T = inst.horizon();
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= p; ++k) {
      for (int t = 1; t <= T; ++t) {
        const bool expect = t >= inst.job(j).release + k - 1 && t <= T - p + k;
        CHECK(m.index_of(j, k, t).has_value() == expect);
      }
    }
  }
}

TEST_CASE("domain of part k shifted by one covers part k+1") {
  const Instance inst = Instance::from_lists(3, {1, 4, 2}, {3, 1, 2});
  const WeightMatrix w = build_weights(inst);
  for (int j = 1; j <= inst.n(); ++j) {
    for (int k = 1; k < inst.p; ++k) {
      const PartDomain a = w.domain(j, k), b = w.domain(j, k + 1);
      for (int t = std::max(b.lo, a.lo + 1); t <= b.hi; ++t) CHECK(a.contains(t - 1));
    }
  }
}

TEST_CASE("S(a, b) over a partitions the residue class") {
  const int n = 4, p = 3;
  for (int b = 1; b <= p; ++b) {
    std::vector<int> all;
    for (int a = 1; a <= n; ++a) {
      const auto s = t_ab(a, b, n, p);
      for (int t : s) CHECK(t % p == b % p);
      if (!s.empty()) CHECK(s.back() <= b + (n - 1) * p);
      all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<int> expected;
    for (int t = b; t <= b + (n - 1) * p; t += p) expected.push_back(t);
    if (b == p) expected.pop_back();
    CHECK(all == expected);
  }
}

TEST_CASE("LP text export") {
  const BlpModel m = build_model(build_weights(fixtures::two_job_example()));
  const std::string text = to_lp_format(m);
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("x_1_3_3") != std::string::npos);
  CHECK(text.find("x_2_1_1") == std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
}
