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

#include "pmtn/bnb.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "pmtn/heuristics.hpp"

namespace pmtn {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kIntegralLp:
      return "integral-LP";
    case Method::kAlg1:
      return "Alg1";
    case Method::kAlg2:
      return "Alg2";
    case Method::kWsrpt:
      return "WSRPT";
    case Method::kBnb:
      return "BnB";
  }
  return "?";
}

Incumbent update_incumbent(const std::optional<Incumbent>& cur, const Schedule& cand,
                           std::int64_t cand_objective, Method source) {
  const int pre = count_preemptions(cand);
  if (!cur || cand_objective < cur->objective ||
      (cand_objective == cur->objective && pre < cur->preemptions)) {
    return Incumbent{cand, cand_objective, pre, source};
  }
  return *cur;
}

Incumbent update_incumbent(const std::optional<Incumbent>& cur, const Schedule& cand,
                           const Instance& inst, Method source) {
  return update_incumbent(cur, cand, objective_twct(inst, cand), source);
}

Variable branch_variable(const IntegralityReport& report) {
  if (report.fractional_vars.empty()) {
    throw std::invalid_argument("branch_variable: solution is integral");
  }
  constexpr double kTie = 1e-9;
  const FractionalVar* best = nullptr;
  for (const FractionalVar& f : report.fractional_vars) {
    if (best == nullptr || f.value > best->value + kTie) {
      best = &f;
      continue;
    }
    if (f.value >= best->value - kTie &&
        std::tie(f.var.job, f.var.part, f.var.interval) <
            std::tie(best->var.job, best->var.part, best->var.interval)) {
      best = &f;
    }
  }
  return best->var;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  double bound;
  int depth;
  long seq;
  std::vector<std::pair<int, double>> fixings;  // (column, value)
  std::shared_ptr<const Basis> basis;
  int branch_column;
};

struct NodeOrder {
  // Priority queue pops the "largest"; we want smallest bound, deepest, oldest.
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

class Search {
 public:
  Search(const Instance& inst, const SolveConfig& cfg, const ObjectiveSpec& spec)
      : inst_(inst),
        cfg_(cfg),
        spec_(spec),
        plain_(spec.is_plain_twct()),
        model_(build_model(build_weights(inst, spec))),
        lp_(relax(model_)),
        start_(Clock::now()) {}

  SolveReport run();

 private:
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }
  LpSolution solve_node(const LpProblem& lp, const Basis* warm) {
    LpOptions o;
    o.backend = cfg_.backend;
    o.warm_start = warm;
    LpSolution sol = solve_lp(lp, o);
    ++report_.nodes_explored;
    report_.lp_iterations += sol.iterations;
    return sol;
  }
  std::int64_t cost_of(const Schedule& model_schedule) const {
    return objective_value(inst_, spec_, to_real_time(model_.weights(), model_schedule));
  }
  void offer(const Schedule& model_schedule, Method source) {
    incumbent_ = update_incumbent(incumbent_, model_schedule, cost_of(model_schedule), source);
  }
  // Alg1/Alg2 on x; the integral case is covered by extract_schedule.
  std::pair<std::int64_t, std::int64_t> rounding_heuristics(const std::vector<double>& x) {
    const Schedule a1 = algorithm1(inst_, model_, x, cfg_.eps_int);
    const Schedule a2 = algorithm2(inst_, model_, x, cfg_.eps_int);
    offer(a1, Method::kAlg1);
    offer(a2, Method::kAlg2);
    return {cost_of(a1), cost_of(a2)};
  }
  void emit(std::size_t open, std::int64_t global_lb) {
    if (!cfg_.progress) return;
    ProgressEvent e;
    e.nodes = report_.nodes_explored;
    e.open = open;
    e.global_lower_bound = global_lb;
    if (incumbent_) e.incumbent = incumbent_->objective;
    e.elapsed_seconds = elapsed();
    cfg_.progress(e);
  }

  const Instance& inst_;
  const SolveConfig& cfg_;
  const ObjectiveSpec& spec_;
  bool plain_;
  BlpModel model_;
  LpProblem lp_;
  Clock::time_point start_;
  SolveReport report_;
  std::optional<Incumbent> incumbent_;
};

SolveReport Search::run() {
  const LpSolution root = solve_node(lp_, nullptr);
  if (root.status != LpStatus::kOptimal) {
    throw ModelInfeasible(0, 0, "the relaxation has no feasible point, so no schedule exists");
  }
  report_.lower_bound = root.objective_value;
  const std::int64_t root_lb = lower_bound_int(root);
  const IntegralityReport root_rep = analyze_integrality(model_, root, cfg_.eps_int);
  report_.root_integral = root_rep.integral;
  if (root_rep.integral) offer(extract_schedule(model_, root, cfg_.eps_int), Method::kIntegralLp);
  if (plain_) {
    if (!requires_idle(inst_)) {
      const Schedule w = wsrpt(inst_);
      report_.wsrpt_objective = objective_twct(inst_, w);
      offer(w, Method::kWsrpt);
    }
    std::tie(report_.alg1_objective, report_.alg2_objective) = rounding_heuristics(root.x);
    report_.root_fractional_heuristics = !root_rep.integral;
  }

  std::int64_t global_lb = root_lb;
  if (incumbent_ && incumbent_->objective <= root_lb) {
    report_.solved_at_root = true;
  } else {
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long seq = 0;
    // Bound of a node whose children were not all evaluated before a limit.
    double unexplored = std::numeric_limits<double>::infinity();
    auto branch = [&](const std::vector<std::pair<int, double>>& fixings, int column, int depth,
                      double bound, const std::shared_ptr<const Basis>& basis) {
      for (double value : {1.0, 0.0}) {
        if (elapsed() >= cfg_.time_limit_seconds || report_.nodes_explored >= cfg_.node_limit) {
          report_.limit_hit = true;
          unexplored = std::min(unexplored, bound);
          return;
        }
        Node child{0.0, depth + 1, seq++, fixings, basis, -1};
        child.fixings.emplace_back(column, value);
        LpProblem lp = lp_;
        for (const auto& [col, v] : child.fixings) fix_variable(lp, col, v);
        const LpSolution sol = solve_node(lp, basis.get());
        if (sol.status != LpStatus::kOptimal) continue;
        const std::int64_t lb = lower_bound_int(sol);
        if (incumbent_ && lb >= incumbent_->objective) continue;
        const IntegralityReport rep = analyze_integrality(model_, sol, cfg_.eps_int);
        if (rep.integral) {
          offer(extract_schedule(model_, sol, cfg_.eps_int), Method::kBnb);
          continue;
        }
        if (plain_) rounding_heuristics(sol.x);
        if (incumbent_ && lb >= incumbent_->objective) continue;
        const Variable v = branch_variable(rep);
        child.bound = sol.objective_value;
        child.branch_column = *model_.index_of(v.job, v.part, v.interval);
        child.basis = std::make_shared<const Basis>(*sol.basis);
        open.push(std::move(child));
      }
    };

    const Variable v0 = branch_variable(root_rep);
    branch({}, *model_.index_of(v0.job, v0.part, v0.interval), 0, root.objective_value,
           std::make_shared<const Basis>(*root.basis));
    while (!report_.limit_hit && !open.empty()) {
      const std::int64_t node_lb = lower_bound_int(open.top().bound);
      global_lb = std::max(global_lb, incumbent_ ? std::min(node_lb, incumbent_->objective) : node_lb);
      emit(open.size(), global_lb);
      if (incumbent_ && node_lb >= incumbent_->objective) break;  // best-first: all remaining pruned
      Node node = open.top();
      open.pop();
      branch(node.fixings, node.branch_column, node.depth, node.bound, node.basis);
    }
    if (report_.limit_hit) {
      const double frontier = open.empty() ? unexplored : std::min(unexplored, open.top().bound);
      const std::int64_t node_lb = lower_bound_int(frontier);
      global_lb = std::max(global_lb, incumbent_ ? std::min(node_lb, incumbent_->objective) : node_lb);
    } else if (!report_.limit_hit) {
      // Search exhausted: the incumbent is optimal.
      if (!incumbent_) throw ModelInfeasible(0, 0, "no integral schedule exists");
      global_lb = incumbent_->objective;
    }
  }

  if (!incumbent_) {
    throw std::runtime_error("search stopped by a limit before any schedule was found");
  }
  report_.certified = !report_.limit_hit;
  if (report_.certified) global_lb = incumbent_->objective;
  report_.global_lower_bound = global_lb;
  report_.schedule = to_real_time(model_.weights(), incumbent_->schedule);
  report_.objective = incumbent_->objective;
  report_.preemptions = count_preemptions(report_.schedule);
  report_.method = incumbent_->source;
  report_.wall_time_seconds = elapsed();
  emit(0, global_lb);
  return report_;
}

}  // namespace

SolveReport solve_exact(const Instance& inst, const SolveConfig& cfg, const ObjectiveSpec& spec) {
  require_valid(inst);
  Search search(inst, cfg, spec);
  return search.run();
}

SolveReport solve(const Instance& inst, const SolveConfig& cfg) {
  require_valid(inst);
  if (!requires_idle(inst)) return solve_exact(inst, cfg);

  const auto start = Clock::now();
  const std::vector<SubInstance> blocks = decompose_idle(inst);
  SolveReport total;
  total.root_integral = true;
  total.solved_at_root = true;
  total.certified = true;
  bool have_wsrpt = true, have_alg1 = true, have_alg2 = true;
  std::int64_t wsrpt_sum = 0, alg1_sum = 0, alg2_sum = 0;
  std::vector<Schedule> pieces;
  for (const SubInstance& block : blocks) {
    SolveConfig sub_cfg = cfg;
    const double used = std::chrono::duration<double>(Clock::now() - start).count();
    sub_cfg.time_limit_seconds = std::max(0.0, cfg.time_limit_seconds - used);
    sub_cfg.node_limit = std::max(0L, cfg.node_limit - total.nodes_explored);
    const SolveReport r = solve_exact(block.instance, sub_cfg);
    std::int64_t shift = 0;
    for (const Job& j : block.instance.jobs) shift += j.weight * block.offset;
    total.objective += r.objective + shift;
    total.lower_bound += r.lower_bound + static_cast<double>(shift);
    total.global_lower_bound += r.global_lower_bound + shift;
    total.nodes_explored += r.nodes_explored;
    total.lp_iterations += r.lp_iterations;
    total.certified = total.certified && r.certified;
    total.limit_hit = total.limit_hit || r.limit_hit;
    total.root_integral = total.root_integral && r.root_integral;
    total.solved_at_root = total.solved_at_root && r.solved_at_root;
    total.root_fractional_heuristics = total.root_fractional_heuristics || r.root_fractional_heuristics;
    if (r.wsrpt_objective) wsrpt_sum += *r.wsrpt_objective + shift; else have_wsrpt = false;
    if (r.alg1_objective) alg1_sum += *r.alg1_objective + shift; else have_alg1 = false;
    if (r.alg2_objective) alg2_sum += *r.alg2_objective + shift; else have_alg2 = false;
    if (blocks.size() == 1 || r.method != Method::kIntegralLp) total.method = r.method;
    pieces.push_back(r.schedule);
  }
  if (have_wsrpt) total.wsrpt_objective = wsrpt_sum;
  if (have_alg1) total.alg1_objective = alg1_sum;
  if (have_alg2) total.alg2_objective = alg2_sum;
  total.schedule = assemble(inst, blocks, pieces);
  total.preemptions = count_preemptions(total.schedule);
  total.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return total;
}

}  // namespace pmtn
