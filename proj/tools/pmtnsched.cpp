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

// pmtnsched: generate, solve, bench and verify instances of
// 1|pmtn; p_j=p; r_j|sum w_j C_j.
//
// Exit codes: 0 ok / certified optimum, 1 verification failure, 2 solve
// stopped at a limit, 3 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmtn/bench.hpp"
#include "pmtn/bnb.hpp"
#include "pmtn/generator.hpp"
#include "pmtn/instance.hpp"
#include "pmtn/io.hpp"
#include "pmtn/lp.hpp"
#include "pmtn/model.hpp"
#include "pmtn/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pmtn;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInput = 3;

constexpr const char* kReportFormat = "pmtnsched-report/1";

// Input problems detected after argument parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_instance(const std::string& path) {
  try {
    Instance inst = parse_instance(read_file(path));
    require_valid(inst);
    return inst;
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

struct SolveFlags {
  std::string instance;
  std::string backend;
  double time_limit = 60.0;
  long node_limit = 100000;
  double eps_int = kEpsInt;
  std::string emit_lp;
  std::string json_out;
  bool oracle = false;
  bool progress = false;
};

struct GenerateFlags {
  int n = 10;
  int p = 2;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

struct BenchFlags {
  std::vector<int> n{10};
  std::vector<int> p{2};
  int count = 100;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string detail;
  std::string backend;
  double time_limit = 60.0;
  long node_limit = 100000;
  double eps_int = kEpsInt;
};

struct VerifyFlags {
  std::string instance;
  std::string schedule;
};

LpBackend backend_or_default(const std::string& name) {
  if (name.empty()) return default_backend();
  try {
    return parse_backend(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string schedule_text(const Schedule& s) {
  std::string text = format_schedule(s);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

json report_json(const Instance& inst, const SolveReport& r, LpBackend backend) {
  json j;
  j["format"] = kReportFormat;
  std::vector<std::int64_t> releases, weights;
  for (const Job& job : inst.jobs) {
    releases.push_back(job.release);
    weights.push_back(job.weight);
  }
  j["instance"] = {{"n", inst.n()}, {"p", inst.p}, {"releases", releases}, {"weights", weights}};
  j["schedule"] = schedule_text(r.schedule);
  j["objective"] = r.objective;
  j["lower_bound"] = r.lower_bound;
  j["global_lower_bound"] = r.global_lower_bound;
  j["method"] = std::string(method_name(r.method));
  j["preemptions"] = r.preemptions;
  j["certified"] = r.certified;
  j["limit_hit"] = r.limit_hit;
  j["root_integral"] = r.root_integral;
  j["solved_at_root"] = r.solved_at_root;
  j["nodes_explored"] = r.nodes_explored;
  j["lp_iterations"] = r.lp_iterations;
  j["wall_time_seconds"] = r.wall_time_seconds;
  j["backend"] = std::string(backend_name(backend));
  json heur = json::object();
  if (r.wsrpt_objective) heur["wsrpt"] = *r.wsrpt_objective;
  if (r.alg1_objective) heur["alg1"] = *r.alg1_objective;
  if (r.alg2_objective) heur["alg2"] = *r.alg2_objective;
  j["heuristics"] = heur;
  return j;
}

void emit_lp(const Instance& inst, const std::string& path) {
  const std::vector<SubInstance> blocks = decompose_idle(inst);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string target =
        blocks.size() == 1 ? path : path + ".block" + std::to_string(b + 1);
    write_file(target, to_lp_format(build_model(build_weights(blocks[b].instance))));
  }
}

int cmd_solve(const SolveFlags& f) {
  const Instance inst = load_instance(f.instance);
  SolveConfig cfg;
  cfg.backend = backend_or_default(f.backend);
  cfg.time_limit_seconds = f.time_limit;
  cfg.node_limit = f.node_limit;
  cfg.eps_int = f.eps_int;
  if (f.progress) {
    cfg.progress = [](const ProgressEvent& e) {
      json j = {{"event", "progress"},
                {"nodes", e.nodes},
                {"open", e.open},
                {"global_lower_bound", e.global_lower_bound},
                {"elapsed_seconds", e.elapsed_seconds}};
      j["incumbent"] = e.incumbent ? json(*e.incumbent) : json(nullptr);
      std::cerr << j.dump() << "\n";
    };
  }
  if (!f.emit_lp.empty()) emit_lp(inst, f.emit_lp);

  const SolveReport r = solve(inst, cfg);
  json doc = report_json(inst, r, cfg.backend);

  bool oracle_mismatch = false;
  if (f.oracle) {
    if (inst.horizon() > kOracleMaxWork) {
      std::cerr << "oracle skipped: n*p = " << inst.horizon() << " exceeds " << kOracleMaxWork
                << "\n";
      doc["oracle"] = {{"skipped", true}};
    } else {
      const OracleResult o = brute_force(inst, false);
      oracle_mismatch = r.certified && o.optimum != r.objective;
      doc["oracle"] = {{"optimum", o.optimum}, {"match", o.optimum == r.objective}};
    }
  }

  if (f.json_out == "-") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("schedule: %s\n", schedule_text(r.schedule).c_str());
    std::printf("objective: %lld\n", static_cast<long long>(r.objective));
    std::printf("lower_bound: %lld (root %.6f)\n", static_cast<long long>(r.global_lower_bound),
                r.lower_bound);
    std::printf("method: %s\n", std::string(method_name(r.method)).c_str());
    std::printf("preemptions: %d\n", r.preemptions);
    std::printf("certified: %s\n", r.certified ? "yes" : "no");
    std::printf("nodes: %ld\n", r.nodes_explored);
    std::printf("time_seconds: %.4f\n", r.wall_time_seconds);
    if (doc.contains("oracle") && doc["oracle"].contains("optimum")) {
      std::printf("oracle: %lld (%s)\n", static_cast<long long>(doc["oracle"]["optimum"]),
                  doc["oracle"]["match"].get<bool>() ? "match" : "MISMATCH");
    }
    if (!f.json_out.empty()) write_file(f.json_out, doc.dump(2) + "\n");
  }
  if (oracle_mismatch) return kExitViolation;
  return r.limit_hit ? kExitLimit : kExitOk;
}

int cmd_generate(const GenerateFlags& f) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(f.out_dir, ec);
  if (ec) throw InputError("cannot create " + f.out_dir + ": " + ec.message());
  for (int i = 0; i < f.count; ++i) {
    Instance inst;
    try {
      inst = generate_family_member(f.n, f.p, f.seed, i);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const std::string name = "inst_" + std::to_string(f.n) + "_" + std::to_string(f.p) + "_" +
                             std::to_string(f.seed) + "_" + std::to_string(i) + ".txt";
    const fs::path path = fs::path(f.out_dir) / name;
    try {
      write_file(path.string(), format_instance(inst));
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    std::printf("%s\n", path.string().c_str());
  }
  return kExitOk;
}

int cmd_bench(const BenchFlags& f) {
  SolveConfig cfg;
  cfg.backend = backend_or_default(f.backend);
  cfg.time_limit_seconds = f.time_limit;
  cfg.node_limit = f.node_limit;
  cfg.eps_int = f.eps_int;
  for (int n : f.n) {
    if (n < 7) throw InputError("bench needs n >= 7, got " + std::to_string(n));
  }
  for (int p : f.p) {
    if (p < 1) throw InputError("bench needs p >= 1, got " + std::to_string(p));
  }

  std::ostringstream csv, detail;
  csv << bench_csv_header() << "\n";
  detail << "n,p,index,seed,objective,lower_bound,root_integral,certified,solved_at_root,"
            "nodes_explored,preemptions,wall_time_seconds\n";
  for (int n : f.n) {
    for (int p : f.p) {
      const auto outcomes = run_family(n, p, f.count, f.seed, cfg, [&](const BenchOutcome& o) {
        const SolveReport& r = o.report;
        char line[256];
        std::snprintf(line, sizeof line, "%d,%d,%d,%llu,%lld,%.6f,%d,%d,%d,%ld,%d,%.6f\n", n, p,
                      o.index, static_cast<unsigned long long>(o.seed),
                      static_cast<long long>(r.objective), r.lower_bound, r.root_integral,
                      r.certified, r.solved_at_root, r.nodes_explored, r.preemptions,
                      r.wall_time_seconds);
        detail << line;
      });
      const BenchRow row = summarize(n, p, outcomes);
      csv << to_csv(row) << "\n";
      std::fprintf(stderr, "n=%d p=%d: %ld instances, %ld integral roots\n", n, p, row.instances,
                   row.lp_integral_count);
    }
  }
  if (f.out == "-") {
    std::cout << csv.str();
  } else {
    write_file(f.out, csv.str());
  }
  if (!f.detail.empty()) write_file(f.detail, detail.str());
  return kExitOk;
}

// A schedule file, or a solve report whose "schedule" field is used.
struct LoadedSchedule {
  Schedule schedule;
  std::optional<std::int64_t> claimed_objective;
};

LoadedSchedule load_schedule(const std::string& path) {
  const std::string text = read_file(path);
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  LoadedSchedule out;
  try {
    if (first < text.size() && text[first] == '{') {
      const json doc = json::parse(text);
      if (!doc.contains("schedule") || !doc["schedule"].is_string()) {
        throw InputError(path + ": report has no \"schedule\" string");
      }
      out.schedule = parse_schedule(doc["schedule"].get<std::string>());
      if (doc.contains("objective")) out.claimed_objective = doc["objective"].get<std::int64_t>();
    } else {
      out.schedule = parse_schedule(text);
    }
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  return out;
}

int cmd_verify(const VerifyFlags& f) {
  const Instance inst = load_instance(f.instance);
  const LoadedSchedule loaded = load_schedule(f.schedule);
  const std::vector<Violation> violations = validate_schedule(inst, loaded.schedule);
  if (!violations.empty()) {
    for (const Violation& v : violations) std::printf("violation: %s\n", v.message.c_str());
    return kExitViolation;
  }
  const std::int64_t objective = objective_twct(inst, loaded.schedule);
  std::printf("ok\n");
  std::printf("objective: %lld\n", static_cast<long long>(objective));
  std::printf("preemptions: %d\n", count_preemptions(loaded.schedule));
  if (loaded.claimed_objective && *loaded.claimed_objective != objective) {
    std::printf("violation: report claims objective %lld\n",
                static_cast<long long>(*loaded.claimed_objective));
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for 1|pmtn; p_j=p; r_j|sum w_j C_j"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance to certified optimality");
  solve_cmd->add_option("instance", solve_flags.instance, "Instance file")->required();
  solve_cmd->add_option("--backend", solve_flags.backend, "LP backend: simplex, exact, external");
  solve_cmd->add_option("--time-limit", solve_flags.time_limit, "Seconds")->capture_default_str();
  solve_cmd->add_option("--node-limit", solve_flags.node_limit, "LP solves")
      ->capture_default_str();
  solve_cmd->add_option("--eps-int", solve_flags.eps_int, "Integrality tolerance")
      ->capture_default_str();
  solve_cmd->add_option("--emit-lp", solve_flags.emit_lp, "Write the BLP model in LP format");
  solve_cmd->add_option("--json", solve_flags.json_out, "Write the JSON report (- for stdout)");
  solve_cmd->add_flag("--oracle", solve_flags.oracle, "Cross-check with brute force");
  solve_cmd->add_flag("--progress", solve_flags.progress, "JSON progress lines on stderr");

  GenerateFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("generate", "Write random instances");
  gen_cmd->add_option("--n", gen_flags.n, "Jobs (>= 7)")->required();
  gen_cmd->add_option("--p", gen_flags.p, "Processing time")->required();
  gen_cmd->add_option("--count", gen_flags.count, "Instances")->capture_default_str();
  gen_cmd->add_option("--seed", gen_flags.seed, "Base seed")->capture_default_str();
  gen_cmd->add_option("--out-dir", gen_flags.out_dir, "Output directory")->capture_default_str();

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Summarize generated families as CSV");
  bench_cmd->add_option("--n", bench_flags.n, "Job counts")->delimiter(',');
  bench_cmd->add_option("--p", bench_flags.p, "Processing times")->delimiter(',');
  bench_cmd->add_option("--count", bench_flags.count, "Instances per (n, p)")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_flags.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--out", bench_flags.out, "CSV path (- for stdout)")
      ->capture_default_str();
  bench_cmd->add_option("--detail", bench_flags.detail, "Per-instance CSV path");
  bench_cmd->add_option("--backend", bench_flags.backend, "LP backend");
  bench_cmd->add_option("--time-limit", bench_flags.time_limit, "Seconds per instance");
  bench_cmd->add_option("--node-limit", bench_flags.node_limit, "LP solves per instance");
  bench_cmd->add_option("--eps-int", bench_flags.eps_int, "Integrality tolerance");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule or a solve report");
  verify_cmd->add_option("instance", verify_flags.instance, "Instance file")->required();
  verify_cmd->add_option("schedule", verify_flags.schedule, "Schedule file or JSON report")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_flags);
    if (*gen_cmd) return cmd_generate(gen_flags);
    if (*bench_cmd) return cmd_bench(bench_flags);
    if (*verify_cmd) return cmd_verify(verify_flags);
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const LpBackendError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const ModelInfeasible& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
  return kExitInput;
}
