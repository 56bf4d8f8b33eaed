// Copyright 2026 The ucgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ucgen/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ucgen/frontend.hpp"

namespace ucgen {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void add(PhaseTimes& into, const PhaseTimes& t) {
  into.llm += t.llm;
  into.parse += t.parse;
  into.prune += t.prune;
  into.constraints += t.constraints;
  into.solve += t.solve;
  into.repair += t.repair;
  into.compile += t.compile;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  if (!f) throw ConfigError("cannot read " + p.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::string status_name(PipelineOutcome::Status s) {
  switch (s) {
    case PipelineOutcome::Status::Success: return "success";
    case PipelineOutcome::Status::IterationLimit: return "iteration_limit";
    case PipelineOutcome::Status::BackendError: return "backend_error";
  }
  return "?";
}

PipelineOutcome run_pipeline(const std::string& task, const PipelineConfig& cfg) {
  std::unique_ptr<LlmBackend> backend;
  try {
    backend = make_backend(cfg.backend);
  } catch (const std::exception& e) {
    PipelineOutcome out;
    out.status = PipelineOutcome::Status::BackendError;
    out.detail = e.what();
    return out;
  }
  return run_pipeline(task, cfg, *backend);
}

PipelineOutcome run_pipeline(const std::string& task, const PipelineConfig& cfg, LlmBackend& backend) {
  PipelineOutcome out;
  auto start = Clock::now();
  auto finish = [&](PipelineOutcome::Status s) {
    out.status = s;
    out.ms_total = since(start);
    return out;
  };
  if (cfg.max_llm_calls < 1) {
    out.detail = "max_llm_calls must be at least 1";
    return finish(PipelineOutcome::Status::BackendError);
  }

  RepairOptions ropts;
  ropts.weights = cfg.weights;
  ropts.solver = cfg.solver;
  ropts.external = cfg.external;

  std::string partial;
  for (int call = 1; call <= cfg.max_llm_calls; ++call) {
    RoundReport round;
    round.call = call;
    round.holefill = call > 1;
    std::string code;
    try {
      std::string prompt = call == 1 ? build_initial_prompt(task) : build_holefill_prompt(partial, task);
      auto t0 = Clock::now();
      std::string response;
      try {
        response = generate(backend, prompt, out.transcript);
      } catch (...) {
        round.timing.llm = since(t0);
        add(out.timing, round.timing);
        throw;
      }
      round.timing.llm = since(t0);
      out.iterations_used = call;

      t0 = Clock::now();
      code = extract_code(response);
      ParentAst ast = parse_tolerant(code);
      round.timing.parse = since(t0);

      t0 = Clock::now();
      PruneResult pr = prune_to_child(ast);
      round.timing.prune = since(t0);
      round.dropped = pr.report.dropped.size();
      round.holes_inserted = pr.report.holes_inserted.size();

      t0 = Clock::now();
      RepairOutcome ro = repair_round(pr.program, ropts);
      double total = since(t0);
      round.timing.constraints = ro.ms_constraints;
      round.timing.solve = ro.ms_solve;
      round.timing.repair = std::max(0.0, total - ro.ms_constraints - ro.ms_solve);
      round.holes_before = ro.holes_before;
      round.holes_after = ro.holes_after;
      round.holed = ro.holed.size();
      round.filled = ro.filled.size();
      round.retyped = ro.retyped.size();
      round.synthesized = ro.synthesized;
      round.cost = ro.cost;
      round.solve_rounds = ro.solve_rounds;
      round.notes = ro.notes;
      partial = print_child(ro.program);
      round.child = partial;

      if (ro.holes_after == 0) {
        t0 = Clock::now();
        CompileOptions copts;
        if (cfg.emit_control) copts.control_unroll = cfg.control_unroll;
        std::string text = print_uclid(compile(ro.program, copts));
        out.diagnostics = validate_uclid(text);
        round.timing.compile = since(t0);
        add(out.timing, round.timing);
        out.rounds.push_back(std::move(round));
        if (!out.diagnostics.empty()) {
          out.detail = "emitted UCLID5 failed validation: " + out.diagnostics.front().message;
          out.uclid = std::move(text);
          return finish(PipelineOutcome::Status::BackendError);
        }
        out.uclid = std::move(text);
        return finish(PipelineOutcome::Status::Success);
      }
    } catch (const BackendError& e) {
      out.detail = e.what();
      return finish(PipelineOutcome::Status::BackendError);
    } catch (const EmptySourceError& e) {
      // An empty reply prunes to a module hole.
      partial = "??\n";
      round.holes_before = round.holes_after = 1;
      round.child = partial;
    } catch (const std::exception& e) {
      add(out.timing, round.timing);
      out.rounds.push_back(std::move(round));
      out.detail = std::string("internal error: ") + e.what();
      return finish(PipelineOutcome::Status::BackendError);
    }
    add(out.timing, round.timing);
    out.rounds.push_back(std::move(round));
  }
  out.partial = partial;
  return finish(PipelineOutcome::Status::IterationLimit);
}

BenchReport run_bench(const std::string& suite_dir, const PipelineConfig& cfg, int workers) {
  fs::path dir(suite_dir);
  if (!fs::is_directory(dir)) throw ConfigError("suite directory not found: " + suite_dir);
  std::vector<std::string> ids;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (!ent.is_regular_file() || ent.path().extension() != ".txt") continue;
    ids.push_back(ent.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());

  BenchReport report;
  report.tasks.resize(ids.size());
  auto run_one = [&](std::size_t i) {
    const std::string& id = ids[i];
    BenchRow& row = report.tasks[i];
    row.id = id;
    PipelineConfig tc = cfg;
    PipelineOutcome o;
    try {
      std::string task = read_file(dir / (id + ".txt"));
      if (fs::exists(dir / (id + ".jsonl"))) {
        tc.backend.kind = BackendConfig::Kind::Replay;
        tc.backend.transcript_path = (dir / (id + ".jsonl")).string();
      } else if (fs::exists(dir / (id + ".mock.json"))) {
        tc.backend.kind = BackendConfig::Kind::Mock;
        tc.backend.mock_responses =
            nlohmann::json::parse(read_file(dir / (id + ".mock.json"))).get<std::vector<std::string>>();
      }
      o = run_pipeline(task, tc);
    } catch (const std::exception& e) {
      o.status = PipelineOutcome::Status::BackendError;
      o.detail = e.what();
    }
    row.status = o.status;
    // Re-checked here rather than trusted from the pipeline.
    row.parse_ok = o.status == PipelineOutcome::Status::Success && validate_uclid(o.uclid).empty();
    row.iterations = o.iterations_used;
    row.ms_llm = o.timing.llm;
    row.ms_repair = o.timing.repair_step();
    row.ms_total = o.ms_total;
    for (const auto& r : o.rounds) row.round_ms_repair.push_back(r.timing.repair_step());
    if (o.status != PipelineOutcome::Status::Success) row.detail = o.detail;
  };

  workers = std::max(1, workers);
  if (workers == 1 || ids.size() < 2) {
    for (std::size_t i = 0; i < ids.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  report.aggregate = aggregate_rows(report.tasks);
  return report;
}

}  // namespace ucgen
