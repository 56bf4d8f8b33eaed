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

// ucgen: natural-language task -> UCLID5 model.
//
//   ucgen run --task FILE [--backend http|replay|mock] [--transcript FILE] -o OUT.ucl
//   ucgen check FILE.ucl
//   ucgen bench --suite DIR --report OUT.json
//   ucgen repair --code FILE
//
// Exit status: 0 success, 1 task failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ucgen/frontend.hpp"
#include "ucgen/pipeline.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ucgen::ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ucgen::ConfigError("cannot write " + path);
  f << text;
}

struct CommonOptions {
  std::string backend = "replay";
  std::string config;
  std::string transcript;
  bool replay_loose = false;
  int max_calls = 5;
  std::string weights = "depth";
  std::string solver = "internal";
  int solver_timeout_ms = 30000;
  bool emit_control = false;
  int unroll = 10;

  void add_to(CLI::App* app, bool with_backend) {
    if (with_backend) {
      app->add_option("--backend", backend, "LLM backend")
          ->check(CLI::IsMember({"http", "replay", "mock"}));
      app->add_option("--config", config, "JSON backend config (http)");
      app->add_option("--transcript", transcript,
                      "JSONL transcript to replay (mock: responses served in order)");
      app->add_flag("--replay-loose", replay_loose, "skip the prompt hash check on replay");
      app->add_option("--max-calls", max_calls, "LLM call budget")->check(CLI::PositiveNumber);
      app->add_flag("--emit-control", emit_control, "append a bounded model checking block");
      app->add_option("--unroll", unroll, "unroll depth for --emit-control")->check(CLI::PositiveNumber);
    }
    app->add_option("--weights", weights, "soft clause weights")
        ->check(CLI::IsMember({"depth", "inverse-depth", "uniform"}));
    app->add_option("--solver", solver, "internal, or external:CMD");
    app->add_option("--solver-timeout-ms", solver_timeout_ms, "external solver timeout")
        ->check(CLI::PositiveNumber);
  }

  ucgen::RepairOptions repair_options() const {
    ucgen::RepairOptions r;
    r.weights = *ucgen::parse_weights_mode(weights);
    if (solver == "internal") {
      r.solver = ucgen::SolverKind::Internal;
    } else if (solver.rfind("external:", 0) == 0 && solver.size() > 9) {
      r.solver = ucgen::SolverKind::External;
      r.external.command = solver.substr(9);
    } else if (solver == "external") {
      r.solver = ucgen::SolverKind::External;
    } else {
      throw ucgen::ConfigError("--solver must be internal or external:CMD");
    }
    r.external.timeout = std::chrono::milliseconds(solver_timeout_ms);
    return r;
  }

  ucgen::PipelineConfig pipeline_config() const {
    ucgen::PipelineConfig c;
    ucgen::RepairOptions r = repair_options();
    c.weights = r.weights;
    c.solver = r.solver;
    c.external = r.external;
    c.max_llm_calls = max_calls;
    c.emit_control = emit_control;
    c.control_unroll = unroll;
    if (backend == "http") {
      if (config.empty()) throw ucgen::ConfigError("--backend http needs --config");
      c.backend.kind = ucgen::BackendConfig::Kind::Http;
      c.backend.http = ucgen::load_http_config(config);
    } else if (backend == "replay") {
      c.backend.kind = ucgen::BackendConfig::Kind::Replay;
      c.backend.transcript_path = transcript;
      c.backend.replay_loose = replay_loose;
    } else {
      c.backend.kind = ucgen::BackendConfig::Kind::Mock;
      if (!transcript.empty()) {
        ucgen::Transcript t = ucgen::Transcript::load(transcript);
        for (const auto& e : t.entries()) c.backend.mock_responses.push_back(e.response);
      }
    }
    return c;
  }
};

int cmd_run(const std::string& task_path, const CommonOptions& opts, const std::string& out_path,
            const std::string& report_path, const std::string& record_path) {
  ucgen::PipelineConfig cfg = opts.pipeline_config();
  std::string task = read_file(task_path);
  if (cfg.backend.kind == ucgen::BackendConfig::Kind::Replay && cfg.backend.transcript_path.empty())
    throw ucgen::ConfigError("--backend replay needs --transcript");
  auto backend = ucgen::make_backend(cfg.backend);
  ucgen::PipelineOutcome o = ucgen::run_pipeline(task, cfg, *backend);
  if (!record_path.empty()) {
    o.transcript.task_id = task_path;
    o.transcript.save(record_path);
  }
  if (!report_path.empty()) write_file(report_path, ucgen::outcome_json(o));
  switch (o.status) {
    case ucgen::PipelineOutcome::Status::Success:
      if (out_path.empty() || out_path == "-") std::cout << o.uclid;
      else write_file(out_path, o.uclid);
      std::cerr << "success after " << o.iterations_used << " LLM call(s)\n";
      return kOk;
    case ucgen::PipelineOutcome::Status::IterationLimit:
      std::cerr << "iteration limit reached after " << o.iterations_used
                << " LLM call(s); last partial program:\n"
                << o.partial;
      return kFailed;
    case ucgen::PipelineOutcome::Status::BackendError:
      std::cerr << "failed: " << o.detail << "\n";
      for (const auto& d : o.diagnostics)
        std::cerr << "  " << d.line << ":" << d.col << ": " << d.message << "\n";
      return kFailed;
  }
  return kFailed;
}

int cmd_check(const std::string& path) {
  std::string text = read_file(path);
  auto diags = ucgen::validate_uclid(text);
  for (const auto& d : diags) {
    std::cout << path;
    if (d.line > 0) std::cout << ":" << d.line << ":" << d.col;
    std::cout << ": " << d.message << "\n";
  }
  if (diags.empty()) std::cout << path << ": ok\n";
  return diags.empty() ? kOk : kFailed;
}

int cmd_bench(const std::string& suite, const std::string& report_path, int workers,
              bool no_timing, const CommonOptions& opts) {
  ucgen::PipelineConfig cfg = opts.pipeline_config();
  ucgen::BenchReport r = ucgen::run_bench(suite, cfg, workers);
  std::string json = ucgen::bench_report_json(r, !no_timing);
  if (report_path.empty() || report_path == "-") std::cout << json;
  else write_file(report_path, json);
  const auto& a = r.aggregate;
  std::cerr << "parsed " << a.parsed << "/" << a.tasks;
  if (a.tasks > 0)
    std::cerr << "; repair ms/round mean " << a.mean_ms_repair_per_round << " sd "
              << a.sd_ms_repair_per_round;
  std::cerr << "\n";
  return a.parsed == a.tasks ? kOk : kFailed;
}

int cmd_repair(const std::string& code_path, const CommonOptions& opts, const std::string& out_path) {
  ucgen::RepairOptions ropts = opts.repair_options();
  std::string code = ucgen::extract_code(read_file(code_path));
  ucgen::PruneResult pr = ucgen::parse_child(code);
  ucgen::RepairOutcome ro = ucgen::repair_round(pr.program, ropts);
  std::string text = ucgen::print_child(ro.program);
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_file(out_path, text);
  std::cerr << "dropped " << pr.report.dropped.size() << ", holed " << ro.holed.size()
            << ", filled " << ro.filled.size() << ", retyped " << ro.retyped.size()
            << ", holes remaining " << ro.holes_after << "\n";
  for (const auto& n : ro.notes) std::cerr << "note: " << n << "\n";
  return ro.holes_after == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ucgen: generate UCLID5 models from task descriptions"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string task_path, out_path, report_path, record_path;
  auto* run = app.add_subcommand("run", "run the generate/repair loop on one task");
  run->add_option("--task", task_path, "task description file")->required();
  run->add_option("-o,--output", out_path, "UCLID5 output file (default stdout)");
  run->add_option("--report", report_path, "JSON outcome report");
  run->add_option("--record", record_path, "write the exchanged prompts and responses as JSONL");
  run_opts.add_to(run, true);

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a UCLID5 file");
  check->add_option("file", check_path, "UCLID5 source")->required();

  CommonOptions bench_opts;
  std::string suite, bench_report;
  int workers = 1;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "run every task in a suite directory");
  bench->add_option("--suite", suite, "suite directory")->required();
  bench->add_option("--report", bench_report, "JSON report (default stdout)");
  bench->add_option("--workers", workers, "concurrent tasks")->check(CLI::PositiveNumber);
  bench->add_flag("--no-timing", no_timing, "omit timing fields from the report");
  bench_opts.add_to(bench, true);

  CommonOptions repair_opts;
  std::string code_path, repair_out;
  auto* repair = app.add_subcommand("repair", "one offline repair round, no LLM");
  repair->add_option("--code", code_path, "parent-language source")->required();
  repair->add_option("-o,--output", repair_out, "repaired program (default stdout)");
  repair_opts.add_to(repair, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*run) return cmd_run(task_path, run_opts, out_path, report_path, record_path);
    if (*check) return cmd_check(check_path);
    if (*bench) return cmd_bench(suite, bench_report, workers, no_timing, bench_opts);
    if (*repair) return cmd_repair(code_path, repair_opts, repair_out);
  } catch (const ucgen::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kConfig;
}
