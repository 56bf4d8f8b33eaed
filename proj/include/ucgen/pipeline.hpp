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

// The generate / repair / fill loop and the benchmark harness.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucgen/llm.hpp"
#include "ucgen/repair.hpp"
#include "ucgen/uclid.hpp"

namespace ucgen {

struct PipelineConfig {
  BackendConfig backend;
  int max_llm_calls = 5;
  WeightsMode weights = WeightsMode::Depth;
  SolverKind solver = SolverKind::Internal;
  ExternalSolverConfig external;
  bool emit_control = false;
  int control_unroll = 10;
};

/// Milliseconds, monotonic clock.
struct PhaseTimes {
  double llm = 0;
  double parse = 0;
  double prune = 0;
  double constraints = 0;
  double solve = 0;
  double repair = 0;
  double compile = 0;

  double repair_step() const { return constraints + solve + repair; }
  double sum() const { return llm + parse + prune + constraints + solve + repair + compile; }
};

struct RoundReport {
  int call = 0;  // 1-based LLM call this round followed
  bool holefill = false;
  std::size_t dropped = 0;
  std::size_t holes_inserted = 0;  // by the pruner
  std::size_t holes_before = 0;    // after pruning
  std::size_t holes_after = 0;     // after repair
  std::size_t holed = 0;
  std::size_t filled = 0;
  std::size_t retyped = 0;
  std::vector<std::string> synthesized;
  long long cost = 0;
  int solve_rounds = 0;
  std::vector<std::string> notes;
  PhaseTimes timing;
  std::string child;  // repaired program
};

struct PipelineOutcome {
  enum class Status { Success, IterationLimit, BackendError };
  Status status = Status::BackendError;
  std::string uclid;    // Success
  std::string partial;  // IterationLimit: last repaired program with holes
  std::string detail;   // BackendError
  std::vector<Diagnostic> diagnostics;
  int iterations_used = 0;
  PhaseTimes timing;
  double ms_total = 0;
  Transcript transcript;
  std::vector<RoundReport> rounds;
};

std::string status_name(PipelineOutcome::Status s);

/// Never throws; failures are reported through the status.
PipelineOutcome run_pipeline(const std::string& task, const PipelineConfig& cfg);
PipelineOutcome run_pipeline(const std::string& task, const PipelineConfig& cfg, LlmBackend& backend);

struct BenchRow {
  std::string id;
  PipelineOutcome::Status status = PipelineOutcome::Status::BackendError;
  bool parse_ok = false;
  int iterations = 0;
  std::vector<double> round_ms_repair;
  double ms_llm = 0;
  double ms_repair = 0;
  double ms_total = 0;
  std::string detail;
};

struct BenchAggregate {
  std::size_t tasks = 0;
  std::size_t parsed = 0;
  std::optional<double> parse_rate;  // undefined for an empty suite
  double mean_ms_repair = 0, sd_ms_repair = 0;
  double mean_ms_llm = 0, sd_ms_llm = 0;
  double mean_ms_repair_per_round = 0, sd_ms_repair_per_round = 0;
};

struct BenchReport {
  static constexpr int kSchemaVersion = 1;
  std::vector<BenchRow> tasks;
  BenchAggregate aggregate;
};

/// A suite directory holds `<id>.txt` task descriptions. A task uses
/// `<id>.jsonl` (replay) or `<id>.mock.json` (array of responses) when
/// present, otherwise `cfg.backend`. Rows are sorted by id.
BenchReport run_bench(const std::string& suite_dir, const PipelineConfig& cfg, int workers = 1);

/// Sample standard deviation (n - 1); 0 for fewer than two values.
double mean_of(const std::vector<double>& xs);
double sd_of(const std::vector<double>& xs);

BenchAggregate aggregate_rows(const std::vector<BenchRow>& rows);

/// Stable JSON. Without timing, every `ms_*` field is omitted.
std::string bench_report_json(const BenchReport& r, bool include_timing = true);
std::string outcome_json(const PipelineOutcome& o);

}  // namespace ucgen
