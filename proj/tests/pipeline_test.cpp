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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "oracles.hpp"
#include "ucgen/pipeline.hpp"

using namespace ucgen;
using ucgen::testing::read_text;
using ucgen::testing::source_dir;
namespace fs = std::filesystem;

namespace {

const char* kCounter =
    "```python\nclass Counter(Module):\n    def locals(self):\n        self.n = int\n"
    "    def init(self):\n        self.n = 0\n    def next(self):\n        self.n = self.n + 1\n```\n";

std::string bench_dir() { return (source_dir() / "data" / "bench").string(); }

PipelineConfig replay_cfg() {
  PipelineConfig c;
  c.backend.kind = BackendConfig::Kind::Replay;
  return c;
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ucgen_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Pipeline, TrafficLightReplayTakesTwoCalls) {
  PipelineConfig cfg = replay_cfg();
  cfg.backend.transcript_path = (source_dir() / "data" / "traffic_light" / "transcript.jsonl").string();
  PipelineOutcome o = run_pipeline(read_text(source_dir() / "data" / "traffic_light" / "task.txt"), cfg);
  ASSERT_EQ(o.status, PipelineOutcome::Status::Success) << o.detail;
  EXPECT_EQ(o.iterations_used, 2);
  ASSERT_EQ(o.rounds.size(), 2u);
  EXPECT_FALSE(o.rounds[0].holefill);
  EXPECT_TRUE(o.rounds[1].holefill);
  EXPECT_GT(o.rounds[0].holes_after, 0u);
  EXPECT_EQ(o.rounds[1].holes_after, 0u);
  EXPECT_EQ(o.transcript.size(), 2u);
  EXPECT_TRUE(validate_uclid(o.uclid).empty());
  // The second prompt carries the repaired draft with its holes.
  EXPECT_NE(o.transcript.entries()[1].prompt.find("self.state = ??"), std::string::npos);
}

TEST(Pipeline, ConsistentResponseTakesOneCall) {
  MockBackend m({kCounter});
  PipelineOutcome o = run_pipeline("Count up.", PipelineConfig{}, m);
  ASSERT_EQ(o.status, PipelineOutcome::Status::Success) << o.detail;
  EXPECT_EQ(o.iterations_used, 1);
  EXPECT_NE(o.uclid.find("var n : integer;"), std::string::npos);
}

TEST(Pipeline, GarbageHitsTheBudget) {
  MockBackend m(std::vector<std::string>(9, "Sorry, I can only write prose."));
  PipelineOutcome o = run_pipeline("Count up.", PipelineConfig{}, m);
  EXPECT_EQ(o.status, PipelineOutcome::Status::IterationLimit);
  EXPECT_EQ(o.iterations_used, 5);
  EXPECT_EQ(m.calls(), 5);
  EXPECT_EQ(o.partial, "??\n");
}

TEST(Pipeline, BudgetIsConfigurable) {
  MockBackend m(std::vector<std::string>(9, "nothing"));
  PipelineConfig cfg;
  cfg.max_llm_calls = 2;
  PipelineOutcome o = run_pipeline("t", cfg, m);
  EXPECT_EQ(o.status, PipelineOutcome::Status::IterationLimit);
  EXPECT_EQ(m.calls(), 2);
}

TEST(Pipeline, ExhaustedBackendIsBackendError) {
  MockBackend m({"class M(Module):\n    def locals(self):\n        self.x = ??\n"});
  PipelineOutcome o = run_pipeline("t", PipelineConfig{}, m);
  EXPECT_EQ(o.status, PipelineOutcome::Status::BackendError);
  EXPECT_FALSE(o.detail.empty());
  EXPECT_EQ(o.iterations_used, 1);
}

TEST(Pipeline, EmptyTaskIsReportedNotThrown) {
  MockBackend m({kCounter});
  PipelineOutcome o;
  EXPECT_NO_THROW(o = run_pipeline("", PipelineConfig{}, m));
  EXPECT_EQ(o.status, PipelineOutcome::Status::BackendError);
}

TEST(Pipeline, PhaseTimesFitInsideTotal) {
  PipelineConfig cfg = replay_cfg();
  cfg.backend.transcript_path = (source_dir() / "data" / "traffic_light" / "transcript.jsonl").string();
  PipelineOutcome o = run_pipeline(read_text(source_dir() / "data" / "traffic_light" / "task.txt"), cfg);
  EXPECT_GE(o.timing.llm, 0);
  EXPECT_LE(o.timing.sum(), o.ms_total + 1e-6);
  double per_round = 0;
  for (const auto& r : o.rounds) per_round += r.timing.repair_step();
  EXPECT_NEAR(per_round, o.timing.repair_step(), 1e-6);
}

TEST(Pipeline, ControlBlockOnRequest) {
  MockBackend m({kCounter});
  PipelineConfig cfg;
  cfg.emit_control = true;
  cfg.control_unroll = 3;
  PipelineOutcome o = run_pipeline("Count up.", cfg, m);
  ASSERT_EQ(o.status, PipelineOutcome::Status::Success);
  EXPECT_NE(o.uclid.find("unroll(3)"), std::string::npos);
}

TEST(Stats, SampleStandardDeviation) {
  std::vector<double> xs = {2, 4, 4, 4, 5, 5, 7, 9};
  EXPECT_DOUBLE_EQ(mean_of(xs), 5.0);
  EXPECT_DOUBLE_EQ(sd_of(xs), std::sqrt(32.0 / 7.0));
  EXPECT_EQ(sd_of({3.0}), 0.0);
  EXPECT_EQ(mean_of({}), 0.0);
}

TEST(Bench, BundledSuiteParsesEverything) {
  BenchReport r = run_bench(bench_dir(), replay_cfg());
  ASSERT_EQ(r.tasks.size(), 10u);
  EXPECT_EQ(r.aggregate.parsed, 10u);
  ASSERT_TRUE(r.aggregate.parse_rate.has_value());
  EXPECT_DOUBLE_EQ(*r.aggregate.parse_rate, 1.0);
  EXPECT_TRUE(std::is_sorted(r.tasks.begin(), r.tasks.end(),
                             [](const BenchRow& a, const BenchRow& b) { return a.id < b.id; }));
  for (const auto& row : r.tasks) EXPECT_EQ(row.status, PipelineOutcome::Status::Success) << row.id;
}

TEST(Bench, EmptySuiteHasUndefinedRate) {
  fs::path d = fresh_dir("empty_suite");
  BenchReport r = run_bench(d.string(), replay_cfg());
  EXPECT_TRUE(r.tasks.empty());
  EXPECT_FALSE(r.aggregate.parse_rate.has_value());
  auto j = nlohmann::json::parse(bench_report_json(r));
  EXPECT_TRUE(j["aggregate"]["parse_rate"].is_null());
  EXPECT_FALSE(j["aggregate"]["parse_rate_defined"].get<bool>());
}

TEST(Bench, GarbageTaskLowersTheRate) {
  fs::path d = fresh_dir("garbage_suite");
  for (const auto& e : fs::directory_iterator(bench_dir())) {
    if (e.path().stem() == "counter") continue;
    fs::copy_file(e.path(), d / e.path().filename());
  }
  std::ofstream(d / "garbage.txt") << "Model anything.\n";
  std::ofstream(d / "garbage.mock.json") << nlohmann::json(std::vector<std::string>(5, "no code here")).dump();
  BenchReport r = run_bench(d.string(), replay_cfg(), 3);
  ASSERT_EQ(r.tasks.size(), 10u);
  EXPECT_EQ(r.aggregate.parsed, 9u);
  EXPECT_DOUBLE_EQ(*r.aggregate.parse_rate, 0.9);
  int limits = 0;
  for (const auto& row : r.tasks)
    if (row.status == PipelineOutcome::Status::IterationLimit) {
      ++limits;
      EXPECT_EQ(row.id, "garbage");
      EXPECT_EQ(row.iterations, 5);
    }
  EXPECT_EQ(limits, 1);
}

TEST(Bench, ReportSchema) {
  BenchReport r = run_bench(bench_dir(), replay_cfg());
  auto j = nlohmann::json::parse(bench_report_json(r));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["tasks"].size(), 10u);
  EXPECT_TRUE(j["tasks"][0].contains("ms_repair"));
  EXPECT_TRUE(j["aggregate"].contains("mean_ms_repair_per_round"));
  std::string no_timing = bench_report_json(r, false);
  EXPECT_EQ(no_timing.find("ms_"), std::string::npos);
}

TEST(Bench, DeterministicWithoutTiming) {
  std::string a = bench_report_json(run_bench(bench_dir(), replay_cfg(), 1), false);
  std::string b = bench_report_json(run_bench(bench_dir(), replay_cfg(), 4), false);
  EXPECT_EQ(a, b);
}

TEST(Bench, AggregateMatchesRows) {
  BenchReport r = run_bench(bench_dir(), replay_cfg());
  std::vector<double> per_round, repair;
  for (const auto& row : r.tasks) {
    per_round.insert(per_round.end(), row.round_ms_repair.begin(), row.round_ms_repair.end());
    repair.push_back(row.ms_repair);
    EXPECT_EQ(row.round_ms_repair.size(), static_cast<std::size_t>(row.iterations));
  }
  EXPECT_DOUBLE_EQ(r.aggregate.mean_ms_repair_per_round, mean_of(per_round));
  EXPECT_DOUBLE_EQ(r.aggregate.sd_ms_repair_per_round, sd_of(per_round));
  EXPECT_DOUBLE_EQ(r.aggregate.mean_ms_repair, mean_of(repair));
}

// --- command line -------------------------------------------------------------

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  fs::path log = fs::temp_directory_path() / "ucgen_test_cli.out";
  int rc = std::system((std::string(UCGEN_CLI) + " " + args + " >" + log.string() + " 2>&1").c_str());
  if (out) *out = read_text(log);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Cli, CheckReferenceModel) {
  std::string out;
  EXPECT_EQ(run_cli("check " + (source_dir() / "data" / "traffic_light" / "reference.ucl").string(), &out), 0)
      << out;
}

TEST(Cli, RunReplay) {
  fs::path tl = source_dir() / "data" / "traffic_light";
  fs::path outp = fs::temp_directory_path() / "ucgen_test_cli.ucl";
  std::string out;
  EXPECT_EQ(run_cli("run --task " + (tl / "task.txt").string() + " --transcript " +
                        (tl / "transcript.jsonl").string() + " -o " + outp.string(),
                    &out),
            0)
      << out;
  EXPECT_EQ(read_text(outp), read_text(source_dir() / "tests" / "golden" / "traffic_light.ucl"));
}

TEST(Cli, HttpNeedsConfigFile) {
  fs::path tl = source_dir() / "data" / "traffic_light";
  EXPECT_EQ(run_cli("run --backend http --task " + (tl / "task.txt").string()), 2);
}

TEST(Cli, UnknownOptionIsConfigError) {
  EXPECT_EQ(run_cli("run --api-key sk-123 --task x"), 2);
}

TEST(Cli, BenchNoTiming) {
  std::string out;
  EXPECT_EQ(run_cli("bench --suite " + bench_dir() + " --no-timing", &out), 0) << out;
  EXPECT_EQ(out.find("ms_"), std::string::npos);
}
