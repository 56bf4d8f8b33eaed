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

#include <cmath>

#include <json.hpp>

#include "ucgen/pipeline.hpp"

namespace ucgen {

using nlohmann::ordered_json;

namespace {

double ms(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sd_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0;
  double m = mean_of(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

BenchAggregate aggregate_rows(const std::vector<BenchRow>& rows) {
  BenchAggregate a;
  a.tasks = rows.size();
  std::vector<double> repair, llm, per_round;
  for (const auto& r : rows) {
    if (r.parse_ok) ++a.parsed;
    repair.push_back(r.ms_repair);
    llm.push_back(r.ms_llm);
    per_round.insert(per_round.end(), r.round_ms_repair.begin(), r.round_ms_repair.end());
  }
  if (a.tasks > 0) a.parse_rate = static_cast<double>(a.parsed) / static_cast<double>(a.tasks);
  a.mean_ms_repair = mean_of(repair);
  a.sd_ms_repair = sd_of(repair);
  a.mean_ms_llm = mean_of(llm);
  a.sd_ms_llm = sd_of(llm);
  a.mean_ms_repair_per_round = mean_of(per_round);
  a.sd_ms_repair_per_round = sd_of(per_round);
  return a;
}

std::string bench_report_json(const BenchReport& r, bool include_timing) {
  ordered_json j;
  j["schema_version"] = BenchReport::kSchemaVersion;
  ordered_json tasks = ordered_json::array();
  for (const auto& row : r.tasks) {
    ordered_json t;
    t["id"] = row.id;
    t["status"] = status_name(row.status);
    t["parse_ok"] = row.parse_ok;
    t["iterations"] = row.iterations;
    if (include_timing) {
      t["ms_llm"] = ms(row.ms_llm);
      t["ms_repair"] = ms(row.ms_repair);
      t["ms_total"] = ms(row.ms_total);
    }
    if (!row.detail.empty()) t["detail"] = row.detail;
    tasks.push_back(std::move(t));
  }
  j["tasks"] = std::move(tasks);
  const BenchAggregate& a = r.aggregate;
  ordered_json agg;
  agg["tasks"] = a.tasks;
  agg["parsed"] = a.parsed;
  if (a.parse_rate) agg["parse_rate"] = *a.parse_rate;
  else agg["parse_rate"] = nullptr;
  agg["parse_rate_defined"] = a.parse_rate.has_value();
  if (include_timing) {
    agg["mean_ms_repair"] = ms(a.mean_ms_repair);
    agg["sd_ms_repair"] = ms(a.sd_ms_repair);
    agg["mean_ms_llm"] = ms(a.mean_ms_llm);
    agg["sd_ms_llm"] = ms(a.sd_ms_llm);
    agg["mean_ms_repair_per_round"] = ms(a.mean_ms_repair_per_round);
    agg["sd_ms_repair_per_round"] = ms(a.sd_ms_repair_per_round);
  }
  j["aggregate"] = std::move(agg);
  return j.dump(2) + "\n";
}

std::string outcome_json(const PipelineOutcome& o) {
  ordered_json j;
  j["status"] = status_name(o.status);
  j["iterations_used"] = o.iterations_used;
  if (!o.detail.empty()) j["detail"] = o.detail;
  ordered_json timing;
  timing["llm"] = ms(o.timing.llm);
  timing["parse"] = ms(o.timing.parse);
  timing["prune"] = ms(o.timing.prune);
  timing["constraints"] = ms(o.timing.constraints);
  timing["solve"] = ms(o.timing.solve);
  timing["repair"] = ms(o.timing.repair);
  timing["compile"] = ms(o.timing.compile);
  timing["total"] = ms(o.ms_total);
  j["ms"] = std::move(timing);
  ordered_json rounds = ordered_json::array();
  for (const auto& r : o.rounds) {
    ordered_json x;
    x["call"] = r.call;
    x["prompt"] = r.holefill ? "holefill" : "initial";
    x["dropped"] = r.dropped;
    x["holes_inserted"] = r.holes_inserted;
    x["holes_before"] = r.holes_before;
    x["holes_after"] = r.holes_after;
    x["holed"] = r.holed;
    x["filled"] = r.filled;
    x["retyped"] = r.retyped;
    x["synthesized"] = r.synthesized;
    x["cost"] = r.cost;
    x["solve_rounds"] = r.solve_rounds;
    if (!r.notes.empty()) x["notes"] = r.notes;
    rounds.push_back(std::move(x));
  }
  j["rounds"] = std::move(rounds);
  ordered_json diags = ordered_json::array();
  for (const auto& d : o.diagnostics)
    diags.push_back({{"line", d.line}, {"col", d.col}, {"message", d.message}});
  if (!diags.empty()) j["diagnostics"] = std::move(diags);
  return j.dump(2) + "\n";
}

}  // namespace ucgen
