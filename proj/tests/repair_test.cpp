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

#include <map>

#include "oracles.hpp"
#include "ucgen/frontend.hpp"
#include "ucgen/repair.hpp"

using namespace ucgen;
using ucgen::testing::read_text;
using ucgen::testing::source_dir;

namespace {

ChildProgram child(const std::string& src) { return parse_child(src).program; }

std::string traffic(const char* name) {
  return read_text(source_dir() / "data" / "traffic_light" / name);
}

const Decl* find_decl(const DeclSection& s, const std::string& name) {
  for (const auto& d : s.decls)
    if (!d.is_hole() && d.name == name) return &d;
  return nullptr;
}

std::string type_of(const DeclSection& s, const std::string& name) {
  const Decl* d = find_decl(s, name);
  if (!d || !d->type) return "<none>";
  return print_child_type(*d->type);
}

const char* kBv32 =
    "class M(Module):\n"
    "    def locals(self):\n"
    "        self.x = BitVector(32)\n"
    "    def init(self):\n"
    "        self.x = 0\n";

}  // namespace

TEST(Holeify, FalsifiedDeclarationTypeBecomesTypeHole) {
  ChildProgram p = child(kBv32);
  ClauseSet cs = generate_clauses(p);
  SolveResult r = solve_maxsmt(cs);
  ASSERT_EQ(r.falsified.size(), 1u);
  HoleifyResult h = holeify(p, cs, r);
  ASSERT_EQ(h.holed.size(), 1u);
  EXPECT_EQ(h.holed[0].category, HoleCategory::Type);
  EXPECT_EQ(print_child(h.program),
            "class M(Module):\n    def locals(self):\n        self.x = ??\n"
            "    def init(self):\n        self.x = 0\n");
}

TEST(Holeify, NothingFalsifiedLeavesProgramAlone) {
  ChildProgram p = child("class M(Module):\n    def locals(self):\n        self.b = bool\n");
  ClauseSet cs = generate_clauses(p);
  HoleifyResult h = holeify(p, cs, solve_maxsmt(cs));
  EXPECT_TRUE(h.holed.empty());
  EXPECT_TRUE(structurally_equal(h.program, p));
}

TEST(Holeify, NestedOriginsCollapseToAncestor) {
  ChildProgram p = child(
      "class M(Module):\n    def locals(self):\n        self.n = int\n"
      "    def next(self):\n        self.n = (self.n + 1) * 2\n");
  ClauseSet cs = generate_clauses(p);
  std::map<NodeId, NodeId> parent;
  walk(p, [&](const NodeVisit& v) { parent[node_id(v.node)] = v.parent; });
  auto is_ancestor = [&](NodeId a, NodeId d) {
    for (NodeId x = parent[d]; x.valid(); x = parent[x])
      if (x == a) return true;
    return false;
  };
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < cs.clauses.size() && !pair; ++i)
    for (std::size_t j = 0; j < cs.clauses.size() && !pair; ++j)
      if (cs.clauses[i].soft() && cs.clauses[j].soft() &&
          is_ancestor(cs.clauses[i].origin, cs.clauses[j].origin))
        pair = {i, j};
  ASSERT_TRUE(pair.has_value());
  SolveResult r;
  r.falsified = {std::min(pair->first, pair->second), std::max(pair->first, pair->second)};
  HoleifyResult h = holeify(p, cs, r);
  ASSERT_EQ(h.holed.size(), 1u);
  EXPECT_EQ(h.holed[0].node, cs.clauses[pair->first].origin);
  EXPECT_EQ(count_holes(h.program), 1u);
}

TEST(ModelRepair, TypeHoleFilledFromUse) {
  ChildProgram p = child(
      "class M(Module):\n    def locals(self):\n        self.x = ??\n"
      "    def init(self):\n        self.x = 0\n");
  ClauseSet cs = generate_clauses(p);
  ModelRepairResult m = model_repair(p, cs, solve_maxsmt(cs).model);
  ASSERT_EQ(m.filled.size(), 1u);
  EXPECT_EQ(m.filled[0].type, TypeTerm::integer());
  EXPECT_EQ(type_of(m.program.locals, "x"), "int");
  EXPECT_EQ(count_holes(m.program), 0u);
}

TEST(ModelRepair, OrphanTypeHoleStays) {
  ChildProgram p = child("class M(Module):\n    def locals(self):\n        self.x = ??\n");
  ClauseSet cs = generate_clauses(p);
  ModelRepairResult m = model_repair(p, cs, solve_maxsmt(cs).model);
  EXPECT_TRUE(m.filled.empty());
  EXPECT_EQ(count_holes(m.program), 1u);
}

TEST(ModelRepair, ValueDeclarationsRetyped) {
  ChildProgram p = child(
      "class M(Module):\n    def outputs(self):\n        self.sigG = False\n"
      "        self.sigY = False\n        self.sigR = False\n");
  ClauseSet cs = generate_clauses(p);
  ModelRepairResult m = model_repair(p, cs, solve_maxsmt(cs).model);
  EXPECT_EQ(m.retyped.size(), 3u);
  for (const char* n : {"sigG", "sigY", "sigR"}) EXPECT_EQ(type_of(m.program.outputs, n), "bool") << n;
}

TEST(RepairRound, Bv32RetypedToInt) {
  RepairOutcome ro = repair_round(child(kBv32));
  EXPECT_EQ(ro.holed.size(), 1u);
  EXPECT_EQ(ro.holes_after, 0u);
  EXPECT_EQ(type_of(ro.program.locals, "x"), "int");
}

TEST(RepairRound, ConsistentProgramUnchanged) {
  ChildProgram p = child(read_text(source_dir() / "tests" / "corpus" / "valid" / "mutex.py"));
  RepairOutcome ro = repair_round(p);
  EXPECT_TRUE(ro.holed.empty());
  EXPECT_EQ(ro.holes_after, 0u);
  EXPECT_TRUE(structurally_equal(ro.program, p));
}

TEST(RepairRound, TrafficLightDraft) {
  RepairOutcome ro = repair_round(child(traffic("response1.py")));
  const ChildProgram& q = ro.program;
  // state and count are used as integers everywhere in next.
  EXPECT_EQ(type_of(q.locals, "state"), "int");
  EXPECT_EQ(type_of(q.locals, "count"), "int");
  // Initialising a variable with a type expression is not a value.
  ASSERT_EQ(q.init.body.size(), 6u);
  for (const auto& s : q.init.body) {
    ASSERT_EQ(s.kind, Stmt::Kind::Assign);
    EXPECT_EQ(s.exprs[1].kind, Expr::Kind::Hole);
  }
  // One declaration survives per name.
  for (const char* n : {"pedestrian", "sigG", "sigY", "sigR"}) {
    int live = 0;
    for (SectionKind s : kVariableSections) live += find_decl(q.decl_section(s), n) != nullptr;
    EXPECT_EQ(live, 1) << n;
  }
  EXPECT_GT(ro.holes_after, 0u);
  // The next block is untouched apart from `+=` normalisation.
  std::string printed = print_child(q);
  EXPECT_NE(printed.find("        if self.state == 0:\n"), std::string::npos);
  EXPECT_NE(printed.find("self.count = self.count + 1"), std::string::npos);
}

TEST(RepairRound, TrafficLightSecondResponse) {
  RepairOutcome ro = repair_round(child(traffic("response2.py")));
  EXPECT_EQ(ro.holes_after, 0u);
  EXPECT_TRUE(ro.holed.empty());
  const ChildProgram& q = ro.program;
  EXPECT_EQ(type_of(q.locals, "state"), "int");
  EXPECT_EQ(type_of(q.locals, "count"), "int");
  EXPECT_EQ(type_of(q.locals, "pedestrian"), "bool");
  for (const char* n : {"sigG", "sigY", "sigR"}) EXPECT_EQ(type_of(q.outputs, n), "bool") << n;
  ASSERT_EQ(q.init.body.size(), 6u);
  EXPECT_EQ(print_child_expr(q.init.body[5].exprs[1]), "True");
}

TEST(RepairRound, UndeclaredNameIsSynthesized) {
  RepairOutcome ro = repair_round(child(
      "class M(Module):\n    def locals(self):\n        self.n = int\n"
      "    def next(self):\n        self.n = self.k + 1\n"));
  EXPECT_EQ(ro.synthesized, std::vector<std::string>{"k"});
  EXPECT_EQ(type_of(ro.program.locals, "k"), "int");
  EXPECT_EQ(ro.holes_after, 0u);
}

TEST(RepairRound, AssignmentToInputIsHoled) {
  RepairOutcome ro = repair_round(child(
      "class M(Module):\n    def inputs(self):\n        self.i = int\n"
      "    def next(self):\n        self.i = 1\n"));
  EXPECT_EQ(ro.holed.size(), 1u);
  // Either the input declaration or the write goes; both cost the same.
  EXPECT_TRUE(ro.holed[0].check == CheckTag::S5 || ro.holed[0].check == CheckTag::S1);
}

TEST(RepairRound, UniformWeightsGiveMinimalEdits) {
  std::mt19937 rng(77);
  RepairOptions opts;
  opts.weights = WeightsMode::Uniform;
  int checked = 0;
  while (checked < 40) {
    PruneResult pr = parse_child(ucgen::testing::random_conflicted_program(rng));
    if (!pr.report.empty() || ucgen::testing::well_typed(pr.program)) continue;
    auto min = ucgen::testing::min_hole_count(pr.program, 4);
    if (!min) continue;
    ++checked;
    RepairOutcome ro = repair_round(pr.program, opts);
    EXPECT_EQ(ro.holed.size(), *min) << print_child(pr.program);
  }
}

TEST(RepairRound, WeightModesAllReachConsistency) {
  for (WeightsMode m : {WeightsMode::Depth, WeightsMode::InverseDepth, WeightsMode::Uniform}) {
    RepairOptions opts;
    opts.weights = m;
    RepairOutcome ro = repair_round(child(traffic("response1.py")), opts);
    ClauseSet cs = generate_clauses(ro.program);
    EXPECT_NO_THROW(solve_maxsmt(cs)) << weights_mode_name(m);
    EXPECT_EQ(solve_maxsmt(cs).cost, 0) << weights_mode_name(m);
  }
}
