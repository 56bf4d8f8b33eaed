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

#include <set>

#include "golden.hpp"
#include "oracles.hpp"
#include "ucgen/constraints.hpp"
#include "ucgen/frontend.hpp"
#include "ucgen/maxsmt.hpp"

using namespace ucgen;

namespace {

const char* kBv32 =
    "class M(Module):\n"
    "    def locals(self):\n"
    "        self.x = BitVector(32)\n"
    "    def init(self):\n"
    "        self.x = 0\n";

ChildProgram child(const std::string& src) { return parse_child(src).program; }

std::vector<Clause> hard_only(const ClauseSet& cs) {
  std::vector<Clause> out;
  for (const auto& c : cs.clauses)
    if (c.hard) out.push_back(c);
  return out;
}

}  // namespace

TEST(Constraints, Bv32AssignedIntegerIsUnsat) {
  ClauseSet cs = generate_clauses(child(kBv32));
  EXPECT_TRUE(std::holds_alternative<SatResult>(check_sat(hard_only(cs))));
  EXPECT_TRUE(std::holds_alternative<UnsatResult>(check_sat(cs.clauses)));
}

TEST(Constraints, Bv32Golden) {
  ucgen::testing::expect_golden("bv32.clauses", generate_clauses(child(kBv32)).dump());
}

TEST(Constraints, ConsistentProgramIsSat) {
  ClauseSet cs = generate_clauses(child(
      "class M(Module):\n    def locals(self):\n        self.b = bool\n"
      "    def init(self):\n        self.b = True\n"));
  EXPECT_TRUE(std::holds_alternative<SatResult>(check_sat(cs.clauses)));
  SolveResult r = solve_maxsmt(cs);
  EXPECT_TRUE(r.falsified.empty());
  EXPECT_EQ(r.cost, 0);
}

TEST(Constraints, HardFirstSoftAreUnitNegatedHoled) {
  ClauseSet cs = generate_clauses(child(ucgen::testing::read_text(
      ucgen::testing::source_dir() / "data" / "traffic_light" / "response1.py")));
  bool seen_soft = false;
  std::set<NodeId> origins;
  for (const auto& c : cs.clauses) {
    if (c.soft()) {
      seen_soft = true;
      ASSERT_EQ(c.literals.size(), 1u);
      EXPECT_FALSE(c.literals[0].positive);
      EXPECT_EQ(c.literals[0].atom.kind, Atom::Kind::Holed);
      EXPECT_EQ(c.literals[0].atom.node, c.origin);
      EXPECT_GE(c.weight, 1);
      EXPECT_TRUE(origins.insert(c.origin).second) << "two soft clauses for one node";
    } else {
      EXPECT_FALSE(seen_soft) << "hard clause after a soft one";
    }
  }
  EXPECT_GT(cs.soft_count(), 0u);
}

TEST(Constraints, HoledLiteralsNameRealNodes) {
  ChildProgram p = child(ucgen::testing::read_text(
      ucgen::testing::source_dir() / "data" / "traffic_light" / "response1.py"));
  ClauseSet cs = generate_clauses(p);
  for (const auto& c : cs.clauses)
    for (const auto& l : c.literals)
      if (l.atom.kind == Atom::Kind::Holed) EXPECT_TRUE(find_node(p, l.atom.node).has_value());
}

TEST(Constraints, EveryTVarHasAnOwner) {
  ClauseSet cs = generate_clauses(child(kBv32));
  for (const auto& c : cs.clauses)
    for (const auto& l : c.literals) {
      std::vector<int> vars;
      l.atom.lhs.collect_vars(vars);
      l.atom.rhs.collect_vars(vars);
      for (int v : vars) ASSERT_LT(static_cast<std::size_t>(v), cs.tvar_table.size());
    }
  ASSERT_TRUE(cs.var_tvars.count("x"));
}

TEST(Constraints, DumpIsDeterministic) {
  std::string src = ucgen::testing::read_text(ucgen::testing::source_dir() / "data" /
                                              "traffic_light" / "response1.py");
  EXPECT_EQ(generate_clauses(child(src)).dump(), generate_clauses(child(src)).dump());
  std::string d = generate_clauses(child(src)).dump();
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'),
            static_cast<long>(generate_clauses(child(src)).clauses.size()));
}

TEST(Weights, DepthFormulas) {
  ChildProgram p = child(kBv32);
  int maxd = max_depth(p);
  walk(p, [&](const NodeVisit& v) {
    NodeId id = node_id(v.node);
    EXPECT_EQ(clause_weight(id, p, WeightsMode::Depth), 1 + v.depth);
    EXPECT_EQ(clause_weight(id, p, WeightsMode::InverseDepth), 1 + (maxd - v.depth));
    EXPECT_EQ(clause_weight(id, p, WeightsMode::Uniform), 1);
  });
  EXPECT_THROW(clause_weight(NodeId(4242), p), std::out_of_range);
}

TEST(Weights, SoftWeightsFollowMode) {
  ChildProgram p = child(kBv32);
  for (WeightsMode m : {WeightsMode::Depth, WeightsMode::InverseDepth, WeightsMode::Uniform}) {
    ClauseSet cs = generate_clauses(p, m);
    for (const auto& c : cs.clauses)
      if (c.soft()) EXPECT_EQ(c.weight, clause_weight(c.origin, p, m));
  }
}

TEST(Weights, ParseNames) {
  EXPECT_EQ(parse_weights_mode("depth"), WeightsMode::Depth);
  EXPECT_EQ(parse_weights_mode("inverse-depth"), WeightsMode::InverseDepth);
  EXPECT_EQ(parse_weights_mode("uniform"), WeightsMode::Uniform);
  EXPECT_FALSE(parse_weights_mode("linear").has_value());
}

TEST(Atoms, EqIsCanonical) {
  Atom a = Atom::eq(TypeTerm::var(1), TypeTerm::integer());
  Atom b = Atom::eq(TypeTerm::integer(), TypeTerm::var(1));
  EXPECT_EQ(a, b);
}
