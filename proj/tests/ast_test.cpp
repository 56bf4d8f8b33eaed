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

#include "oracles.hpp"
#include "ucgen/ast.hpp"
#include "ucgen/frontend.hpp"

using namespace ucgen;

namespace {

ParentNode leaf(ParentKind k) {
  ParentNode n;
  n.kind = k;
  return n;
}

ParentAst chain(int levels) {
  ParentAst t;
  t.root = leaf(ParentKind::Module);
  ParentNode* cur = &t.root;
  for (int i = 1; i < levels; ++i) {
    cur->children.push_back(leaf(ParentKind::Block));
    cur = &cur->children.back();
  }
  return t;
}

}  // namespace

TEST(NodeIds, SingleNodeRootIsZero) {
  ParentAst t = chain(1);
  assign_node_ids(t);
  EXPECT_EQ(t.root.id.value, 0);
}

TEST(NodeIds, ChainIsPreOrder) {
  ParentAst t = chain(3);
  assign_node_ids(t);
  EXPECT_EQ(t.root.id.value, 0);
  EXPECT_EQ(t.root.children[0].id.value, 1);
  EXPECT_EQ(t.root.children[0].children[0].id.value, 2);
}

TEST(NodeIds, PreOrderAcrossSiblings) {
  ParentAst t;
  t.root = leaf(ParentKind::Module);
  t.root.children = {leaf(ParentKind::Block), leaf(ParentKind::Pass)};
  t.root.children[0].children = {leaf(ParentKind::Name)};
  assign_node_ids(t);
  EXPECT_EQ(t.root.children[0].children[0].id.value, 2);
  EXPECT_EQ(t.root.children[1].id.value, 3);
}

TEST(NodeIds, Idempotent) {
  ParentAst t = chain(4);
  assign_node_ids(t);
  ParentAst again = t;
  assign_node_ids(again);
  std::vector<int> a, b;
  walk(t.root, [&](const ParentNode& n, int) { a.push_back(n.id.value); });
  walk(again.root, [&](const ParentNode& n, int) { b.push_back(n.id.value); });
  EXPECT_EQ(a, b);
}

TEST(NodeIds, ChildProgramIdsAreUniqueAndPreOrder) {
  PruneResult pr = parse_child(
      "class M(Module):\n    def locals(self):\n        self.x = int\n"
      "    def next(self):\n        self.x = self.x + 1\n");
  std::vector<int> ids;
  walk(pr.program, [&](const NodeVisit& v) { ids.push_back(node_id(v.node).value); });
  ASSERT_FALSE(ids.empty());
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Depth, RootAndChildren) {
  ParentAst t = chain(5);
  assign_node_ids(t);
  EXPECT_EQ(depth_of(t, t.root.id), 0);
  EXPECT_EQ(depth_of(t, t.root.children[0].id), 1);
  // Five levels: the deepest node sits four edges below the root.
  EXPECT_EQ(depth_of(t, t.root.children[0].children[0].children[0].children[0].id), 4);
  EXPECT_THROW(depth_of(t, NodeId(99)), std::out_of_range);
}

TEST(Depth, ChildProgramMatchesWalk) {
  PruneResult pr = parse_child(ucgen::testing::read_text(
      ucgen::testing::source_dir() / "data" / "traffic_light" / "response2.py"));
  int deepest = 0;
  walk(pr.program, [&](const NodeVisit& v) {
    EXPECT_EQ(depth_of(pr.program, node_id(v.node)), v.depth);
    deepest = std::max(deepest, v.depth);
  });
  EXPECT_EQ(max_depth(pr.program), deepest);
}

TEST(TypeTerm, CanonicalText) {
  EXPECT_EQ(TypeTerm::array(TypeTerm::integer(), TypeTerm::bv(8)).to_string(), "Array(Int, BV(8))");
  EXPECT_EQ(TypeTerm::var(12).to_string(), "t12");
}

TEST(TypeTerm, GroundnessAndVars) {
  TypeTerm t = TypeTerm::array(TypeTerm::var(3), TypeTerm::boolean());
  EXPECT_FALSE(t.is_ground());
  std::vector<int> vars;
  t.collect_vars(vars);
  EXPECT_EQ(vars, std::vector<int>{3});
  EXPECT_TRUE(TypeTerm::enumeration({"A", "B"}).is_ground());
}

TEST(TypeTerm, EqualityAndOrder) {
  EXPECT_EQ(TypeTerm::bv(8), TypeTerm::bv(8));
  EXPECT_NE(TypeTerm::bv(8), TypeTerm::bv(4));
  EXPECT_NE(TypeTerm::enumeration({"A", "B"}), TypeTerm::enumeration({"A", "C"}));
  EXPECT_TRUE(TypeTerm::bv(4) < TypeTerm::bv(8) || TypeTerm::bv(8) < TypeTerm::bv(4));
  EXPECT_EQ(TypeTerm::integer().ctor(), TypeCtor::Int);
}

TEST(Holes, CollectAndCount) {
  PruneResult pr = parse_child(
      "class M(Module):\n    def locals(self):\n        self.x = ??\n"
      "    def next(self):\n        self.x = ??\n        ??\n");
  auto holes = collect_holes(pr.program);
  ASSERT_EQ(holes.size(), 3u);
  EXPECT_EQ(holes[0].category, HoleCategory::Type);
  EXPECT_EQ(holes[1].category, HoleCategory::Expr);
  EXPECT_EQ(holes[2].category, HoleCategory::Stmt);
  EXPECT_EQ(count_holes(pr.program), 3u);
}

TEST(Structural, IgnoresIdsAndSpans) {
  std::string a = "class M(Module):\n    def locals(self):\n        self.x = int\n";
  std::string b = "\n\nclass M(Module):\n\n    def locals(self):\n        self.x   =   int\n";
  EXPECT_TRUE(structurally_equal(parse_child(a).program, parse_child(b).program));
  std::string c = "class M(Module):\n    def locals(self):\n        self.x = bool\n";
  EXPECT_FALSE(structurally_equal(parse_child(a).program, parse_child(c).program));
}

TEST(FindNode, LocatesEveryWalkedNode) {
  PruneResult pr = parse_child(
      "class M(Module):\n    def locals(self):\n        self.x = int\n"
      "    def init(self):\n        self.x = 3\n");
  walk(pr.program, [&](const NodeVisit& v) {
    auto found = find_node(pr.program, node_id(v.node));
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(node_id(*found), node_id(v.node));
  });
  EXPECT_FALSE(find_node(pr.program, NodeId(100000)).has_value());
}
