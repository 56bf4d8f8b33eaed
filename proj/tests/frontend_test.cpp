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

#include <random>

#include "oracles.hpp"
#include "ucgen/frontend.hpp"

using namespace ucgen;
using ucgen::testing::read_text;
using ucgen::testing::source_dir;

namespace {

std::string fig4a() { return read_text(source_dir() / "data" / "traffic_light" / "response1.py"); }

std::size_t count_kind(const ParentNode& root, ParentKind k) {
  std::size_t n = 0;
  walk(root, [&](const ParentNode& x, int) { n += x.kind == k; });
  return n;
}

}  // namespace

// --- extract_code -----------------------------------------------------------

TEST(ExtractCode, FencedAfterProse) {
  EXPECT_EQ(extract_code("Here is the code:\n```\nclass M(Module): ...\n```"), "class M(Module): ...");
}

TEST(ExtractCode, LanguageTagIsSkipped) {
  EXPECT_EQ(extract_code("```python\nx = 1\n```\n"), "x = 1");
}

TEST(ExtractCode, BareCodeUnchanged) {
  std::string code = "class M(Module):\n    def next(self):\n        pass\n";
  EXPECT_EQ(extract_code(code), code);
}

TEST(ExtractCode, FirstOfTwoBlocks) {
  std::string a = "class A(Module):\n    pass\n";
  std::string b = "class B(Module):\n    pass\n";
  EXPECT_EQ(extract_code("one:\n```\n" + a + "```\ntwo:\n```\n" + b + "```\n") + "\n", a);
  EXPECT_EQ(extract_code("one:\n```\n" + b + "```\ntwo:\n```\n" + a + "```\n") + "\n", b);
}

TEST(ExtractCode, ContinuationOfPrimedFence) {
  std::string code = "class M(Module):\n    pass\n";
  EXPECT_EQ(extract_code(code + "```\n\nThat is the whole model.\n") + "\n", code);
}

TEST(ExtractCode, ProseBeforeClassLine) {
  EXPECT_EQ(extract_code("Sure thing.\nclass M(Module):\n    pass\n"), "class M(Module):\n    pass\n");
}

// --- parse_tolerant ---------------------------------------------------------

TEST(ParseTolerant, Fig4aShape) {
  ParentAst ast = parse_tolerant(fig4a());
  EXPECT_TRUE(ast.error_nodes.empty());
  EXPECT_EQ(count_kind(ast.root, ParentKind::ClassDef), 1u);
  EXPECT_EQ(count_kind(ast.root, ParentKind::FunctionDef), 6u);
}

TEST(ParseTolerant, ErrorLineDoesNotSwallowSiblings) {
  std::string src = "class M(Module):\n  def next(self):\n    self.x = @@@\n    self.y = 1";
  ParentAst ast = parse_tolerant(src);
  ASSERT_EQ(ast.error_nodes.size(), 1u);
  bool found_error = false, found_y = false;
  walk(ast.root, [&](const ParentNode& n, int) {
    if (n.kind == ParentKind::Error) {
      found_error = true;
      EXPECT_EQ(n.span.line_start, 3);
      EXPECT_NE(src.substr(n.span.byte_start, n.span.byte_end - n.span.byte_start).find("@@@"),
                std::string::npos);
    }
    if (n.kind == ParentKind::Attribute && n.text == "y") found_y = true;
  });
  EXPECT_TRUE(found_error);
  EXPECT_TRUE(found_y);
}

TEST(ParseTolerant, EmptySource) {
  ParentAst ast = parse_tolerant("");
  EXPECT_TRUE(ast.root.children.empty());
  EXPECT_TRUE(ast.error_nodes.empty());
}

TEST(ParseTolerant, ChildSpansNest) {
  ParentAst ast = parse_tolerant(fig4a());
  std::function<void(const ParentNode&)> check = [&](const ParentNode& n) {
    for (const auto& c : n.children) {
      EXPECT_TRUE(n.span.contains(c.span)) << parent_kind_name(c.kind);
      check(c);
    }
  };
  check(ast.root);
}

TEST(ParseTolerant, NeverThrowsOnBytes) {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = 0, n = static_cast<int>(rng() % 120); k < n; ++k) s += static_cast<char>(rng());
    EXPECT_NO_THROW(prune_to_child(parse_tolerant(s)));
  }
}

// --- prune_to_child ---------------------------------------------------------

TEST(Prune, Fig4aKeepsDuplicateDeclarations) {
  PruneResult pr = parse_child(fig4a());
  const ChildProgram& p = pr.program;
  EXPECT_EQ(p.module_name, "TrafficLight");
  EXPECT_EQ(p.types.decls.size(), 1u);
  EXPECT_EQ(p.locals.decls.size(), 6u);
  EXPECT_EQ(p.inputs.decls.size(), 1u);
  EXPECT_EQ(p.outputs.decls.size(), 3u);
  EXPECT_EQ(p.init.body.size(), 6u);
  EXPECT_EQ(p.next.body.size(), 1u);
  EXPECT_EQ(p.inputs.decls[0].name, "pedestrian");
}

TEST(Prune, DropsUnsupportedCall) {
  PruneResult pr = parse_child("class M(Module):\n  def next(self):\n    print(self.x)");
  EXPECT_TRUE(pr.program.next.body.empty());
  ASSERT_EQ(pr.report.dropped.size(), 1u);
  EXPECT_FALSE(pr.report.dropped[0].reason.empty());
}

TEST(Prune, AugAssignBecomesAssign) {
  PruneResult pr = parse_child("class M(Module):\n  def next(self):\n    self.c += 1\n");
  ASSERT_EQ(pr.program.next.body.size(), 1u);
  const Stmt& s = pr.program.next.body[0];
  EXPECT_EQ(s.kind, Stmt::Kind::Assign);
  EXPECT_EQ(s.exprs[1].kind, Expr::Kind::Binary);
  EXPECT_EQ(s.exprs[1].op, Op::Add);
}

TEST(Prune, NoModuleClassIsModuleHole) {
  PruneResult pr = parse_child("I cannot do that.");
  EXPECT_TRUE(pr.program.module_hole.valid());
  EXPECT_EQ(print_child(pr.program), "??\n");
}

TEST(Prune, ChildProgramIsFixpoint) {
  for (const auto& sub : {"valid", "invalid"}) {
    for (const auto& e : std::filesystem::directory_iterator(source_dir() / "tests" / "corpus" / sub)) {
      std::string src = read_text(e.path());
      PruneResult pr = parse_child(src);
      EXPECT_TRUE(pr.report.empty()) << e.path();
      std::string printed = print_child(pr.program);
      PruneResult again = parse_child(printed);
      EXPECT_TRUE(again.report.empty()) << e.path();
      EXPECT_TRUE(structurally_equal(pr.program, again.program)) << e.path();
      EXPECT_EQ(print_child(again.program), printed) << e.path();
    }
  }
}

TEST(Prune, SpansPointIntoSource) {
  std::string src = fig4a();
  PruneResult pr = parse_child(src);
  walk(pr.program, [&](const NodeVisit& v) {
    Span s = node_span(v.node);
    EXPECT_LE(s.byte_end, src.size());
    EXPECT_LE(s.byte_start, s.byte_end);
  });
}

TEST(Printer, HolesPrintAsQuestionMarks) {
  std::string src =
      "class M(Module):\n    def locals(self):\n        self.x = ??\n"
      "    def next(self):\n        self.x = ??\n";
  EXPECT_EQ(print_child(parse_child(src).program), src);
}

TEST(Printer, EmptyBlocksPrintPass) {
  std::string src = "class M(Module):\n    def next(self):\n        if True:\n            pass\n";
  EXPECT_EQ(print_child(parse_child(src).program), src);
}
