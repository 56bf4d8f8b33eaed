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

#include "golden.hpp"
#include "oracles.hpp"
#include "ucgen/frontend.hpp"
#include "ucgen/repair.hpp"
#include "ucgen/uclid.hpp"

using namespace ucgen;
using ucgen::testing::read_text;
using ucgen::testing::source_dir;

namespace {

ChildProgram child(const std::string& src) { return parse_child(src).program; }

ChildProgram traffic_light() {
  return repair_round(child(read_text(source_dir() / "data" / "traffic_light" / "response2.py"))).program;
}

bool mentions(const std::vector<Diagnostic>& ds, const std::string& needle) {
  for (const auto& d : ds)
    if (d.message.find(needle) != std::string::npos) return true;
  return false;
}

std::string dump(const std::vector<Diagnostic>& ds) {
  std::string s;
  for (const auto& d : ds) s += std::to_string(d.line) + ":" + std::to_string(d.col) + " " + d.message + "\n";
  return s;
}

}  // namespace

TEST(Compile, TrafficLightGolden) {
  ucgen::testing::expect_golden("traffic_light.ucl", print_uclid(compile(traffic_light())));
}

TEST(Compile, TrafficLightDeclarations) {
  UclidModule m = compile(traffic_light());
  EXPECT_EQ(m.name, "TrafficLight");
  ASSERT_EQ(m.var_decls.size(), 3u);
  EXPECT_EQ(m.var_decls[0].name, "state");
  EXPECT_EQ(m.var_decls[0].type.kind, UclidType::Kind::Integer);
  EXPECT_EQ(m.var_decls[2].type.kind, UclidType::Kind::Boolean);
  ASSERT_EQ(m.output_decls.size(), 3u);
  EXPECT_EQ(m.init_block.size(), 6u);
  EXPECT_EQ(m.modifies, (std::vector<std::string>{"sigG", "sigY", "sigR", "count", "state"}));
}

TEST(Compile, EnumTypeLine) {
  std::string out = print_uclid(compile(child(
      "class M(Module):\n    def types(self):\n        self.s_t = Enum(\"A\", \"B\")\n"
      "    def locals(self):\n        self.s = self.s_t\n"
      "    def init(self):\n        self.s = A\n")));
  EXPECT_NE(out.find("type s_t = enum { A, B };"), std::string::npos) << out;
  EXPECT_TRUE(validate_uclid(out).empty()) << dump(validate_uclid(out));
}

TEST(Compile, EmptyModuleIsMinimal) {
  std::string out = print_uclid(compile(child("class M(Module):\n    pass\n")));
  EXPECT_NE(out.find("module M {"), std::string::npos) << out;
  EXPECT_TRUE(validate_uclid(out).empty()) << out;
}

TEST(Compile, HoleIsRejected) {
  ChildProgram p = child(
      "class M(Module):\n    def locals(self):\n        self.n = int\n"
      "    def init(self):\n        self.n = ??\n");
  try {
    compile(p);
    FAIL() << "expected CompileError";
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::HoleRemaining);
  }
  EXPECT_THROW(compile_unchecked(p), CompileError);
}

TEST(Compile, IllTypedIsRejected) {
  ChildProgram p = child(
      "class M(Module):\n    def locals(self):\n        self.x = BitVector(32)\n"
      "    def init(self):\n        self.x = 0\n");
  try {
    compile(p);
    FAIL() << "expected CompileError";
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::Untypeable);
  }
  std::string text = print_uclid(compile_unchecked(p));
  auto diags = validate_uclid(text);
  ASSERT_FALSE(diags.empty());
}

TEST(Compile, KeywordIdentifiersAreRenamed) {
  std::string out = print_uclid(compile(child(
      read_text(source_dir() / "tests" / "corpus" / "valid" / "keyword_names.py"))));
  EXPECT_NE(out.find(uclid_identifier("input")), std::string::npos);
  EXPECT_NE(uclid_identifier("input"), "input");
  EXPECT_EQ(uclid_identifier("count"), "count");
  EXPECT_TRUE(validate_uclid(out).empty()) << out;
}

TEST(Compile, ControlBlock) {
  CompileOptions o;
  o.control_unroll = 7;
  std::string out = print_uclid(compile(traffic_light(), o));
  EXPECT_NE(out.find("unroll(7)"), std::string::npos);
  EXPECT_TRUE(validate_uclid(out).empty()) << dump(validate_uclid(out));
}

TEST(Print, RoundTripIsStable) {
  for (const auto& e : std::filesystem::directory_iterator(source_dir() / "tests" / "corpus" / "valid")) {
    std::string once = print_uclid(compile(child(read_text(e.path()))));
    UclidModule parsed = parse_uclid(once);
    EXPECT_EQ(print_uclid(parsed), once) << e.path();
    EXPECT_EQ(parsed, compile(child(read_text(e.path())))) << e.path();
  }
}

TEST(Validate, ReferenceModelPasses) {
  auto diags = validate_uclid(read_text(source_dir() / "data" / "traffic_light" / "reference.ucl"));
  EXPECT_TRUE(diags.empty()) << dump(diags);
}

TEST(Validate, BitvectorAssignedInteger) {
  auto diags = validate_uclid(
      "module M {\n  var x : bv32;\n  init {\n    x = 0;\n  }\n}\n");
  ASSERT_EQ(diags.size(), 1u) << dump(diags);
  EXPECT_TRUE(mentions(diags, "x")) << dump(diags);
}

TEST(Validate, Negatives) {
  struct Case {
    const char* what;
    const char* src;
  };
  const Case cases[] = {
      {"undeclared", "module M { var a : integer; init { a = b; } }"},
      {"duplicate", "module M { var a : integer; var a : boolean; }"},
      {"input write",
       "module M { input i : integer; procedure step() modifies i; { i = 1; } next { call step(); } }"},
      {"missing modifies",
       "module M { var a : integer; procedure step() { a = 1; } next { call step(); } }"},
      {"non-bool condition", "module M { var a : integer; init { if (a) { a = 1; } } }"},
      {"non-bool invariant", "module M { var a : integer; invariant p : a + 1; }"},
      {"real modulo", "module M { var r : real; init { r = r % 2.0; } }"},
      {"bv width", "module M { var a : bv8; var b : bv4; init { a = b; } }"},
      {"unknown type", "module M { var a : foo_t; }"},
      {"select on integer", "module M { var a : integer; init { a = a[0]; } }"},
      {"parse error", "module M { var a : integer init { } }"},
      {"unknown enum tag", "module M { type t = enum { A, B }; var s : t; init { s = C; } }"},
  };
  for (const auto& c : cases) EXPECT_FALSE(validate_uclid(c.src).empty()) << c.what;
}

TEST(Validate, ParseErrorsCarryPositions) {
  auto diags = validate_uclid("module M {\n  var a : integer\n  init { }\n}\n");
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].line, 3);
  EXPECT_THROW(parse_uclid("module M {"), UclidParseError);
}

TEST(Validate, AcceptsSubsetFeatures) {
  const char* src =
      "module M {\n"
      "  type w_t = bv8;\n"
      "  var a, b : w_t;\n"
      "  var m : [integer]boolean;\n"
      "  var r : real;\n"
      "  init { a = 0bv8; b = a + 1bv8; r = 1.5; }\n"
      "  procedure step() modifies a; modifies m; {\n"
      "    havoc a;\n"
      "    assume (a != b);\n"
      "    m[1] = (a == b) ==> true;\n"
      "    a = (a << 1bv8) ^ b;\n"
      "    assert (r > 0.0);\n"
      "  }\n"
      "  next { call step(); }\n"
      "  invariant inv : (m[0] || !m[0]);\n"
      "}\n";
  auto diags = validate_uclid(src);
  EXPECT_TRUE(diags.empty()) << dump(diags);
}
