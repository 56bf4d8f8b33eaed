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

// UCLID5 target: the emitted subset as a small AST, the compiler from child
// programs, the printer, and a separate parser + typechecker used as the
// validator.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucgen/ast.hpp"

namespace ucgen {

struct UclidType {
  enum class Kind : std::uint8_t { Boolean, Integer, Real, BV, Enum, Array, Named };

  Kind kind = Kind::Integer;
  int width = 0;
  std::vector<std::string> tags;
  std::string name;
  std::vector<UclidType> children;  // Array: index, element

  friend bool operator==(const UclidType&, const UclidType&) = default;
};

struct UclidExpr {
  enum class Kind : std::uint8_t { BoolLit, IntLit, RealLit, BVLit, Id, Unary, Binary, Ite, Select };

  Kind kind = Kind::Id;
  std::string text;  // literal digits, identifier, or operator spelling
  int width = 0;     // BVLit
  bool value = false;
  std::vector<UclidExpr> args;

  friend bool operator==(const UclidExpr&, const UclidExpr&) = default;
};

struct UclidStmt {
  enum class Kind : std::uint8_t { Assign, If, Havoc, Assume, Assert };

  Kind kind = Kind::Assign;
  std::vector<UclidExpr> exprs;  // Assign: lhs, rhs; If/Assume/Assert: cond; Havoc: target
  std::vector<UclidStmt> then_body;
  std::vector<UclidStmt> else_body;

  friend bool operator==(const UclidStmt&, const UclidStmt&) = default;
};

struct UclidDecl {
  std::string name;
  UclidType type;
  friend bool operator==(const UclidDecl&, const UclidDecl&) = default;
};

struct UclidInvariant {
  std::string name;
  UclidExpr expr;
  friend bool operator==(const UclidInvariant&, const UclidInvariant&) = default;
};

struct UclidModule {
  std::string name;
  std::vector<UclidDecl> type_decls;
  std::vector<UclidDecl> var_decls;
  std::vector<UclidDecl> input_decls;
  std::vector<UclidDecl> output_decls;
  std::vector<UclidStmt> init_block;
  std::vector<std::string> modifies;
  std::vector<UclidStmt> step_body;
  bool has_next = true;  // `next { call step(); }`
  std::vector<UclidInvariant> invariants;
  std::optional<int> control_unroll;  // `control { v = unroll(k); check; print_results; }`

  friend bool operator==(const UclidModule&, const UclidModule&) = default;
};

class CompileError : public Error {
 public:
  enum class Kind { HoleRemaining, Untypeable };
  CompileError(Kind k, std::string msg) : Error(std::move(msg)), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct CompileOptions {
  std::optional<int> control_unroll;
};

/// Requires a hole-free program whose clauses are all satisfiable.
UclidModule compile(const ChildProgram& p, const CompileOptions& opts = {});

/// Translation without the typing precondition (holes still rejected).
UclidModule compile_unchecked(const ChildProgram& p, const CompileOptions& opts = {});

std::string print_uclid(const UclidModule& m);

class UclidParseError : public Error {
 public:
  UclidParseError(std::string msg, int line, int col)
      : Error(std::move(msg)), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Parses the emitted subset (plus `var a, b : T;` lists and an optional
/// next block). Throws UclidParseError.
UclidModule parse_uclid(std::string_view source);

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
};

/// Empty when the source parses and typechecks.
std::vector<Diagnostic> validate_uclid(std::string_view source);

/// Identifiers that collide with UCLID5 keywords get this suffix.
std::string uclid_identifier(const std::string& name);

}  // namespace ucgen
