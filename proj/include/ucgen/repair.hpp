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

// Deductive repair: replace the nodes behind falsified soft clauses with
// holes, then fill type holes the model pins down.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucgen/ast.hpp"
#include "ucgen/constraints.hpp"
#include "ucgen/maxsmt.hpp"

namespace ucgen {

struct HoledNode {
  NodeId node;
  CheckTag check = CheckTag::S3;  // first check the node originated
  HoleId hole;
  HoleCategory category = HoleCategory::Expr;
};

struct HoleifyResult {
  ChildProgram program;
  std::vector<HoledNode> holed;
};

/// Each falsified soft clause's origin becomes a hole of its own category.
/// Nested origins collapse into the outermost one. Fresh HoleIds continue
/// after the program's largest.
HoleifyResult holeify(const ChildProgram& p, const ClauseSet& cs, const SolveResult& r);

struct FilledHole {
  HoleId hole;
  TypeTerm type;
};

struct Retyped {
  NodeId decl;
  std::string name;
  TypeTerm type;
};

struct ModelRepairResult {
  ChildProgram program;
  std::vector<FilledHole> filled;
  std::vector<Retyped> retyped;
  std::vector<HoleId> unresolved;  // value declarations turned into type holes
};

/// Fills every type hole whose TVar is forced by the model, and rewrites
/// value-form declarations (`self.x = 0`) into type declarations.
ModelRepairResult model_repair(const ChildProgram& p, const ClauseSet& cs, const Model& m);

/// Child-language type for a ground term, if it has one.
std::optional<TypeExpr> type_expr_of(const TypeTerm& t, const ChildProgram& context);

enum class SolverKind { Internal, External };

struct RepairOptions {
  WeightsMode weights = WeightsMode::Depth;
  SolverKind solver = SolverKind::Internal;
  ExternalSolverConfig external;
  int max_solve_rounds = 16;
};

struct RepairOutcome {
  ChildProgram program;
  std::vector<std::string> synthesized;  // names given a `self.x = ??` declaration
  std::vector<HoledNode> holed;
  std::vector<FilledHole> filled;
  std::vector<Retyped> retyped;
  std::size_t holes_before = 0;
  std::size_t holes_after = 0;
  int solve_rounds = 0;
  long long cost = 0;
  double ms_constraints = 0;
  double ms_solve = 0;
  std::vector<std::string> notes;
};

/// Declares undeclared names, holes until the clauses are satisfiable, then
/// applies model_repair.
RepairOutcome repair_round(const ChildProgram& p, const RepairOptions& opts = {});

}  // namespace ucgen
