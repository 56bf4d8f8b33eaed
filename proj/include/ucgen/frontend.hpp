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

// Parent-language frontend: code extraction from LLM replies, a tolerant
// Python parser, the pruner down to the child language, and the printer
// back to child-language Python.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ucgen/ast.hpp"

namespace ucgen {

class EmptySourceError : public Error {
 public:
  EmptySourceError() : Error("empty LLM response") {}
};

/// Code block of an LLM reply. First fenced block wins; a reply that
/// continues a primed fence (code, then a closing fence) yields the code
/// before the fence; otherwise the suffix from the first `class`/`import`
/// line, otherwise the whole reply.
std::string extract_code(std::string_view llm_response);

/// Never throws on text input. Unparseable logical lines become Error nodes.
///
/// Tree shapes:
///   ClassDef(text=name)    [Params(bases...), Block]
///   FunctionDef(text=name) [Params(Name...), Block]
///   Assign      [target..., value]
///   AugAssign(text=op) [target, value]
///   AnnAssign   [target, annotation, value?]
///   If          [cond, Block, Elif..., Else?];  Elif [cond, Block];  Else [Block]
///   Compound(text=keyword) [Block]
///   Compare(text="op,op") [operand...];  BoolOp(text=and|or) [operand...]
///   IfExp       [cond, then, else]
///   Call        [func, arg..., Keyword(text=name)[value]...]
///   Constant(text=True|False|None|??)
ParentAst parse_tolerant(std::string_view source);

struct DroppedNode {
  NodeId node;  // parent-tree id
  Span span;
  std::string reason;
};

struct InsertedHole {
  HoleId hole;
  HoleCategory category;
  Span span;
};

/// Holes written as `??` in the source are carried over, not "inserted".
struct PruneReport {
  std::vector<DroppedNode> dropped;
  std::vector<InsertedHole> holes_inserted;

  bool empty() const { return dropped.empty() && holes_inserted.empty(); }
};

struct PruneResult {
  ChildProgram program;
  PruneReport report;
};

/// Child node ids are fresh (pre-order); spans point back into the source.
PruneResult prune_to_child(const ParentAst& ast);

/// parse_tolerant + prune_to_child.
PruneResult parse_child(std::string_view source);

/// Canonical child-language Python. Holes print as `??`; empty sections are
/// omitted; empty blocks print `pass`. prune(parse(print(p))) == p for any
/// pruner output p.
std::string print_child(const ChildProgram& program);
std::string print_child_expr(const Expr& e);
std::string print_child_type(const TypeExpr& t);

}  // namespace ucgen
