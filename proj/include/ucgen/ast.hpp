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

// Shared tree representations: the parent-language AST produced by the
// tolerant parser, the child-language program (with holes), and the type
// terms used as the constraint vocabulary.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ucgen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration: missing files, unknown backends, absent executables.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Span {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  int line_start = 1;
  int col_start = 1;
  int line_end = 1;
  int col_end = 1;

  bool contains(const Span& other) const {
    return byte_start <= other.byte_start && other.byte_end <= byte_end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

// Pre-order node identity. Ids survive holeify so clause origins keep
// pointing at the same nodes.
struct NodeId {
  std::int32_t value = -1;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::int32_t v) : value(v) {}
  bool valid() const { return value >= 0; }
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct HoleId {
  std::int32_t value = -1;

  constexpr HoleId() = default;
  constexpr explicit HoleId(std::int32_t v) : value(v) {}
  bool valid() const { return value >= 0; }
  friend auto operator<=>(const HoleId&, const HoleId&) = default;
};

// ---------------------------------------------------------------------------
// Type terms

/// Constructor tags of the type ADT. Every constructor has exactly one tester.
enum class TypeCtor : std::uint8_t { Bool, Int, Real, BV, Enum, Array, Synonym };
inline constexpr int kTypeCtorCount = 7;

std::string_view ctor_name(TypeCtor c);

class TypeTerm {
 public:
  enum class Kind : std::uint8_t { Bool, Int, Real, BV, Enum, Array, Synonym, Var };

  TypeTerm() : TypeTerm(Kind::Int) {}

  static TypeTerm boolean() { return TypeTerm(Kind::Bool); }
  static TypeTerm integer() { return TypeTerm(Kind::Int); }
  static TypeTerm real() { return TypeTerm(Kind::Real); }
  static TypeTerm bv(int width);
  static TypeTerm enumeration(std::vector<std::string> tags);
  static TypeTerm array(TypeTerm index, TypeTerm element);
  static TypeTerm synonym(std::string name);
  static TypeTerm var(int id);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  TypeCtor ctor() const;  // not valid for Var

  int width() const { return number_; }
  int var_id() const { return number_; }
  const std::vector<std::string>& tags() const { return strings_; }
  const std::string& name() const { return strings_.front(); }
  const TypeTerm& index() const { return children_[0]; }
  const TypeTerm& element() const { return children_[1]; }
  const std::vector<TypeTerm>& children() const { return children_; }

  bool is_ground() const;
  void collect_vars(std::vector<int>& out) const;

  /// Canonical text, e.g. `Array(Int, BV(8))`, `t12`.
  std::string to_string() const;

  friend bool operator==(const TypeTerm&, const TypeTerm&) = default;
  friend std::strong_ordering operator<=>(const TypeTerm& a, const TypeTerm& b);

 private:
  explicit TypeTerm(Kind k) : kind_(k) {}

  Kind kind_;
  int number_ = 0;
  std::vector<std::string> strings_;
  std::vector<TypeTerm> children_;
};

// ---------------------------------------------------------------------------
// Parent-language AST (generic tree)

enum class ParentKind : std::uint8_t {
  Module,
  Block,
  Import,
  ClassDef,
  FunctionDef,
  Params,
  Decorator,
  Assign,
  AugAssign,
  AnnAssign,
  If,
  Elif,
  Else,
  ExprStmt,
  Pass,
  Return,
  Assert,
  Compound,  // for/while/with/try/... kept only so their bodies are skipped
  OtherStmt,
  Error,
  Name,
  Attribute,
  Call,
  Keyword,
  Number,
  String,
  Constant,  // True/False/None
  BinOp,
  UnaryOp,
  Compare,
  BoolOp,
  IfExp,
  Subscript,
  Collection,  // list/tuple/dict/set displays
};

std::string_view parent_kind_name(ParentKind k);

struct ParentNode {
  ParentKind kind = ParentKind::Module;
  std::string text;
  Span span;
  NodeId id;
  std::vector<ParentNode> children;
};

struct ParentAst {
  ParentNode root;
  std::vector<NodeId> error_nodes;
};

// ---------------------------------------------------------------------------
// Child-language AST

enum class HoleCategory : std::uint8_t { Module, Stmt, Expr, Type };
std::string_view hole_category_name(HoleCategory c);

struct TypeExpr {
  enum class Kind : std::uint8_t { Bool, Int, Real, BV, Enum, Array, Synonym, Hole };

  Kind kind = Kind::Hole;
  NodeId id;
  Span span;
  int width = 0;                  // BV
  std::vector<std::string> tags;  // Enum, in source order
  std::string name;               // Synonym
  std::vector<TypeExpr> children; // Array: index, element
  HoleId hole;                    // Hole

  static TypeExpr make(Kind k) {
    TypeExpr t;
    t.kind = k;
    return t;
  }
  static TypeExpr make_hole(HoleId h) {
    TypeExpr t;
    t.kind = Kind::Hole;
    t.hole = h;
    return t;
  }
};

enum class Op : std::uint8_t {
  Not, Neg,
  And, Or, Xor, Implies,
  Eq, Ne, Lt, Le, Gt, Ge,
  Add, Sub, Mul, Div, Mod,
  BvAnd, BvOr, BvXor, Shl, Lshr, Concat,
};
std::string_view op_name(Op op);
bool is_unary(Op op);

struct Expr {
  enum class Kind : std::uint8_t {
    BoolLit, IntLit, RealLit, BVLit, EnumLit, VarRef, Unary, Binary, Ite, Select, Hole
  };

  Kind kind = Kind::Hole;
  NodeId id;
  Span span;
  Op op = Op::Not;
  bool bool_value = false;
  std::string text;  // IntLit/RealLit/BVLit digits, VarRef name, EnumLit tag
  int width = 0;     // BVLit
  std::vector<Expr> args;
  HoleId hole;

  static Expr make(Kind k) {
    Expr e;
    e.kind = k;
    return e;
  }
  static Expr make_hole(HoleId h) {
    Expr e;
    e.kind = Kind::Hole;
    e.hole = h;
    return e;
  }
};

struct Stmt;

struct ElifClause {
  Expr cond;
  std::vector<Stmt> body;
};

struct Stmt {
  enum class Kind : std::uint8_t { Assign, If, Havoc, Assume, Assert, Hole };

  Kind kind = Kind::Hole;
  NodeId id;
  Span span;
  std::vector<Expr> exprs;  // Assign: lhs, rhs; If/Assume/Assert: cond; Havoc: target
  std::vector<Stmt> then_body;
  std::vector<ElifClause> elifs;
  std::vector<Stmt> else_body;
  HoleId hole;

  static Stmt make(Kind k) {
    Stmt s;
    s.kind = k;
    return s;
  }
  static Stmt make_hole(HoleId h) {
    Stmt s;
    s.kind = Kind::Hole;
    s.hole = h;
    return s;
  }
};

/// `self.name = <type>` (or, as produced by LLMs, `self.name = <value>`).
/// A declaration may also be a statement-category hole as a whole.
struct Decl {
  NodeId id;
  Span span;
  std::string name;
  std::optional<TypeExpr> type;
  std::optional<Expr> value;
  HoleId hole;

  bool is_hole() const { return hole.valid(); }
};

struct Invariant {
  NodeId id;
  Span span;
  std::string name;
  Expr expr;
};

enum class SectionKind : std::uint8_t { Types, Locals, Inputs, Outputs, Init, Next, Spec };
inline constexpr int kSectionCount = 7;
std::string_view section_method_name(SectionKind s);

struct DeclSection {
  NodeId id;
  Span span;
  std::vector<Decl> decls;
};

struct StmtSection {
  NodeId id;
  Span span;
  std::vector<Stmt> body;
};

struct SpecSection {
  NodeId id;
  Span span;
  std::vector<Invariant> invariants;
};

struct ChildProgram {
  NodeId id;
  Span span;
  std::string module_name = "Main";
  HoleId module_hole;  // set when no module class could be recovered
  DeclSection types;
  DeclSection locals;
  DeclSection inputs;
  DeclSection outputs;
  StmtSection init;
  StmtSection next;
  SpecSection spec;

  const DeclSection& decl_section(SectionKind s) const;
  DeclSection& decl_section(SectionKind s);
};

inline constexpr SectionKind kVariableSections[] = {SectionKind::Locals, SectionKind::Inputs,
                                                    SectionKind::Outputs};

// ---------------------------------------------------------------------------
// Generic traversal over child programs

/// Non-owning reference to any node of a ChildProgram.
using NodeRef = std::variant<const ChildProgram*, const DeclSection*, const StmtSection*,
                             const SpecSection*, const Decl*, const TypeExpr*, const Expr*,
                             const Stmt*, const Invariant*>;

NodeId node_id(const NodeRef& n);
Span node_span(const NodeRef& n);

struct NodeVisit {
  NodeRef node;
  NodeId parent;
  int depth = 0;
};

/// Pre-order walk over every node (sections included, in canonical order).
void walk(const ChildProgram& p, const std::function<void(const NodeVisit&)>& fn);

/// Pre-order walk over a parent tree.
void walk(const ParentNode& n, const std::function<void(const ParentNode&, int depth)>& fn);

// ---------------------------------------------------------------------------
// Operations

/// Assigns pre-order ids. Nodes that already carry an id keep it; nodes
/// without one get fresh ids above the current maximum, in pre-order.
void assign_node_ids(ParentAst& tree);
void assign_node_ids(ChildProgram& program);

/// Depth of `node` (root = 0). Throws std::out_of_range for unknown ids.
int depth_of(const ChildProgram& program, NodeId node);
int depth_of(const ParentAst& tree, NodeId node);

/// Largest depth over all nodes.
int max_depth(const ChildProgram& program);

std::optional<NodeRef> find_node(const ChildProgram& program, NodeId id);

/// All holes in the program, in pre-order.
struct HoleInfo {
  HoleId hole;
  HoleCategory category;
  NodeId node;
  Span span;
};
std::vector<HoleInfo> collect_holes(const ChildProgram& program);
std::size_t count_holes(const ChildProgram& program);
HoleId max_hole_id(const ChildProgram& program);

/// Structural equality ignoring node ids, spans and hole numbering.
bool structurally_equal(const ChildProgram& a, const ChildProgram& b);
bool structurally_equal(const Expr& a, const Expr& b);

/// Deterministic indented dumps for golden tests.
std::string debug_print(const ParentAst& tree);
std::string debug_print(const ChildProgram& program);

}  // namespace ucgen
