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

#include "ucgen/ast.hpp"

#include <algorithm>
#include <sstream>

namespace ucgen {

std::string_view ctor_name(TypeCtor c) {
  switch (c) {
    case TypeCtor::Bool: return "Bool";
    case TypeCtor::Int: return "Int";
    case TypeCtor::Real: return "Real";
    case TypeCtor::BV: return "BV";
    case TypeCtor::Enum: return "Enum";
    case TypeCtor::Array: return "Array";
    case TypeCtor::Synonym: return "Synonym";
  }
  return "?";
}

TypeTerm TypeTerm::bv(int width) {
  if (width < 1) throw Error("bit-vector width must be positive");
  TypeTerm t(Kind::BV);
  t.number_ = width;
  return t;
}

TypeTerm TypeTerm::enumeration(std::vector<std::string> tags) {
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  if (tags.empty()) throw Error("enum type needs at least one tag");
  TypeTerm t(Kind::Enum);
  t.strings_ = std::move(tags);
  return t;
}

TypeTerm TypeTerm::array(TypeTerm index, TypeTerm element) {
  TypeTerm t(Kind::Array);
  t.children_.push_back(std::move(index));
  t.children_.push_back(std::move(element));
  return t;
}

TypeTerm TypeTerm::synonym(std::string name) {
  TypeTerm t(Kind::Synonym);
  t.strings_.push_back(std::move(name));
  return t;
}

TypeTerm TypeTerm::var(int id) {
  TypeTerm t(Kind::Var);
  t.number_ = id;
  return t;
}

TypeCtor TypeTerm::ctor() const {
  switch (kind_) {
    case Kind::Bool: return TypeCtor::Bool;
    case Kind::Int: return TypeCtor::Int;
    case Kind::Real: return TypeCtor::Real;
    case Kind::BV: return TypeCtor::BV;
    case Kind::Enum: return TypeCtor::Enum;
    case Kind::Array: return TypeCtor::Array;
    case Kind::Synonym: return TypeCtor::Synonym;
    case Kind::Var: break;
  }
  throw InternalError("type variable has no constructor");
}

bool TypeTerm::is_ground() const {
  if (kind_ == Kind::Var) return false;
  return std::all_of(children_.begin(), children_.end(),
                     [](const TypeTerm& c) { return c.is_ground(); });
}

void TypeTerm::collect_vars(std::vector<int>& out) const {
  if (kind_ == Kind::Var) {
    out.push_back(number_);
    return;
  }
  for (const auto& c : children_) c.collect_vars(out);
}

std::string TypeTerm::to_string() const {
  switch (kind_) {
    case Kind::Bool: return "Bool";
    case Kind::Int: return "Int";
    case Kind::Real: return "Real";
    case Kind::BV: return "BV(" + std::to_string(number_) + ")";
    case Kind::Enum: {
      std::string s = "Enum(";
      for (std::size_t i = 0; i < strings_.size(); ++i) {
        if (i) s += ",";
        s += strings_[i];
      }
      return s + ")";
    }
    case Kind::Array:
      return "Array(" + children_[0].to_string() + ", " + children_[1].to_string() + ")";
    case Kind::Synonym: return "Synonym(" + strings_[0] + ")";
    case Kind::Var: return "t" + std::to_string(number_);
  }
  return "?";
}

std::strong_ordering operator<=>(const TypeTerm& a, const TypeTerm& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.number_ <=> b.number_; c != 0) return c;
  if (auto c = a.strings_ <=> b.strings_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

std::string_view parent_kind_name(ParentKind k) {
  switch (k) {
    case ParentKind::Module: return "Module";
    case ParentKind::Block: return "Block";
    case ParentKind::Import: return "Import";
    case ParentKind::ClassDef: return "ClassDef";
    case ParentKind::FunctionDef: return "FunctionDef";
    case ParentKind::Params: return "Params";
    case ParentKind::Decorator: return "Decorator";
    case ParentKind::Assign: return "Assign";
    case ParentKind::AugAssign: return "AugAssign";
    case ParentKind::AnnAssign: return "AnnAssign";
    case ParentKind::If: return "If";
    case ParentKind::Elif: return "Elif";
    case ParentKind::Else: return "Else";
    case ParentKind::ExprStmt: return "ExprStmt";
    case ParentKind::Pass: return "Pass";
    case ParentKind::Return: return "Return";
    case ParentKind::Assert: return "Assert";
    case ParentKind::Compound: return "Compound";
    case ParentKind::OtherStmt: return "OtherStmt";
    case ParentKind::Error: return "Error";
    case ParentKind::Name: return "Name";
    case ParentKind::Attribute: return "Attribute";
    case ParentKind::Call: return "Call";
    case ParentKind::Keyword: return "Keyword";
    case ParentKind::Number: return "Number";
    case ParentKind::String: return "String";
    case ParentKind::Constant: return "Constant";
    case ParentKind::BinOp: return "BinOp";
    case ParentKind::UnaryOp: return "UnaryOp";
    case ParentKind::Compare: return "Compare";
    case ParentKind::BoolOp: return "BoolOp";
    case ParentKind::IfExp: return "IfExp";
    case ParentKind::Subscript: return "Subscript";
    case ParentKind::Collection: return "Collection";
  }
  return "?";
}

std::string_view hole_category_name(HoleCategory c) {
  switch (c) {
    case HoleCategory::Module: return "module";
    case HoleCategory::Stmt: return "stmt";
    case HoleCategory::Expr: return "expr";
    case HoleCategory::Type: return "type";
  }
  return "?";
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Not: return "not";
    case Op::Neg: return "neg";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Xor: return "xor";
    case Op::Implies: return "implies";
    case Op::Eq: return "==";
    case Op::Ne: return "!=";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "div";
    case Op::Mod: return "mod";
    case Op::BvAnd: return "bvand";
    case Op::BvOr: return "bvor";
    case Op::BvXor: return "bvxor";
    case Op::Shl: return "shl";
    case Op::Lshr: return "lshr";
    case Op::Concat: return "concat";
  }
  return "?";
}

bool is_unary(Op op) { return op == Op::Not || op == Op::Neg; }

std::string_view section_method_name(SectionKind s) {
  switch (s) {
    case SectionKind::Types: return "types";
    case SectionKind::Locals: return "locals";
    case SectionKind::Inputs: return "inputs";
    case SectionKind::Outputs: return "outputs";
    case SectionKind::Init: return "init";
    case SectionKind::Next: return "next";
    case SectionKind::Spec: return "specification";
  }
  return "?";
}

const DeclSection& ChildProgram::decl_section(SectionKind s) const {
  switch (s) {
    case SectionKind::Types: return types;
    case SectionKind::Locals: return locals;
    case SectionKind::Inputs: return inputs;
    case SectionKind::Outputs: return outputs;
    default: break;
  }
  throw InternalError("not a declaration section");
}

DeclSection& ChildProgram::decl_section(SectionKind s) {
  return const_cast<DeclSection&>(std::as_const(*this).decl_section(s));
}

NodeId node_id(const NodeRef& n) {
  return std::visit([](auto* p) { return p->id; }, n);
}

Span node_span(const NodeRef& n) {
  return std::visit([](auto* p) { return p->span; }, n);
}

// ---------------------------------------------------------------------------
// Traversal

namespace {

using VisitFn = std::function<void(const NodeVisit&)>;

void walk_type(const TypeExpr& t, NodeId parent, int depth, const VisitFn& fn) {
  fn({&t, parent, depth});
  for (const auto& c : t.children) walk_type(c, t.id, depth + 1, fn);
}

void walk_expr(const Expr& e, NodeId parent, int depth, const VisitFn& fn) {
  fn({&e, parent, depth});
  for (const auto& a : e.args) walk_expr(a, e.id, depth + 1, fn);
}

void walk_stmt(const Stmt& s, NodeId parent, int depth, const VisitFn& fn) {
  fn({&s, parent, depth});
  for (const auto& e : s.exprs) walk_expr(e, s.id, depth + 1, fn);
  for (const auto& c : s.then_body) walk_stmt(c, s.id, depth + 1, fn);
  for (const auto& elif : s.elifs) {
    walk_expr(elif.cond, s.id, depth + 1, fn);
    for (const auto& c : elif.body) walk_stmt(c, s.id, depth + 1, fn);
  }
  for (const auto& c : s.else_body) walk_stmt(c, s.id, depth + 1, fn);
}

void walk_decls(const DeclSection& sec, NodeId parent, const VisitFn& fn) {
  fn({&sec, parent, 1});
  for (const auto& d : sec.decls) {
    fn({&d, sec.id, 2});
    if (d.type) walk_type(*d.type, d.id, 3, fn);
    if (d.value) walk_expr(*d.value, d.id, 3, fn);
  }
}

void walk_stmts(const StmtSection& sec, NodeId parent, const VisitFn& fn) {
  fn({&sec, parent, 1});
  for (const auto& s : sec.body) walk_stmt(s, sec.id, 2, fn);
}

// Mutable id visitation in the same order as walk().
template <class F>
void ids_type(TypeExpr& t, F& f) {
  f(t.id);
  for (auto& c : t.children) ids_type(c, f);
}
template <class F>
void ids_expr(Expr& e, F& f) {
  f(e.id);
  for (auto& a : e.args) ids_expr(a, f);
}
template <class F>
void ids_stmt(Stmt& s, F& f) {
  f(s.id);
  for (auto& e : s.exprs) ids_expr(e, f);
  for (auto& c : s.then_body) ids_stmt(c, f);
  for (auto& elif : s.elifs) {
    ids_expr(elif.cond, f);
    for (auto& c : elif.body) ids_stmt(c, f);
  }
  for (auto& c : s.else_body) ids_stmt(c, f);
}
template <class F>
void ids_program(ChildProgram& p, F& f) {
  f(p.id);
  for (DeclSection* sec : {&p.types, &p.locals, &p.inputs, &p.outputs}) {
    f(sec->id);
    for (auto& d : sec->decls) {
      f(d.id);
      if (d.type) ids_type(*d.type, f);
      if (d.value) ids_expr(*d.value, f);
    }
  }
  for (StmtSection* sec : {&p.init, &p.next}) {
    f(sec->id);
    for (auto& s : sec->body) ids_stmt(s, f);
  }
  f(p.spec.id);
  for (auto& inv : p.spec.invariants) {
    f(inv.id);
    ids_expr(inv.expr, f);
  }
}

template <class F>
void ids_parent(ParentNode& n, F& f) {
  f(n.id);
  for (auto& c : n.children) ids_parent(c, f);
}

template <class Visit>
void assign_ids(Visit visit) {
  std::int32_t max_id = -1;
  auto find_max = [&](NodeId& id) { max_id = std::max(max_id, id.value); };
  visit(find_max);
  std::int32_t next = max_id + 1;
  auto fill = [&](NodeId& id) {
    if (!id.valid()) id = NodeId(next++);
  };
  visit(fill);
}

}  // namespace

void walk(const ChildProgram& p, const VisitFn& fn) {
  fn({&p, NodeId(), 0});
  walk_decls(p.types, p.id, fn);
  walk_decls(p.locals, p.id, fn);
  walk_decls(p.inputs, p.id, fn);
  walk_decls(p.outputs, p.id, fn);
  walk_stmts(p.init, p.id, fn);
  walk_stmts(p.next, p.id, fn);
  fn({&p.spec, p.id, 1});
  for (const auto& inv : p.spec.invariants) {
    fn({&inv, p.spec.id, 2});
    walk_expr(inv.expr, inv.id, 3, fn);
  }
}

void walk(const ParentNode& n, const std::function<void(const ParentNode&, int)>& fn) {
  std::function<void(const ParentNode&, int)> rec = [&](const ParentNode& node, int depth) {
    fn(node, depth);
    for (const auto& c : node.children) rec(c, depth + 1);
  };
  rec(n, 0);
}

void assign_node_ids(ParentAst& tree) {
  assign_ids([&](auto& f) { ids_parent(tree.root, f); });
}

void assign_node_ids(ChildProgram& program) {
  assign_ids([&](auto& f) { ids_program(program, f); });
}

int depth_of(const ChildProgram& program, NodeId node) {
  int found = -1;
  walk(program, [&](const NodeVisit& v) {
    if (found < 0 && node_id(v.node) == node) found = v.depth;
  });
  if (found < 0) throw std::out_of_range("unknown node id " + std::to_string(node.value));
  return found;
}

int depth_of(const ParentAst& tree, NodeId node) {
  int found = -1;
  walk(tree.root, [&](const ParentNode& n, int depth) {
    if (found < 0 && n.id == node) found = depth;
  });
  if (found < 0) throw std::out_of_range("unknown node id " + std::to_string(node.value));
  return found;
}

int max_depth(const ChildProgram& program) {
  int best = 0;
  walk(program, [&](const NodeVisit& v) { best = std::max(best, v.depth); });
  return best;
}

std::optional<NodeRef> find_node(const ChildProgram& program, NodeId id) {
  std::optional<NodeRef> found;
  walk(program, [&](const NodeVisit& v) {
    if (!found && node_id(v.node) == id) found = v.node;
  });
  return found;
}

std::vector<HoleInfo> collect_holes(const ChildProgram& program) {
  std::vector<HoleInfo> out;
  if (program.module_hole.valid()) {
    out.push_back({program.module_hole, HoleCategory::Module, program.id, program.span});
  }
  walk(program, [&](const NodeVisit& v) {
    if (auto* d = std::get_if<const Decl*>(&v.node); d && (*d)->is_hole()) {
      out.push_back({(*d)->hole, HoleCategory::Stmt, (*d)->id, (*d)->span});
    } else if (auto* t = std::get_if<const TypeExpr*>(&v.node);
               t && (*t)->kind == TypeExpr::Kind::Hole) {
      out.push_back({(*t)->hole, HoleCategory::Type, (*t)->id, (*t)->span});
    } else if (auto* e = std::get_if<const Expr*>(&v.node);
               e && (*e)->kind == Expr::Kind::Hole) {
      out.push_back({(*e)->hole, HoleCategory::Expr, (*e)->id, (*e)->span});
    } else if (auto* s = std::get_if<const Stmt*>(&v.node);
               s && (*s)->kind == Stmt::Kind::Hole) {
      out.push_back({(*s)->hole, HoleCategory::Stmt, (*s)->id, (*s)->span});
    }
  });
  return out;
}

std::size_t count_holes(const ChildProgram& program) { return collect_holes(program).size(); }

HoleId max_hole_id(const ChildProgram& program) {
  HoleId best;
  for (const auto& h : collect_holes(program)) best = std::max(best, h.hole);
  return best;
}

// ---------------------------------------------------------------------------
// Structural equality

namespace {

bool eq_type(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind != b.kind || a.width != b.width || a.tags != b.tags || a.name != b.name ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!eq_type(a.children[i], b.children[i])) return false;
  return true;
}

bool eq_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Expr::Kind::BoolLit:
      if (a.bool_value != b.bool_value) return false;
      break;
    case Expr::Kind::BVLit:
      if (a.width != b.width || a.text != b.text) return false;
      break;
    case Expr::Kind::IntLit:
    case Expr::Kind::RealLit:
    case Expr::Kind::EnumLit:
    case Expr::Kind::VarRef:
      if (a.text != b.text) return false;
      break;
    case Expr::Kind::Unary:
    case Expr::Kind::Binary:
      if (a.op != b.op) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!eq_expr(a.args[i], b.args[i])) return false;
  return true;
}

bool eq_stmts(const std::vector<Stmt>& a, const std::vector<Stmt>& b);

bool eq_stmt(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.exprs.size() != b.exprs.size() || a.elifs.size() != b.elifs.size())
    return false;
  for (std::size_t i = 0; i < a.exprs.size(); ++i)
    if (!eq_expr(a.exprs[i], b.exprs[i])) return false;
  for (std::size_t i = 0; i < a.elifs.size(); ++i) {
    if (!eq_expr(a.elifs[i].cond, b.elifs[i].cond)) return false;
    if (!eq_stmts(a.elifs[i].body, b.elifs[i].body)) return false;
  }
  return eq_stmts(a.then_body, b.then_body) && eq_stmts(a.else_body, b.else_body);
}

bool eq_stmts(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eq_stmt(a[i], b[i])) return false;
  return true;
}

bool eq_decls(const DeclSection& a, const DeclSection& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const Decl& x = a.decls[i];
    const Decl& y = b.decls[i];
    if (x.is_hole() != y.is_hole()) return false;
    if (x.is_hole()) continue;
    if (x.name != y.name || x.type.has_value() != y.type.has_value() ||
        x.value.has_value() != y.value.has_value())
      return false;
    if (x.type && !eq_type(*x.type, *y.type)) return false;
    if (x.value && !eq_expr(*x.value, *y.value)) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return eq_expr(a, b); }

bool structurally_equal(const ChildProgram& a, const ChildProgram& b) {
  if (a.module_hole.valid() != b.module_hole.valid()) return false;
  if (a.module_hole.valid()) return true;
  if (a.module_name != b.module_name) return false;
  if (!eq_decls(a.types, b.types) || !eq_decls(a.locals, b.locals) ||
      !eq_decls(a.inputs, b.inputs) || !eq_decls(a.outputs, b.outputs))
    return false;
  if (!eq_stmts(a.init.body, b.init.body) || !eq_stmts(a.next.body, b.next.body)) return false;
  if (a.spec.invariants.size() != b.spec.invariants.size()) return false;
  for (std::size_t i = 0; i < a.spec.invariants.size(); ++i) {
    if (a.spec.invariants[i].name != b.spec.invariants[i].name) return false;
    if (!eq_expr(a.spec.invariants[i].expr, b.spec.invariants[i].expr)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Debug printing

namespace {

std::string type_label(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::Bool: return "bool";
    case TypeExpr::Kind::Int: return "int";
    case TypeExpr::Kind::Real: return "real";
    case TypeExpr::Kind::BV: return "BitVector(" + std::to_string(t.width) + ")";
    case TypeExpr::Kind::Enum: {
      std::string s = "Enum(";
      for (std::size_t i = 0; i < t.tags.size(); ++i) s += (i ? "," : "") + t.tags[i];
      return s + ")";
    }
    case TypeExpr::Kind::Array: return "Array";
    case TypeExpr::Kind::Synonym: return "Synonym " + t.name;
    case TypeExpr::Kind::Hole: return "?? #h" + std::to_string(t.hole.value);
  }
  return "?";
}

std::string expr_label(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::BoolLit: return e.bool_value ? "Bool true" : "Bool false";
    case Expr::Kind::IntLit: return "Int " + e.text;
    case Expr::Kind::RealLit: return "Real " + e.text;
    case Expr::Kind::BVLit: return "BV " + e.text + "bv" + std::to_string(e.width);
    case Expr::Kind::EnumLit: return "EnumLit " + e.text;
    case Expr::Kind::VarRef: return "Var " + e.text;
    case Expr::Kind::Unary: return "Unary " + std::string(op_name(e.op));
    case Expr::Kind::Binary: return "Binary " + std::string(op_name(e.op));
    case Expr::Kind::Ite: return "Ite";
    case Expr::Kind::Select: return "Select";
    case Expr::Kind::Hole: return "?? #h" + std::to_string(e.hole.value);
  }
  return "?";
}

std::string stmt_label(const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::Assign: return "Assign";
    case Stmt::Kind::If:
      return "If elifs=" + std::to_string(s.elifs.size()) +
             " else=" + std::to_string(s.else_body.size());
    case Stmt::Kind::Havoc: return "Havoc";
    case Stmt::Kind::Assume: return "Assume";
    case Stmt::Kind::Assert: return "Assert";
    case Stmt::Kind::Hole: return "?? #h" + std::to_string(s.hole.value);
  }
  return "?";
}

}  // namespace

std::string debug_print(const ParentAst& tree) {
  std::ostringstream out;
  walk(tree.root, [&](const ParentNode& n, int depth) {
    out << std::string(2 * depth, ' ') << parent_kind_name(n.kind);
    if (!n.text.empty()) out << " '" << n.text << "'";
    out << " #" << n.id.value << " @" << n.span.line_start << ":" << n.span.col_start << "\n";
  });
  return out.str();
}

std::string debug_print(const ChildProgram& program) {
  std::ostringstream out;
  int section = 0;
  static constexpr SectionKind kOrder[] = {SectionKind::Types, SectionKind::Locals,
                                           SectionKind::Inputs, SectionKind::Outputs,
                                           SectionKind::Init, SectionKind::Next,
                                           SectionKind::Spec};
  walk(program, [&](const NodeVisit& v) {
    out << std::string(2 * v.depth, ' ');
    std::visit(
        [&](auto* p) {
          using T = std::decay_t<decltype(*p)>;
          if constexpr (std::is_same_v<T, ChildProgram>) {
            out << "Module " << p->module_name;
            if (p->module_hole.valid()) out << " ?? #h" << p->module_hole.value;
          } else if constexpr (std::is_same_v<T, DeclSection> || std::is_same_v<T, StmtSection> ||
                               std::is_same_v<T, SpecSection>) {
            out << "Section " << section_method_name(kOrder[section++]);
          } else if constexpr (std::is_same_v<T, Decl>) {
            if (p->is_hole())
              out << "Decl ?? #h" << p->hole.value;
            else
              out << "Decl " << p->name << (p->value ? " (value)" : "");
          } else if constexpr (std::is_same_v<T, TypeExpr>) {
            out << "Type " << type_label(*p);
          } else if constexpr (std::is_same_v<T, Expr>) {
            out << expr_label(*p);
          } else if constexpr (std::is_same_v<T, Stmt>) {
            out << stmt_label(*p);
          } else if constexpr (std::is_same_v<T, Invariant>) {
            out << "Invariant " << p->name;
          }
        },
        v.node);
    out << " #" << node_id(v.node).value << "\n";
  });
  return out.str();
}

}  // namespace ucgen
