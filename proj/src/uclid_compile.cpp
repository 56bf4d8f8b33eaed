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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ucgen/constraints.hpp"
#include "ucgen/maxsmt.hpp"
#include "ucgen/repair.hpp"
#include "ucgen/uclid.hpp"

namespace ucgen {

namespace {

const std::set<std::string, std::less<>>& uclid_keywords() {
  static const std::set<std::string, std::less<>> kw = {
      "module", "type", "var", "input", "output", "const", "function", "define", "procedure",
      "returns", "requires", "ensures", "modifies", "invariant", "property", "axiom", "assume",
      "assert", "havoc", "call", "init", "next", "control", "if", "then", "else", "case", "esac",
      "default", "for", "in", "range", "while", "boolean", "integer", "real", "bv", "enum",
      "record", "true", "false", "forall", "exists", "Lambda", "old", "history", "instance",
      "sharedvar", "synthesis", "grammar", "import", "step", "hyperinvariant", "oracle"};
  return kw;
}

bool looks_like_bv_type(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "bv") return false;
  return std::all_of(s.begin() + 2, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string uclid_identifier(const std::string& name) {
  if (uclid_keywords().count(name) || looks_like_bv_type(name)) return name + "_v";
  return name;
}

namespace {

class Translator {
 public:
  explicit Translator(const std::map<std::string, TypeTerm>& value_types)
      : value_types_(value_types) {}

  UclidModule run(const ChildProgram& p, const CompileOptions& opts) {
    if (count_holes(p) > 0)
      throw CompileError(CompileError::Kind::HoleRemaining,
                         "program still has " + std::to_string(count_holes(p)) + " hole(s)");
    UclidModule m;
    m.name = uclid_identifier(p.module_name);
    auto decls = [&](const DeclSection& s, std::vector<UclidDecl>& out) {
      for (const Decl& d : s.decls) out.push_back({uclid_identifier(d.name), decl_type(d)});
    };
    decls(p.types, m.type_decls);
    decls(p.locals, m.var_decls);
    decls(p.inputs, m.input_decls);
    decls(p.outputs, m.output_decls);
    for (const Stmt& s : p.init.body) m.init_block.push_back(stmt(s));
    for (const Stmt& s : p.next.body) m.step_body.push_back(stmt(s));
    for (const UclidStmt& s : m.step_body) collect_modifies(s, m.modifies);
    for (const Invariant& inv : p.spec.invariants)
      m.invariants.push_back({uclid_identifier(inv.name), expr(inv.expr)});
    m.control_unroll = opts.control_unroll;
    return m;
  }

 private:
  UclidType decl_type(const Decl& d) {
    if (d.type) return type(*d.type);
    auto it = value_types_.find(d.name);
    if (it != value_types_.end()) {
      if (auto te = type_expr_of(it->second, ChildProgram{})) return type(*te);
    }
    if (d.value) {
      switch (d.value->kind) {
        case Expr::Kind::BoolLit: return simple(UclidType::Kind::Boolean);
        case Expr::Kind::IntLit: return simple(UclidType::Kind::Integer);
        case Expr::Kind::RealLit: return simple(UclidType::Kind::Real);
        case Expr::Kind::BVLit: {
          UclidType t = simple(UclidType::Kind::BV);
          t.width = d.value->width;
          return t;
        }
        default: break;
      }
    }
    throw CompileError(CompileError::Kind::Untypeable, "no type for declaration of " + d.name);
  }

  static UclidType simple(UclidType::Kind k) {
    UclidType t;
    t.kind = k;
    return t;
  }

  UclidType type(const TypeExpr& t) {
    UclidType u;
    switch (t.kind) {
      case TypeExpr::Kind::Bool: u.kind = UclidType::Kind::Boolean; break;
      case TypeExpr::Kind::Int: u.kind = UclidType::Kind::Integer; break;
      case TypeExpr::Kind::Real: u.kind = UclidType::Kind::Real; break;
      case TypeExpr::Kind::BV:
        u.kind = UclidType::Kind::BV;
        u.width = t.width;
        break;
      case TypeExpr::Kind::Enum:
        u.kind = UclidType::Kind::Enum;
        for (const auto& tag : t.tags) u.tags.push_back(uclid_identifier(tag));
        break;
      case TypeExpr::Kind::Array:
        u.kind = UclidType::Kind::Array;
        for (const auto& c : t.children) u.children.push_back(type(c));
        break;
      case TypeExpr::Kind::Synonym:
        u.kind = UclidType::Kind::Named;
        u.name = uclid_identifier(t.name);
        break;
      case TypeExpr::Kind::Hole:
        throw CompileError(CompileError::Kind::HoleRemaining, "type hole");
    }
    return u;
  }

  static std::string_view op_text(Op op) {
    switch (op) {
      case Op::Not: return "!";
      case Op::Neg: return "-";
      case Op::And: return "&&";
      case Op::Or: return "||";
      case Op::Xor: return "!=";
      case Op::Implies: return "==>";
      case Op::Eq: return "==";
      case Op::Ne: return "!=";
      case Op::Lt: return "<";
      case Op::Le: return "<=";
      case Op::Gt: return ">";
      case Op::Ge: return ">=";
      case Op::Add: return "+";
      case Op::Sub: return "-";
      case Op::Mul: return "*";
      case Op::Div: return "/";
      case Op::Mod: return "%";
      case Op::BvAnd: return "&";
      case Op::BvOr: return "|";
      case Op::BvXor: return "^";
      case Op::Shl: return "<<";
      case Op::Lshr: return ">>>";
      case Op::Concat: return "++";
    }
    return "?";
  }

  UclidExpr expr(const Expr& e) {
    UclidExpr u;
    switch (e.kind) {
      case Expr::Kind::BoolLit:
        u.kind = UclidExpr::Kind::BoolLit;
        u.value = e.bool_value;
        break;
      case Expr::Kind::IntLit:
        u.kind = UclidExpr::Kind::IntLit;
        u.text = e.text;
        break;
      case Expr::Kind::RealLit:
        u.kind = UclidExpr::Kind::RealLit;
        u.text = e.text;
        break;
      case Expr::Kind::BVLit:
        u.kind = UclidExpr::Kind::BVLit;
        u.text = e.text;
        u.width = e.width;
        break;
      case Expr::Kind::EnumLit:
      case Expr::Kind::VarRef:
        u.kind = UclidExpr::Kind::Id;
        u.text = uclid_identifier(e.text);
        break;
      case Expr::Kind::Unary:
        u.kind = UclidExpr::Kind::Unary;
        u.text = op_text(e.op);
        u.args.push_back(expr(e.args[0]));
        break;
      case Expr::Kind::Binary:
        u.kind = UclidExpr::Kind::Binary;
        u.text = op_text(e.op);
        u.args.push_back(expr(e.args[0]));
        u.args.push_back(expr(e.args[1]));
        break;
      case Expr::Kind::Ite:
        u.kind = UclidExpr::Kind::Ite;
        for (const auto& a : e.args) u.args.push_back(expr(a));
        break;
      case Expr::Kind::Select:
        u.kind = UclidExpr::Kind::Select;
        u.args.push_back(expr(e.args[0]));
        u.args.push_back(expr(e.args[1]));
        break;
      case Expr::Kind::Hole: throw CompileError(CompileError::Kind::HoleRemaining, "expression hole");
    }
    return u;
  }

  std::vector<UclidStmt> body(const std::vector<Stmt>& ss) {
    std::vector<UclidStmt> out;
    for (const Stmt& s : ss) out.push_back(stmt(s));
    return out;
  }

  UclidStmt stmt(const Stmt& s) {
    UclidStmt u;
    switch (s.kind) {
      case Stmt::Kind::Assign:
        u.kind = UclidStmt::Kind::Assign;
        u.exprs = {expr(s.exprs[0]), expr(s.exprs[1])};
        break;
      case Stmt::Kind::Havoc:
        if (s.exprs[0].kind != Expr::Kind::VarRef)
          throw CompileError(CompileError::Kind::Untypeable, "havoc target must be a variable");
        u.kind = UclidStmt::Kind::Havoc;
        u.exprs = {expr(s.exprs[0])};
        break;
      case Stmt::Kind::Assume:
      case Stmt::Kind::Assert:
        u.kind = s.kind == Stmt::Kind::Assume ? UclidStmt::Kind::Assume : UclidStmt::Kind::Assert;
        u.exprs = {expr(s.exprs[0])};
        break;
      case Stmt::Kind::If: {
        u.kind = UclidStmt::Kind::If;
        u.exprs = {expr(s.exprs[0])};
        u.then_body = body(s.then_body);
        // elif chains become nested if/else
        std::vector<UclidStmt> tail = body(s.else_body);
        for (auto it = s.elifs.rbegin(); it != s.elifs.rend(); ++it) {
          UclidStmt nested;
          nested.kind = UclidStmt::Kind::If;
          nested.exprs = {expr(it->cond)};
          nested.then_body = body(it->body);
          nested.else_body = std::move(tail);
          tail = {std::move(nested)};
        }
        u.else_body = std::move(tail);
        break;
      }
      case Stmt::Kind::Hole: throw CompileError(CompileError::Kind::HoleRemaining, "statement hole");
    }
    return u;
  }

  static void collect_modifies(const UclidStmt& s, std::vector<std::string>& out) {
    if (s.kind == UclidStmt::Kind::Assign || s.kind == UclidStmt::Kind::Havoc) {
      const UclidExpr* e = &s.exprs[0];
      while (e->kind == UclidExpr::Kind::Select) e = &e->args[0];
      if (e->kind == UclidExpr::Kind::Id &&
          std::find(out.begin(), out.end(), e->text) == out.end())
        out.push_back(e->text);
    }
    for (const auto& c : s.then_body) collect_modifies(c, out);
    for (const auto& c : s.else_body) collect_modifies(c, out);
  }

  const std::map<std::string, TypeTerm>& value_types_;
};

}  // namespace

UclidModule compile_unchecked(const ChildProgram& p, const CompileOptions& opts) {
  std::map<std::string, TypeTerm> none;
  return Translator(none).run(p, opts);
}

UclidModule compile(const ChildProgram& p, const CompileOptions& opts) {
  if (p.module_hole.valid() || count_holes(p) > 0)
    throw CompileError(CompileError::Kind::HoleRemaining,
                       "program still has " + std::to_string(count_holes(p)) + " hole(s)");
  ClauseSet cs = generate_clauses(p);
  SolveResult r = solve_maxsmt(cs);
  if (!r.falsified.empty()) {
    std::ostringstream msg;
    msg << "static checks fail at";
    for (std::size_t i : r.falsified) {
      NodeId n = cs.clauses[i].origin;
      auto ref = find_node(p, n);
      Span sp = ref ? node_span(*ref) : Span{};
      msg << " " << sp.line_start << ":" << sp.col_start;
    }
    throw CompileError(CompileError::Kind::Untypeable, msg.str());
  }
  std::map<std::string, TypeTerm> value_types;
  for (SectionKind s : kVariableSections) {
    for (const Decl& d : p.decl_section(s).decls) {
      if (d.type || !d.value) continue;
      int tv = cs.var_tvars.at(d.name);
      if (!r.model.is_forced(tv) || !type_expr_of(r.model.values.at(tv), p))
        throw CompileError(CompileError::Kind::Untypeable, "cannot determine the type of " + d.name);
      value_types.emplace(d.name, r.model.values.at(tv));
    }
  }
  return Translator(value_types).run(p, opts);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string print_type(const UclidType& t) {
  switch (t.kind) {
    case UclidType::Kind::Boolean: return "boolean";
    case UclidType::Kind::Integer: return "integer";
    case UclidType::Kind::Real: return "real";
    case UclidType::Kind::BV: return "bv" + std::to_string(t.width);
    case UclidType::Kind::Enum: {
      std::string s = "enum { ";
      for (std::size_t i = 0; i < t.tags.size(); ++i) s += (i ? ", " : "") + t.tags[i];
      return s + " }";
    }
    case UclidType::Kind::Array:
      return "[" + print_type(t.children[0]) + "]" + print_type(t.children[1]);
    case UclidType::Kind::Named: return t.name;
  }
  return "integer";
}

std::string print_expr(const UclidExpr& e, bool top = false) {
  switch (e.kind) {
    case UclidExpr::Kind::BoolLit: return e.value ? "true" : "false";
    case UclidExpr::Kind::IntLit:
    case UclidExpr::Kind::RealLit:
    case UclidExpr::Kind::Id: return e.text;
    case UclidExpr::Kind::BVLit: return e.text + "bv" + std::to_string(e.width);
    case UclidExpr::Kind::Unary: return e.text + print_expr(e.args[0]);
    case UclidExpr::Kind::Binary: {
      std::string s = print_expr(e.args[0]) + " " + e.text + " " + print_expr(e.args[1]);
      return top ? s : "(" + s + ")";
    }
    case UclidExpr::Kind::Ite: {
      std::string s = "if (" + print_expr(e.args[0], true) + ") then " + print_expr(e.args[1]) +
                      " else " + print_expr(e.args[2]);
      return top ? s : "(" + s + ")";
    }
    case UclidExpr::Kind::Select: return print_expr(e.args[0]) + "[" + print_expr(e.args[1]) + "]";
  }
  return "";
}

void print_stmts(std::ostringstream& out, const std::vector<UclidStmt>& body, int indent);

void print_stmt(std::ostringstream& out, const UclidStmt& s, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  switch (s.kind) {
    case UclidStmt::Kind::Assign:
      out << pad << print_expr(s.exprs[0]) << " = " << print_expr(s.exprs[1]) << ";\n";
      break;
    case UclidStmt::Kind::Havoc: out << pad << "havoc " << print_expr(s.exprs[0]) << ";\n"; break;
    case UclidStmt::Kind::Assume:
      out << pad << "assume (" << print_expr(s.exprs[0], true) << ");\n";
      break;
    case UclidStmt::Kind::Assert:
      out << pad << "assert (" << print_expr(s.exprs[0], true) << ");\n";
      break;
    case UclidStmt::Kind::If:
      out << pad << "if (" << print_expr(s.exprs[0], true) << ") {\n";
      print_stmts(out, s.then_body, indent + 2);
      if (!s.else_body.empty()) {
        out << pad << "} else {\n";
        print_stmts(out, s.else_body, indent + 2);
      }
      out << pad << "}\n";
      break;
  }
}

void print_stmts(std::ostringstream& out, const std::vector<UclidStmt>& body, int indent) {
  for (const auto& s : body) print_stmt(out, s, indent);
}

}  // namespace

std::string print_uclid(const UclidModule& m) {
  std::ostringstream out;
  out << "module " << m.name << " {\n";
  bool any_decl = false;
  for (const auto& d : m.type_decls) {
    out << "  type " << d.name << " = " << print_type(d.type) << ";\n";
    any_decl = true;
  }
  auto decls = [&](const char* kw, const std::vector<UclidDecl>& ds) {
    for (const auto& d : ds) {
      out << "  " << kw << " " << d.name << " : " << print_type(d.type) << ";\n";
      any_decl = true;
    }
  };
  decls("var", m.var_decls);
  decls("input", m.input_decls);
  decls("output", m.output_decls);
  if (any_decl) out << "\n";

  out << "  init {\n";
  print_stmts(out, m.init_block, 4);
  out << "  }\n\n";

  out << "  procedure step()\n";
  for (const auto& v : m.modifies) out << "    modifies " << v << ";\n";
  out << "  {\n";
  print_stmts(out, m.step_body, 4);
  out << "  }\n";

  if (m.has_next) out << "\n  next {\n    call step();\n  }\n";
  if (!m.invariants.empty()) out << "\n";
  for (const auto& inv : m.invariants)
    out << "  invariant " << inv.name << " : " << print_expr(inv.expr) << ";\n";
  if (m.control_unroll) {
    out << "\n  control {\n    v = unroll(" << *m.control_unroll << ");\n    check;\n"
        << "    print_results;\n  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ucgen
