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

#include "ucgen/constraints.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace ucgen {

std::string_view check_tag_name(CheckTag t) {
  switch (t) {
    case CheckTag::S1: return "S1";
    case CheckTag::S2: return "S2";
    case CheckTag::S3: return "S3";
    case CheckTag::S4: return "S4";
    case CheckTag::S5: return "S5";
    case CheckTag::S6: return "S6";
    case CheckTag::HoleBinding: return "hole";
    case CheckTag::Keep: return "keep";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Atoms, literals, clauses

Atom Atom::constant(bool v) {
  Atom a;
  a.kind = Kind::Const;
  a.value = v;
  return a;
}

Atom Atom::eq(TypeTerm x, TypeTerm y) {
  Atom a;
  a.kind = Kind::Eq;
  if (y < x) std::swap(x, y);
  a.lhs = std::move(x);
  a.rhs = std::move(y);
  return a;
}

Atom Atom::tester(TypeCtor c, TypeTerm t) {
  Atom a;
  a.kind = Kind::Tester;
  a.ctor = c;
  a.lhs = std::move(t);
  return a;
}

Atom Atom::holed(NodeId n) {
  Atom a;
  a.kind = Kind::Holed;
  a.node = n;
  return a;
}

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Const: return value ? "true" : "false";
    case Kind::Eq: return "Eq(" + lhs.to_string() + ", " + rhs.to_string() + ")";
    case Kind::Tester: return "is_" + std::string(ctor_name(ctor)) + "(" + lhs.to_string() + ")";
    case Kind::Holed: return "Holed(#" + std::to_string(node.value) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case Atom::Kind::Const: return a.value <=> b.value;
    case Atom::Kind::Eq:
      if (auto c = a.lhs <=> b.lhs; c != 0) return c;
      return a.rhs <=> b.rhs;
    case Atom::Kind::Tester:
      if (auto c = a.ctor <=> b.ctor; c != 0) return c;
      return a.lhs <=> b.lhs;
    case Atom::Kind::Holed: return a.node <=> b.node;
  }
  return std::strong_ordering::equal;
}

std::string Literal::to_string() const { return (positive ? "" : "!") + atom.to_string(); }

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.positive <=> b.positive;
}

std::string Clause::to_string() const {
  std::string out;
  if (literals.empty()) return "false";
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += " | ";
    out += literals[i].to_string();
  }
  return out;
}

std::optional<int> ClauseSet::tvar_of(NodeId owner, std::string_view role) const {
  for (std::size_t i = 0; i < tvar_table.size(); ++i) {
    if (tvar_table[i].owner_node == owner && tvar_table[i].role == role) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> ClauseSet::tvar_of_hole(HoleId hole) const {
  for (std::size_t i = 0; i < tvar_table.size(); ++i) {
    if (tvar_table[i].owner_hole == hole && hole.valid()) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::size_t ClauseSet::soft_count() const {
  return static_cast<std::size_t>(
      std::count_if(clauses.begin(), clauses.end(), [](const Clause& c) { return c.soft(); }));
}

int ClauseSet::total_soft_weight() const {
  int w = 0;
  for (const auto& c : clauses)
    if (c.soft()) w += c.weight;
  return w;
}

std::string ClauseSet::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const Clause& c = clauses[i];
    out << '[' << i << "] " << (c.hard ? "hard" : "soft");
    if (c.soft()) out << " w=" << c.weight;
    out << ' ' << check_tag_name(c.check) << " #" << c.origin.value << " : " << c.to_string()
        << '\n';
  }
  return out.str();
}

std::optional<WeightsMode> parse_weights_mode(std::string_view s) {
  if (s == "depth") return WeightsMode::Depth;
  if (s == "inverse-depth") return WeightsMode::InverseDepth;
  if (s == "uniform") return WeightsMode::Uniform;
  return std::nullopt;
}

std::string_view weights_mode_name(WeightsMode m) {
  switch (m) {
    case WeightsMode::Depth: return "depth";
    case WeightsMode::InverseDepth: return "inverse-depth";
    case WeightsMode::Uniform: return "uniform";
  }
  return "?";
}

namespace {

int weight_for(int depth, int max_d, WeightsMode mode) {
  switch (mode) {
    case WeightsMode::Depth: return 1 + depth;
    case WeightsMode::InverseDepth: return 1 + (max_d - depth);
    case WeightsMode::Uniform: return 1;
  }
  return 1;
}

}  // namespace

int clause_weight(NodeId node, const ChildProgram& tree, WeightsMode mode) {
  int d = depth_of(tree, node);
  return weight_for(d, mode == WeightsMode::InverseDepth ? max_depth(tree) : 0, mode);
}

std::string decl_constant(std::size_t i) { return "$decl" + std::to_string(i); }

// ---------------------------------------------------------------------------
// Generation

namespace {

struct NameInfo {
  std::vector<const Decl*> decls;
  std::vector<SectionKind> sections;
  int tvar = -1;
  int sel = -1;
};

bool any_type_hole(const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::Hole) return true;
  return std::any_of(t.children.begin(), t.children.end(), any_type_hole);
}

class Generator {
 public:
  Generator(const ChildProgram& p, WeightsMode mode) : p_(p), mode_(mode) {}

  ClauseSet run() {
    collect_names();
    if (p_.module_hole.valid()) return finish();

    for (const Decl& d : p_.types.decls) visit_decl(d, syns_);
    for (SectionKind s : kVariableSections)
      for (const Decl& d : p_.decl_section(s).decls) visit_decl(d, vars_);
    for (const Stmt& s : p_.init.body) visit_stmt(s);
    for (const Stmt& s : p_.next.body) visit_stmt(s);
    for (const Invariant& inv : p_.spec.invariants) visit_expr(inv.expr, TypeTerm::boolean(), CheckTag::S6);
    return finish();
  }

 private:
  int new_tvar(NodeId owner, std::string role, std::string label = {}) {
    TVarInfo info;
    info.owner_node = owner;
    info.role = std::move(role);
    info.label = std::move(label);
    out_.tvar_table.push_back(std::move(info));
    return static_cast<int>(out_.tvar_table.size() - 1);
  }

  int hole_tvar(HoleId h) {
    if (auto t = out_.tvar_of_hole(h)) return *t;
    TVarInfo info;
    info.owner_hole = h;
    info.role = "hole";
    out_.tvar_table.push_back(std::move(info));
    return static_cast<int>(out_.tvar_table.size() - 1);
  }

  void collect_names() {
    auto scan_types = [&](const Decl& d) {
      if (d.is_hole()) {
        decl_hole_ = true;
        return;
      }
      if (d.type && any_type_hole(*d.type)) type_hole_ = true;
      if (d.type) collect_enums(*d.type);
    };
    for (const Decl& d : p_.types.decls) {
      scan_types(d);
      if (d.is_hole()) continue;
      NameInfo& info = syns_[d.name];
      info.decls.push_back(&d);
      info.sections.push_back(SectionKind::Types);
    }
    for (SectionKind s : kVariableSections) {
      for (const Decl& d : p_.decl_section(s).decls) {
        scan_types(d);
        if (d.is_hole()) continue;
        NameInfo& info = vars_[d.name];
        info.decls.push_back(&d);
        info.sections.push_back(s);
      }
    }
    // TVars in declaration pre-order.
    auto make = [&](std::map<std::string, NameInfo>& names, std::map<std::string, int>& table,
                    const Decl& d) {
      NameInfo& info = names[d.name];
      if (info.tvar >= 0) return;
      info.tvar = new_tvar(d.id, "type", d.name);
      table[d.name] = info.tvar;
      bool input = std::find(info.sections.begin(), info.sections.end(), SectionKind::Inputs) !=
                   info.sections.end();
      if (info.decls.size() > 1 || input) info.sel = new_tvar(d.id, "sel", d.name);
    };
    for (const Decl& d : p_.types.decls)
      if (!d.is_hole()) make(syns_, out_.syn_tvars, d);
    for (SectionKind s : kVariableSections)
      for (const Decl& d : p_.decl_section(s).decls)
        if (!d.is_hole()) make(vars_, out_.var_tvars, d);
  }

  void collect_enums(const TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::Enum) {
      TypeTerm term = TypeTerm::enumeration(t.tags);
      for (const auto& tag : term.tags()) {
        auto& list = enum_terms_[tag];
        if (std::find(list.begin(), list.end(), term) == list.end()) list.push_back(term);
      }
    }
    for (const auto& c : t.children) collect_enums(c);
  }

  bool lenient() const { return decl_hole_ || type_hole_; }

  // Appends a clause after constant folding; guards are added here.
  void emit(std::vector<Literal> lits, NodeId origin, CheckTag tag,
            const std::vector<NodeId>& extra_guards = {}) {
    std::vector<Literal> kept;
    for (auto& l : lits) {
      const Atom& a = l.atom;
      std::optional<bool> v;
      if (a.kind == Atom::Kind::Const) {
        v = a.value;
      } else if (a.kind == Atom::Kind::Eq) {
        if (a.lhs == a.rhs) v = true;
        else if (a.lhs.is_ground() && a.rhs.is_ground()) v = false;
      } else if (a.kind == Atom::Kind::Tester) {
        if (!a.lhs.is_var()) v = a.lhs.ctor() == a.ctor;
      }
      if (v) {
        if (*v == l.positive) return;  // clause is valid
        continue;
      }
      kept.push_back(std::move(l));
    }
    for (NodeId g : guards_) kept.push_back(pos(Atom::holed(g)));
    for (NodeId g : extra_guards) kept.push_back(pos(Atom::holed(g)));
    Clause c;
    c.literals = std::move(kept);
    c.hard = true;
    c.origin = origin;
    c.check = tag;
    raw_.push_back(std::move(c));
  }

  void emit1(Literal l, NodeId origin, CheckTag tag) { emit({std::move(l)}, origin, tag); }

  std::vector<Literal> numeric(const TypeTerm& t) {
    return {pos(Atom::tester(TypeCtor::Int, t)), pos(Atom::tester(TypeCtor::Real, t)),
            pos(Atom::tester(TypeCtor::BV, t))};
  }

  void visit_decl(const Decl& d, std::map<std::string, NameInfo>& names) {
    if (d.is_hole()) return;
    NameInfo& info = names[d.name];
    guards_.push_back(d.id);
    if (info.sel >= 0) {
      auto idx = static_cast<std::size_t>(
          std::find(info.decls.begin(), info.decls.end(), &d) - info.decls.begin());
      emit1(pos(Atom::eq(TypeTerm::var(info.sel), TypeTerm::synonym(decl_constant(idx)))), d.id,
            CheckTag::S1);
    }
    TypeTerm t = TypeTerm::var(info.tvar);
    if (d.type) visit_type(*d.type, t);
    else if (d.value) visit_expr(*d.value, t, CheckTag::S2);
    guards_.pop_back();
  }

  void visit_type(const TypeExpr& t, const TypeTerm& expected) {
    if (t.kind == TypeExpr::Kind::Hole) {
      emit1(pos(Atom::eq(TypeTerm::var(hole_tvar(t.hole)), expected)), t.id, CheckTag::HoleBinding);
      return;
    }
    guards_.push_back(t.id);
    subterm_nodes_.insert(t.id);
    std::optional<TypeTerm> term;
    switch (t.kind) {
      case TypeExpr::Kind::Bool: term = TypeTerm::boolean(); break;
      case TypeExpr::Kind::Int: term = TypeTerm::integer(); break;
      case TypeExpr::Kind::Real: term = TypeTerm::real(); break;
      case TypeExpr::Kind::BV: term = TypeTerm::bv(t.width); break;
      case TypeExpr::Kind::Enum: term = TypeTerm::enumeration(t.tags); break;
      case TypeExpr::Kind::Array: {
        std::vector<TypeTerm> parts;
        for (const auto& c : t.children) {
          int v = new_tvar(c.id, "type");
          parts.push_back(TypeTerm::var(v));
        }
        if (parts.size() == 2) term = TypeTerm::array(parts[0], parts[1]);
        for (std::size_t i = 0; i < t.children.size() && i < parts.size(); ++i)
          visit_type(t.children[i], parts[i]);
        break;
      }
      case TypeExpr::Kind::Synonym: {
        auto it = out_.syn_tvars.find(t.name);
        if (it != out_.syn_tvars.end()) term = TypeTerm::var(it->second);
        else if (!lenient()) emit1(pos(Atom::constant(false)), t.id, CheckTag::S2);
        break;
      }
      case TypeExpr::Kind::Hole: break;
    }
    if (term) emit1(pos(Atom::eq(expected, *term)), t.id, CheckTag::S2);
    guards_.pop_back();
  }

  void visit_expr(const Expr& e, const TypeTerm& expected, CheckTag tag) {
    if (e.kind == Expr::Kind::Hole) {
      emit1(pos(Atom::eq(TypeTerm::var(hole_tvar(e.hole)), expected)), e.id, CheckTag::HoleBinding);
      return;
    }
    guards_.push_back(e.id);
    subterm_nodes_.insert(e.id);
    const TypeTerm boolean = TypeTerm::boolean();
    switch (e.kind) {
      case Expr::Kind::BoolLit: emit1(pos(Atom::eq(expected, boolean)), e.id, tag); break;
      case Expr::Kind::IntLit: emit1(pos(Atom::eq(expected, TypeTerm::integer())), e.id, tag); break;
      case Expr::Kind::RealLit: emit1(pos(Atom::eq(expected, TypeTerm::real())), e.id, tag); break;
      case Expr::Kind::BVLit: emit1(pos(Atom::eq(expected, TypeTerm::bv(e.width))), e.id, tag); break;
      case Expr::Kind::EnumLit: {
        auto it = enum_terms_.find(e.text);
        if (it != enum_terms_.end()) {
          std::vector<Literal> lits;
          for (const auto& t : it->second) lits.push_back(pos(Atom::eq(expected, t)));
          emit(std::move(lits), e.id, tag);
        } else if (!lenient()) {
          emit1(pos(Atom::constant(false)), e.id, tag);
        }
        break;
      }
      case Expr::Kind::VarRef: {
        auto it = out_.var_tvars.find(e.text);
        if (it != out_.var_tvars.end()) emit1(pos(Atom::eq(expected, TypeTerm::var(it->second))), e.id, tag);
        else if (!decl_hole_) emit1(pos(Atom::constant(false)), e.id, tag);
        break;
      }
      case Expr::Kind::Unary:
        if (e.op == Op::Not) {
          emit1(pos(Atom::eq(expected, boolean)), e.id, tag);
          visit_expr(e.args[0], boolean, CheckTag::S3);
        } else {
          emit(numeric(expected), e.id, tag);
          visit_expr(e.args[0], expected, CheckTag::S3);
        }
        break;
      case Expr::Kind::Binary: visit_binary(e, expected, tag); break;
      case Expr::Kind::Ite:
        visit_expr(e.args[0], boolean, CheckTag::S6);
        visit_expr(e.args[1], expected, CheckTag::S3);
        visit_expr(e.args[2], expected, CheckTag::S3);
        break;
      case Expr::Kind::Select: {
        TypeTerm idx = TypeTerm::var(new_tvar(e.id, "index"));
        visit_expr(e.args[0], TypeTerm::array(idx, expected), CheckTag::S3);
        visit_expr(e.args[1], idx, CheckTag::S3);
        break;
      }
      case Expr::Kind::Hole: break;
    }
    guards_.pop_back();
  }

  void visit_binary(const Expr& e, const TypeTerm& expected, CheckTag tag) {
    const TypeTerm boolean = TypeTerm::boolean();
    const TypeTerm integer = TypeTerm::integer();
    auto both = [&](const TypeTerm& t) {
      visit_expr(e.args[0], t, CheckTag::S3);
      visit_expr(e.args[1], t, CheckTag::S3);
    };
    switch (e.op) {
      case Op::And:
      case Op::Or:
      case Op::Xor:
      case Op::Implies:
        emit1(pos(Atom::eq(expected, boolean)), e.id, tag);
        both(boolean);
        break;
      case Op::Add:
      case Op::Sub:
      case Op::Mul:
        emit(numeric(expected), e.id, tag);
        both(expected);
        break;
      case Op::Div:
      case Op::Mod:
        emit1(pos(Atom::eq(expected, integer)), e.id, tag);
        both(integer);
        break;
      case Op::BvAnd:
      case Op::BvOr:
      case Op::BvXor:
      case Op::Shl:
      case Op::Lshr:
        emit1(pos(Atom::tester(TypeCtor::BV, expected)), e.id, tag);
        both(expected);
        break;
      case Op::Concat: {
        emit1(pos(Atom::tester(TypeCtor::BV, expected)), e.id, tag);
        TypeTerm l = TypeTerm::var(new_tvar(e.id, "concat_l"));
        TypeTerm r = TypeTerm::var(new_tvar(e.id, "concat_r"));
        emit1(pos(Atom::tester(TypeCtor::BV, l)), e.id, CheckTag::S3);
        emit1(pos(Atom::tester(TypeCtor::BV, r)), e.id, CheckTag::S3);
        visit_expr(e.args[0], l, CheckTag::S3);
        visit_expr(e.args[1], r, CheckTag::S3);
        break;
      }
      case Op::Eq:
      case Op::Ne:
      case Op::Lt:
      case Op::Le:
      case Op::Gt:
      case Op::Ge: {
        TypeTerm alpha = TypeTerm::var(new_tvar(e.id, "alpha"));
        emit1(pos(Atom::eq(expected, boolean)), e.id, tag);
        if (e.op != Op::Eq && e.op != Op::Ne) emit(numeric(alpha), e.id, CheckTag::S3);
        both(alpha);
        break;
      }
      case Op::Not:
      case Op::Neg: break;
    }
  }

  // Root variable of an assignment target and the nodes on the way to it.
  const Expr* lvalue_root(const Expr& e, std::vector<NodeId>& chain) {
    const Expr* cur = &e;
    while (true) {
      chain.push_back(cur->id);
      if (cur->kind == Expr::Kind::VarRef) return cur;
      if (cur->kind == Expr::Kind::Select && !cur->args.empty()) {
        cur = &cur->args[0];
        continue;
      }
      return nullptr;
    }
  }

  void check_writable(const Stmt& s, const Expr& target) {
    std::vector<NodeId> chain;
    const Expr* root = lvalue_root(target, chain);
    if (!root) return;
    auto it = vars_.find(root->text);
    if (it == vars_.end() || it->second.sel < 0) return;
    const NameInfo& info = it->second;
    std::vector<Literal> lits;
    for (std::size_t j = 0; j < info.decls.size(); ++j) {
      Atom a = Atom::eq(TypeTerm::var(info.sel), TypeTerm::synonym(decl_constant(j)));
      if (info.sections[j] == SectionKind::Inputs) lits.push_back(neg(a));
      else lits.push_back(pos(a));
    }
    emit(std::move(lits), s.id, CheckTag::S5, chain);
  }

  void visit_stmt(const Stmt& s) {
    if (s.kind == Stmt::Kind::Hole) return;
    guards_.push_back(s.id);
    const TypeTerm boolean = TypeTerm::boolean();
    switch (s.kind) {
      case Stmt::Kind::Assign: {
        TypeTerm alpha = TypeTerm::var(new_tvar(s.id, "alpha"));
        visit_expr(s.exprs[0], alpha, CheckTag::S4);
        visit_expr(s.exprs[1], alpha, CheckTag::S4);
        check_writable(s, s.exprs[0]);
        break;
      }
      case Stmt::Kind::Havoc: {
        TypeTerm alpha = TypeTerm::var(new_tvar(s.id, "alpha"));
        visit_expr(s.exprs[0], alpha, CheckTag::S3);
        check_writable(s, s.exprs[0]);
        break;
      }
      case Stmt::Kind::If:
        visit_expr(s.exprs[0], boolean, CheckTag::S6);
        for (const Stmt& c : s.then_body) visit_stmt(c);
        for (const ElifClause& el : s.elifs) {
          visit_expr(el.cond, boolean, CheckTag::S6);
          for (const Stmt& c : el.body) visit_stmt(c);
        }
        for (const Stmt& c : s.else_body) visit_stmt(c);
        break;
      case Stmt::Kind::Assume:
      case Stmt::Kind::Assert: visit_expr(s.exprs[0], boolean, CheckTag::S6); break;
      case Stmt::Kind::Hole: break;
    }
    guards_.pop_back();
  }

  ClauseSet finish() {
    std::set<NodeId> origins;
    for (const Clause& c : raw_)
      if (c.check != CheckTag::HoleBinding) origins.insert(c.origin);
    // An expression or type whose own check folded away can still be holed
    // to cover the clauses beneath it.
    for (const Clause& c : raw_)
      for (const Literal& l : c.literals)
        if (l.atom.kind == Atom::Kind::Holed && subterm_nodes_.count(l.atom.node))
          origins.insert(l.atom.node);

    std::set<std::vector<Literal>> seen;
    for (Clause& c : raw_) {
      std::vector<Literal> lits;
      for (auto& l : c.literals) {
        if (l.atom.kind == Atom::Kind::Holed && !origins.count(l.atom.node)) continue;
        lits.push_back(std::move(l));
      }
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      if (!seen.insert(lits).second) continue;
      c.literals = std::move(lits);
      out_.clauses.push_back(std::move(c));
    }

    int max_d = 0;
    std::vector<std::pair<NodeId, int>> order;
    walk(p_, [&](const NodeVisit& v) {
      max_d = std::max(max_d, v.depth);
      NodeId id = node_id(v.node);
      if (origins.count(id)) order.emplace_back(id, v.depth);
    });
    for (const auto& [id, depth] : order) {
      Clause c;
      c.literals = {neg(Atom::holed(id))};
      c.hard = false;
      c.weight = weight_for(depth, max_d, mode_);
      c.origin = id;
      c.check = CheckTag::Keep;
      out_.clauses.push_back(std::move(c));
    }
    return std::move(out_);
  }

  const ChildProgram& p_;
  WeightsMode mode_;
  ClauseSet out_;
  std::vector<Clause> raw_;
  std::vector<NodeId> guards_;
  std::set<NodeId> subterm_nodes_;
  std::map<std::string, NameInfo> vars_;
  std::map<std::string, NameInfo> syns_;
  std::map<std::string, std::vector<TypeTerm>> enum_terms_;
  bool decl_hole_ = false;
  bool type_hole_ = false;
};

}  // namespace

ClauseSet generate_clauses(const ChildProgram& p, WeightsMode mode) {
  return Generator(p, mode).run();
}

}  // namespace ucgen
