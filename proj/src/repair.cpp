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

#include "ucgen/repair.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace ucgen {

namespace {

class Holer {
 public:
  Holer(std::map<NodeId, CheckTag> targets, std::int32_t next_hole)
      : targets_(std::move(targets)), next_(next_hole) {}

  void program(ChildProgram& p) {
    for (SectionKind s : {SectionKind::Types, SectionKind::Locals, SectionKind::Inputs,
                          SectionKind::Outputs})
      for (Decl& d : p.decl_section(s).decls) decl(d);
    for (Stmt& s : p.init.body) stmt(s);
    for (Stmt& s : p.next.body) stmt(s);
    for (Invariant& inv : p.spec.invariants) expr(inv.expr);
  }

  std::vector<HoledNode> holed;

 private:
  bool take(NodeId id, HoleCategory cat, HoleId& out) {
    auto it = targets_.find(id);
    if (it == targets_.end()) return false;
    out = HoleId(next_++);
    holed.push_back({id, it->second, out, cat});
    return true;
  }

  void decl(Decl& d) {
    if (d.is_hole()) return;
    HoleId h;
    if (take(d.id, HoleCategory::Stmt, h)) {
      d.type.reset();
      d.value.reset();
      d.hole = h;
      return;
    }
    if (d.type) type(*d.type);
    if (d.value) expr(*d.value);
  }

  void type(TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::Hole) return;
    HoleId h;
    if (take(t.id, HoleCategory::Type, h)) {
      TypeExpr hole = TypeExpr::make_hole(h);
      hole.id = t.id;
      hole.span = t.span;
      t = std::move(hole);
      return;
    }
    for (auto& c : t.children) type(c);
  }

  void expr(Expr& e) {
    if (e.kind == Expr::Kind::Hole) return;
    HoleId h;
    if (take(e.id, HoleCategory::Expr, h)) {
      Expr hole = Expr::make_hole(h);
      hole.id = e.id;
      hole.span = e.span;
      e = std::move(hole);
      return;
    }
    for (auto& a : e.args) expr(a);
  }

  void stmt(Stmt& s) {
    if (s.kind == Stmt::Kind::Hole) return;
    HoleId h;
    if (take(s.id, HoleCategory::Stmt, h)) {
      Stmt hole = Stmt::make_hole(h);
      hole.id = s.id;
      hole.span = s.span;
      s = std::move(hole);
      return;
    }
    for (auto& e : s.exprs) expr(e);
    for (auto& c : s.then_body) stmt(c);
    for (auto& el : s.elifs) {
      expr(el.cond);
      for (auto& c : el.body) stmt(c);
    }
    for (auto& c : s.else_body) stmt(c);
  }

  std::map<NodeId, CheckTag> targets_;
  std::int32_t next_;
};

std::int32_t next_hole_id(const ChildProgram& p) { return max_hole_id(p).value + 1; }

void fill_types(TypeExpr& t, const ClauseSet& cs, const Model& m, const ChildProgram& ctx,
                std::vector<FilledHole>& filled) {
  if (t.kind == TypeExpr::Kind::Hole) {
    auto tv = cs.tvar_of_hole(t.hole);
    if (!tv || !m.is_forced(*tv)) return;
    const TypeTerm& value = m.values.at(*tv);
    auto te = type_expr_of(value, ctx);
    if (!te) return;
    filled.push_back({t.hole, value});
    te->id = t.id;
    te->span = t.span;
    t = std::move(*te);
    return;
  }
  for (auto& c : t.children) fill_types(c, cs, m, ctx, filled);
}

void collect_var_uses(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::VarRef &&
      std::find(out.begin(), out.end(), e.text) == out.end())
    out.push_back(e.text);
  for (const auto& a : e.args) collect_var_uses(a, out);
}

void collect_var_uses(const Stmt& s, std::vector<std::string>& out) {
  for (const auto& e : s.exprs) collect_var_uses(e, out);
  for (const auto& c : s.then_body) collect_var_uses(c, out);
  for (const auto& el : s.elifs) {
    collect_var_uses(el.cond, out);
    for (const auto& c : el.body) collect_var_uses(c, out);
  }
  for (const auto& c : s.else_body) collect_var_uses(c, out);
}

}  // namespace

HoleifyResult holeify(const ChildProgram& p, const ClauseSet& cs, const SolveResult& r) {
  std::map<NodeId, CheckTag> first_check;
  for (const Clause& c : cs.clauses)
    if (c.hard && c.check != CheckTag::HoleBinding) first_check.emplace(c.origin, c.check);
  std::map<NodeId, CheckTag> targets;
  for (std::size_t i : r.falsified) {
    const Clause& c = cs.clauses.at(i);
    if (c.hard) throw InternalError("falsified hard clause");
    auto it = first_check.find(c.origin);
    targets[c.origin] = it == first_check.end() ? CheckTag::Keep : it->second;
  }
  HoleifyResult out;
  out.program = p;
  Holer h(std::move(targets), next_hole_id(p));
  h.program(out.program);
  out.holed = std::move(h.holed);
  return out;
}

std::optional<TypeExpr> type_expr_of(const TypeTerm& t, const ChildProgram& ctx) {
  switch (t.kind()) {
    case TypeTerm::Kind::Bool: return TypeExpr::make(TypeExpr::Kind::Bool);
    case TypeTerm::Kind::Int: return TypeExpr::make(TypeExpr::Kind::Int);
    case TypeTerm::Kind::Real: return TypeExpr::make(TypeExpr::Kind::Real);
    case TypeTerm::Kind::BV: {
      if (t.width() < 1 || t.width() > 65536) return std::nullopt;
      TypeExpr e = TypeExpr::make(TypeExpr::Kind::BV);
      e.width = t.width();
      return e;
    }
    case TypeTerm::Kind::Enum: {
      for (const Decl& d : ctx.types.decls) {
        if (d.is_hole() || !d.type || d.type->kind != TypeExpr::Kind::Enum) continue;
        if (TypeTerm::enumeration(d.type->tags) == t) {
          TypeExpr e = TypeExpr::make(TypeExpr::Kind::Synonym);
          e.name = d.name;
          return e;
        }
      }
      for (const auto& tag : t.tags())
        if (tag.empty() || tag[0] == '$') return std::nullopt;
      TypeExpr e = TypeExpr::make(TypeExpr::Kind::Enum);
      e.tags = t.tags();
      return e;
    }
    case TypeTerm::Kind::Array: {
      auto i = type_expr_of(t.index(), ctx);
      auto el = type_expr_of(t.element(), ctx);
      if (!i || !el) return std::nullopt;
      TypeExpr e = TypeExpr::make(TypeExpr::Kind::Array);
      e.children = {std::move(*i), std::move(*el)};
      return e;
    }
    case TypeTerm::Kind::Synonym:
    case TypeTerm::Kind::Var: return std::nullopt;
  }
  return std::nullopt;
}

ModelRepairResult model_repair(const ChildProgram& p, const ClauseSet& cs, const Model& m) {
  ModelRepairResult out;
  out.program = p;
  ChildProgram& prog = out.program;
  std::int32_t next = next_hole_id(p);
  for (SectionKind s : {SectionKind::Types, SectionKind::Locals, SectionKind::Inputs,
                        SectionKind::Outputs}) {
    for (Decl& d : prog.decl_section(s).decls) {
      if (d.is_hole()) continue;
      if (d.type) {
        fill_types(*d.type, cs, m, p, out.filled);
        continue;
      }
      if (!d.value) continue;
      const auto& table = s == SectionKind::Types ? cs.syn_tvars : cs.var_tvars;
      auto it = table.find(d.name);
      std::optional<TypeExpr> te;
      if (it != table.end() && m.is_forced(it->second))
        te = type_expr_of(m.values.at(it->second), p);
      if (te) {
        out.retyped.push_back({d.id, d.name, m.values.at(it->second)});
        te->span = d.value->span;
        d.type = std::move(*te);
      } else {
        HoleId h(next++);
        TypeExpr hole = TypeExpr::make_hole(h);
        hole.span = d.value->span;
        d.type = std::move(hole);
        out.unresolved.push_back(h);
      }
      d.value.reset();
    }
  }
  assign_node_ids(prog);
  return out;
}

namespace {

SolveResult solve_with(const ClauseSet& cs, const RepairOptions& opts,
                       std::vector<std::string>& notes) {
  if (opts.solver == SolverKind::External) {
    try {
      return solve_external(cs, opts.external);
    } catch (const SolverTimeout& e) {
      notes.push_back(std::string("external solver: ") + e.what() + "; used internal solver");
    }
  }
  return solve_maxsmt(cs);
}

}  // namespace

RepairOutcome repair_round(const ChildProgram& p, const RepairOptions& opts) {
  RepairOutcome out;
  out.holes_before = count_holes(p);
  ChildProgram prog = p;
  if (prog.module_hole.valid()) {
    out.program = std::move(prog);
    out.holes_after = out.holes_before;
    return out;
  }

  std::vector<std::string> used;
  for (const Stmt& s : prog.init.body) collect_var_uses(s, used);
  for (const Stmt& s : prog.next.body) collect_var_uses(s, used);
  for (const Invariant& inv : prog.spec.invariants) collect_var_uses(inv.expr, used);
  std::set<std::string> declared;
  for (SectionKind s : kVariableSections)
    for (const Decl& d : prog.decl_section(s).decls)
      if (!d.is_hole()) declared.insert(d.name);
  std::int32_t next = next_hole_id(prog);
  for (const auto& name : used) {
    if (declared.count(name)) continue;
    Decl d;
    d.name = name;
    d.type = TypeExpr::make_hole(HoleId(next++));
    prog.locals.decls.push_back(std::move(d));
    out.synthesized.push_back(name);
  }
  if (!out.synthesized.empty()) assign_node_ids(prog);

  ClauseSet cs;
  SolveResult res;
  while (true) {
    auto t0 = std::chrono::steady_clock::now();
    cs = generate_clauses(prog, opts.weights);
    auto t1 = std::chrono::steady_clock::now();
    res = solve_with(cs, opts, out.notes);
    auto t2 = std::chrono::steady_clock::now();
    out.ms_constraints += std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.ms_solve += std::chrono::duration<double, std::milli>(t2 - t1).count();
    ++out.solve_rounds;
    out.cost += res.cost;
    if (res.falsified.empty()) break;
    if (out.solve_rounds >= opts.max_solve_rounds)
      throw InternalError("repair did not converge after " + std::to_string(out.solve_rounds) +
                          " solver rounds");
    HoleifyResult hr = holeify(prog, cs, res);
    prog = std::move(hr.program);
    out.holed.insert(out.holed.end(), hr.holed.begin(), hr.holed.end());
  }

  ModelRepairResult mr = model_repair(prog, cs, res.model);
  out.program = std::move(mr.program);
  out.filled = std::move(mr.filled);
  out.retyped = std::move(mr.retyped);
  out.holes_after = count_holes(out.program);
  return out;
}

}  // namespace ucgen
