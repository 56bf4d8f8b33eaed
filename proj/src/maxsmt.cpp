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

#include "ucgen/maxsmt.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <tuple>

#include "maxsmt_internal.hpp"

namespace ucgen::detail {

// ---------------------------------------------------------------------------
// Term pool

int TermPool::intern(const TypeTerm& t) {
  Key key;
  std::get<0>(key) = static_cast<int>(t.kind());
  switch (t.kind()) {
    case TypeTerm::Kind::Var: std::get<1>(key) = t.var_id(); break;
    case TypeTerm::Kind::BV: std::get<1>(key) = t.width(); break;
    case TypeTerm::Kind::Enum: std::get<2>(key) = t.tags(); break;
    case TypeTerm::Kind::Synonym: std::get<2>(key) = {t.name()}; break;
    case TypeTerm::Kind::Array:
      std::get<3>(key) = {intern(t.index()), intern(t.element())};
      break;
    default: break;
  }
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  PNode n;
  n.kind = t.kind();
  n.number = std::get<1>(key);
  n.strings = std::get<2>(key);
  n.kids = std::get<3>(key);
  nodes.push_back(std::move(n));
  int id = static_cast<int>(nodes.size() - 1);
  index_.emplace(std::move(key), id);
  if (t.kind() == TypeTerm::Kind::Var) var_nodes.emplace(t.var_id(), id);
  return id;
}

TypeCtor ctor_of(TypeTerm::Kind k) {
  switch (k) {
    case TypeTerm::Kind::Bool: return TypeCtor::Bool;
    case TypeTerm::Kind::Int: return TypeCtor::Int;
    case TypeTerm::Kind::Real: return TypeCtor::Real;
    case TypeTerm::Kind::BV: return TypeCtor::BV;
    case TypeTerm::Kind::Enum: return TypeCtor::Enum;
    case TypeTerm::Kind::Array: return TypeCtor::Array;
    case TypeTerm::Kind::Synonym: return TypeCtor::Synonym;
    case TypeTerm::Kind::Var: break;
  }
  throw InternalError("ctor_of(Var)");
}

namespace {

constexpr std::uint8_t kAllCtors = (1u << kTypeCtorCount) - 1;
std::uint8_t bit(TypeCtor c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }

}  // namespace

// ---------------------------------------------------------------------------
// Theory

Theory::Theory(const TermPool& pool)
    : pool_(pool), parent_(pool.nodes.size()), domain_(pool.nodes.size(), kAllCtors) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int Theory::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Theory::is_var_class(int r) const { return pool_.nodes[r].kind == TypeTerm::Kind::Var; }

bool Theory::unify(int a, int b) {
  std::vector<std::pair<int, int>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) continue;
    bool vx = is_var_class(x), vy = is_var_class(y);
    if (vx) {
      parent_[x] = y;
      domain_[y] &= domain_[x];
      continue;
    }
    if (vy) {
      parent_[y] = x;
      domain_[x] &= domain_[y];
      continue;
    }
    const PNode& nx = pool_.nodes[x];
    const PNode& ny = pool_.nodes[y];
    if (nx.kind != ny.kind || nx.number != ny.number || nx.strings != ny.strings ||
        nx.kids.size() != ny.kids.size())
      return false;
    parent_[x] = y;
    domain_[y] &= domain_[x];
    for (std::size_t i = 0; i < nx.kids.size(); ++i) work.emplace_back(nx.kids[i], ny.kids[i]);
  }
  return true;
}

bool Theory::acyclic() {
  std::vector<std::uint8_t> color(parent_.size(), 0);
  std::function<bool(int)> dfs = [&](int r) {
    if (color[r] == 2) return true;
    if (color[r] == 1) return false;
    color[r] = 1;
    for (int k : pool_.nodes[r].kids)
      if (!dfs(find(k))) return false;
    color[r] = 2;
    return true;
  };
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!is_var_class(r) && !dfs(r)) return false;
  }
  return true;
}

bool Theory::struct_equal(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return true;
  if (is_var_class(a) || is_var_class(b)) return false;
  const PNode& na = pool_.nodes[a];
  const PNode& nb = pool_.nodes[b];
  if (na.kind != nb.kind || na.number != nb.number || na.strings != nb.strings ||
      na.kids.size() != nb.kids.size())
    return false;
  for (std::size_t i = 0; i < na.kids.size(); ++i)
    if (!struct_equal(na.kids[i], nb.kids[i])) return false;
  return true;
}

bool Theory::load(const TheoryLits& lits) {
  for (auto [a, b] : lits.eqs)
    if (!unify(a, b)) return false;
  if (!acyclic()) return false;
  for (auto [c, n] : lits.pos_testers) domain_[find(n)] &= bit(c);
  for (auto [c, n] : lits.neg_testers) domain_[find(n)] &= static_cast<std::uint8_t>(~bit(c));
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (is_var_class(r)) {
      if (domain_[r] == 0) return false;
    } else if ((domain_[r] & bit(ctor_of(pool_.nodes[r].kind))) == 0) {
      return false;
    }
  }
  for (auto [a, b] : lits.diseqs)
    if (struct_equal(a, b)) return false;
  diseqs_ = lits.diseqs;
  return true;
}

TypeTerm Theory::fresh_value(TypeCtor c) {
  int k = fresh_counter_++;
  switch (c) {
    case TypeCtor::Bool: return TypeTerm::boolean();
    case TypeCtor::Int: return TypeTerm::integer();
    case TypeCtor::Real: return TypeTerm::real();
    case TypeCtor::BV: return TypeTerm::bv(kFreshWidthBase + k);
    case TypeCtor::Enum: return TypeTerm::enumeration({"$fresh" + std::to_string(k)});
    case TypeCtor::Array:
      return TypeTerm::array(TypeTerm::integer(), TypeTerm::bv(kFreshWidthBase + k));
    case TypeCtor::Synonym: return TypeTerm::synonym("$fresh" + std::to_string(k));
  }
  return TypeTerm::integer();
}

std::vector<TypeTerm> Theory::candidates(int r) {
  std::vector<TypeTerm> out;
  std::uint8_t d = domain_[r];
  for (TypeCtor c : {TypeCtor::Int, TypeCtor::Bool, TypeCtor::Real})
    if (d & bit(c)) out.push_back(fresh_value(c));
  for (TypeCtor c : {TypeCtor::BV, TypeCtor::Enum, TypeCtor::Array, TypeCtor::Synonym})
    if (d & bit(c)) out.push_back(fresh_value(c));
  return out;
}

std::optional<TypeTerm> Theory::value_of(int n, const std::map<int, TypeTerm>& assigned) {
  int r = find(n);
  const PNode& node = pool_.nodes[r];
  if (node.kind == TypeTerm::Kind::Var) {
    auto it = assigned.find(r);
    if (it == assigned.end()) return std::nullopt;
    return it->second;
  }
  switch (node.kind) {
    case TypeTerm::Kind::Bool: return TypeTerm::boolean();
    case TypeTerm::Kind::Int: return TypeTerm::integer();
    case TypeTerm::Kind::Real: return TypeTerm::real();
    case TypeTerm::Kind::BV: return TypeTerm::bv(node.number);
    case TypeTerm::Kind::Enum: return TypeTerm::enumeration(node.strings);
    case TypeTerm::Kind::Synonym: return TypeTerm::synonym(node.strings.front());
    case TypeTerm::Kind::Array: {
      auto i = value_of(node.kids[0], assigned);
      auto e = value_of(node.kids[1], assigned);
      if (!i || !e) return std::nullopt;
      return TypeTerm::array(*i, *e);
    }
    case TypeTerm::Kind::Var: break;
  }
  return std::nullopt;
}

void Theory::reachable_vars(int n, std::set<int>& out) {
  int r = find(n);
  if (is_var_class(r)) {
    out.insert(r);
    return;
  }
  for (int k : pool_.nodes[r].kids) reachable_vars(k, out);
}

bool Theory::ground_class(int n) {
  int r = find(n);
  if (is_var_class(r)) return false;
  for (int k : pool_.nodes[r].kids)
    if (!ground_class(k)) return false;
  return true;
}

bool Theory::build_model(Model& m) {
  // Var classes touched by disequalities need a joint search; the rest take
  // their first candidate.
  std::vector<int> order;
  std::vector<std::set<int>> diseq_vars(diseqs_.size());
  std::set<int> relevant;
  for (std::size_t i = 0; i < diseqs_.size(); ++i) {
    reachable_vars(diseqs_[i].first, diseq_vars[i]);
    reachable_vars(diseqs_[i].second, diseq_vars[i]);
    relevant.insert(diseq_vars[i].begin(), diseq_vars[i].end());
  }
  order.assign(relevant.begin(), relevant.end());

  std::map<int, TypeTerm> assigned;
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == order.size()) return true;
    int r = order[k];
    for (TypeTerm v : candidates(r)) {
      assigned[r] = v;
      bool ok = true;
      for (std::size_t i = 0; i < diseqs_.size() && ok; ++i) {
        if (!diseq_vars[i].count(r)) continue;
        auto a = value_of(diseqs_[i].first, assigned);
        auto b = value_of(diseqs_[i].second, assigned);
        if (a && b && *a == *b) ok = false;
      }
      if (ok && search(k + 1)) return true;
    }
    assigned.erase(r);
    return false;
  };
  if (!search(0)) return false;

  for (auto [tvar, node] : pool_.var_nodes) {
    int r = find(node);
    if (is_var_class(r) && !assigned.count(r)) assigned[r] = candidates(r).front();
  }
  for (auto [tvar, node] : pool_.var_nodes) {
    std::set<int> vars;
    reachable_vars(node, vars);
    for (int r : vars)
      if (!assigned.count(r)) assigned[r] = candidates(r).front();
    auto v = value_of(node, assigned);
    if (!v) throw InternalError("model construction left a variable unassigned");
    m.values[tvar] = *v;
    if (ground_class(node)) m.forced.insert(tvar);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Problem and DPLL search

Problem::Problem(const std::vector<Clause>& cs) {
  for (const Clause& c : cs) {
    std::vector<int> lits;
    for (const Literal& l : c.literals) {
      int a = atom_id(l.atom);
      lits.push_back(2 * a + (l.positive ? 0 : 1));
    }
    clauses.push_back(std::move(lits));
  }
}

int Problem::atom_id(const Atom& a) {
  auto it = atom_index.find(a);
  if (it != atom_index.end()) return it->second;
  int id = static_cast<int>(atoms.size());
  atoms.push_back(a);
  int x = -1, y = -1;
  if (a.kind == Atom::Kind::Eq) {
    x = pool.intern(a.lhs);
    y = pool.intern(a.rhs);
  } else if (a.kind == Atom::Kind::Tester) {
    x = pool.intern(a.lhs);
  }
  operand_a.push_back(x);
  operand_b.push_back(y);
  atom_index.emplace(a, id);
  return id;
}

void Problem::ensure_vars(int tvar_count) {
  for (int v = 0; v < tvar_count; ++v) pool.intern(TypeTerm::var(v));
}

Search::Search(const Problem& pb, const std::vector<std::size_t>& active)
    : pb_(pb), active_(active), val_(pb.atoms.size(), -1) {
  std::vector<std::uint8_t> polarity(pb.atoms.size(), 0);
  for (std::size_t ci : active_) {
    for (int lit : pb.clauses[ci]) polarity[lit / 2] |= (lit % 2 == 0) ? 1 : 2;
  }
  for (std::size_t a = 0; a < pb.atoms.size(); ++a) {
    const Atom& atom = pb.atoms[a];
    if (atom.kind == Atom::Kind::Const) {
      val_[a] = atom.value ? 1 : 0;
    } else if (atom.kind == Atom::Kind::Holed) {
      if (polarity[a] == 1) val_[a] = 1;
      else if (polarity[a] == 2) val_[a] = 0;
    }
  }
}

bool Search::lit_true(int lit) const {
  int v = val_[lit / 2];
  return v >= 0 && (v == 1) == (lit % 2 == 0);
}

bool Search::assign(int lit) {
  int a = lit / 2;
  val_[a] = (lit % 2 == 0) ? 1 : 0;
  trail_.push_back(a);
  Atom::Kind k = pb_.atoms[a].kind;
  if (k == Atom::Kind::Eq || k == Atom::Kind::Tester) return theory_ok(nullptr);
  return true;
}

void Search::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    val_[trail_.back()] = -1;
    trail_.pop_back();
  }
}

bool Search::theory_ok(Model* m) {
  TheoryLits lits;
  for (std::size_t a = 0; a < val_.size(); ++a) {
    if (val_[a] < 0) continue;
    const Atom& atom = pb_.atoms[a];
    bool positive = val_[a] == 1;
    if (atom.kind == Atom::Kind::Eq) {
      auto p = std::make_pair(pb_.operand_a[a], pb_.operand_b[a]);
      (positive ? lits.eqs : lits.diseqs).push_back(p);
    } else if (atom.kind == Atom::Kind::Tester) {
      auto p = std::make_pair(atom.ctor, pb_.operand_a[a]);
      (positive ? lits.pos_testers : lits.neg_testers).push_back(p);
    }
  }
  Theory th(pb_.pool);
  if (!th.load(lits)) return false;
  if (!m) return true;
  if (!th.build_model(*m)) return false;
  for (std::size_t a = 0; a < val_.size(); ++a)
    if (pb_.atoms[a].kind == Atom::Kind::Holed && val_[a] == 1) m->holed.insert(pb_.atoms[a].node);
  return true;
}

bool Search::run(Model* out) {
  if (!theory_ok(nullptr)) return false;
  model_ = out;
  return rec();
}

bool Search::rec() {
  std::size_t mark = trail_.size();
  std::size_t best = SIZE_MAX;
  while (true) {
    bool changed = false;
    best = SIZE_MAX;
    std::size_t best_open = SIZE_MAX;
    for (std::size_t ci : active_) {
      const auto& lits = pb_.clauses[ci];
      bool sat = false;
      std::size_t open = 0;
      int last_open = -1;
      for (int lit : lits) {
        int v = val_[lit / 2];
        if (v < 0) {
          ++open;
          last_open = lit;
        } else if ((v == 1) == (lit % 2 == 0)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (open == 0) {
        undo(mark);
        return false;
      }
      if (open == 1) {
        if (!assign(last_open)) {
          undo(mark);
          return false;
        }
        changed = true;
        continue;
      }
      if (open < best_open) {
        best_open = open;
        best = ci;
      }
    }
    if (!changed) break;
  }
  if (best == SIZE_MAX) {
    Model m;
    if (theory_ok(&m)) {
      if (model_) *model_ = std::move(m);
      return true;
    }
    undo(mark);
    return false;
  }
  std::vector<int> open;
  for (int lit : pb_.clauses[best])
    if (val_[lit / 2] < 0) open.push_back(lit);
  for (int lit : open) {
    if (val_[lit / 2] >= 0) {
      if (!lit_true(lit)) continue;
      if (rec()) return true;
      break;
    }
    std::size_t m2 = trail_.size();
    if (assign(lit) && rec()) return true;
    undo(m2);
    if (pb_.atoms[lit / 2].kind == Atom::Kind::Holed) assign(lit ^ 1);
  }
  undo(mark);
  return false;
}

// ---------------------------------------------------------------------------
// Hitting sets

namespace {

class HittingSet {
 public:
  HittingSet(const std::vector<std::vector<std::size_t>>& cores, const std::vector<int>& weight)
      : cores_(cores), weight_(weight) {}

  // Minimum cost subject to forced-in / forced-out elements; LLONG_MAX if
  // infeasible.
  long long min_cost(const std::set<std::size_t>& in, const std::set<std::size_t>& out) {
    best_ = LLONG_MAX;
    out_ = out;
    std::set<std::size_t> chosen = in;
    long long cost = 0;
    for (auto e : in) cost += weight_[e];
    rec(chosen, cost);
    return best_;
  }

  // Lexicographically smallest among the minimum-cost hitting sets.
  std::vector<std::size_t> solve() {
    std::set<std::size_t> in, out;
    long long opt = min_cost(in, out);
    if (opt == LLONG_MAX) throw InternalError("hitting set infeasible");
    std::set<std::size_t> elems;
    for (const auto& c : cores_) elems.insert(c.begin(), c.end());
    for (auto e : elems) {
      in.insert(e);
      if (min_cost(in, out) != opt) {
        in.erase(e);
        out.insert(e);
      }
    }
    return {in.begin(), in.end()};
  }

 private:
  bool hit(const std::vector<std::size_t>& core, const std::set<std::size_t>& chosen) const {
    return std::any_of(core.begin(), core.end(), [&](std::size_t e) { return chosen.count(e); });
  }

  // Disjoint-core lower bound; LLONG_MAX when some core cannot be hit.
  long long lower_bound(const std::set<std::size_t>& chosen) const {
    std::set<std::size_t> used;
    long long lb = 0;
    for (const auto& c : cores_) {
      if (hit(c, chosen)) continue;
      int w = INT_MAX;
      bool disjoint = true;
      for (auto e : c) {
        if (out_.count(e)) continue;
        if (used.count(e)) disjoint = false;
        w = std::min(w, weight_[e]);
      }
      if (w == INT_MAX) return LLONG_MAX;
      if (!disjoint) continue;
      for (auto e : c) used.insert(e);
      lb += w;
    }
    return lb;
  }

  void rec(std::set<std::size_t>& chosen, long long cost) {
    long long lb = lower_bound(chosen);
    if (lb == LLONG_MAX || cost + lb >= best_) return;
    const std::vector<std::size_t>* pick = nullptr;
    std::size_t pick_open = SIZE_MAX;
    for (const auto& c : cores_) {
      if (hit(c, chosen)) continue;
      std::size_t open = 0;
      for (auto e : c)
        if (!out_.count(e)) ++open;
      if (open < pick_open) {
        pick_open = open;
        pick = &c;
      }
    }
    if (!pick) {
      best_ = cost;
      return;
    }
    std::vector<std::size_t> added_out;
    for (auto e : *pick) {
      if (out_.count(e)) continue;
      chosen.insert(e);
      rec(chosen, cost + weight_[e]);
      chosen.erase(e);
      out_.insert(e);
      added_out.push_back(e);
    }
    for (auto e : added_out) out_.erase(e);
  }

  const std::vector<std::vector<std::size_t>>& cores_;
  const std::vector<int>& weight_;
  std::set<std::size_t> out_;
  long long best_ = LLONG_MAX;
};

}  // namespace

Oracle::Oracle(const std::vector<Clause>& clauses, int tvar_count, SolveStats* stats)
    : pb_(clauses), stats_(stats) {
  pb_.ensure_vars(tvar_count);
}

bool Oracle::sat(const std::vector<std::size_t>& active, Model* m) {
  if (stats_) ++stats_->sat_calls;
  Search s(pb_, active);
  return s.run(m);
}

std::vector<std::size_t> Oracle::minimize(const std::vector<std::size_t>& fixed,
                                          std::vector<std::size_t> rest) {
  std::vector<std::size_t> must;
  auto query = [&](std::size_t k) {
    std::vector<std::size_t> active = fixed;
    active.insert(active.end(), must.begin(), must.end());
    active.insert(active.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k));
    return sat(active, nullptr);
  };
  while (query(0)) {
    std::size_t lo = 1, hi = rest.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (query(mid)) lo = mid + 1;
      else hi = mid;
    }
    must.push_back(rest[lo - 1]);
    rest.resize(lo - 1);
  }
  std::sort(must.begin(), must.end());
  return must;
}

}  // namespace ucgen::detail

namespace ucgen {

using detail::Oracle;

CheckResult check_sat(const std::vector<Clause>& clauses) {
  int max_var = -1;
  for (const Clause& c : clauses) {
    for (const Literal& l : c.literals) {
      std::vector<int> vs;
      l.atom.lhs.collect_vars(vs);
      l.atom.rhs.collect_vars(vs);
      for (int v : vs) max_var = std::max(max_var, v);
    }
  }
  Oracle oracle(clauses, max_var + 1, nullptr);
  std::vector<std::size_t> all(clauses.size());
  std::iota(all.begin(), all.end(), 0);
  Model m;
  if (oracle.sat(all, &m)) return SatResult{std::move(m)};
  return UnsatResult{oracle.minimize({}, all)};
}

namespace {

TypeTerm substitute(const TypeTerm& t, const Model& m) {
  switch (t.kind()) {
    case TypeTerm::Kind::Var: {
      auto it = m.values.find(t.var_id());
      return it == m.values.end() ? TypeTerm::integer() : it->second;
    }
    case TypeTerm::Kind::Array:
      return TypeTerm::array(substitute(t.index(), m), substitute(t.element(), m));
    default: return t;
  }
}

}  // namespace

bool clause_satisfied(const Clause& c, const Model& m) {
  for (const Literal& l : c.literals) {
    const Atom& a = l.atom;
    bool v = false;
    switch (a.kind) {
      case Atom::Kind::Const: v = a.value; break;
      case Atom::Kind::Holed: v = m.holed.count(a.node) != 0; break;
      case Atom::Kind::Eq: v = substitute(a.lhs, m) == substitute(a.rhs, m); break;
      case Atom::Kind::Tester: v = substitute(a.lhs, m).ctor() == a.ctor; break;
    }
    if (v == l.positive) return true;
  }
  return false;
}

SolveResult solve_maxsmt(const ClauseSet& cs, SolveStats* stats) {
  Oracle oracle(cs.clauses, static_cast<int>(cs.tvar_table.size()), stats);
  std::vector<std::size_t> hard, soft;
  std::vector<int> weight(cs.clauses.size(), 0);
  for (std::size_t i = 0; i < cs.clauses.size(); ++i) {
    if (cs.clauses[i].hard) hard.push_back(i);
    else soft.push_back(i);
    weight[i] = cs.clauses[i].weight;
  }
  if (!oracle.sat(hard, nullptr))
    throw HardUnsatError("hard clauses are unsatisfiable", oracle.minimize({}, hard));

  std::vector<std::vector<std::size_t>> cores;
  while (true) {
    if (stats) ++stats->iterations;
    std::vector<std::size_t> hs = cores.empty() ? std::vector<std::size_t>{}
                                                : detail::HittingSetSolve(cores, weight);
    std::set<std::size_t> dropped(hs.begin(), hs.end());
    std::vector<std::size_t> kept;
    for (auto i : soft)
      if (!dropped.count(i)) kept.push_back(i);
    std::vector<std::size_t> active = hard;
    active.insert(active.end(), kept.begin(), kept.end());
    Model m;
    if (oracle.sat(active, &m)) {
      SolveResult r;
      r.model = std::move(m);
      r.falsified = hs;
      for (std::size_t i = 0; i < cs.clauses.size(); ++i)
        if (!dropped.count(i)) r.satisfied.push_back(i);
      for (auto i : hs) r.cost += weight[i];
      r.solver = "internal";
      return r;
    }
    // Collect disjoint cores among the kept soft clauses.
    while (true) {
      std::vector<std::size_t> core = oracle.minimize(hard, kept);
      if (core.empty()) throw InternalError("empty core with satisfiable hard clauses");
      cores.push_back(core);
      if (stats) ++stats->cores;
      std::set<std::size_t> in_core(core.begin(), core.end());
      std::vector<std::size_t> next;
      for (auto i : kept)
        if (!in_core.count(i)) next.push_back(i);
      kept = std::move(next);
      active = hard;
      active.insert(active.end(), kept.begin(), kept.end());
      if (oracle.sat(active, nullptr)) break;
    }
  }
}

namespace detail {

std::vector<std::size_t> HittingSetSolve(const std::vector<std::vector<std::size_t>>& cores,
                                         const std::vector<int>& weight) {
  HittingSet h(cores, weight);
  return h.solve();
}

}  // namespace detail

}  // namespace ucgen
