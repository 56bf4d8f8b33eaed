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

// Solver internals shared by maxsmt.cpp and smtlib.cpp.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ucgen/maxsmt.hpp"

namespace ucgen::detail {

inline constexpr int kFreshWidthBase = 1 << 20;

struct PNode {
  TypeTerm::Kind kind = TypeTerm::Kind::Int;
  int number = 0;
  std::vector<std::string> strings;
  std::vector<int> kids;
};

// Hash-consed terms; every distinct TypeTerm gets one node.
class TermPool {
 public:
  int intern(const TypeTerm& t);

  std::vector<PNode> nodes;
  std::map<int, int> var_nodes;  // TVar -> node

 private:
  using Key = std::tuple<int, int, std::vector<std::string>, std::vector<int>>;
  std::map<Key, int> index_;
};

TypeCtor ctor_of(TypeTerm::Kind k);

struct TheoryLits {
  std::vector<std::pair<int, int>> eqs;
  std::vector<std::pair<int, int>> diseqs;
  std::vector<std::pair<TypeCtor, int>> pos_testers;
  std::vector<std::pair<TypeCtor, int>> neg_testers;
};

// Union-find unification with occurs check, constructor domains and
// disequalities.
class Theory {
 public:
  explicit Theory(const TermPool& pool);

  bool load(const TheoryLits& lits);
  bool build_model(Model& m);

 private:
  int find(int x);
  bool is_var_class(int r) const;
  bool unify(int a, int b);
  bool acyclic();
  bool struct_equal(int a, int b);
  TypeTerm fresh_value(TypeCtor c);
  std::vector<TypeTerm> candidates(int r);
  std::optional<TypeTerm> value_of(int n, const std::map<int, TypeTerm>& assigned);
  void reachable_vars(int n, std::set<int>& out);
  bool ground_class(int n);

  const TermPool& pool_;
  std::vector<int> parent_;
  std::vector<std::uint8_t> domain_;
  std::vector<std::pair<int, int>> diseqs_;
  int fresh_counter_ = 0;
};

struct Problem {
  explicit Problem(const std::vector<Clause>& cs);
  int atom_id(const Atom& a);
  void ensure_vars(int tvar_count);

  TermPool pool;
  std::vector<Atom> atoms;
  std::map<Atom, int> atom_index;
  std::vector<int> operand_a;
  std::vector<int> operand_b;
  std::vector<std::vector<int>> clauses;  // literal = 2 * atom + negated
};

class Search {
 public:
  Search(const Problem& pb, const std::vector<std::size_t>& active);
  bool run(Model* out);

 private:
  bool rec();
  bool lit_true(int lit) const;
  bool assign(int lit);
  void undo(std::size_t mark);
  bool theory_ok(Model* m);

  const Problem& pb_;
  std::vector<std::size_t> active_;
  std::vector<int> val_;
  std::vector<int> trail_;
  Model* model_ = nullptr;
};

// Satisfiability queries over subsets of one fixed clause list.
class Oracle {
 public:
  Oracle(const std::vector<Clause>& clauses, int tvar_count, SolveStats* stats);

  bool sat(const std::vector<std::size_t>& active, Model* m);

  /// Minimal subset of `rest` that is unsat together with `fixed`. Requires
  /// fixed + rest to be unsat.
  std::vector<std::size_t> minimize(const std::vector<std::size_t>& fixed,
                                    std::vector<std::size_t> rest);

 private:
  Problem pb_;
  SolveStats* stats_;
};

std::vector<std::size_t> HittingSetSolve(const std::vector<std::vector<std::size_t>>& cores,
                                         const std::vector<int>& weight);

}  // namespace ucgen::detail
