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

// Static checks of the child language as clauses over type terms.
//
// Every check clause is hard and carries `Holed(n)` for each node whose
// removal would discharge it. Each node that originates a check gets one
// soft clause `!Holed(n)`; dropping that soft clause means "replace n with a
// hole".

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucgen/ast.hpp"

namespace ucgen {

/// S1 unique declaration, S2 declaration types, S3 expression typing,
/// S4 assignment compatibility, S5 input immutability, S6 condition typing.
enum class CheckTag : std::uint8_t { S1, S2, S3, S4, S5, S6, HoleBinding, Keep };
std::string_view check_tag_name(CheckTag t);

struct Atom {
  enum class Kind : std::uint8_t { Const, Eq, Tester, Holed };

  Kind kind = Kind::Const;
  bool value = false;              // Const
  TypeCtor ctor = TypeCtor::Bool;  // Tester
  TypeTerm lhs;                    // Eq, Tester
  TypeTerm rhs;                    // Eq
  NodeId node;                     // Holed

  static Atom constant(bool v);
  static Atom eq(TypeTerm a, TypeTerm b);  // operands stored in canonical order
  static Atom tester(TypeCtor c, TypeTerm t);
  static Atom holed(NodeId n);

  std::string to_string() const;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

struct Literal {
  Atom atom;
  bool positive = true;

  std::string to_string() const;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

inline Literal pos(Atom a) { return {std::move(a), true}; }
inline Literal neg(Atom a) { return {std::move(a), false}; }

struct Clause {
  std::vector<Literal> literals;  // disjunction; empty means false
  bool hard = true;
  int weight = 0;  // soft only, >= 1
  NodeId origin;
  CheckTag check = CheckTag::S3;

  bool soft() const { return !hard; }
  std::string to_string() const;
};

struct TVarInfo {
  NodeId owner_node;  // exactly one of owner_node / owner_hole is valid
  HoleId owner_hole;
  std::string role;   // "type", "sel", "alpha", "index", "concat_l", "concat_r", "hole"
  std::string label;  // variable or synonym name when there is one
};

struct ClauseSet {
  std::vector<Clause> clauses;      // hard clauses first, then soft in pre-order
  std::vector<TVarInfo> tvar_table; // TVar id -> owner
  std::map<std::string, int> var_tvars;  // declared variable -> its type TVar
  std::map<std::string, int> syn_tvars;  // declared synonym -> its TVar

  std::optional<int> tvar_of(NodeId owner, std::string_view role) const;
  std::optional<int> tvar_of_hole(HoleId hole) const;
  std::size_t soft_count() const;
  int total_soft_weight() const;

  /// One clause per line: index, kind, weight, tag, origin, literals.
  std::string dump() const;
};

enum class WeightsMode : std::uint8_t { Depth, InverseDepth, Uniform };
std::optional<WeightsMode> parse_weights_mode(std::string_view s);
std::string_view weights_mode_name(WeightsMode m);

/// depth: 1 + depth; inverse-depth: 1 + (max depth - depth); uniform: 1.
/// Throws std::out_of_range for unknown nodes.
int clause_weight(NodeId node, const ChildProgram& tree, WeightsMode mode = WeightsMode::Depth);

ClauseSet generate_clauses(const ChildProgram& p, WeightsMode mode = WeightsMode::Depth);

/// Name of the constant standing for the i-th declaration of a name in the
/// S1/S5 selector encoding.
std::string decl_constant(std::size_t i);

}  // namespace ucgen
