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

// Reference implementations used only by tests. None of this calls into the
// solver or the constraint generator.

#pragma once

#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ucgen/ast.hpp"
#include "ucgen/constraints.hpp"
#include "ucgen/maxsmt.hpp"

namespace ucgen::testing {

std::filesystem::path source_dir();
std::string read_text(const std::filesystem::path& p);
bool have_program(const std::string& name);

// ---------------------------------------------------------------------------
// MaxSMT by exhaustive enumeration.
//
// Instances use type variables t0..t{V-1} (V <= 3), ground constants, testers
// and Holed atoms. Each variable ranges over the constants of the instance
// plus V fresh values per infinite constructor, which is enough to realise
// every equality pattern, so the enumeration is exact.

struct BruteResult {
  long long cost = 0;                  // minimum falsified soft weight
  std::vector<std::size_t> falsified;  // lexicographically smallest optimal set
};

/// nullopt when the hard clauses alone are unsatisfiable.
std::optional<BruteResult> brute_force_maxsmt(const ClauseSet& cs);

/// Truth of a clause under a model, evaluated structurally.
bool holds(const Clause& c, const Model& m);

/// Random instance with at most `max_soft` soft clauses.
ClauseSet random_clause_set(std::mt19937& rng, int max_soft);

// ---------------------------------------------------------------------------
// Child-language static checks, written directly over the AST.

/// Nodes a repair may turn into holes: expressions, type annotations,
/// declarations of names declared more than once or as inputs, and
/// assignments to such names.
std::vector<NodeId> hole_candidates(const ChildProgram& p);

/// True when the program passes every static check once the nodes in
/// `holed` are treated as holes.
bool well_typed(const ChildProgram& p, const std::set<NodeId>& holed = {});

/// Smallest number of candidates whose holing makes the program well typed,
/// searching sizes up to `limit`.
std::optional<std::size_t> min_hole_count(const ChildProgram& p, std::size_t limit);

/// Random program text over int/bool/real/bv8 with injected type conflicts.
std::string random_conflicted_program(std::mt19937& rng);

}  // namespace ucgen::testing
