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

// Weighted MaxSMT over the type-term theory.
//
// The internal solver is an implicit hitting set loop: a DPLL search with a
// unification theory answers satisfiability queries, unsat cores are
// minimised, and an exact branch-and-bound picks the cheapest hitting set.
// Ties between optimal solutions go to the lexicographically smallest set of
// falsified soft clause indices.

#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ucgen/constraints.hpp"

namespace ucgen {

struct Model {
  std::map<int, TypeTerm> values;  // TVar -> ground term
  std::set<int> forced;            // TVars fixed by equalities alone
  std::set<NodeId> holed;          // Holed atoms assigned true

  bool is_forced(int tvar) const { return forced.count(tvar) != 0; }
};

struct SatResult {
  Model model;
};

struct UnsatResult {
  std::vector<std::size_t> core;  // indices into the queried clause list, minimal
};

using CheckResult = std::variant<SatResult, UnsatResult>;

/// Satisfiability of a clause conjunction. Unsat answers carry a minimal core.
CheckResult check_sat(const std::vector<Clause>& clauses);

/// Truth of a clause under a model (unassigned TVars are not allowed in Eq
/// and Tester atoms; Holed atoms default to false).
bool clause_satisfied(const Clause& c, const Model& m);

class HardUnsatError : public Error {
 public:
  HardUnsatError(std::string msg, std::vector<std::size_t> core)
      : Error(std::move(msg)), core_(std::move(core)) {}
  const std::vector<std::size_t>& core() const { return core_; }

 private:
  std::vector<std::size_t> core_;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class SolverTimeout : public SolverError {
 public:
  using SolverError::SolverError;
};

struct SolveResult {
  std::vector<std::size_t> satisfied;  // clause indices, ascending
  std::vector<std::size_t> falsified;  // soft clause indices, ascending
  Model model;
  long long cost = 0;
  std::string solver;  // "internal" or "external"
};

struct SolveStats {
  std::size_t sat_calls = 0;
  std::size_t cores = 0;
  std::size_t iterations = 0;
};

/// Optimal solution with the lexicographic tie-break. Throws HardUnsatError
/// when the hard clauses alone are unsatisfiable.
SolveResult solve_maxsmt(const ClauseSet& cs, SolveStats* stats = nullptr);

// ---------------------------------------------------------------------------
// External solver (SMT-LIB2 over a process pipe)

struct ExternalSolverConfig {
  std::string command = "z3 -in -smt2";
  std::chrono::milliseconds timeout{30000};
};

/// The SMT-LIB2 script sent to an external solver.
std::string to_smtlib(const ClauseSet& cs);

/// Runs the external solver and rebuilds the model with the internal theory.
/// Throws ConfigError if the command cannot be started (exit 127),
/// SolverTimeout, or SolverError on unparseable output.
SolveResult solve_external(const ClauseSet& cs, const ExternalSolverConfig& cfg);

/// Runs `command` through /bin/sh with `input` on stdin.
struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};
ProcessResult run_process(const std::string& command, const std::string& input,
                          std::chrono::milliseconds timeout);

}  // namespace ucgen
