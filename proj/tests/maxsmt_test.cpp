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

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "ucgen/frontend.hpp"
#include "ucgen/maxsmt.hpp"

using namespace ucgen;
using ucgen::testing::brute_force_maxsmt;
using ucgen::testing::have_program;
using ucgen::testing::holds;
using ucgen::testing::random_clause_set;

namespace {

Clause hard(std::vector<Literal> lits) {
  Clause c;
  c.literals = std::move(lits);
  return c;
}

Clause soft(std::vector<Literal> lits, int w, int origin) {
  Clause c = hard(std::move(lits));
  c.hard = false;
  c.weight = w;
  c.origin = NodeId(origin);
  return c;
}

ClauseSet with_vars(std::vector<Clause> clauses, int nvars) {
  ClauseSet cs;
  cs.clauses = std::move(clauses);
  for (int i = 0; i < nvars; ++i) cs.tvar_table.push_back(TVarInfo{NodeId(i), HoleId(), "type", ""});
  return cs;
}

// The state conflict of the traffic-light draft: one declaration against
// three integer uses, each relaxable by holing its own node.
ClauseSet state_conflict(int w_decl, int w_use) {
  TypeTerm t = TypeTerm::var(0);
  std::vector<Clause> cl = {
      hard({pos(Atom::eq(t, TypeTerm::bv(2))), pos(Atom::holed(NodeId(1)))}),
      hard({pos(Atom::eq(t, TypeTerm::integer())), pos(Atom::holed(NodeId(2)))}),
      hard({pos(Atom::eq(t, TypeTerm::integer())), pos(Atom::holed(NodeId(3)))}),
      hard({pos(Atom::eq(t, TypeTerm::integer())), pos(Atom::holed(NodeId(4)))}),
      soft({neg(Atom::holed(NodeId(1)))}, w_decl, 1),
      soft({neg(Atom::holed(NodeId(2)))}, w_use, 2),
      soft({neg(Atom::holed(NodeId(3)))}, w_use, 3),
      soft({neg(Atom::holed(NodeId(4)))}, w_use, 4),
  };
  return with_vars(std::move(cl), 1);
}

}  // namespace

TEST(CheckSat, SingleEquality) {
  auto r = check_sat({hard({pos(Atom::eq(TypeTerm::var(0), TypeTerm::boolean()))})});
  ASSERT_TRUE(std::holds_alternative<SatResult>(r));
  EXPECT_EQ(std::get<SatResult>(r).model.values.at(0), TypeTerm::boolean());
}

TEST(CheckSat, EqualityAgainstTester) {
  auto r = check_sat({hard({pos(Atom::eq(TypeTerm::var(0), TypeTerm::boolean()))}),
                      hard({pos(Atom::tester(TypeCtor::BV, TypeTerm::var(0)))})});
  ASSERT_TRUE(std::holds_alternative<UnsatResult>(r));
  EXPECT_EQ(std::get<UnsatResult>(r).core.size(), 2u);
}

TEST(CheckSat, UnificationThroughArrays) {
  TypeTerm t1 = TypeTerm::var(0), t2 = TypeTerm::var(1);
  auto r = check_sat({hard({pos(Atom::eq(t1, TypeTerm::array(t2, TypeTerm::boolean())))}),
                      hard({pos(Atom::eq(t2, TypeTerm::integer()))})});
  ASSERT_TRUE(std::holds_alternative<SatResult>(r));
  EXPECT_EQ(std::get<SatResult>(r).model.values.at(0),
            TypeTerm::array(TypeTerm::integer(), TypeTerm::boolean()));
}

TEST(CheckSat, OccursCheck) {
  TypeTerm t = TypeTerm::var(0);
  auto r = check_sat({hard({pos(Atom::eq(t, TypeTerm::array(TypeTerm::integer(), t)))})});
  EXPECT_TRUE(std::holds_alternative<UnsatResult>(r));
}

TEST(CheckSat, CoresAreMinimal) {
  std::mt19937 rng(99);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 60; ++i) {
    ClauseSet cs = random_clause_set(rng, 6);
    auto r = check_sat(cs.clauses);
    if (!std::holds_alternative<UnsatResult>(r)) continue;
    ++checked;
    const auto& core = std::get<UnsatResult>(r).core;
    std::vector<Clause> sub;
    for (auto k : core) sub.push_back(cs.clauses[k]);
    EXPECT_TRUE(std::holds_alternative<UnsatResult>(check_sat(sub)));
    for (std::size_t drop = 0; drop < sub.size(); ++drop) {
      std::vector<Clause> smaller;
      for (std::size_t j = 0; j < sub.size(); ++j)
        if (j != drop) smaller.push_back(sub[j]);
      EXPECT_TRUE(std::holds_alternative<SatResult>(check_sat(smaller)));
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(CheckSat, SatModelsSatisfyEveryClause) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    ClauseSet cs = random_clause_set(rng, 6);
    auto r = check_sat(cs.clauses);
    if (auto* s = std::get_if<SatResult>(&r))
      for (const auto& c : cs.clauses) {
        EXPECT_TRUE(holds(c, s->model));
        EXPECT_TRUE(clause_satisfied(c, s->model));
      }
  }
}

TEST(Solve, StateConflictDropsDeclaration) {
  ClauseSet cs = state_conflict(3, 5);
  SolveResult r = solve_maxsmt(cs);
  EXPECT_EQ(r.falsified, std::vector<std::size_t>{4});
  EXPECT_EQ(r.cost, 3);
  EXPECT_EQ(r.model.values.at(0), TypeTerm::integer());
}

TEST(Solve, HeavyDeclarationStillLosesToThreeUses) {
  // 3 uses at weight 2 outweigh one declaration at weight 5.
  SolveResult r = solve_maxsmt(state_conflict(5, 2));
  EXPECT_EQ(r.falsified, std::vector<std::size_t>{4});
  // Cheaper to drop the uses once they weigh less in total.
  r = solve_maxsmt(state_conflict(7, 2));
  EXPECT_EQ(r.falsified, (std::vector<std::size_t>{5, 6, 7}));
}

TEST(Solve, TieBreakPrefersLexicographicallySmallestSet) {
  TypeTerm t = TypeTerm::var(0);
  ClauseSet cs = with_vars({soft({pos(Atom::eq(t, TypeTerm::integer()))}, 1, 0),
                            soft({pos(Atom::eq(t, TypeTerm::boolean()))}, 1, 1)},
                           1);
  EXPECT_EQ(solve_maxsmt(cs).falsified, std::vector<std::size_t>{0});
}

TEST(Solve, ConsistentSetFalsifiesNothing) {
  TypeTerm t = TypeTerm::var(0);
  ClauseSet cs = with_vars({hard({pos(Atom::eq(t, TypeTerm::real()))}),
                            soft({pos(Atom::tester(TypeCtor::Real, t))}, 4, 0)},
                           1);
  SolveResult r = solve_maxsmt(cs);
  EXPECT_TRUE(r.falsified.empty());
  EXPECT_EQ(r.cost, 0);
}

TEST(Solve, HardUnsatThrows) {
  TypeTerm t = TypeTerm::var(0);
  ClauseSet cs = with_vars({hard({pos(Atom::eq(t, TypeTerm::real()))}),
                            hard({pos(Atom::eq(t, TypeTerm::integer()))})},
                           1);
  EXPECT_THROW(solve_maxsmt(cs), HardUnsatError);
}

TEST(Solve, AgreesWithBruteForce) {
  std::mt19937 rng(31337);
  for (int i = 0; i < 200; ++i) {
    ClauseSet cs = random_clause_set(rng, 10);
    auto brute = brute_force_maxsmt(cs);
    if (!brute) {
      EXPECT_THROW(solve_maxsmt(cs), HardUnsatError);
      continue;
    }
    SolveResult r = solve_maxsmt(cs);
    EXPECT_EQ(r.cost, brute->cost) << cs.dump();
    EXPECT_EQ(r.falsified, brute->falsified) << cs.dump();
    // Partition and objective invariants.
    std::vector<std::size_t> all = r.satisfied;
    all.insert(all.end(), r.falsified.begin(), r.falsified.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(cs.clauses.size());
    std::iota(expect.begin(), expect.end(), 0);
    EXPECT_EQ(all, expect);
    long long w = 0;
    for (auto k : r.falsified) {
      EXPECT_TRUE(cs.clauses[k].soft());
      w += cs.clauses[k].weight;
    }
    EXPECT_EQ(w, r.cost);
    for (auto k : r.satisfied) EXPECT_TRUE(holds(cs.clauses[k], r.model));
  }
}

TEST(External, AgreesWithInternal) {
  if (!have_program("z3")) GTEST_SKIP() << "z3 not installed";
  std::mt19937 rng(2024);
  ExternalSolverConfig cfg;
  for (int i = 0; i < 40; ++i) {
    ClauseSet cs = random_clause_set(rng, 8);
    if (!brute_force_maxsmt(cs)) {
      EXPECT_THROW(solve_external(cs, cfg), HardUnsatError);
      continue;
    }
    SolveResult a = solve_maxsmt(cs);
    SolveResult b = solve_external(cs, cfg);
    EXPECT_EQ(b.solver, "external");
    EXPECT_EQ(a.cost, b.cost) << cs.dump();
    EXPECT_EQ(a.falsified, b.falsified) << cs.dump();
  }
  SolveResult r = solve_external(state_conflict(3, 5), cfg);
  EXPECT_EQ(r.falsified, std::vector<std::size_t>{4});
}

TEST(External, TrafficLightDraftAgrees) {
  if (!have_program("z3")) GTEST_SKIP() << "z3 not installed";
  ClauseSet cs = generate_clauses(parse_child(ucgen::testing::read_text(
      ucgen::testing::source_dir() / "data" / "traffic_light" / "response1.py")).program);
  SolveResult a = solve_maxsmt(cs);
  SolveResult b = solve_external(cs, ExternalSolverConfig{});
  EXPECT_EQ(a.cost, b.cost);
  EXPECT_EQ(a.falsified, b.falsified);
}

TEST(External, MissingBinaryIsConfigError) {
  ExternalSolverConfig cfg;
  cfg.command = "ucgen-no-such-solver-xyz";
  try {
    solve_external(state_conflict(3, 5), cfg);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("ucgen-no-such-solver-xyz"), std::string::npos);
  }
}

TEST(External, ScriptMentionsEverySoftClause) {
  ClauseSet cs = state_conflict(3, 5);
  std::string s = to_smtlib(cs);
  EXPECT_NE(s.find("(check-sat)"), std::string::npos);
  std::size_t n = 0;
  for (std::size_t p = s.find("assert-soft"); p != std::string::npos; p = s.find("assert-soft", p + 1)) ++n;
  EXPECT_EQ(n, cs.soft_count());
}

TEST(Process, TimeoutIsReported) {
  auto t0 = std::chrono::steady_clock::now();
  EXPECT_THROW(run_process("sleep 5", "", std::chrono::milliseconds(200)), SolverTimeout);
  EXPECT_LT(std::chrono::steady_clock::now() - t0, std::chrono::seconds(3));
}

TEST(Process, CapturesOutput) {
  ProcessResult r = run_process("cat; echo err 1>&2", "hello\n", std::chrono::milliseconds(5000));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "hello\n");
  EXPECT_EQ(r.err, "err\n");
}

TEST(CheckSat, ClauseWithBothPolaritiesOfOneHoledAtom) {
  // The second literal becomes true only after the first branch fails.
  Atom h = Atom::holed(NodeId(7));
  auto r = check_sat({hard({neg(h), pos(h)}),
                      hard({pos(h), pos(Atom::eq(TypeTerm::var(0), TypeTerm::integer()))}),
                      hard({neg(h), pos(Atom::eq(TypeTerm::var(0), TypeTerm::real()))}),
                      hard({pos(Atom::eq(TypeTerm::var(0), TypeTerm::real()))})});
  ASSERT_TRUE(std::holds_alternative<SatResult>(r));
  EXPECT_TRUE(std::get<SatResult>(r).model.holed.count(NodeId(7)));
}
