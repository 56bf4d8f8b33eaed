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

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "maxsmt_internal.hpp"
#include "ucgen/maxsmt.hpp"

namespace ucgen {

namespace {

std::string smt_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::string smt_term(const TypeTerm& t) {
  switch (t.kind()) {
    case TypeTerm::Kind::Bool: return "TBool";
    case TypeTerm::Kind::Int: return "TInt";
    case TypeTerm::Kind::Real: return "TReal";
    case TypeTerm::Kind::BV: return "(TBV " + std::to_string(t.width()) + ")";
    case TypeTerm::Kind::Enum: {
      std::string joined;
      for (const auto& tag : t.tags()) joined += (joined.empty() ? "" : ",") + tag;
      return "(TEnum " + smt_string(joined) + ")";
    }
    case TypeTerm::Kind::Array:
      return "(TArray " + smt_term(t.index()) + " " + smt_term(t.element()) + ")";
    case TypeTerm::Kind::Synonym: return "(TSyn " + smt_string(t.name()) + ")";
    case TypeTerm::Kind::Var: return "t" + std::to_string(t.var_id());
  }
  return "TInt";
}

std::string smt_ctor(TypeCtor c) {
  switch (c) {
    case TypeCtor::Bool: return "TBool";
    case TypeCtor::Int: return "TInt";
    case TypeCtor::Real: return "TReal";
    case TypeCtor::BV: return "TBV";
    case TypeCtor::Enum: return "TEnum";
    case TypeCtor::Array: return "TArray";
    case TypeCtor::Synonym: return "TSyn";
  }
  return "TInt";
}

std::string smt_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Const: return a.value ? "true" : "false";
    case Atom::Kind::Eq: return "(= " + smt_term(a.lhs) + " " + smt_term(a.rhs) + ")";
    case Atom::Kind::Tester: return "((_ is " + smt_ctor(a.ctor) + ") " + smt_term(a.lhs) + ")";
    case Atom::Kind::Holed: return "h" + std::to_string(a.node.value);
  }
  return "false";
}

std::string smt_clause(const Clause& c) {
  if (c.literals.empty()) return "false";
  std::string out = "(or";
  for (const Literal& l : c.literals) {
    out += ' ';
    out += l.positive ? smt_atom(l.atom) : "(not " + smt_atom(l.atom) + ")";
  }
  return out + ")";
}

}  // namespace

std::string to_smtlib(const ClauseSet& cs) {
  std::ostringstream out;
  out << "(set-option :produce-models true)\n"
      << "(set-option :opt.priority lex)\n"
      << "(declare-datatype Ty ((TBool) (TInt) (TReal) (TBV (bv_width Int)) "
         "(TEnum (enum_tags String)) (TArray (arr_index Ty) (arr_elem Ty)) "
         "(TSyn (syn_name String))))\n";
  for (std::size_t v = 0; v < cs.tvar_table.size(); ++v) out << "(declare-const t" << v << " Ty)\n";
  std::set<NodeId> holed;
  for (const Clause& c : cs.clauses)
    for (const Literal& l : c.literals)
      if (l.atom.kind == Atom::Kind::Holed) holed.insert(l.atom.node);
  for (NodeId n : holed) out << "(declare-const h" << n.value << " Bool)\n";
  for (const Clause& c : cs.clauses)
    if (c.hard) out << "(assert " << smt_clause(c) << ")\n";
  std::vector<std::size_t> soft;
  for (std::size_t i = 0; i < cs.clauses.size(); ++i) {
    const Clause& c = cs.clauses[i];
    if (c.hard) continue;
    soft.push_back(i);
    out << "(declare-const s" << i << " Bool)\n"
        << "(assert (=> s" << i << " " << smt_clause(c) << "))\n";
  }
  for (std::size_t i : soft)
    out << "(assert-soft s" << i << " :weight " << cs.clauses[i].weight << " :id cost)\n";
  for (std::size_t i : soft) out << "(maximize (ite s" << i << " 0 1))\n";
  out << "(check-sat)\n";
  if (!soft.empty()) {
    out << "(get-value (";
    for (std::size_t k = 0; k < soft.size(); ++k) out << (k ? " " : "") << "s" << soft[k];
    out << "))\n";
  }
  return out.str();
}

ProcessResult run_process(const std::string& command, const std::string& input,
                          std::chrono::milliseconds timeout) {
  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
    throw SolverError(std::string("pipe: ") + std::strerror(errno));
  pid_t pid = fork();
  if (pid < 0) throw SolverError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    dup2(in_pipe[0], 0);
    dup2(out_pipe[1], 1);
    dup2(err_pipe[1], 2);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
      close(fd);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  signal(SIGPIPE, SIG_IGN);
  for (int fd : {in_pipe[1], out_pipe[0], err_pipe[0]}) fcntl(fd, F_SETFL, O_NONBLOCK);

  ProcessResult r;
  std::size_t written = 0;
  int in_fd = in_pipe[1];
  if (input.empty()) {
    close(in_fd);
    in_fd = -1;
  }
  int out_fd = out_pipe[0], err_fd = err_pipe[0];
  auto deadline = std::chrono::steady_clock::now() + timeout;
  bool timed_out = false;
  char buf[4096];
  while (out_fd >= 0 || err_fd >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    std::vector<pollfd> fds;
    if (in_fd >= 0) fds.push_back({in_fd, POLLOUT, 0});
    if (out_fd >= 0) fds.push_back({out_fd, POLLIN, 0});
    if (err_fd >= 0) fds.push_back({err_fd, POLLIN, 0});
    int rc = poll(fds.data(), fds.size(), static_cast<int>(left.count()));
    if (rc < 0 && errno != EINTR) break;
    for (const pollfd& p : fds) {
      if (!p.revents) continue;
      if (p.fd == in_fd) {
        ssize_t n = write(in_fd, input.data() + written, input.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 || written == input.size()) {
          close(in_fd);
          in_fd = -1;
        }
      } else {
        ssize_t n = read(p.fd, buf, sizeof buf);
        if (n > 0) {
          (p.fd == out_fd ? r.out : r.err).append(buf, static_cast<std::size_t>(n));
        } else if (n == 0 || (errno != EAGAIN && errno != EINTR)) {
          close(p.fd);
          (p.fd == out_fd ? out_fd : err_fd) = -1;
        }
      }
    }
  }
  for (int fd : {in_fd, out_fd, err_fd})
    if (fd >= 0) close(fd);
  if (timed_out) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    throw SolverTimeout("solver timed out after " + std::to_string(timeout.count()) + " ms");
  }
  int status = 0;
  waitpid(pid, &status, 0);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  return r;
}

SolveResult solve_external(const ClauseSet& cs, const ExternalSolverConfig& cfg) {
  ProcessResult pr = run_process(cfg.command, to_smtlib(cs), cfg.timeout);
  if (pr.exit_code == 127) throw ConfigError("solver command not found: " + cfg.command);

  std::istringstream lines(pr.out);
  std::string first;
  std::getline(lines, first);
  if (first == "unsat") {
    std::vector<std::size_t> none;
    throw HardUnsatError("external solver: hard clauses are unsatisfiable", none);
  }
  if (first != "sat")
    throw SolverError("external solver: unexpected answer '" + first + "' " + pr.err);

  std::set<std::size_t> dropped;
  static const std::regex value_re(R"(\(s(\d+)\s+(true|false)\))");
  std::size_t seen = 0;
  for (std::sregex_iterator it(pr.out.begin(), pr.out.end(), value_re), end; it != end; ++it) {
    ++seen;
    if ((*it)[2] == "false") dropped.insert(std::stoul((*it)[1]));
  }
  if (seen != cs.soft_count()) throw SolverError("external solver: incomplete model output");

  SolveResult r;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < cs.clauses.size(); ++i) {
    if (dropped.count(i)) {
      r.falsified.push_back(i);
      r.cost += cs.clauses[i].weight;
    } else {
      active.push_back(i);
    }
  }
  detail::Oracle oracle(cs.clauses, static_cast<int>(cs.tvar_table.size()), nullptr);
  if (!oracle.sat(active, &r.model))
    throw SolverError("external solver: reported assignment is inconsistent");
  r.satisfied = std::move(active);
  r.solver = "external";
  return r;
}

}  // namespace ucgen
