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

// Validator for the emitted UCLID5 subset. Deliberately shares nothing with
// the constraint generator: it has its own type representation and rules.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "ucgen/uclid.hpp"

namespace ucgen {

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Tok {
  enum Kind { Ident, Int, Real, BV, Punct, End } kind = End;
  std::string text;
  int width = 0;
  int line = 1;
  int col = 1;
};

std::vector<Tok> lex(std::string_view src) {
  static const char* kPuncts[] = {"==>", ">>>", "==", "!=", "<=", ">=", "&&", "||", "<<", ">>",
                                  "++",  "{",   "}",  "(",  ")",  "[",  "]",  ";",  ":",  ",",
                                  "=",   "<",   ">",  "+",  "-",  "*",  "/",  "%",  "!",  "&",
                                  "|",   "^"};
  std::vector<Tok> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      std::size_t end = src.find("*/", i + 2);
      if (end == std::string_view::npos) throw UclidParseError("unterminated comment", line, col);
      advance(end + 2 - i);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        t.kind = Tok::Real;
        t.text = std::string(src.substr(i, j - i));
      } else if (src.substr(j, 2) == "bv" && j + 2 < src.size() &&
                 std::isdigit(static_cast<unsigned char>(src[j + 2]))) {
        std::size_t k = j + 2;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        t.kind = Tok::BV;
        std::string w(src.substr(j + 2, k - j - 2));
        t.width = w.size() > 6 ? 0 : std::stoi(w);
        j = k;
      }
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        t.kind = Tok::Punct;
        t.text = std::string(pv);
        advance(pv.size());
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (!matched) throw UclidParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  UclidModule module() {
    UclidModule m;
    m.has_next = false;
    expect_word("module");
    m.name = ident();
    expect("{");
    bool seen_proc = false, seen_init = false;
    while (!is("}")) {
      const Tok& t = peek();
      if (t.kind != Tok::Ident) fail("expected a declaration");
      if (t.text == "type") {
        next();
        UclidDecl d;
        d.name = ident();
        expect("=");
        d.type = type();
        expect(";");
        m.type_decls.push_back(std::move(d));
      } else if (t.text == "var" || t.text == "input" || t.text == "output") {
        std::string kw = next().text;
        std::vector<std::string> names{ident()};
        while (accept(",")) names.push_back(ident());
        expect(":");
        UclidType ty = type();
        expect(";");
        auto& list = kw == "var" ? m.var_decls : kw == "input" ? m.input_decls : m.output_decls;
        for (auto& n : names) list.push_back({n, ty});
      } else if (t.text == "init") {
        if (seen_init) fail("duplicate init block");
        seen_init = true;
        next();
        m.init_block = block();
      } else if (t.text == "procedure") {
        if (seen_proc) fail("only one procedure is supported");
        seen_proc = true;
        next();
        proc_name_ = ident();
        expect("(");
        expect(")");
        while (is_word("modifies")) {
          next();
          m.modifies.push_back(ident());
          while (accept(",")) m.modifies.push_back(ident());
          expect(";");
        }
        m.step_body = block();
      } else if (t.text == "next") {
        next();
        expect("{");
        expect_word("call");
        call_name_ = ident();
        expect("(");
        expect(")");
        expect(";");
        expect("}");
        m.has_next = true;
      } else if (t.text == "invariant") {
        next();
        UclidInvariant inv;
        inv.name = ident();
        expect(":");
        inv.expr = expr();
        expect(";");
        m.invariants.push_back(std::move(inv));
      } else if (t.text == "control") {
        next();
        expect("{");
        ident();
        expect("=");
        expect_word("unroll");
        expect("(");
        if (peek().kind != Tok::Int) fail("expected unroll bound");
        m.control_unroll = std::stoi(next().text);
        expect(")");
        expect(";");
        expect_word("check");
        expect(";");
        expect_word("print_results");
        expect(";");
        expect("}");
      } else {
        fail("unexpected '" + t.text + "'");
      }
    }
    expect("}");
    if (peek().kind != Tok::End) fail("trailing input after module");
    return m;
  }

  std::string proc_name_, call_name_;

 private:
  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool is_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool accept(std::string_view p) {
    if (!is(p)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw UclidParseError(msg, peek().line, peek().col);
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'");
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'");
    next();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return next().text;
  }

  UclidType type() {
    UclidType t;
    if (accept("[")) {
      t.kind = UclidType::Kind::Array;
      t.children.push_back(type());
      expect("]");
      t.children.push_back(type());
      return t;
    }
    std::string w = ident();
    if (w == "boolean") {
      t.kind = UclidType::Kind::Boolean;
    } else if (w == "integer") {
      t.kind = UclidType::Kind::Integer;
    } else if (w == "real") {
      t.kind = UclidType::Kind::Real;
    } else if (w == "enum") {
      t.kind = UclidType::Kind::Enum;
      expect("{");
      t.tags.push_back(ident());
      while (accept(",")) t.tags.push_back(ident());
      expect("}");
    } else if (w.size() > 2 && w.compare(0, 2, "bv") == 0 &&
               std::all_of(w.begin() + 2, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      t.kind = UclidType::Kind::BV;
      t.width = w.size() > 8 ? 0 : std::stoi(w.substr(2));
      if (t.width < 1) fail("bad bitvector width");
    } else {
      t.kind = UclidType::Kind::Named;
      t.name = w;
    }
    return t;
  }

  std::vector<UclidStmt> block() {
    expect("{");
    std::vector<UclidStmt> out;
    while (!is("}")) out.push_back(stmt());
    expect("}");
    return out;
  }

  UclidStmt stmt() {
    UclidStmt s;
    if (is_word("if")) {
      next();
      s.kind = UclidStmt::Kind::If;
      expect("(");
      s.exprs.push_back(expr());
      expect(")");
      s.then_body = block();
      if (is_word("else")) {
        next();
        if (is_word("if")) s.else_body.push_back(stmt());
        else s.else_body = block();
      }
      return s;
    }
    if (is_word("havoc")) {
      next();
      s.kind = UclidStmt::Kind::Havoc;
      UclidExpr id;
      id.kind = UclidExpr::Kind::Id;
      id.text = ident();
      s.exprs.push_back(std::move(id));
      expect(";");
      return s;
    }
    if (is_word("assume") || is_word("assert")) {
      s.kind = next().text == "assume" ? UclidStmt::Kind::Assume : UclidStmt::Kind::Assert;
      expect("(");
      s.exprs.push_back(expr());
      expect(")");
      expect(";");
      return s;
    }
    s.kind = UclidStmt::Kind::Assign;
    s.exprs.push_back(postfix());
    expect("=");
    s.exprs.push_back(expr());
    expect(";");
    return s;
  }

  static UclidExpr binary(std::string op, UclidExpr a, UclidExpr b) {
    UclidExpr e;
    e.kind = UclidExpr::Kind::Binary;
    e.text = std::move(op);
    e.args = {std::move(a), std::move(b)};
    return e;
  }

  UclidExpr expr() {
    if (is_word("if")) {
      next();
      UclidExpr e;
      e.kind = UclidExpr::Kind::Ite;
      expect("(");
      e.args.push_back(expr());
      expect(")");
      expect_word("then");
      e.args.push_back(expr());
      expect_word("else");
      e.args.push_back(expr());
      return e;
    }
    UclidExpr lhs = left_assoc(0);
    if (is("==>")) {
      next();
      return binary("==>", std::move(lhs), expr());
    }
    return lhs;
  }

  // Binary levels, loosest first.
  UclidExpr left_assoc(std::size_t level) {
    static const std::vector<std::vector<std::string>> levels = {
        {"||"}, {"&&"}, {"==", "!=", "<", "<=", ">", ">="}, {"|"}, {"^"}, {"&"},
        {"<<", ">>", ">>>"}, {"++"}, {"+", "-"}, {"*", "/", "%"}};
    if (level == levels.size()) return unary();
    UclidExpr lhs = left_assoc(level + 1);
    while (peek().kind == Tok::Punct) {
      const auto& ops = levels[level];
      auto it = std::find(ops.begin(), ops.end(), peek().text);
      if (it == ops.end()) break;
      std::string op = next().text;
      UclidExpr rhs = left_assoc(level + 1);
      lhs = binary(op, std::move(lhs), std::move(rhs));
      if (level == 2) break;  // comparisons do not chain
    }
    return lhs;
  }

  UclidExpr unary() {
    if (is("!") || is("-")) {
      UclidExpr e;
      e.kind = UclidExpr::Kind::Unary;
      e.text = next().text;
      e.args.push_back(unary());
      return e;
    }
    return postfix();
  }

  UclidExpr postfix() {
    UclidExpr e = primary();
    while (accept("[")) {
      UclidExpr s;
      s.kind = UclidExpr::Kind::Select;
      s.args.push_back(std::move(e));
      s.args.push_back(expr());
      expect("]");
      e = std::move(s);
    }
    return e;
  }

  UclidExpr primary() {
    UclidExpr e;
    const Tok& t = peek();
    switch (t.kind) {
      case Tok::Int:
        e.kind = UclidExpr::Kind::IntLit;
        e.text = next().text;
        return e;
      case Tok::Real:
        e.kind = UclidExpr::Kind::RealLit;
        e.text = next().text;
        return e;
      case Tok::BV:
        e.kind = UclidExpr::Kind::BVLit;
        e.width = t.width;
        e.text = next().text;
        return e;
      case Tok::Ident:
        if (t.text == "true" || t.text == "false") {
          e.kind = UclidExpr::Kind::BoolLit;
          e.value = next().text == "true";
          return e;
        }
        e.kind = UclidExpr::Kind::Id;
        e.text = next().text;
        return e;
      case Tok::Punct:
        if (accept("(")) {
          e = expr();
          expect(")");
          return e;
        }
        break;
      case Tok::End: break;
    }
    fail("expected expression");
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Typechecker

struct Ty {
  enum K { Bool, Int, Real, BV, Enum, Array } k = Int;
  int w = 0;
  std::vector<std::string> tags;  // sorted
  std::vector<Ty> kids;

  friend bool operator==(const Ty&, const Ty&) = default;

  std::string show() const {
    switch (k) {
      case Bool: return "boolean";
      case Int: return "integer";
      case Real: return "real";
      case BV: return "bv" + std::to_string(w);
      case Enum: {
        std::string s = "enum {";
        for (std::size_t i = 0; i < tags.size(); ++i) s += (i ? ", " : " ") + tags[i];
        return s + " }";
      }
      case Array: return "[" + kids[0].show() + "]" + kids[1].show();
    }
    return "?";
  }
  bool numeric() const { return k == Int || k == Real || k == BV; }
};

Ty mk(Ty::K k, int w = 0) {
  Ty t;
  t.k = k;
  t.w = w;
  return t;
}

class Checker {
 public:
  std::vector<Diagnostic> run(const UclidModule& m, const std::string& proc, const std::string& call) {
    for (const auto& d : m.type_decls) {
      if (types_.count(d.name)) error("duplicate type " + d.name);
      auto t = resolve(d.type);
      if (t) types_[d.name] = *t;
    }
    auto declare = [&](const std::vector<UclidDecl>& ds, bool input) {
      for (const auto& d : ds) {
        if (vars_.count(d.name)) {
          error("duplicate declaration of " + d.name);
          continue;
        }
        auto t = resolve(d.type);
        if (!t) continue;
        vars_[d.name] = *t;
        if (input) inputs_.insert(d.name);
      }
    };
    declare(m.var_decls, false);
    declare(m.input_decls, true);
    declare(m.output_decls, false);

    context_ = "init";
    for (const auto& s : m.init_block) stmt(s, nullptr);
    context_ = "procedure";
    std::set<std::string> mods;
    for (const auto& v : m.modifies) {
      if (!vars_.count(v)) error("modifies undeclared " + v);
      else if (inputs_.count(v)) error("modifies input " + v);
      mods.insert(v);
    }
    for (const auto& s : m.step_body) stmt(s, &mods);
    if (m.has_next && call != proc) error("next calls unknown procedure " + call);
    context_ = "invariant";
    std::set<std::string> inv_names;
    for (const auto& inv : m.invariants) {
      if (!inv_names.insert(inv.name).second) error("duplicate invariant " + inv.name);
      expect_type(inv.expr, mk(Ty::Bool));
    }
    return std::move(diags_);
  }

 private:
  void error(const std::string& msg) { diags_.push_back({0, 0, context_.empty() ? msg : context_ + ": " + msg}); }

  void collect_tags(const Ty& t) {
    if (t.k == Ty::Enum)
      for (const auto& tag : t.tags) {
        auto& list = enum_tags_[tag];
        if (std::find(list.begin(), list.end(), t) == list.end()) list.push_back(t);
      }
    for (const auto& k : t.kids) collect_tags(k);
  }

  std::optional<Ty> resolve(const UclidType& u) {
    Ty t;
    switch (u.kind) {
      case UclidType::Kind::Boolean: return mk(Ty::Bool);
      case UclidType::Kind::Integer: return mk(Ty::Int);
      case UclidType::Kind::Real: return mk(Ty::Real);
      case UclidType::Kind::BV:
        if (u.width < 1) {
          error("bad bitvector width");
          return std::nullopt;
        }
        return mk(Ty::BV, u.width);
      case UclidType::Kind::Enum: {
        t.k = Ty::Enum;
        t.tags = u.tags;
        std::sort(t.tags.begin(), t.tags.end());
        if (std::adjacent_find(t.tags.begin(), t.tags.end()) != t.tags.end()) {
          error("repeated enum tag");
          return std::nullopt;
        }
        collect_tags(t);
        return t;
      }
      case UclidType::Kind::Array: {
        auto i = resolve(u.children.at(0));
        auto e = resolve(u.children.at(1));
        if (!i || !e) return std::nullopt;
        t.k = Ty::Array;
        t.kids = {*i, *e};
        return t;
      }
      case UclidType::Kind::Named: {
        auto it = types_.find(u.name);
        if (it == types_.end()) {
          error("unknown type " + u.name);
          return std::nullopt;
        }
        return it->second;
      }
    }
    return std::nullopt;
  }

  // Root variable of an assignment target.
  std::optional<std::string> root(const UclidExpr& e) {
    const UclidExpr* cur = &e;
    while (cur->kind == UclidExpr::Kind::Select) cur = &cur->args[0];
    if (cur->kind != UclidExpr::Kind::Id) return std::nullopt;
    return cur->text;
  }

  void stmt(const UclidStmt& s, const std::set<std::string>* mods) {
    switch (s.kind) {
      case UclidStmt::Kind::Assign:
      case UclidStmt::Kind::Havoc: {
        auto r = root(s.exprs[0]);
        if (!r) {
          error("assignment target is not a variable");
          return;
        }
        if (!vars_.count(*r)) {
          error("assignment to undeclared " + *r);
          return;
        }
        if (inputs_.count(*r)) error("assignment to input " + *r);
        if (mods && !mods->count(*r)) error(*r + " is assigned but not in modifies");
        auto lt = infer(s.exprs[0], std::nullopt);
        if (s.kind == UclidStmt::Kind::Assign && lt) expect_type(s.exprs[1], *lt);
        else if (s.kind == UclidStmt::Kind::Assign) infer(s.exprs[1], std::nullopt);
        break;
      }
      case UclidStmt::Kind::Assume:
      case UclidStmt::Kind::Assert: expect_type(s.exprs[0], mk(Ty::Bool)); break;
      case UclidStmt::Kind::If:
        expect_type(s.exprs[0], mk(Ty::Bool));
        for (const auto& c : s.then_body) stmt(c, mods);
        for (const auto& c : s.else_body) stmt(c, mods);
        break;
    }
  }

  void expect_type(const UclidExpr& e, const Ty& want) {
    auto t = infer(e, want);
    if (t && !(*t == want)) error("expected " + want.show() + ", found " + t->show());
  }

  std::optional<Ty> infer(const UclidExpr& e, const std::optional<Ty>& hint) {
    switch (e.kind) {
      case UclidExpr::Kind::BoolLit: return mk(Ty::Bool);
      case UclidExpr::Kind::IntLit: return mk(Ty::Int);
      case UclidExpr::Kind::RealLit: return mk(Ty::Real);
      case UclidExpr::Kind::BVLit:
        if (e.width < 1) {
          error("bad bitvector literal");
          return std::nullopt;
        }
        return mk(Ty::BV, e.width);
      case UclidExpr::Kind::Id: {
        auto v = vars_.find(e.text);
        if (v != vars_.end()) return v->second;
        auto tg = enum_tags_.find(e.text);
        if (tg == enum_tags_.end()) {
          error("undeclared identifier " + e.text);
          return std::nullopt;
        }
        if (tg->second.size() == 1) return tg->second.front();
        if (hint && std::find(tg->second.begin(), tg->second.end(), *hint) != tg->second.end())
          return *hint;
        error("ambiguous enum tag " + e.text);
        return std::nullopt;
      }
      case UclidExpr::Kind::Unary: {
        auto a = infer(e.args[0], e.text == "!" ? std::optional<Ty>(mk(Ty::Bool)) : hint);
        if (!a) return std::nullopt;
        if (e.text == "!") {
          if (a->k != Ty::Bool) error("! expects boolean, found " + a->show());
          return mk(Ty::Bool);
        }
        if (!a->numeric()) error("unary - expects a number, found " + a->show());
        return a;
      }
      case UclidExpr::Kind::Binary: return binary(e, hint);
      case UclidExpr::Kind::Ite: {
        expect_type(e.args[0], mk(Ty::Bool));
        auto a = infer(e.args[1], hint);
        if (!a) {
          infer(e.args[2], hint);
          return std::nullopt;
        }
        expect_type(e.args[2], *a);
        return a;
      }
      case UclidExpr::Kind::Select: {
        auto a = infer(e.args[0], std::nullopt);
        if (!a) return std::nullopt;
        if (a->k != Ty::Array) {
          error("indexing a non-array of type " + a->show());
          return std::nullopt;
        }
        expect_type(e.args[1], a->kids[0]);
        return a->kids[1];
      }
    }
    return std::nullopt;
  }

  std::optional<Ty> binary(const UclidExpr& e, const std::optional<Ty>& hint) {
    const std::string& op = e.text;
    auto same = [&](const std::optional<Ty>& h) -> std::optional<Ty> {
      auto a = infer(e.args[0], h);
      if (!a) {
        infer(e.args[1], h);
        return std::nullopt;
      }
      expect_type(e.args[1], *a);
      return a;
    };
    if (op == "&&" || op == "||" || op == "==>") {
      expect_type(e.args[0], mk(Ty::Bool));
      expect_type(e.args[1], mk(Ty::Bool));
      return mk(Ty::Bool);
    }
    if (op == "==" || op == "!=") {
      auto a = infer(e.args[0], std::nullopt);
      if (a) expect_type(e.args[1], *a);
      else infer(e.args[1], std::nullopt);
      return mk(Ty::Bool);
    }
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      auto a = same(std::nullopt);
      if (a && !a->numeric()) error(op + " expects numbers, found " + a->show());
      return mk(Ty::Bool);
    }
    if (op == "+" || op == "-" || op == "*") {
      auto a = same(hint);
      if (a && !a->numeric()) error(op + " expects numbers, found " + a->show());
      return a;
    }
    if (op == "/" || op == "%") {
      expect_type(e.args[0], mk(Ty::Int));
      expect_type(e.args[1], mk(Ty::Int));
      return mk(Ty::Int);
    }
    if (op == "&" || op == "|" || op == "^" || op == "<<" || op == ">>" || op == ">>>") {
      auto a = same(hint);
      if (a && a->k != Ty::BV) error(op + " expects bitvectors, found " + a->show());
      return a;
    }
    if (op == "++") {
      auto a = infer(e.args[0], std::nullopt);
      auto b = infer(e.args[1], std::nullopt);
      if (!a || !b) return std::nullopt;
      if (a->k != Ty::BV || b->k != Ty::BV) {
        error("++ expects bitvectors");
        return std::nullopt;
      }
      return mk(Ty::BV, a->w + b->w);
    }
    error("unknown operator " + op);
    return std::nullopt;
  }

  std::map<std::string, Ty> types_;
  std::map<std::string, Ty> vars_;
  std::set<std::string> inputs_;
  std::map<std::string, std::vector<Ty>> enum_tags_;
  std::vector<Diagnostic> diags_;
  std::string context_;
};

}  // namespace

UclidModule parse_uclid(std::string_view source) {
  Parser p(lex(source));
  return p.module();
}

std::vector<Diagnostic> validate_uclid(std::string_view source) {
  try {
    Parser p(lex(source));
    UclidModule m = p.module();
    return Checker().run(m, p.proc_name_, p.call_name_);
  } catch (const UclidParseError& e) {
    return {{e.line(), e.col(), e.what()}};
  }
}

}  // namespace ucgen
