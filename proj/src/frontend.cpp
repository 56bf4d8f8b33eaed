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

#include "ucgen/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ucgen {
namespace {

// ---------------------------------------------------------------------------
// Small text helpers

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == s.size()) break;
    start = nl + 1;
  }
  return out;
}

std::string join_lines(const std::vector<std::string_view>& lines, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) out += '\n';
    out += lines[i];
  }
  return out;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool is_ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

const std::unordered_set<std::string>& python_keywords() {
  static const std::unordered_set<std::string> kw = {
      "False", "None",   "True",    "and",      "as",     "assert", "async",  "await",
      "break", "class",  "continue", "def",     "del",    "elif",   "else",   "except",
      "finally", "for",  "from",    "global",   "if",     "import", "in",     "is",
      "lambda", "nonlocal", "not",  "or",       "pass",   "raise",  "return", "try",
      "while", "with",   "yield"};
  return kw;
}

// ASCII identifier that is not a Python keyword.
bool is_plain_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !python_keywords().count(std::string(s));
}

bool starts_code_line(std::string_view line) {
  return line.starts_with("class ") || line.starts_with("import ") || line.starts_with("from ");
}

bool is_fence(std::string_view line) { return trim_left(line).starts_with("```"); }

// ---------------------------------------------------------------------------
// Source positions

class SourceMap {
 public:
  explicit SourceMap(std::string_view src) : size_(src.size()) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i] == '\n') starts_.push_back(i + 1);
  }

  Span span(std::size_t b, std::size_t e) const {
    b = std::min(b, size_);
    e = std::clamp(e, b, size_);
    Span s;
    s.byte_start = b;
    s.byte_end = e;
    auto [lb, cb] = locate(b);
    auto [le, ce] = locate(e);
    s.line_start = lb;
    s.col_start = cb;
    s.line_end = le;
    s.col_end = ce;
    return s;
  }

 private:
  std::pair<int, int> locate(std::size_t off) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), off);
    auto line = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return {static_cast<int>(line) + 1, static_cast<int>(off - starts_[line]) + 1};
  }

  std::size_t size_;
  std::vector<std::size_t> starts_;
};

// ---------------------------------------------------------------------------
// Lexing into logical lines

enum class Tok { Name, Number, String, Op, Hole };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;
  std::size_t end;
};

struct LogicalLine {
  int indent = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<Token> tokens;
  bool lex_error = false;
};

constexpr std::string_view kOps3[] = {"**=", "//=", ">>=", "<<=", "..."};
constexpr std::string_view kOps2[] = {"**", "//", "<<", ">>", "<=", ">=", "==", "!=", "+=", "-=",
                                      "*=", "/=", "%=", "&=", "|=", "^=", "@=", "->", ":="};
constexpr std::string_view kOps1 = "+-*/%&|^~<>()[]{},:.;@=";

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<LogicalLine> run() {
    std::vector<LogicalLine> lines;
    while (pos_ < src_.size()) {
      std::size_t first = 0;
      int indent = indent_at(pos_, &first);
      if (blank_or_comment(first)) {
        pos_ = line_end(pos_) + 1;
        continue;
      }
      LogicalLine line;
      line.indent = indent;
      line.begin = first;
      lex(line, first);
      lines.push_back(std::move(line));
    }
    return lines;
  }

 private:
  std::size_t line_end(std::size_t p) const {
    std::size_t nl = src_.find('\n', p);
    return nl == std::string_view::npos ? src_.size() : nl;
  }

  int indent_at(std::size_t line_start, std::size_t* first) const {
    int indent = 0;
    std::size_t p = line_start;
    while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t' || src_[p] == '\f')) {
      if (src_[p] == '\t')
        indent = (indent / 8 + 1) * 8;
      else if (src_[p] == ' ')
        ++indent;
      ++p;
    }
    *first = p;
    return indent;
  }

  bool blank_or_comment(std::size_t first) const {
    if (first >= src_.size()) return true;
    char c = src_[first];
    if (c == '#' || c == '\n') return true;
    return c == '\r' && (first + 1 >= src_.size() || src_[first + 1] == '\n');
  }

  // Ends the logical line at the end of the physical line containing p.
  void fail_to_eol(LogicalLine& line, std::size_t p) {
    line.lex_error = true;
    std::size_t e = line_end(p);
    line.end = e;
    pos_ = e + 1;
  }

  void finish(LogicalLine& line, std::size_t next) {
    line.end = line.tokens.empty() ? line.begin : line.tokens.back().end;
    pos_ = next;
  }

  bool continues_docstring(std::size_t next_line, int indent) const {
    std::size_t first = 0;
    int ind = indent_at(next_line, &first);
    if (first >= src_.size() || src_[first] == '\n' || src_[first] == '\r') return true;
    if (ind < indent) return false;
    if (ind == indent) {
      std::string_view rest = src_.substr(first);
      if (rest.starts_with("def ") || rest.starts_with("class ")) return false;
    }
    return true;
  }

  void lex(LogicalLine& line, std::size_t p) {
    std::vector<char> brackets;
    while (true) {
      if (p >= src_.size()) {
        if (!brackets.empty()) line.lex_error = true;
        finish(line, p);
        if (line.lex_error) line.end = p;
        return;
      }
      char c = src_[p];
      if (c == '\n') {
        if (brackets.empty()) {
          finish(line, p + 1);
          return;
        }
        // Bracket continuation only onto deeper or closing-bracket lines.
        std::size_t next = p + 1;
        std::size_t first = 0;
        int ind = 0;
        while (true) {
          if (next >= src_.size()) {
            line.lex_error = true;
            line.end = p;
            pos_ = src_.size();
            return;
          }
          ind = indent_at(next, &first);
          if (!blank_or_comment(first)) break;
          next = line_end(next) + 1;
        }
        char fc = src_[first];
        if (ind > line.indent || fc == ')' || fc == ']' || fc == '}') {
          p = first;
          continue;
        }
        line.lex_error = true;
        line.end = p;
        pos_ = p + 1;
        return;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        ++p;
        continue;
      }
      if (c == '#') {
        p = line_end(p);
        continue;
      }
      if (c == '\\') {
        std::size_t q = p + 1;
        if (q < src_.size() && src_[q] == '\r') ++q;
        if (q >= src_.size()) {
          p = q;
          continue;
        }
        if (src_[q] == '\n') {
          p = q + 1;
          continue;
        }
        fail_to_eol(line, p);
        return;
      }
      if (c == '\'' || c == '"') {
        if (!lex_string(line, p, p)) return;
        p = line.tokens.back().end;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && p + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p + 1])))) {
        p = lex_number(line, p);
        continue;
      }
      if (is_ident_start(c)) {
        std::size_t q = p;
        while (q < src_.size() && is_ident_char(src_[q])) ++q;
        std::string_view word = src_.substr(p, q - p);
        bool prefix = word.size() <= 2 && q < src_.size() && (src_[q] == '\'' || src_[q] == '"') &&
                      std::all_of(word.begin(), word.end(), [](char ch) {
                        return std::string_view("rRbBuUfF").find(ch) != std::string_view::npos;
                      });
        if (prefix) {
          if (!lex_string(line, p, q)) return;
          p = line.tokens.back().end;
          continue;
        }
        line.tokens.push_back({Tok::Name, std::string(word), p, q});
        p = q;
        continue;
      }
      if (c == '?' && p + 1 < src_.size() && src_[p + 1] == '?') {
        line.tokens.push_back({Tok::Hole, "??", p, p + 2});
        p += 2;
        continue;
      }
      std::string_view op = match_op(p);
      if (op.empty()) {
        fail_to_eol(line, p);
        return;
      }
      if (op == "(" || op == "[" || op == "{") {
        brackets.push_back(op[0]);
      } else if (op == ")" || op == "]" || op == "}") {
        char want = op == ")" ? '(' : op == "]" ? '[' : '{';
        if (brackets.empty() || brackets.back() != want) {
          fail_to_eol(line, p);
          return;
        }
        brackets.pop_back();
      }
      line.tokens.push_back({Tok::Op, std::string(op), p, p + op.size()});
      p += op.size();
    }
  }

  std::string_view match_op(std::size_t p) const {
    std::string_view rest = src_.substr(p);
    for (auto op : kOps3)
      if (rest.starts_with(op)) return op;
    for (auto op : kOps2)
      if (rest.starts_with(op)) return op;
    if (kOps1.find(rest[0]) != std::string_view::npos) return rest.substr(0, 1);
    return {};
  }

  std::size_t lex_number(LogicalLine& line, std::size_t p) {
    std::size_t q = p;
    auto digit = [&](std::size_t i) {
      return i < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[i])) || src_[i] == '_');
    };
    if (src_[q] == '0' && q + 1 < src_.size() &&
        std::string_view("xXoObB").find(src_[q + 1]) != std::string_view::npos) {
      q += 2;
    } else {
      while (digit(q)) ++q;
      if (q < src_.size() && src_[q] == '.') {
        ++q;
        while (digit(q)) ++q;
      }
      if (q < src_.size() && (src_[q] == 'e' || src_[q] == 'E')) {
        std::size_t r = q + 1;
        if (r < src_.size() && (src_[r] == '+' || src_[r] == '-')) ++r;
        if (digit(r)) {
          q = r;
          while (digit(q)) ++q;
        }
      }
    }
    while (q < src_.size() && is_ident_char(src_[q])) ++q;
    line.tokens.push_back({Tok::Number, std::string(src_.substr(p, q - p)), p, q});
    return q;
  }

  // Returns false when the string is unterminated (line already closed).
  bool lex_string(LogicalLine& line, std::size_t begin, std::size_t quote) {
    char q = src_[quote];
    bool triple = quote + 2 < src_.size() && src_[quote + 1] == q && src_[quote + 2] == q;
    std::size_t p = quote + (triple ? 3 : 1);
    while (true) {
      if (p >= src_.size()) {
        line.lex_error = true;
        line.end = src_.size();
        pos_ = src_.size();
        return false;
      }
      char c = src_[p];
      if (c == '\\') {
        p += 2;
        continue;
      }
      if (triple) {
        if (c == q && p + 2 < src_.size() && src_[p + 1] == q && src_[p + 2] == q) {
          p += 3;
          break;
        }
        if (c == '\n' && !continues_docstring(p + 1, line.indent)) {
          line.lex_error = true;
          line.end = p;
          pos_ = p + 1;
          return false;
        }
      } else {
        if (c == q) {
          ++p;
          break;
        }
        if (c == '\n') {
          line.lex_error = true;
          line.end = p;
          pos_ = p + 1;
          return false;
        }
      }
      ++p;
    }
    line.tokens.push_back({Tok::String, std::string(src_.substr(begin, p - begin)), begin, p});
    return true;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive-descent parsing of one logical line

struct ParseFail {};

constexpr int kMaxNesting = 150;

class LineParser {
 public:
  LineParser(const std::vector<Token>& toks, std::size_t b, std::size_t e, const SourceMap& sm)
      : toks_(toks), pos_(b), end_(e), sm_(sm) {}

  bool at_end() const { return pos_ >= end_; }

  ParentNode expr_all() {
    ParentNode n = test();
    if (!at_end()) throw ParseFail{};
    return n;
  }

  ParentNode exprlist_all() {
    ParentNode n = exprlist();
    if (!at_end()) throw ParseFail{};
    return n;
  }

  ParentNode simple_stmt() {
    std::size_t s = pos_;
    if (is_kw("pass")) {
      take();
      ParentNode n = node(ParentKind::Pass, "pass", s);
      require_end();
      return n;
    }
    if (is_kw("return")) {
      take();
      std::vector<ParentNode> kids;
      if (starts_expr()) kids.push_back(exprlist());
      require_end();
      return node(ParentKind::Return, "return", s, std::move(kids));
    }
    if (is_kw("assert")) {
      take();
      std::vector<ParentNode> kids;
      kids.push_back(test());
      if (is_op(",")) {
        take();
        kids.push_back(test());
      }
      require_end();
      return node(ParentKind::Assert, "assert", s, std::move(kids));
    }
    if (is_kw("import") || is_kw("from")) {
      pos_ = end_;
      return node(ParentKind::Import, toks_[s].text, s);
    }
    static const std::set<std::string> kOther = {"global", "nonlocal", "del",   "raise",
                                                 "break",  "continue", "yield", "await"};
    if (peek() && peek()->kind == Tok::Name && kOther.count(peek()->text)) {
      std::string kw = peek()->text;
      pos_ = end_;
      return node(ParentKind::OtherStmt, kw, s);
    }
    ParentNode first = exprlist();
    if (at_end()) {
      std::vector<ParentNode> kids;
      kids.push_back(std::move(first));
      return node(ParentKind::ExprStmt, "", s, std::move(kids));
    }
    if (is_op("=")) {
      std::vector<ParentNode> kids;
      kids.push_back(std::move(first));
      while (is_op("=")) {
        take();
        kids.push_back(exprlist());
      }
      require_end();
      return node(ParentKind::Assign, "=", s, std::move(kids));
    }
    static const std::set<std::string> kAug = {"+=", "-=", "*=", "/=",  "//=", "%=", "&=",
                                               "|=", "^=", "<<=", ">>=", "**=", "@="};
    if (peek()->kind == Tok::Op && kAug.count(peek()->text)) {
      std::string op = take().text;
      op.pop_back();
      std::vector<ParentNode> kids;
      kids.push_back(std::move(first));
      kids.push_back(exprlist());
      require_end();
      return node(ParentKind::AugAssign, op, s, std::move(kids));
    }
    if (is_op(":")) {
      take();
      std::vector<ParentNode> kids;
      kids.push_back(std::move(first));
      kids.push_back(test());
      if (is_op("=")) {
        take();
        kids.push_back(exprlist());
      }
      require_end();
      return node(ParentKind::AnnAssign, ":", s, std::move(kids));
    }
    throw ParseFail{};
  }

  // Comma-separated expressions / keyword arguments up to end_.
  std::vector<ParentNode> arglist() {
    std::vector<ParentNode> out;
    while (!at_end()) {
      out.push_back(argument());
      if (at_end()) break;
      expect_op(",");
    }
    return out;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(int& d) : d_(d) {
      if (++d_ > kMaxNesting) {
        --d_;
        throw ParseFail{};
      }
    }
    ~DepthGuard() { --d_; }
    int& d_;
  };

  const Token* peek(std::size_t k = 0) const {
    return pos_ + k < end_ ? &toks_[pos_ + k] : nullptr;
  }
  bool is_op(std::string_view s, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t && t->kind == Tok::Op && t->text == s;
  }
  bool is_kw(std::string_view s, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t && t->kind == Tok::Name && t->text == s;
  }
  const Token& take() {
    if (at_end()) throw ParseFail{};
    return toks_[pos_++];
  }
  void expect_op(std::string_view s) {
    if (!is_op(s)) throw ParseFail{};
    ++pos_;
  }
  void require_end() const {
    if (!at_end()) throw ParseFail{};
  }

  ParentNode node(ParentKind k, std::string text, std::size_t start,
                  std::vector<ParentNode> kids = {}) const {
    ParentNode n;
    n.kind = k;
    n.text = std::move(text);
    std::size_t last = pos_ > start ? pos_ - 1 : start;
    n.span = sm_.span(toks_[start].begin, toks_[last].end);
    n.children = std::move(kids);
    return n;
  }

  bool starts_expr() const {
    const Token* t = peek();
    if (!t) return false;
    switch (t->kind) {
      case Tok::Number:
      case Tok::String:
      case Tok::Hole:
        return true;
      case Tok::Name:
        return !python_keywords().count(t->text) || t->text == "True" || t->text == "False" ||
               t->text == "None" || t->text == "not";
      case Tok::Op:
        return t->text == "(" || t->text == "[" || t->text == "{" || t->text == "-" ||
               t->text == "+" || t->text == "~" || t->text == "...";
    }
    return false;
  }

  // Index of the token closing the bracket opened at `open`.
  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < end_; ++i) {
      const Token& t = toks_[i];
      if (t.kind != Tok::Op) continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0) return i;
      }
    }
    throw ParseFail{};
  }

  // True if a top-level token with `text` occurs inside the bracket at `open`.
  bool bracket_contains(std::size_t open, std::string_view text, Tok kind) const {
    std::size_t close = matching(open);
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
      const Token& t = toks_[i];
      if (t.kind == Tok::Op && (t.text == "(" || t.text == "[" || t.text == "{")) ++depth;
      if (t.kind == Tok::Op && (t.text == ")" || t.text == "]" || t.text == "}")) --depth;
      if (depth == 0 && t.kind == kind && t.text == text) return true;
    }
    return false;
  }

  ParentNode exprlist() {
    std::size_t s = pos_;
    ParentNode first = test();
    if (!is_op(",")) return first;
    std::vector<ParentNode> items;
    items.push_back(std::move(first));
    while (is_op(",")) {
      take();
      if (!starts_expr()) break;
      items.push_back(test());
    }
    return node(ParentKind::Collection, "tuple", s, std::move(items));
  }

  ParentNode test() {
    DepthGuard g(depth_);
    std::size_t s = pos_;
    if (is_kw("lambda")) throw ParseFail{};
    ParentNode body = or_test();
    if (!is_kw("if")) return body;
    take();
    ParentNode cond = or_test();
    if (!is_kw("else")) throw ParseFail{};
    take();
    ParentNode orelse = test();
    std::vector<ParentNode> kids;
    kids.push_back(std::move(cond));
    kids.push_back(std::move(body));
    kids.push_back(std::move(orelse));
    return node(ParentKind::IfExp, "", s, std::move(kids));
  }

  ParentNode bool_chain(const char* kw, ParentNode (LineParser::*next)()) {
    std::size_t s = pos_;
    ParentNode first = (this->*next)();
    if (!is_kw(kw)) return first;
    std::vector<ParentNode> kids;
    kids.push_back(std::move(first));
    while (is_kw(kw)) {
      take();
      kids.push_back((this->*next)());
    }
    return node(ParentKind::BoolOp, kw, s, std::move(kids));
  }

  ParentNode or_test() { return bool_chain("or", &LineParser::and_test); }
  ParentNode and_test() { return bool_chain("and", &LineParser::not_test); }

  ParentNode not_test() {
    DepthGuard g(depth_);
    std::size_t s = pos_;
    if (is_kw("not")) {
      take();
      std::vector<ParentNode> kids;
      kids.push_back(not_test());
      return node(ParentKind::UnaryOp, "not", s, std::move(kids));
    }
    return comparison();
  }

  std::optional<std::string> comparison_op() {
    static const std::set<std::string> kCmp = {"<", ">", "==", ">=", "<=", "!="};
    const Token* t = peek();
    if (!t) return std::nullopt;
    if (t->kind == Tok::Op && kCmp.count(t->text)) {
      take();
      return t->text;
    }
    if (is_kw("in")) {
      take();
      return "in";
    }
    if (is_kw("not") && is_kw("in", 1)) {
      pos_ += 2;
      return "not in";
    }
    if (is_kw("is")) {
      take();
      if (is_kw("not")) {
        take();
        return "is not";
      }
      return "is";
    }
    return std::nullopt;
  }

  ParentNode comparison() {
    std::size_t s = pos_;
    ParentNode first = binary(0);
    std::string ops;
    std::vector<ParentNode> kids;
    kids.push_back(std::move(first));
    while (auto op = comparison_op()) {
      if (!ops.empty()) ops += ",";
      ops += *op;
      kids.push_back(binary(0));
    }
    if (kids.size() == 1) return std::move(kids.front());
    return node(ParentKind::Compare, ops, s, std::move(kids));
  }

  ParentNode binary(std::size_t level) {
    static const std::vector<std::vector<std::string>> kLevels = {
        {"|"}, {"^"}, {"&"}, {"<<", ">>"}, {"+", "-"}, {"*", "/", "//", "%", "@"}};
    if (level == kLevels.size()) return factor();
    std::size_t s = pos_;
    ParentNode lhs = binary(level + 1);
    while (true) {
      const Token* t = peek();
      if (!t || t->kind != Tok::Op) break;
      const auto& ops = kLevels[level];
      if (std::find(ops.begin(), ops.end(), t->text) == ops.end()) break;
      std::string op = take().text;
      std::vector<ParentNode> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(binary(level + 1));
      lhs = node(ParentKind::BinOp, op, s, std::move(kids));
    }
    return lhs;
  }

  ParentNode factor() {
    DepthGuard g(depth_);
    std::size_t s = pos_;
    if (is_op("+") || is_op("-") || is_op("~")) {
      std::string op = take().text;
      std::vector<ParentNode> kids;
      kids.push_back(factor());
      return node(ParentKind::UnaryOp, op, s, std::move(kids));
    }
    ParentNode base = primary();
    if (!is_op("**")) return base;
    take();
    std::vector<ParentNode> kids;
    kids.push_back(std::move(base));
    kids.push_back(factor());
    return node(ParentKind::BinOp, "**", s, std::move(kids));
  }

  ParentNode argument() {
    std::size_t s = pos_;
    if (is_op("*") || is_op("**")) throw ParseFail{};
    if (peek() && peek()->kind == Tok::Name && is_op("=", 1)) {
      std::string name = take().text;
      take();
      std::vector<ParentNode> kids;
      kids.push_back(test());
      return node(ParentKind::Keyword, name, s, std::move(kids));
    }
    ParentNode v = test();
    if (is_kw("for")) throw ParseFail{};
    return v;
  }

  ParentNode primary() {
    std::size_t s = pos_;
    ParentNode a = atom();
    while (true) {
      if (is_op(".")) {
        take();
        const Token& name = take();
        if (name.kind != Tok::Name) throw ParseFail{};
        std::vector<ParentNode> kids;
        kids.push_back(std::move(a));
        a = node(ParentKind::Attribute, name.text, s, std::move(kids));
      } else if (is_op("(")) {
        std::size_t close = matching(pos_);
        take();
        std::vector<ParentNode> kids;
        kids.push_back(std::move(a));
        LineParser inner(toks_, pos_, close, sm_);
        inner.depth_ = depth_;
        for (auto& arg : inner.arglist()) kids.push_back(std::move(arg));
        pos_ = close + 1;
        a = node(ParentKind::Call, "", s, std::move(kids));
      } else if (is_op("[")) {
        std::size_t open = pos_;
        std::size_t close = matching(open);
        std::vector<ParentNode> kids;
        kids.push_back(std::move(a));
        if (bracket_contains(open, ":", Tok::Op)) {
          pos_ = close + 1;
          kids.push_back(node(ParentKind::Collection, "slice", open));
        } else {
          take();
          LineParser inner(toks_, pos_, close, sm_);
          inner.depth_ = depth_;
          kids.push_back(inner.exprlist_all());
          pos_ = close + 1;
        }
        a = node(ParentKind::Subscript, "", s, std::move(kids));
      } else {
        return a;
      }
    }
  }

  ParentNode atom() {
    DepthGuard g(depth_);
    std::size_t s = pos_;
    const Token* t = peek();
    if (!t) throw ParseFail{};
    switch (t->kind) {
      case Tok::Name: {
        take();
        if (t->text == "True" || t->text == "False" || t->text == "None")
          return node(ParentKind::Constant, t->text, s);
        if (python_keywords().count(t->text)) throw ParseFail{};
        return node(ParentKind::Name, t->text, s);
      }
      case Tok::Number:
        take();
        return node(ParentKind::Number, t->text, s);
      case Tok::String: {
        std::string text;
        while (peek() && peek()->kind == Tok::String) text += take().text;
        return node(ParentKind::String, text, s);
      }
      case Tok::Hole:
        take();
        return node(ParentKind::Constant, "??", s);
      case Tok::Op:
        break;
    }
    if (t->text == "...") {
      take();
      return node(ParentKind::Constant, "...", s);
    }
    if (t->text == "(" || t->text == "[") {
      bool paren = t->text == "(";
      std::size_t close = matching(s);
      if (bracket_contains(s, "for", Tok::Name) || bracket_contains(s, "yield", Tok::Name)) {
        pos_ = close + 1;
        return node(ParentKind::Collection, "comprehension", s);
      }
      take();
      LineParser inner(toks_, pos_, close, sm_);
      inner.depth_ = depth_;
      std::vector<ParentNode> items;
      bool comma = false;
      while (!inner.at_end()) {
        items.push_back(inner.test());
        if (inner.at_end()) break;
        inner.expect_op(",");
        comma = true;
      }
      pos_ = close + 1;
      if (paren && items.size() == 1 && !comma) return std::move(items.front());
      return node(ParentKind::Collection, paren ? "tuple" : "list", s, std::move(items));
    }
    if (t->text == "{") {
      pos_ = matching(s) + 1;
      return node(ParentKind::Collection, "dict", s);
    }
    throw ParseFail{};
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
  const SourceMap& sm_;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Line classification and block assembly

struct LineParse {
  enum class Kind { Simple, Header, Error };
  Kind kind = Kind::Error;
  std::string keyword;             // Header
  ParentNode header;               // Header, without its Block
  bool inline_body = false;        // Header
  std::vector<ParentNode> stmts;   // Simple statements or inline body
};

const std::set<std::string>& header_keywords() {
  static const std::set<std::string> kw = {"if",     "elif",    "else",  "while", "for", "with",
                                           "try",    "except",  "finally", "def", "class",
                                           "async"};
  return kw;
}

class FileParser {
 public:
  explicit FileParser(std::string_view src) : src_(src), sm_(src) {}

  ParentAst run() {
    lines_ = Lexer(src_).run();
    for (const auto& l : lines_) parsed_.push_back(classify(l));
    ParentAst ast;
    ast.root.kind = ParentKind::Module;
    ast.root.span = sm_.span(0, src_.size());
    if (!lines_.empty()) {
      int root_indent = lines_.front().indent;
      for (const auto& l : lines_) root_indent = std::min(root_indent, l.indent);
      std::size_t i = 0;
      while (i < lines_.size()) {
        auto part = suite(i, root_indent, 0);
        for (auto& n : part) ast.root.children.push_back(std::move(n));
        if (i < lines_.size()) {
          // Only reachable for a stray lower-indented line; keep it as an error.
          ast.root.children.push_back(error_node(i, i + 1));
          ++i;
        }
      }
    }
    assign_node_ids(ast);
    walk(ast.root, [&](const ParentNode& n, int) {
      if (n.kind == ParentKind::Error) ast.error_nodes.push_back(n.id);
    });
    return ast;
  }

 private:
  ParentNode error_node(std::size_t first, std::size_t last_excl) const {
    ParentNode n;
    n.kind = ParentKind::Error;
    const LogicalLine& a = lines_[first];
    const LogicalLine& b = lines_[last_excl - 1];
    std::string_view text = src_.substr(a.begin, a.end - a.begin);
    std::size_t nl = text.find('\n');
    if (nl != std::string_view::npos) text = text.substr(0, nl);
    n.text = std::string(text);
    n.span = sm_.span(a.begin, std::max(a.begin, b.end));
    return n;
  }

  ParentNode error_from_tokens(const LogicalLine& l, std::size_t b, std::size_t e) const {
    ParentNode n;
    n.kind = ParentKind::Error;
    std::size_t sb = b < e ? l.tokens[b].begin : (b < l.tokens.size() ? l.tokens[b].begin : l.end);
    std::size_t se = b < e ? l.tokens[e - 1].end : sb;
    n.text = std::string(src_.substr(sb, se - sb));
    n.span = sm_.span(sb, se);
    return n;
  }

  static std::vector<std::pair<std::size_t, std::size_t>> split_top(const std::vector<Token>& t,
                                                                    std::size_t b, std::size_t e,
                                                                    std::string_view sep) {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    int depth = 0;
    std::size_t start = b;
    for (std::size_t i = b; i < e; ++i) {
      if (t[i].kind != Tok::Op) continue;
      const std::string& x = t[i].text;
      if (x == "(" || x == "[" || x == "{") ++depth;
      if (x == ")" || x == "]" || x == "}") --depth;
      if (depth == 0 && x == sep) {
        parts.emplace_back(start, i);
        start = i + 1;
      }
    }
    parts.emplace_back(start, e);
    return parts;
  }

  std::vector<ParentNode> simple_statements(const LogicalLine& l, std::size_t b, std::size_t e,
                                            int* failures) const {
    std::vector<ParentNode> out;
    for (auto [sb, se] : split_top(l.tokens, b, e, ";")) {
      if (sb == se) continue;
      try {
        LineParser p(l.tokens, sb, se, sm_);
        out.push_back(p.simple_stmt());
      } catch (const ParseFail&) {
        out.push_back(error_from_tokens(l, sb, se));
        ++*failures;
      }
    }
    return out;
  }

  LineParse classify(const LogicalLine& l) const {
    LineParse lp;
    if (l.lex_error || l.tokens.empty()) return lp;
    const auto& t = l.tokens;
    const Token& first = t.front();
    if (first.kind == Tok::Op && first.text == "@") {
      try {
        LineParser p(t, 1, t.size(), sm_);
        ParentNode d;
        d.kind = ParentKind::Decorator;
        d.children.push_back(p.expr_all());
        d.span = sm_.span(l.begin, l.end);
        lp.kind = LineParse::Kind::Simple;
        lp.stmts.push_back(std::move(d));
      } catch (const ParseFail&) {
      }
      return lp;
    }
    if (first.kind == Tok::Name && header_keywords().count(first.text)) return header(l);
    int failures = 0;
    lp.stmts = simple_statements(l, 0, t.size(), &failures);
    if (lp.stmts.empty() || (lp.stmts.size() == 1 && failures == 1)) {
      lp.stmts.clear();
      return lp;
    }
    lp.kind = LineParse::Kind::Simple;
    return lp;
  }

  LineParse header(const LogicalLine& l) const {
    LineParse lp;
    const auto& t = l.tokens;
    const std::string& kw = t.front().text;
    auto parts = split_top(t, 0, t.size(), ":");
    if (parts.size() < 2) return lp;
    std::size_t colon = parts.front().second;
    ParentNode h;
    h.span = sm_.span(l.begin, t[colon].end);
    h.text = kw;
    try {
      if (kw == "if" || kw == "elif") {
        h.kind = kw == "if" ? ParentKind::If : ParentKind::Elif;
        if (colon == 1) {
          h.children.push_back(error_from_tokens(l, 0, 1));
        } else {
          try {
            LineParser p(t, 1, colon, sm_);
            h.children.push_back(p.expr_all());
          } catch (const ParseFail&) {
            h.children.push_back(error_from_tokens(l, 1, colon));
          }
        }
      } else if (kw == "else") {
        if (colon != 1) return lp;
        h.kind = ParentKind::Else;
      } else if (kw == "def") {
        h.kind = ParentKind::FunctionDef;
        if (colon < 4 || t[1].kind != Tok::Name || t[2].text != "(") return lp;
        h.text = t[1].text;
        std::size_t close = 2;
        int depth = 0;
        for (std::size_t i = 2; i < colon; ++i) {
          if (t[i].kind != Tok::Op) continue;
          if (t[i].text == "(" || t[i].text == "[" || t[i].text == "{") ++depth;
          if (t[i].text == ")" || t[i].text == "]" || t[i].text == "}") {
            if (--depth == 0) {
              close = i;
              break;
            }
          }
        }
        if (close == 2) return lp;
        if (close + 1 != colon && !(t[close + 1].text == "->" && close + 2 < colon)) return lp;
        ParentNode params;
        params.kind = ParentKind::Params;
        params.span = sm_.span(t[2].begin, t[close].end);
        for (auto [pb, pe] : split_top(t, 3, close, ",")) {
          std::size_t k = pb;
          while (k < pe && t[k].kind == Tok::Op && (t[k].text == "*" || t[k].text == "**")) ++k;
          if (k >= pe) continue;
          if (t[k].kind != Tok::Name) return lp;
          ParentNode name;
          name.kind = ParentKind::Name;
          name.text = t[k].text;
          name.span = sm_.span(t[k].begin, t[k].end);
          params.children.push_back(std::move(name));
        }
        h.children.push_back(std::move(params));
      } else if (kw == "class") {
        h.kind = ParentKind::ClassDef;
        if (colon < 2 || t[1].kind != Tok::Name) return lp;
        h.text = t[1].text;
        ParentNode bases;
        bases.kind = ParentKind::Params;
        if (colon > 2) {
          if (t[2].text != "(" || t[colon - 1].text != ")") return lp;
          bases.span = sm_.span(t[2].begin, t[colon - 1].end);
          LineParser p(t, 3, colon - 1, sm_);
          bases.children = p.arglist();
        }
        h.children.push_back(std::move(bases));
      } else {
        h.kind = ParentKind::Compound;
      }
    } catch (const ParseFail&) {
      return lp;
    }
    lp.kind = LineParse::Kind::Header;
    lp.keyword = kw;
    if (colon + 1 < t.size()) {
      int failures = 0;
      lp.inline_body = true;
      lp.stmts = simple_statements(l, colon + 1, t.size(), &failures);
    }
    lp.header = std::move(h);
    return lp;
  }

  int next_non_error_indent(std::size_t from) const {
    for (std::size_t j = from; j < lines_.size(); ++j)
      if (parsed_[j].kind != LineParse::Kind::Error) return lines_[j].indent;
    return -1;
  }

  ParentNode block(std::vector<ParentNode> kids, const Span& fallback) const {
    ParentNode b;
    b.kind = ParentKind::Block;
    b.span = kids.empty() ? fallback
                          : sm_.span(kids.front().span.byte_start, kids.back().span.byte_end);
    b.children = std::move(kids);
    return b;
  }

  // Body of a header at `indent` starting at lines_[i].
  ParentNode body_of(LineParse& lp, std::size_t& i, int indent, int nesting) {
    std::vector<ParentNode> kids;
    if (lp.inline_body) {
      kids = std::move(lp.stmts);
    } else if (i < lines_.size() && lines_[i].indent > indent) {
      kids = suite(i, lines_[i].indent, nesting + 1);
    }
    Span fallback = lp.header.span;
    fallback.byte_start = fallback.byte_end;
    fallback.line_start = fallback.line_end;
    fallback.col_start = fallback.col_end;
    return block(std::move(kids), fallback);
  }

  std::vector<ParentNode> suite(std::size_t& i, int indent, int nesting) {
    std::vector<ParentNode> out;
    while (i < lines_.size()) {
      const LogicalLine& l = lines_[i];
      LineParse& lp = parsed_[i];
      if (l.indent < indent) {
        int next = next_non_error_indent(i + 1);
        if (lp.kind == LineParse::Kind::Error && next >= indent) {
          out.push_back(error_node(i, i + 1));
          ++i;
          continue;
        }
        break;
      }
      if (l.indent > indent || lp.kind == LineParse::Kind::Error ||
          (lp.kind == LineParse::Kind::Header && nesting >= kMaxNesting)) {
        // Unexpected indent, unparseable line, or runaway nesting: the line
        // and everything indented below it form one error region.
        std::size_t j = i + 1;
        while (j < lines_.size() && lines_[j].indent > indent) ++j;
        out.push_back(error_node(i, j));
        i = j;
        continue;
      }
      if (lp.kind == LineParse::Kind::Simple) {
        for (auto& s : lp.stmts) out.push_back(std::move(s));
        ++i;
        continue;
      }
      ++i;
      if (lp.keyword == "if") {
        ParentNode h = std::move(lp.header);
        h.children.push_back(body_of(lp, i, indent, nesting));
        while (i < lines_.size() && lines_[i].indent == indent &&
               parsed_[i].kind == LineParse::Kind::Header &&
               (parsed_[i].keyword == "elif" || parsed_[i].keyword == "else")) {
          LineParse& clause = parsed_[i];
          bool is_else = clause.keyword == "else";
          ++i;
          ParentNode c = std::move(clause.header);
          c.children.push_back(body_of(clause, i, indent, nesting));
          c.span = sm_.span(c.span.byte_start, std::max(c.span.byte_end, c.children.back().span.byte_end));
          h.children.push_back(std::move(c));
          if (is_else) break;
        }
        h.span.byte_end = std::max(h.span.byte_end, h.children.back().span.byte_end);
        h.span = sm_.span(h.span.byte_start, h.span.byte_end);
        out.push_back(std::move(h));
        continue;
      }
      ParentNode h = std::move(lp.header);
      if (h.kind == ParentKind::Elif || h.kind == ParentKind::Else) {
        h.kind = ParentKind::Compound;  // dangling clause
        h.children.clear();
      }
      h.children.push_back(body_of(lp, i, indent, nesting));
      h.span = sm_.span(h.span.byte_start, std::max(h.span.byte_end, h.children.back().span.byte_end));
      out.push_back(std::move(h));
    }
    return out;
  }

  std::string_view src_;
  SourceMap sm_;
  std::vector<LogicalLine> lines_;
  std::vector<LineParse> parsed_;
};

// ---------------------------------------------------------------------------
// Pruning

bool is_self_attr(const ParentNode& n) {
  return n.kind == ParentKind::Attribute && n.children.size() == 1 &&
         n.children[0].kind == ParentKind::Name && n.children[0].text == "self";
}

bool is_hole_const(const ParentNode& n) {
  return n.kind == ParentKind::Constant && n.text == "??";
}

const ParentNode* call_target(const ParentNode& n) {
  if (n.kind != ParentKind::Call || n.children.empty()) return nullptr;
  return &n.children[0];
}

std::string call_name(const ParentNode& n) {
  const ParentNode* f = call_target(n);
  return f && f->kind == ParentKind::Name ? f->text : std::string();
}

bool has_keyword_args(const ParentNode& call) {
  return std::any_of(call.children.begin() + 1, call.children.end(),
                     [](const ParentNode& c) { return c.kind == ParentKind::Keyword; });
}

std::optional<std::uint64_t> parse_u64(std::string digits, int base) {
  if (digits.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : digits) {
    int d;
    if (std::isdigit(static_cast<unsigned char>(c)))
      d = c - '0';
    else if (std::isalpha(static_cast<unsigned char>(c)))
      d = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
    else
      return std::nullopt;
    if (d >= base) return std::nullopt;
    if (v > (UINT64_MAX - static_cast<std::uint64_t>(d)) / static_cast<std::uint64_t>(base))
      return std::nullopt;
    v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
  }
  return v;
}

struct NumberText {
  bool is_real = false;
  std::string text;
};

std::optional<NumberText> canonical_number(std::string raw) {
  raw.erase(std::remove(raw.begin(), raw.end(), '_'), raw.end());
  if (raw.size() > 2 && raw[0] == '0' && std::isalpha(static_cast<unsigned char>(raw[1]))) {
    int base = 0;
    switch (std::tolower(static_cast<unsigned char>(raw[1]))) {
      case 'x': base = 16; break;
      case 'o': base = 8; break;
      case 'b': base = 2; break;
      default: return std::nullopt;
    }
    auto v = parse_u64(raw.substr(2), base);
    if (!v) return std::nullopt;
    return NumberText{false, std::to_string(*v)};
  }
  std::size_t dot = raw.find('.');
  std::string ip = dot == std::string::npos ? raw : raw.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : raw.substr(dot + 1);
  auto digits = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (!digits(ip) || !digits(fp) || (ip.empty() && fp.empty())) return std::nullopt;
  std::size_t nz = ip.find_first_not_of('0');
  ip = nz == std::string::npos ? "0" : ip.substr(nz);
  if (dot == std::string::npos) return NumberText{false, ip};
  return NumberText{true, ip + "." + (fp.empty() ? "0" : fp)};
}

std::optional<std::string> simple_string_content(const std::string& raw) {
  if (raw.size() < 2) return std::nullopt;
  char q = raw[0];
  if ((q != '"' && q != '\'') || raw.back() != q) return std::nullopt;
  if (raw.size() >= 6 && raw[1] == q && raw[2] == q) return std::nullopt;
  std::string inner = raw.substr(1, raw.size() - 2);
  if (inner.find(q) != std::string::npos || inner.find('\\') != std::string::npos)
    return std::nullopt;
  return inner;
}

constexpr int kMaxBvWidth = 1 << 16;

class Pruner {
 public:
  PruneResult run(const ParentAst& ast) {
    PruneResult out;
    ChildProgram& p = out.program;
    p.span = ast.root.span;
    const ParentNode* cls = nullptr;
    bool explicit_hole = false;
    for (const auto& n : ast.root.children) {
      if (!cls && n.kind == ParentKind::ClassDef && extends_module(n)) {
        cls = &n;
        continue;
      }
      if (n.kind == ParentKind::ExprStmt && is_hole_const(n.children[0])) {
        explicit_hole = true;
        continue;
      }
      drop(n, top_level_reason(n));
    }
    if (!cls) {
      if (explicit_hole) {
        p.module_hole = HoleId(next_hole_++);
      } else {
        p.module_hole = hole(HoleCategory::Module, ast.root.span);
        report_.dropped.push_back({ast.root.id, ast.root.span, "no-module-class"});
      }
      assign_node_ids(p);
      out.report = std::move(report_);
      return out;
    }
    p.module_name = cls->text;
    p.span = cls->span;
    std::set<std::string> seen;
    for (const auto& m : cls->children[1].children) {
      if (m.kind == ParentKind::Pass) continue;
      if (m.kind != ParentKind::FunctionDef) {
        drop(m, member_reason(m));
        continue;
      }
      auto kind = section_of(m.text);
      if (!kind) {
        drop(m, "unknown-method");
        continue;
      }
      if (!seen.insert(m.text).second) {
        drop(m, "duplicate-method");
        continue;
      }
      const auto& body = m.children[1].children;
      switch (*kind) {
        case SectionKind::Types:
        case SectionKind::Locals:
        case SectionKind::Inputs:
        case SectionKind::Outputs: {
          DeclSection& sec = p.decl_section(*kind);
          sec.span = m.span;
          prune_decls(body, *kind, sec.decls);
          break;
        }
        case SectionKind::Init:
          p.init.span = m.span;
          p.init.body = prune_body(body);
          break;
        case SectionKind::Next:
          p.next.span = m.span;
          p.next.body = prune_body(body);
          break;
        case SectionKind::Spec:
          p.spec.span = m.span;
          prune_spec(body, p.spec);
          break;
      }
    }
    assign_node_ids(p);
    out.report = std::move(report_);
    return out;
  }

 private:
  static bool extends_module(const ParentNode& cls) {
    for (const auto& b : cls.children[0].children) {
      if (b.kind == ParentKind::Name && b.text == "Module") return true;
      if (b.kind == ParentKind::Attribute && b.text == "Module") return true;
    }
    return false;
  }

  static std::optional<SectionKind> section_of(const std::string& name) {
    static const std::pair<const char*, SectionKind> kMethods[] = {
        {"types", SectionKind::Types},   {"locals", SectionKind::Locals},
        {"inputs", SectionKind::Inputs}, {"outputs", SectionKind::Outputs},
        {"init", SectionKind::Init},     {"next", SectionKind::Next},
        {"specification", SectionKind::Spec}};
    for (const auto& [n, k] : kMethods)
      if (name == n) return k;
    return std::nullopt;
  }

  static bool is_docstring(const ParentNode& n) {
    return n.kind == ParentKind::ExprStmt && n.children[0].kind == ParentKind::String;
  }

  static std::string top_level_reason(const ParentNode& n) {
    switch (n.kind) {
      case ParentKind::Import: return "import";
      case ParentKind::ClassDef: return "class";
      case ParentKind::FunctionDef: return "function";
      case ParentKind::Decorator: return "decorator";
      case ParentKind::Error: return "error";
      default: return is_docstring(n) ? "docstring" : "statement";
    }
  }

  static std::string member_reason(const ParentNode& n) {
    switch (n.kind) {
      case ParentKind::Decorator: return "decorator";
      case ParentKind::Error: return "error";
      case ParentKind::ClassDef: return "class";
      default: return is_docstring(n) ? "docstring" : "class-member";
    }
  }

  static std::string stmt_reason(const ParentNode& n) {
    switch (n.kind) {
      case ParentKind::Import: return "import";
      case ParentKind::Return: return "return";
      case ParentKind::Compound: return "compound";
      case ParentKind::FunctionDef: return "function";
      case ParentKind::ClassDef: return "class";
      case ParentKind::Decorator: return "decorator";
      case ParentKind::AugAssign: return "augmented-assignment";
      case ParentKind::If: return "if";
      case ParentKind::Assert: return "assert";
      case ParentKind::ExprStmt:
        if (is_docstring(n)) return "docstring";
        return n.children[0].kind == ParentKind::Call ? "call" : "expression";
      default: return "statement";
    }
  }

  void drop(const ParentNode& n, std::string reason) {
    report_.dropped.push_back({n.id, n.span, std::move(reason)});
  }

  HoleId hole(HoleCategory c, const Span& s) {
    HoleId h(next_hole_++);
    report_.holes_inserted.push_back({h, c, s});
    return h;
  }

  // -- types

  static bool looks_like_type(const ParentNode& n) {
    if (n.kind == ParentKind::Name)
      return n.text == "bool" || n.text == "int" || n.text == "real" || n.text == "float";
    if (is_self_attr(n)) return true;
    static const std::set<std::string> kCtors = {"Boolean", "Bool",      "Integer", "Int",
                                                 "Real",    "BitVector", "Enum",    "Array"};
    return kCtors.count(call_name(n)) > 0;
  }

  TypeExpr type_hole(const ParentNode& n) {
    TypeExpr t = TypeExpr::make_hole(hole(HoleCategory::Type, n.span));
    t.span = n.span;
    return t;
  }

  TypeExpr prune_type(const ParentNode& n) {
    TypeExpr t;
    t.span = n.span;
    if (is_hole_const(n)) {
      t = TypeExpr::make_hole(HoleId(next_hole_++));
      t.span = n.span;
      return t;
    }
    if (n.kind == ParentKind::Name) {
      if (n.text == "bool") t.kind = TypeExpr::Kind::Bool;
      else if (n.text == "int") t.kind = TypeExpr::Kind::Int;
      else if (n.text == "real" || n.text == "float") t.kind = TypeExpr::Kind::Real;
      else return type_hole(n);
      return t;
    }
    if (is_self_attr(n)) {
      t.kind = TypeExpr::Kind::Synonym;
      t.name = n.text;
      return t;
    }
    std::string f = call_name(n);
    if (f.empty() || has_keyword_args(n)) return type_hole(n);
    std::size_t argc = n.children.size() - 1;
    if ((f == "Boolean" || f == "Bool") && argc == 0) {
      t.kind = TypeExpr::Kind::Bool;
    } else if ((f == "Integer" || f == "Int") && argc == 0) {
      t.kind = TypeExpr::Kind::Int;
    } else if (f == "Real" && argc == 0) {
      t.kind = TypeExpr::Kind::Real;
    } else if (f == "BitVector" && argc == 1 && n.children[1].kind == ParentKind::Number) {
      auto num = canonical_number(n.children[1].text);
      if (!num || num->is_real || num->text.size() > 6) return type_hole(n);
      int w = std::stoi(num->text);
      if (w < 1 || w > kMaxBvWidth) return type_hole(n);
      t.kind = TypeExpr::Kind::BV;
      t.width = w;
    } else if (f == "Enum" && argc >= 1) {
      t.kind = TypeExpr::Kind::Enum;
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        const ParentNode& a = n.children[i];
        std::optional<std::string> tag;
        if (a.kind == ParentKind::String) tag = simple_string_content(a.text);
        if (a.kind == ParentKind::Name) tag = a.text;
        if (!tag || !is_plain_identifier(*tag)) return type_hole(n);
        if (std::find(t.tags.begin(), t.tags.end(), *tag) == t.tags.end()) t.tags.push_back(*tag);
      }
    } else if (f == "Array" && argc == 2) {
      t.kind = TypeExpr::Kind::Array;
      t.children.push_back(prune_type(n.children[1]));
      t.children.push_back(prune_type(n.children[2]));
    } else {
      return type_hole(n);
    }
    return t;
  }

  // -- expressions

  Expr expr_hole(const ParentNode& n) {
    Expr e = Expr::make_hole(hole(HoleCategory::Expr, n.span));
    e.span = n.span;
    return e;
  }

  Expr binary(Op op, Expr a, Expr b, const Span& s) {
    Expr e = Expr::make(Expr::Kind::Binary);
    e.op = op;
    e.span = s;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  static std::optional<Op> binop_of(const std::string& s) {
    static const std::pair<const char*, Op> kOps[] = {
        {"+", Op::Add},     {"-", Op::Sub},     {"*", Op::Mul},    {"/", Op::Div},
        {"//", Op::Div},    {"%", Op::Mod},     {"&", Op::BvAnd},  {"|", Op::BvOr},
        {"^", Op::BvXor},   {"<<", Op::Shl},    {">>", Op::Lshr}};
    for (const auto& [t, op] : kOps)
      if (s == t) return op;
    return std::nullopt;
  }

  static std::optional<Op> cmpop_of(const std::string& s) {
    static const std::pair<const char*, Op> kOps[] = {{"==", Op::Eq}, {"!=", Op::Ne},
                                                      {"<", Op::Lt},  {"<=", Op::Le},
                                                      {">", Op::Gt},  {">=", Op::Ge}};
    for (const auto& [t, op] : kOps)
      if (s == t) return op;
    return std::nullopt;
  }

  Expr prune_expr(const ParentNode& n) {
    Expr e;
    e.span = n.span;
    switch (n.kind) {
      case ParentKind::Constant:
        if (n.text == "??") {
          e = Expr::make_hole(HoleId(next_hole_++));
          e.span = n.span;
          return e;
        }
        if (n.text == "True" || n.text == "False") {
          e.kind = Expr::Kind::BoolLit;
          e.bool_value = n.text == "True";
          return e;
        }
        return expr_hole(n);
      case ParentKind::Number: {
        auto num = canonical_number(n.text);
        if (!num) return expr_hole(n);
        e.kind = num->is_real ? Expr::Kind::RealLit : Expr::Kind::IntLit;
        e.text = num->text;
        return e;
      }
      case ParentKind::Name: {
        static const std::set<std::string> kReserved = {"self", "bool", "int",  "real",
                                                        "float", "str", "None"};
        if (!is_plain_identifier(n.text) || kReserved.count(n.text)) return expr_hole(n);
        e.kind = Expr::Kind::EnumLit;
        e.text = n.text;
        return e;
      }
      case ParentKind::Attribute:
        if (!is_self_attr(n)) return expr_hole(n);
        e.kind = Expr::Kind::VarRef;
        e.text = n.text;
        return e;
      case ParentKind::Subscript:
        if (n.children[1].kind == ParentKind::Collection) return expr_hole(n);
        e.kind = Expr::Kind::Select;
        e.args.push_back(prune_expr(n.children[0]));
        e.args.push_back(prune_expr(n.children[1]));
        return e;
      case ParentKind::UnaryOp:
        if (n.text == "+") return prune_expr(n.children[0]);
        if (n.text != "not" && n.text != "-") return expr_hole(n);
        e.kind = Expr::Kind::Unary;
        e.op = n.text == "not" ? Op::Not : Op::Neg;
        e.args.push_back(prune_expr(n.children[0]));
        return e;
      case ParentKind::BinOp: {
        auto op = binop_of(n.text);
        if (!op) return expr_hole(n);
        return binary(*op, prune_expr(n.children[0]), prune_expr(n.children[1]), n.span);
      }
      case ParentKind::BoolOp: {
        Op op = n.text == "and" ? Op::And : Op::Or;
        Expr acc = prune_expr(n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i)
          acc = binary(op, std::move(acc), prune_expr(n.children[i]), n.span);
        return acc;
      }
      case ParentKind::Compare: {
        std::vector<std::string> ops;
        std::stringstream ss(n.text);
        for (std::string tok; std::getline(ss, tok, ',');) ops.push_back(tok);
        std::vector<Op> mapped;
        for (const auto& o : ops) {
          auto op = cmpop_of(o);
          if (!op) return expr_hole(n);
          mapped.push_back(*op);
        }
        std::optional<Expr> acc;
        for (std::size_t i = 0; i < mapped.size(); ++i) {
          const ParentNode& l = n.children[i];
          const ParentNode& r = n.children[i + 1];
          Span s = mapped.size() == 1 ? n.span : Span{};
          if (mapped.size() > 1) {
            s = l.span;
            s.byte_end = r.span.byte_end;
            s.line_end = r.span.line_end;
            s.col_end = r.span.col_end;
          }
          Expr c = binary(mapped[i], prune_expr(l), prune_expr(r), s);
          acc = acc ? binary(Op::And, std::move(*acc), std::move(c), n.span) : std::move(c);
        }
        return std::move(*acc);
      }
      case ParentKind::IfExp:
        e.kind = Expr::Kind::Ite;
        for (const auto& c : n.children) e.args.push_back(prune_expr(c));
        return e;
      case ParentKind::Call:
        return prune_call(n);
      default:
        return expr_hole(n);
    }
  }

  Expr prune_call(const ParentNode& n) {
    std::string f = call_name(n);
    std::size_t argc = n.children.size() - 1;
    if (f.empty() || has_keyword_args(n)) return expr_hole(n);
    static const std::pair<const char*, Op> kBinary[] = {
        {"Implies", Op::Implies}, {"Xor", Op::Xor}, {"Concat", Op::Concat},
        {"And", Op::And},         {"Or", Op::Or}};
    for (const auto& [name, op] : kBinary) {
      if (f == name && argc == 2)
        return binary(op, prune_expr(n.children[1]), prune_expr(n.children[2]), n.span);
    }
    if (f == "Not" && argc == 1) {
      Expr e = Expr::make(Expr::Kind::Unary);
      e.op = Op::Not;
      e.span = n.span;
      e.args.push_back(prune_expr(n.children[1]));
      return e;
    }
    if (f == "BitVectorVal" && argc == 2 && n.children[1].kind == ParentKind::Number &&
        n.children[2].kind == ParentKind::Number) {
      auto v = canonical_number(n.children[1].text);
      auto w = canonical_number(n.children[2].text);
      if (!v || !w || v->is_real || w->is_real || w->text.size() > 6) return expr_hole(n);
      int width = std::stoi(w->text);
      auto value = parse_u64(v->text, 10);
      if (width < 1 || width > kMaxBvWidth || !value) return expr_hole(n);
      if (width < 64 && *value >= (std::uint64_t{1} << width)) return expr_hole(n);
      Expr e = Expr::make(Expr::Kind::BVLit);
      e.span = n.span;
      e.text = v->text;
      e.width = width;
      return e;
    }
    return expr_hole(n);
  }

  std::optional<Expr> prune_lvalue(const ParentNode& n) {
    if (is_hole_const(n)) return prune_expr(n);
    if (is_self_attr(n)) return prune_expr(n);
    if (n.kind == ParentKind::Subscript && n.children[1].kind != ParentKind::Collection) {
      auto base = prune_lvalue(n.children[0]);
      if (!base) return std::nullopt;
      Expr e = Expr::make(Expr::Kind::Select);
      e.span = n.span;
      e.args.push_back(std::move(*base));
      e.args.push_back(prune_expr(n.children[1]));
      return e;
    }
    return std::nullopt;
  }

  // -- statements

  Stmt stmt_hole(const ParentNode& n) {
    Stmt s = Stmt::make_hole(hole(HoleCategory::Stmt, n.span));
    s.span = n.span;
    return s;
  }

  std::vector<Stmt> prune_body(const std::vector<ParentNode>& body) {
    std::vector<Stmt> out;
    for (const auto& n : body) {
      if (auto s = prune_stmt(n)) out.push_back(std::move(*s));
    }
    return out;
  }

  std::optional<Stmt> prune_stmt(const ParentNode& n) {
    Stmt s;
    s.span = n.span;
    switch (n.kind) {
      case ParentKind::Pass:
        return std::nullopt;
      case ParentKind::Error:
        return stmt_hole(n);
      case ParentKind::Assign: {
        if (n.children.size() != 2) return stmt_hole(n);
        auto lhs = prune_lvalue(n.children[0]);
        if (!lhs) return stmt_hole(n);
        s.kind = Stmt::Kind::Assign;
        s.exprs.push_back(std::move(*lhs));
        s.exprs.push_back(prune_expr(n.children[1]));
        return s;
      }
      case ParentKind::AnnAssign: {
        if (n.children.size() != 3) {
          drop(n, "annotation");
          return std::nullopt;
        }
        auto lhs = prune_lvalue(n.children[0]);
        if (!lhs) return stmt_hole(n);
        drop(n.children[1], "annotation");
        s.kind = Stmt::Kind::Assign;
        s.exprs.push_back(std::move(*lhs));
        s.exprs.push_back(prune_expr(n.children[2]));
        return s;
      }
      case ParentKind::AugAssign: {
        auto op = binop_of(n.text);
        auto lhs = prune_lvalue(n.children[0]);
        if (!op || !lhs) return stmt_hole(n);
        auto copy = prune_lvalue(n.children[0]);
        s.kind = Stmt::Kind::Assign;
        s.exprs.push_back(std::move(*lhs));
        s.exprs.push_back(binary(*op, std::move(*copy), prune_expr(n.children[1]), n.span));
        return s;
      }
      case ParentKind::If: {
        s.kind = Stmt::Kind::If;
        s.exprs.push_back(prune_expr(n.children[0]));
        s.then_body = prune_body(n.children[1].children);
        for (std::size_t i = 2; i < n.children.size(); ++i) {
          const ParentNode& c = n.children[i];
          if (c.kind == ParentKind::Elif) {
            ElifClause clause;
            clause.cond = prune_expr(c.children[0]);
            clause.body = prune_body(c.children[1].children);
            s.elifs.push_back(std::move(clause));
          } else {
            s.else_body = prune_body(c.children[0].children);
          }
        }
        return s;
      }
      case ParentKind::Assert:
        if (n.children.size() > 1) drop(n.children[1], "assert-message");
        s.kind = Stmt::Kind::Assert;
        s.exprs.push_back(prune_expr(n.children[0]));
        return s;
      case ParentKind::ExprStmt: {
        const ParentNode& e = n.children[0];
        if (is_hole_const(e)) {
          s = Stmt::make_hole(HoleId(next_hole_++));
          s.span = n.span;
          return s;
        }
        std::string f = call_name(e);
        if (f == "havoc" || f == "assume") {
          if (e.children.size() != 2 || has_keyword_args(e)) return stmt_hole(n);
          const ParentNode& arg = e.children[1];
          if (f == "havoc") {
            if (!is_self_attr(arg) && !is_hole_const(arg)) return stmt_hole(n);
            s.kind = Stmt::Kind::Havoc;
          } else {
            s.kind = Stmt::Kind::Assume;
          }
          s.exprs.push_back(prune_expr(arg));
          return s;
        }
        drop(n, stmt_reason(n));
        return std::nullopt;
      }
      default:
        drop(n, stmt_reason(n));
        return std::nullopt;
    }
  }

  // -- declarations

  void prune_decls(const std::vector<ParentNode>& body, SectionKind kind, std::vector<Decl>& out) {
    for (const auto& n : body) {
      Decl d;
      d.span = n.span;
      switch (n.kind) {
        case ParentKind::Pass:
          continue;
        case ParentKind::Error:
          d.hole = hole(HoleCategory::Stmt, n.span);
          out.push_back(std::move(d));
          continue;
        case ParentKind::ExprStmt:
          if (is_hole_const(n.children[0])) {
            d.hole = HoleId(next_hole_++);
            out.push_back(std::move(d));
          } else {
            drop(n, stmt_reason(n));
          }
          continue;
        case ParentKind::Assign:
          if (n.children.size() != 2) {
            drop(n, "multiple-targets");
            continue;
          }
          if (!is_self_attr(n.children[0])) {
            drop(n, "bad-target");
            continue;
          }
          d.name = n.children[0].text;
          decl_rhs(n.children[1], kind, d);
          out.push_back(std::move(d));
          continue;
        case ParentKind::AnnAssign:
          if (!is_self_attr(n.children[0])) {
            drop(n, "bad-target");
            continue;
          }
          d.name = n.children[0].text;
          d.type = prune_type(n.children[1]);
          if (n.children.size() == 3) drop(n.children[2], "annotation-value");
          out.push_back(std::move(d));
          continue;
        default:
          drop(n, stmt_reason(n));
          continue;
      }
    }
  }

  void decl_rhs(const ParentNode& rhs, SectionKind kind, Decl& d) {
    if (is_hole_const(rhs) || looks_like_type(rhs)) {
      d.type = prune_type(rhs);
      return;
    }
    if (kind == SectionKind::Types) {
      d.type = type_hole(rhs);
      return;
    }
    Expr v = prune_expr(rhs);
    if (v.kind == Expr::Kind::Hole) {
      // A value slot that is itself a hole is a type hole.
      for (auto& h : report_.holes_inserted)
        if (h.hole == v.hole) h.category = HoleCategory::Type;
      TypeExpr t = TypeExpr::make_hole(v.hole);
      t.span = v.span;
      d.type = std::move(t);
      return;
    }
    d.value = std::move(v);
  }

  void prune_spec(const std::vector<ParentNode>& body, SpecSection& spec) {
    for (const auto& n : body) {
      if (n.kind == ParentKind::Pass) continue;
      if (n.kind == ParentKind::Return && n.children.size() == 1 && spec.invariants.empty()) {
        Invariant inv;
        inv.span = n.span;
        inv.name = "spec";
        inv.expr = prune_expr(n.children[0]);
        spec.invariants.push_back(std::move(inv));
        continue;
      }
      drop(n, n.kind == ParentKind::Return ? "extra-return" : stmt_reason(n));
    }
  }

  PruneReport report_;
  std::int32_t next_hole_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ite: return 1;
    case Expr::Kind::Unary: return e.op == Op::Not ? 4 : 12;
    case Expr::Kind::Binary:
      switch (e.op) {
        case Op::Or: return 2;
        case Op::And: return 3;
        case Op::Eq: case Op::Ne: case Op::Lt: case Op::Le: case Op::Gt: case Op::Ge: return 5;
        case Op::BvOr: return 6;
        case Op::BvXor: return 7;
        case Op::BvAnd: return 8;
        case Op::Shl: case Op::Lshr: return 9;
        case Op::Add: case Op::Sub: return 10;
        case Op::Mul: case Op::Div: case Op::Mod: return 11;
        default: return 13;  // call forms
      }
    default: return 13;
  }
}

std::string_view infix(Op op) {
  switch (op) {
    case Op::Or: return "or";
    case Op::And: return "and";
    case Op::Eq: return "==";
    case Op::Ne: return "!=";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::BvOr: return "|";
    case Op::BvXor: return "^";
    case Op::BvAnd: return "&";
    case Op::Shl: return "<<";
    case Op::Lshr: return ">>";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "//";
    case Op::Mod: return "%";
    case Op::Implies: return "Implies";
    case Op::Xor: return "Xor";
    case Op::Concat: return "Concat";
    default: return "?";
  }
}

void print_expr(std::ostream& out, const Expr& e, int min_prec);

void print_sub(std::ostream& out, const Expr& e, int min_prec) {
  if (precedence(e) < min_prec) {
    out << '(';
    print_expr(out, e, 0);
    out << ')';
  } else {
    print_expr(out, e, min_prec);
  }
}

void print_expr(std::ostream& out, const Expr& e, int /*min_prec*/) {
  switch (e.kind) {
    case Expr::Kind::BoolLit: out << (e.bool_value ? "True" : "False"); return;
    case Expr::Kind::IntLit:
    case Expr::Kind::RealLit:
    case Expr::Kind::EnumLit: out << e.text; return;
    case Expr::Kind::BVLit: out << "BitVectorVal(" << e.text << ", " << e.width << ")"; return;
    case Expr::Kind::VarRef: out << "self." << e.text; return;
    case Expr::Kind::Hole: out << "??"; return;
    case Expr::Kind::Select:
      print_sub(out, e.args[0], 13);
      out << '[';
      print_expr(out, e.args[1], 0);
      out << ']';
      return;
    case Expr::Kind::Ite:
      print_sub(out, e.args[1], 2);
      out << " if ";
      print_sub(out, e.args[0], 2);
      out << " else ";
      print_sub(out, e.args[2], 1);
      return;
    case Expr::Kind::Unary:
      if (e.op == Op::Not) {
        out << "not ";
        print_sub(out, e.args[0], 4);
      } else {
        out << '-';
        print_sub(out, e.args[0], 12);
      }
      return;
    case Expr::Kind::Binary: {
      int p = precedence(e);
      if (p == 13) {
        out << infix(e.op) << '(';
        print_expr(out, e.args[0], 0);
        out << ", ";
        print_expr(out, e.args[1], 0);
        out << ')';
        return;
      }
      // Comparisons never chain; other operators are left-associative.
      print_sub(out, e.args[0], p == 5 ? p + 1 : p);
      out << ' ' << infix(e.op) << ' ';
      print_sub(out, e.args[1], p + 1);
      return;
    }
  }
}

void indent(std::ostream& out, int level) { out << std::string(4 * static_cast<std::size_t>(level), ' '); }

void print_block(std::ostream& out, const std::vector<Stmt>& body, int level);

void print_stmt(std::ostream& out, const Stmt& s, int level) {
  indent(out, level);
  switch (s.kind) {
    case Stmt::Kind::Assign:
      print_expr(out, s.exprs[0], 0);
      out << " = ";
      print_expr(out, s.exprs[1], 0);
      out << '\n';
      return;
    case Stmt::Kind::Havoc:
    case Stmt::Kind::Assume:
      out << (s.kind == Stmt::Kind::Havoc ? "havoc(" : "assume(");
      print_expr(out, s.exprs[0], 0);
      out << ")\n";
      return;
    case Stmt::Kind::Assert:
      out << "assert ";
      print_expr(out, s.exprs[0], 0);
      out << '\n';
      return;
    case Stmt::Kind::Hole:
      out << "??\n";
      return;
    case Stmt::Kind::If:
      out << "if ";
      print_expr(out, s.exprs[0], 0);
      out << ":\n";
      print_block(out, s.then_body, level + 1);
      for (const auto& elif : s.elifs) {
        indent(out, level);
        out << "elif ";
        print_expr(out, elif.cond, 0);
        out << ":\n";
        print_block(out, elif.body, level + 1);
      }
      if (!s.else_body.empty()) {
        indent(out, level);
        out << "else:\n";
        print_block(out, s.else_body, level + 1);
      }
      return;
  }
}

void print_block(std::ostream& out, const std::vector<Stmt>& body, int level) {
  if (body.empty()) {
    indent(out, level);
    out << "pass\n";
    return;
  }
  for (const auto& s : body) print_stmt(out, s, level);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

std::string extract_code(std::string_view llm_response) {
  if (is_blank(llm_response)) throw EmptySourceError();
  auto lines = split_lines(llm_response);
  std::size_t fence = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_fence(lines[i])) {
      fence = i;
      break;
    }
  }
  if (fence < lines.size()) {
    // Reply that continues an already-open fence: code comes before it.
    for (std::size_t i = 0; i < fence; ++i)
      if (starts_code_line(lines[i])) return join_lines(lines, i, fence);
    std::size_t close = fence + 1;
    while (close < lines.size() && !is_fence(lines[close])) ++close;
    return join_lines(lines, fence + 1, close);
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (starts_code_line(lines[i])) return join_lines(lines, i, lines.size());
  return std::string(llm_response);
}

ParentAst parse_tolerant(std::string_view source) { return FileParser(source).run(); }

PruneResult prune_to_child(const ParentAst& ast) { return Pruner().run(ast); }

PruneResult parse_child(std::string_view source) { return prune_to_child(parse_tolerant(source)); }

std::string print_child_expr(const Expr& e) {
  std::ostringstream out;
  print_expr(out, e, 0);
  return out.str();
}

std::string print_child_type(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::Bool: return "bool";
    case TypeExpr::Kind::Int: return "int";
    case TypeExpr::Kind::Real: return "real";
    case TypeExpr::Kind::BV: return "BitVector(" + std::to_string(t.width) + ")";
    case TypeExpr::Kind::Enum: {
      std::string s = "Enum(";
      for (std::size_t i = 0; i < t.tags.size(); ++i) s += (i ? ", \"" : "\"") + t.tags[i] + "\"";
      return s + ")";
    }
    case TypeExpr::Kind::Array:
      return "Array(" + print_child_type(t.children[0]) + ", " + print_child_type(t.children[1]) +
             ")";
    case TypeExpr::Kind::Synonym: return "self." + t.name;
    case TypeExpr::Kind::Hole: return "??";
  }
  return "??";
}

std::string print_child(const ChildProgram& p) {
  if (p.module_hole.valid()) return "??\n";
  std::ostringstream out;
  out << "class " << p.module_name << "(Module):\n";
  bool any = false;
  for (SectionKind k : {SectionKind::Types, SectionKind::Locals, SectionKind::Inputs,
                        SectionKind::Outputs}) {
    const DeclSection& sec = p.decl_section(k);
    if (sec.decls.empty()) continue;
    any = true;
    out << "    def " << section_method_name(k) << "(self):\n";
    for (const auto& d : sec.decls) {
      indent(out, 2);
      if (d.is_hole()) {
        out << "??\n";
        continue;
      }
      out << "self." << d.name << " = ";
      if (d.type)
        out << print_child_type(*d.type);
      else if (d.value)
        print_expr(out, *d.value, 0);
      else
        out << "??";
      out << '\n';
    }
  }
  for (const auto* sec : {&p.init, &p.next}) {
    if (sec->body.empty()) continue;
    any = true;
    out << "    def " << (sec == &p.init ? "init" : "next") << "(self):\n";
    print_block(out, sec->body, 2);
  }
  if (!p.spec.invariants.empty()) {
    any = true;
    out << "    def specification(self):\n";
    for (const auto& inv : p.spec.invariants) {
      indent(out, 2);
      out << "return ";
      print_expr(out, inv.expr, 0);
      out << '\n';
    }
  }
  if (!any) out << "    pass\n";
  return out.str();
}

}  // namespace ucgen
