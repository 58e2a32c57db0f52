#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "corpusqc/python/lexer.hpp"
#include "corpusqc/python/node.hpp"

namespace corpusqc::python {

struct ParseOptions {
  // Pattern sources: metavariables, `...` parameters, and wildcard else-suites.
  bool pattern_mode = false;
};

inline bool is_hard_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 35> kKeywords = {
      "False", "None",   "True",    "and",      "as",     "assert", "async", "await", "break",
      "class", "continue", "def",   "del",      "elif",   "else",   "except", "finally", "for",
      "from",  "global", "if",      "import",   "in",     "is",     "lambda", "nonlocal", "not",
      "or",    "pass",   "raise",   "return",   "try",    "while",  "with",  "yield"};
  return std::find(kKeywords.begin(), kKeywords.end(), w) != kKeywords.end();
}

// Canonical spelling of a string literal: lowercase prefix without `u`, and
// double quotes whenever the body contains no double quote.
inline std::string normalize_string_literal(std::string_view lit) {
  std::string prefix;
  for (char c : string_part_prefix(lit)) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower != 'u') prefix.push_back(lower);
  }
  std::string_view rest = lit.substr(string_part_prefix(lit).size());
  const std::string_view body = string_part_body(lit);
  const bool triple = rest.size() >= 6 && (rest.substr(0, 3) == "'''" || rest.substr(0, 3) == "\"\"\"");
  char quote = rest.empty() ? '"' : rest[0];
  if (quote == '\'' && body.find('"') == std::string_view::npos) {
    // A trailing backslash would escape the new closing quote in the same way,
    // so switching is value-preserving.
    quote = '"';
  }
  const std::string q(triple ? 3 : 1, quote);
  std::string out = prefix;
  out += q;
  out += body;
  out += q;
  return out;
}

inline std::string normalize_number_literal(std::string_view lit) {
  std::string out(lit);
  if (out.size() > 1 && out[0] == '0' && std::isalpha(static_cast<unsigned char>(out[1]))) {
    out[1] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[1])));
    if (out[1] == 'x') {
      for (std::size_t i = 2; i < out.size(); ++i) {
        out[i] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i])));
      }
    }
    return out;
  }
  for (char& c : out) {
    if (c == 'E' || c == 'J') c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

namespace detail {

class Parser {
 public:
  Parser(std::string_view src, ParseOptions opts) : src_(src), opts_(opts) {
    for (const Token& t : tokenize(src, {.pattern_mode = opts.pattern_mode})) {
      if (t.type != TokenType::comment && t.type != TokenType::nl) toks_.push_back(t);
    }
    compute_blank_lines();
  }

  Node parse_module() {
    Node mod;
    mod.kind = NodeKind::module;
    mod.line = 1;
    parse_statements(mod.children, /*until_dedent=*/false);
    if (!mod.children.empty()) {
      mod.begin = mod.children.front().begin;
      mod.end = mod.children.back().end;
      mod.line = mod.children.front().line;
      mod.end_line = mod.children.back().end_line;
    }
    return mod;
  }

  // Whole source as one (possibly tuple) expression.
  Node parse_expression_source() {
    Node e = parse_star_expressions();
    while (peek().type == TokenType::newline) ++pos_;
    if (peek().type != TokenType::end_marker) error("unexpected token after expression");
    return e;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }

  bool at_op(std::string_view op, std::size_t k = 0) const {
    const Token& t = peek(k);
    return t.type == TokenType::op && t.text == op;
  }

  bool at_kw(std::string_view kw, std::size_t k = 0) const {
    const Token& t = peek(k);
    return t.type == TokenType::name && t.text == kw;
  }

  bool accept_op(std::string_view op) {
    if (!at_op(op)) return false;
    ++pos_;
    return true;
  }

  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    ++pos_;
    return true;
  }

  const Token& expect_op(std::string_view op) {
    if (!at_op(op)) error("expected '" + std::string(op) + "'");
    return toks_[pos_++];
  }

  const Token& expect_kw(std::string_view kw) {
    if (!at_kw(kw)) error("expected '" + std::string(kw) + "'");
    return toks_[pos_++];
  }

  const Token& expect_identifier() {
    const Token& t = peek();
    if (t.type != TokenType::name || is_hard_keyword(t.text)) error("expected identifier");
    ++pos_;
    return t;
  }

  void expect_newline() {
    if (peek().type != TokenType::newline) error("expected end of statement");
    ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(what, t.line, t.col);
  }

  Node make(NodeKind kind, const Token& first) const {
    Node n;
    n.kind = kind;
    n.begin = first.begin;
    n.line = first.line;
    n.col = first.col;
    return n;
  }

  Node make_from(NodeKind kind, const Node& first) const {
    Node n;
    n.kind = kind;
    n.begin = first.begin;
    n.line = first.line;
    n.col = first.col;
    return n;
  }

  void close(Node& n) const {
    std::size_t i = pos_ - 1;
    while (i > 0 && (toks_[i].type == TokenType::dedent || toks_[i].type == TokenType::newline ||
                     toks_[i].type == TokenType::indent)) {
      --i;
    }
    const Token& last = toks_[i];
    n.end = last.end;
    n.end_line = last.end_line;
  }

  Node empty() const {
    Node n;
    n.kind = NodeKind::empty;
    return n;
  }

  // Missing optional suites in patterns match anything.
  Node missing_suite() const {
    Node n;
    n.kind = opts_.pattern_mode ? NodeKind::ellipsis : NodeKind::empty;
    if (opts_.pattern_mode) n.text = "...";
    return n;
  }

  void compute_blank_lines() {
    blank_prefix_.assign(1, 0);
    std::uint32_t count = 0;
    std::size_t i = 0;
    while (i <= src_.size()) {
      std::size_t j = i;
      bool blank = true;
      while (j < src_.size() && src_[j] != '\n') {
        const char c = src_[j];
        if (c != ' ' && c != '\t' && c != '\f' && c != '\r') blank = false;
        ++j;
      }
      count += blank ? 1 : 0;
      blank_prefix_.push_back(count);
      i = j + 1;
    }
  }

  // Any blank line strictly between lines `a` and `b`.
  bool blank_between(std::uint32_t a, std::uint32_t b) const {
    if (b <= a + 1) return false;
    const std::size_t hi = std::min<std::size_t>(b - 1, blank_prefix_.size() - 1);
    const std::size_t lo = std::min<std::size_t>(a, blank_prefix_.size() - 1);
    return blank_prefix_[hi] > blank_prefix_[lo];
  }

  // ---- statements ----------------------------------------------------------

  void parse_statements(std::vector<Node>& out, bool until_dedent) {
    std::uint32_t prev_end = 0;
    while (true) {
      const Token& t = peek();
      if (t.type == TokenType::end_marker) {
        if (until_dedent) error("unexpected EOF in block");
        return;
      }
      if (until_dedent && t.type == TokenType::dedent) return;
      if (t.type == TokenType::newline) {
        ++pos_;
        continue;
      }
      const std::size_t first = out.size();
      parse_statement(out);
      if (first > 0 && first < out.size()) {
        Node& s = out[first];
        const std::uint32_t start_line =
            s.kind == NodeKind::function_def || s.kind == NodeKind::class_def
                ? (s.children[0].children.empty() ? s.line : s.children[0].line)
                : s.line;
        if (blank_between(prev_end, start_line)) s.flags |= node_flags::blank_before;
      }
      if (!out.empty()) prev_end = out.back().end_line;
    }
  }

  void parse_statement(std::vector<Node>& out) {
    const Token& t = peek();
    if (t.type == TokenType::indent) error("unexpected indent");
    if (t.type == TokenType::dedent) error("unindent does not match");
    if (t.type == TokenType::op && t.text == "@") {
      out.push_back(parse_decorated());
      return;
    }
    if (t.type == TokenType::name) {
      const std::string_view w = t.text;
      if (w == "def") {
        out.push_back(parse_funcdef(empty_decorators(), nullptr));
        return;
      }
      if (w == "class") {
        out.push_back(parse_classdef(empty_decorators()));
        return;
      }
      if (w == "if") {
        out.push_back(parse_if());
        return;
      }
      if (w == "while") {
        out.push_back(parse_while());
        return;
      }
      if (w == "for") {
        out.push_back(parse_for(nullptr));
        return;
      }
      if (w == "try") {
        out.push_back(parse_try());
        return;
      }
      if (w == "with") {
        out.push_back(parse_with(nullptr));
        return;
      }
      if (w == "async") {
        const Token& a = t;
        ++pos_;
        if (at_kw("def")) {
          out.push_back(parse_funcdef(empty_decorators(), &a));
        } else if (at_kw("for")) {
          out.push_back(parse_for(&a));
        } else if (at_kw("with")) {
          out.push_back(parse_with(&a));
        } else {
          error("expected 'def', 'for' or 'with' after 'async'");
        }
        return;
      }
      if (w == "match" && looks_like_match()) {
        const std::size_t save = pos_;
        try {
          out.push_back(parse_match());
          return;
        } catch (const SyntaxError&) {
          pos_ = save;
        }
      }
    }
    parse_simple_statements(out);
  }

  bool looks_like_match() const {
    const Token& n = peek(1);
    if (n.type == TokenType::newline || n.type == TokenType::end_marker) return false;
    if (n.type == TokenType::op) {
      const std::string_view o = n.text;
      if (o == "=" || o == "." || o == "," || o == ")" || o == ":" || o == ";" ||
          (o.size() >= 2 && o.back() == '=' && o != "==")) {
        return false;
      }
    }
    return true;
  }

  Node empty_decorators() const {
    Node d;
    d.kind = NodeKind::decorators;
    return d;
  }

  Node parse_decorated() {
    Node decos = make(NodeKind::decorators, peek());
    while (accept_op("@")) {
      decos.children.push_back(parse_named_expression());
      expect_newline();
    }
    decos.end = decos.children.back().end;
    decos.end_line = decos.children.back().end_line;
    if (at_kw("def")) return parse_funcdef(std::move(decos), nullptr);
    if (at_kw("class")) return parse_classdef(std::move(decos));
    if (at_kw("async") && at_kw("def", 1)) {
      const Token& a = peek();
      ++pos_;
      return parse_funcdef(std::move(decos), &a);
    }
    error("expected function or class definition after decorator");
  }

  Node parse_funcdef(Node decorators, const Token* async_tok) {
    const Token& def_tok = expect_kw("def");
    Node fn = make(NodeKind::function_def, async_tok ? *async_tok : def_tok);
    if (async_tok) fn.flags |= node_flags::is_async;
    fn.text = std::string(expect_identifier().text);
    expect_op("(");
    Node params = parse_params(")", true);
    expect_op(")");
    Node returns = empty();
    if (accept_op("->")) returns = parse_expression();
    const Token& colon = expect_op(":");
    fn.aux = colon.end;
    Node body = parse_block();
    fn.children.push_back(std::move(decorators));
    fn.children.push_back(std::move(params));
    fn.children.push_back(std::move(returns));
    fn.children.push_back(std::move(body));
    close(fn);
    return fn;
  }

  // Parameter list up to (not including) `closer`.
  Node parse_params(std::string_view closer, bool annotations) {
    Node params = make(NodeKind::params, peek());
    bool seen_default = false;
    bool seen_star = false;
    bool seen_kwargs = false;
    while (!at_op(closer)) {
      if (seen_kwargs) error("arguments cannot follow var-keyword argument");
      const Token& start = peek();
      if (opts_.pattern_mode && at_op("...")) {
        ++pos_;
        Node e = make(NodeKind::ellipsis, start);
        e.text = "...";
        close(e);
        params.children.push_back(std::move(e));
      } else if (accept_op("/")) {
        if (seen_star) error("/ must be ahead of *");
        Node p = make(NodeKind::param, start);
        p.text = "/";
        p.children = {empty(), empty()};
        close(p);
        params.children.push_back(std::move(p));
      } else if (accept_op("*")) {
        if (seen_star) error("* argument may appear only once");
        seen_star = true;
        Node p = make(NodeKind::param, start);
        Node ann = empty();
        if (at_op(",") || at_op(closer)) {
          p.text = "*";
          if (at_op(closer)) error("named arguments must follow bare *");
        } else {
          p.text = "*" + std::string(expect_identifier().text);
          if (annotations && accept_op(":")) ann = parse_star_expression();
        }
        p.children = {std::move(ann), empty()};
        close(p);
        params.children.push_back(std::move(p));
      } else if (accept_op("**")) {
        seen_kwargs = true;
        Node p = make(NodeKind::param, start);
        p.text = "**" + std::string(expect_identifier().text);
        Node ann = empty();
        if (annotations && accept_op(":")) ann = parse_expression();
        p.children = {std::move(ann), empty()};
        close(p);
        params.children.push_back(std::move(p));
      } else {
        Node p = make(NodeKind::param, start);
        p.text = std::string(expect_identifier().text);
        Node ann = empty();
        Node def = empty();
        if (annotations && accept_op(":")) ann = parse_expression();
        if (accept_op("=")) {
          def = parse_expression();
          seen_default = true;
        } else if (seen_default && !seen_star && !opts_.pattern_mode) {
          error("non-default argument follows default argument");
        }
        p.children = {std::move(ann), std::move(def)};
        close(p);
        params.children.push_back(std::move(p));
      }
      if (!accept_op(",")) break;
    }
    if (!params.children.empty()) {
      params.end = params.children.back().end;
      params.end_line = params.children.back().end_line;
    }
    return params;
  }

  Node parse_classdef(Node decorators) {
    const Token& kw = expect_kw("class");
    Node cls = make(NodeKind::class_def, kw);
    cls.text = std::string(expect_identifier().text);
    Node args = make(NodeKind::arguments, peek());
    if (accept_op("(")) {
      parse_call_arguments(args.children);
      expect_op(")");
    }
    expect_op(":");
    Node body = parse_block();
    cls.children.push_back(std::move(decorators));
    cls.children.push_back(std::move(args));
    cls.children.push_back(std::move(body));
    close(cls);
    return cls;
  }

  // Suite after a header colon.
  Node parse_block() {
    Node block = make(NodeKind::block, peek());
    if (peek().type == TokenType::newline) {
      ++pos_;
      if (peek().type != TokenType::indent) error("expected an indented block");
      ++pos_;
      parse_statements(block.children, /*until_dedent=*/true);
      ++pos_;  // dedent
    } else {
      block.flags |= node_flags::inline_suite;
      parse_simple_statements(block.children);
    }
    if (block.children.empty()) error("expected an indented block");
    block.begin = block.children.front().begin;
    block.line = block.children.front().line;
    block.col = block.children.front().col;
    block.end = block.children.back().end;
    block.end_line = block.children.back().end_line;
    return block;
  }

  Node wrap_block(Node stmt) const {
    Node block = make_from(NodeKind::block, stmt);
    block.end = stmt.end;
    block.end_line = stmt.end_line;
    block.children.push_back(std::move(stmt));
    return block;
  }

  Node parse_if() {
    const Token& kw = peek();
    ++pos_;  // `if` or `elif`
    Node node = make(NodeKind::if_stmt, kw);
    node.children.push_back(parse_named_expression());
    expect_op(":");
    node.children.push_back(parse_block());
    if (at_kw("elif")) {
      node.children.push_back(wrap_block(parse_if()));
    } else if (accept_kw("else")) {
      expect_op(":");
      node.children.push_back(parse_block());
    } else {
      node.children.push_back(missing_suite());
    }
    close(node);
    return node;
  }

  Node parse_while() {
    Node node = make(NodeKind::while_stmt, expect_kw("while"));
    node.children.push_back(parse_named_expression());
    expect_op(":");
    node.children.push_back(parse_block());
    node.children.push_back(parse_else_suite());
    close(node);
    return node;
  }

  Node parse_else_suite() {
    if (!accept_kw("else")) return missing_suite();
    expect_op(":");
    return parse_block();
  }

  Node parse_for(const Token* async_tok) {
    const Token& kw = expect_kw("for");
    Node node = make(NodeKind::for_stmt, async_tok ? *async_tok : kw);
    if (async_tok) node.flags |= node_flags::is_async;
    node.children.push_back(parse_target_list());
    expect_kw("in");
    node.children.push_back(parse_star_expressions());
    expect_op(":");
    node.children.push_back(parse_block());
    node.children.push_back(parse_else_suite());
    close(node);
    return node;
  }

  Node parse_try() {
    Node node = make(NodeKind::try_stmt, expect_kw("try"));
    expect_op(":");
    node.children.push_back(parse_block());
    Node handlers = make(NodeKind::handlers, peek());
    int star_kind = -1;
    while (at_kw("except")) {
      Node h = make(NodeKind::except_handler, peek());
      ++pos_;
      const bool star = accept_op("*");
      if (star_kind >= 0 && star_kind != static_cast<int>(star)) {
        error("cannot have both 'except' and 'except*' on the same 'try'");
      }
      star_kind = star ? 1 : 0;
      if (star) {
        h.flags |= node_flags::star_handler;
        node.flags |= node_flags::star_handler;
      }
      Node type = empty();
      if (!at_op(":")) {
        type = parse_expression();
        if (at_op(",")) {
          // Parenthesis-free tuple of exception types (3.14) is not accepted.
          error("multiple exception types must be parenthesized");
        }
        if (accept_kw("as")) h.text = std::string(expect_identifier().text);
      } else if (star) {
        error("expected exception type after except*");
      }
      expect_op(":");
      h.children.push_back(std::move(type));
      h.children.push_back(parse_block());
      close(h);
      handlers.children.push_back(std::move(h));
    }
    Node orelse = empty();
    if (!handlers.children.empty() && accept_kw("else")) {
      expect_op(":");
      orelse = parse_block();
    }
    Node final_body = empty();
    if (accept_kw("finally")) {
      expect_op(":");
      final_body = parse_block();
    }
    if (handlers.children.empty() && final_body.is_empty()) error("expected 'except' or 'finally' block");
    if (!handlers.children.empty()) close(handlers);
    node.children.push_back(std::move(handlers));
    node.children.push_back(std::move(orelse));
    node.children.push_back(std::move(final_body));
    close(node);
    return node;
  }

  Node parse_with(const Token* async_tok) {
    const Token& kw = expect_kw("with");
    Node node = make(NodeKind::with_stmt, async_tok ? *async_tok : kw);
    if (async_tok) node.flags |= node_flags::is_async;
    bool parsed = false;
    if (at_op("(")) {
      const std::size_t save = pos_;
      try {
        ++pos_;
        std::vector<Node> items;
        while (!at_op(")")) {
          items.push_back(parse_with_item());
          if (!accept_op(",")) break;
        }
        expect_op(")");
        if (!at_op(":") || items.empty()) error("not a parenthesized with-item list");
        node.children = std::move(items);
        parsed = true;
      } catch (const SyntaxError&) {
        pos_ = save;
        node.children.clear();
      }
    }
    if (!parsed) {
      do {
        node.children.push_back(parse_with_item());
      } while (accept_op(","));
    }
    expect_op(":");
    node.children.push_back(parse_block());
    close(node);
    return node;
  }

  Node parse_with_item() {
    Node ctx = parse_expression();
    Node item = make_from(NodeKind::with_item, ctx);
    Node target = empty();
    if (accept_kw("as")) {
      target = parse_star_target();
      check_target(target);
    }
    item.children.push_back(std::move(ctx));
    item.children.push_back(std::move(target));
    close(item);
    return item;
  }

  Node parse_match() {
    Node node = make(NodeKind::match_stmt, expect_kw("match"));
    Node subject = parse_star_named_expression();
    if (at_op(",")) {
      Node tup = make_from(NodeKind::tuple, subject);
      tup.children.push_back(std::move(subject));
      while (accept_op(",")) {
        if (at_op(":")) break;
        tup.children.push_back(parse_star_named_expression());
      }
      close(tup);
      subject = std::move(tup);
    }
    node.children.push_back(std::move(subject));
    expect_op(":");
    expect_newline();
    if (peek().type != TokenType::indent) error("expected an indented block");
    ++pos_;
    while (peek().type != TokenType::dedent) {
      if (!at_kw("case")) error("expected 'case'");
      Node c = make(NodeKind::match_case, peek());
      ++pos_;
      in_case_pattern_ = true;
      Node pattern;
      try {
        pattern = parse_case_patterns();
      } catch (...) {
        in_case_pattern_ = false;
        throw;
      }
      in_case_pattern_ = false;
      Node guard = empty();
      if (accept_kw("if")) guard = parse_named_expression();
      expect_op(":");
      c.children.push_back(std::move(pattern));
      c.children.push_back(std::move(guard));
      c.children.push_back(parse_block());
      close(c);
      node.children.push_back(std::move(c));
    }
    ++pos_;
    if (node.children.size() < 2) error("match statement without cases");
    close(node);
    return node;
  }

  Node parse_case_patterns() {
    Node first = parse_case_pattern();
    if (!at_op(",")) return first;
    Node tup = make_from(NodeKind::tuple, first);
    tup.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_op(":") || at_kw("if")) break;
      tup.children.push_back(parse_case_pattern());
    }
    close(tup);
    return tup;
  }

  Node parse_case_pattern() {
    if (at_op("*")) {
      Node s = make(NodeKind::starred, peek());
      ++pos_;
      s.children.push_back(parse_atom());
      close(s);
      return s;
    }
    return maybe_as(parse_bitwise_or());
  }

  Node maybe_as(Node inner) {
    if (!in_case_pattern_ || !at_kw("as")) return inner;
    ++pos_;
    Node as = make_from(NodeKind::match_as, inner);
    as.text = std::string(expect_identifier().text);
    as.children.push_back(std::move(inner));
    close(as);
    return as;
  }

  void parse_simple_statements(std::vector<Node>& out) {
    while (true) {
      out.push_back(parse_simple_statement());
      if (!accept_op(";")) break;
      if (peek().type == TokenType::newline) break;
    }
    expect_newline();
  }

  Node parse_simple_statement() {
    const Token& t = peek();
    if (t.type == TokenType::name) {
      const std::string_view w = t.text;
      if (w == "pass" || w == "break" || w == "continue") {
        ++pos_;
        Node n = make(w == "pass"    ? NodeKind::pass_stmt
                      : w == "break" ? NodeKind::break_stmt
                                     : NodeKind::continue_stmt,
                      t);
        close(n);
        return n;
      }
      if (w == "return") {
        ++pos_;
        Node n = make(NodeKind::return_stmt, t);
        n.children.push_back(at_statement_end() ? empty() : parse_star_expressions());
        close(n);
        return n;
      }
      if (w == "raise") {
        ++pos_;
        Node n = make(NodeKind::raise_stmt, t);
        Node exc = empty();
        Node cause = empty();
        if (!at_statement_end()) {
          exc = parse_expression();
          if (accept_kw("from")) cause = parse_expression();
        }
        n.children.push_back(std::move(exc));
        n.children.push_back(std::move(cause));
        close(n);
        return n;
      }
      if (w == "global" || w == "nonlocal") {
        ++pos_;
        Node n = make(w == "global" ? NodeKind::global_stmt : NodeKind::nonlocal_stmt, t);
        do {
          const Token& id = expect_identifier();
          Node name = make(NodeKind::name, id);
          name.text = std::string(id.text);
          close(name);
          n.children.push_back(std::move(name));
        } while (accept_op(","));
        close(n);
        return n;
      }
      if (w == "del") {
        ++pos_;
        Node n = make(NodeKind::delete_stmt, t);
        do {
          if (at_statement_end()) break;
          Node target = parse_star_target();
          check_target(target);
          n.children.push_back(std::move(target));
        } while (accept_op(","));
        if (n.children.empty()) error("expected target after 'del'");
        close(n);
        return n;
      }
      if (w == "assert") {
        ++pos_;
        Node n = make(NodeKind::assert_stmt, t);
        n.children.push_back(parse_expression());
        n.children.push_back(accept_op(",") ? parse_expression() : empty());
        close(n);
        return n;
      }
      if (w == "import") return parse_import();
      if (w == "from") return parse_from_import();
    }
    return parse_expression_statement();
  }

  bool at_statement_end() const {
    const Token& t = peek();
    return t.type == TokenType::newline || t.type == TokenType::end_marker ||
           (t.type == TokenType::op && t.text == ";");
  }

  std::string parse_dotted_name() {
    std::string name(expect_identifier().text);
    while (at_op(".")) {
      ++pos_;
      name += ".";
      name += expect_identifier().text;
    }
    return name;
  }

  Node parse_alias(bool dotted) {
    const Token& start = peek();
    Node a = make(NodeKind::alias, start);
    a.text = dotted ? parse_dotted_name() : std::string(expect_identifier().text);
    if (accept_kw("as")) {
      const Token& id = expect_identifier();
      Node as = make(NodeKind::name, id);
      as.text = std::string(id.text);
      close(as);
      a.children.push_back(std::move(as));
    }
    close(a);
    return a;
  }

  Node parse_import() {
    Node n = make(NodeKind::import_stmt, expect_kw("import"));
    do {
      n.children.push_back(parse_alias(true));
    } while (accept_op(","));
    close(n);
    return n;
  }

  Node parse_from_import() {
    Node n = make(NodeKind::import_from, expect_kw("from"));
    std::string module;
    while (at_op(".") || at_op("...")) {
      module += peek().text;
      ++pos_;
    }
    if (!at_kw("import")) module += parse_dotted_name();
    if (module.empty()) error("expected module name");
    n.text = module;
    expect_kw("import");
    if (at_op("*")) {
      Node a = make(NodeKind::alias, peek());
      ++pos_;
      a.text = "*";
      close(a);
      n.children.push_back(std::move(a));
    } else if (accept_op("(")) {
      do {
        if (at_op(")")) break;
        n.children.push_back(parse_alias(false));
      } while (accept_op(","));
      expect_op(")");
      if (n.children.empty()) error("expected names to import");
    } else {
      do {
        n.children.push_back(parse_alias(false));
      } while (accept_op(","));
    }
    close(n);
    return n;
  }

  static bool is_augassign(std::string_view op) {
    return op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "//=" || op == "%=" ||
           op == "**=" || op == ">>=" || op == "<<=" || op == "&=" || op == "|=" || op == "^=" ||
           op == "@=";
  }

  Node parse_assign_value() { return at_kw("yield") ? parse_yield() : parse_star_expressions(); }

  Node parse_expression_statement() {
    Node first = parse_assign_value();
    const Token& t = peek();
    if (t.type == TokenType::op && t.text == ":") {
      ++pos_;
      if (!opts_.pattern_mode && first.kind != NodeKind::name &&
          first.kind != NodeKind::attribute && first.kind != NodeKind::subscript) {
        error("illegal target for annotation");
      }
      Node n = make_from(NodeKind::ann_assign, first);
      Node ann = parse_expression();
      Node value = accept_op("=") ? parse_assign_value() : empty();
      n.children.push_back(std::move(first));
      n.children.push_back(std::move(ann));
      n.children.push_back(std::move(value));
      close(n);
      return n;
    }
    if (t.type == TokenType::op && is_augassign(t.text)) {
      ++pos_;
      if (!opts_.pattern_mode && first.kind != NodeKind::name &&
          first.kind != NodeKind::attribute && first.kind != NodeKind::subscript) {
        error("illegal expression for augmented assignment");
      }
      Node n = make_from(NodeKind::aug_assign, first);
      n.text = std::string(t.text);
      n.children.push_back(std::move(first));
      n.children.push_back(parse_assign_value());
      close(n);
      return n;
    }
    if (t.type == TokenType::op && t.text == "=") {
      Node n = make_from(NodeKind::assign, first);
      n.children.push_back(std::move(first));
      while (accept_op("=")) n.children.push_back(parse_assign_value());
      for (std::size_t i = 0; i + 1 < n.children.size(); ++i) check_target(n.children[i]);
      close(n);
      return n;
    }
    Node n = make_from(NodeKind::expr_stmt, first);
    n.children.push_back(std::move(first));
    close(n);
    return n;
  }

  void check_target(const Node& t) const {
    if (opts_.pattern_mode) return;
    switch (t.kind) {
      case NodeKind::name:
      case NodeKind::attribute:
      case NodeKind::subscript:
        return;
      case NodeKind::starred:
        check_target(t.children[0]);
        return;
      case NodeKind::tuple:
      case NodeKind::list:
        for (const Node& c : t.children) check_target(c);
        return;
      default:
        throw SyntaxError("cannot assign to expression", t.line, t.col);
    }
  }

  // ---- expressions ---------------------------------------------------------

  bool at_expression_start() const {
    const Token& t = peek();
    switch (t.type) {
      case TokenType::number:
      case TokenType::string:
        return true;
      case TokenType::name:
        return !is_hard_keyword(t.text) || t.text == "not" || t.text == "lambda" ||
               t.text == "await" || t.text == "None" || t.text == "True" || t.text == "False" ||
               t.text == "yield";
      case TokenType::op:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" || t.text == "+" ||
               t.text == "~" || t.text == "..." || t.text == "*";
      default:
        return false;
    }
  }

  Node parse_star_expressions() {
    Node first = parse_star_expression();
    if (!at_op(",")) return first;
    Node tup = make_from(NodeKind::tuple, first);
    tup.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (!at_expression_start() || at_kw("yield")) break;
      tup.children.push_back(parse_star_expression());
    }
    close(tup);
    return tup;
  }

  Node parse_star_expression() {
    if (at_op("*")) {
      Node s = make(NodeKind::starred, peek());
      ++pos_;
      s.children.push_back(parse_bitwise_or());
      close(s);
      return s;
    }
    return parse_expression();
  }

  Node parse_star_named_expression() {
    if (at_op("*")) {
      Node s = make(NodeKind::starred, peek());
      ++pos_;
      s.children.push_back(parse_bitwise_or());
      close(s);
      return s;
    }
    return parse_named_expression();
  }

  Node parse_named_expression() {
    if (peek().type == TokenType::name && at_op(":=", 1)) {
      const Token& id = expect_identifier();
      Node target = make(NodeKind::name, id);
      target.text = std::string(id.text);
      close(target);
      ++pos_;
      Node n = make_from(NodeKind::named_expr, target);
      n.children.push_back(std::move(target));
      n.children.push_back(parse_expression());
      close(n);
      return n;
    }
    return parse_expression();
  }

  Node parse_expression() {
    if (at_kw("lambda")) return parse_lambda();
    Node body = parse_disjunction();
    if (!at_kw("if") || in_case_pattern_) return body;
    ++pos_;
    Node test = parse_disjunction();
    expect_kw("else");
    Node orelse = parse_expression();
    Node n = make_from(NodeKind::if_exp, body);
    n.children.push_back(std::move(body));
    n.children.push_back(std::move(test));
    n.children.push_back(std::move(orelse));
    close(n);
    return n;
  }

  Node parse_lambda() {
    Node n = make(NodeKind::lambda, expect_kw("lambda"));
    Node params = parse_params(":", false);
    n.aux = expect_op(":").end;
    n.children.push_back(std::move(params));
    n.children.push_back(parse_expression());
    close(n);
    return n;
  }

  Node parse_disjunction() {
    Node lhs = parse_conjunction();
    if (!at_kw("or")) return lhs;
    Node n = make_from(NodeKind::bool_op, lhs);
    n.text = "or";
    n.children.push_back(std::move(lhs));
    while (accept_kw("or")) n.children.push_back(parse_conjunction());
    close(n);
    return n;
  }

  Node parse_conjunction() {
    Node lhs = parse_inversion();
    if (!at_kw("and")) return lhs;
    Node n = make_from(NodeKind::bool_op, lhs);
    n.text = "and";
    n.children.push_back(std::move(lhs));
    while (accept_kw("and")) n.children.push_back(parse_inversion());
    close(n);
    return n;
  }

  Node parse_inversion() {
    if (at_kw("not")) {
      Node n = make(NodeKind::unary_op, peek());
      ++pos_;
      n.text = "not";
      n.children.push_back(parse_inversion());
      close(n);
      return n;
    }
    return parse_comparison();
  }

  // Returns the comparison operator at the cursor (consuming it) or "".
  std::string accept_compare_op() {
    const Token& t = peek();
    if (t.type == TokenType::op) {
      const std::string_view o = t.text;
      if (o == "<" || o == ">" || o == "==" || o == ">=" || o == "<=" || o == "!=") {
        ++pos_;
        return std::string(o);
      }
      return {};
    }
    if (t.type != TokenType::name) return {};
    if (t.text == "in") {
      ++pos_;
      return "in";
    }
    if (t.text == "not" && at_kw("in", 1)) {
      pos_ += 2;
      return "not in";
    }
    if (t.text == "is") {
      ++pos_;
      if (accept_kw("not")) return "is not";
      return "is";
    }
    return {};
  }

  Node parse_comparison() {
    Node lhs = parse_bitwise_or();
    std::string op = accept_compare_op();
    if (op.empty()) return lhs;
    Node n = make_from(NodeKind::compare, lhs);
    n.children.push_back(std::move(lhs));
    while (!op.empty()) {
      if (!n.text.empty()) n.text += ",";
      n.text += op;
      n.children.push_back(parse_bitwise_or());
      op = accept_compare_op();
    }
    close(n);
    return n;
  }

  template <class Next>
  Node parse_binary(std::initializer_list<std::string_view> ops, Next next) {
    Node lhs = (this->*next)();
    while (true) {
      const Token& t = peek();
      if (t.type != TokenType::op) break;
      bool hit = false;
      for (std::string_view o : ops) hit = hit || t.text == o;
      if (!hit) break;
      ++pos_;
      Node n = make_from(NodeKind::bin_op, lhs);
      n.text = std::string(t.text);
      n.children.push_back(std::move(lhs));
      n.children.push_back((this->*next)());
      close(n);
      lhs = std::move(n);
    }
    return lhs;
  }

  Node parse_bitwise_or() { return parse_binary({"|"}, &Parser::parse_bitwise_xor); }
  Node parse_bitwise_xor() { return parse_binary({"^"}, &Parser::parse_bitwise_and); }
  Node parse_bitwise_and() { return parse_binary({"&"}, &Parser::parse_shift); }
  Node parse_shift() { return parse_binary({"<<", ">>"}, &Parser::parse_sum); }
  Node parse_sum() { return parse_binary({"+", "-"}, &Parser::parse_term); }
  Node parse_term() { return parse_binary({"*", "/", "//", "%", "@"}, &Parser::parse_factor); }

  Node parse_factor() {
    const Token& t = peek();
    if (t.type == TokenType::op && (t.text == "-" || t.text == "+" || t.text == "~")) {
      ++pos_;
      Node n = make(NodeKind::unary_op, t);
      n.text = std::string(t.text);
      n.children.push_back(parse_factor());
      close(n);
      return n;
    }
    return parse_power();
  }

  Node parse_power() {
    Node base = parse_await_primary();
    if (!at_op("**")) return base;
    ++pos_;
    Node n = make_from(NodeKind::bin_op, base);
    n.text = "**";
    n.children.push_back(std::move(base));
    n.children.push_back(parse_factor());
    close(n);
    return n;
  }

  Node parse_await_primary() {
    if (at_kw("await")) {
      Node n = make(NodeKind::await_expr, peek());
      ++pos_;
      n.children.push_back(parse_primary());
      close(n);
      return n;
    }
    return parse_primary();
  }

  Node parse_primary() {
    Node node = parse_atom();
    while (true) {
      if (at_op(".")) {
        ++pos_;
        const Token& id = peek();
        if (id.type != TokenType::name || is_hard_keyword(id.text)) error("expected attribute name");
        ++pos_;
        Node n = make_from(NodeKind::attribute, node);
        n.text = std::string(id.text);
        n.children.push_back(std::move(node));
        close(n);
        node = std::move(n);
      } else if (at_op("(")) {
        ++pos_;
        Node n = make_from(NodeKind::call, node);
        n.children.push_back(std::move(node));
        parse_call_arguments(n.children);
        expect_op(")");
        close(n);
        node = std::move(n);
      } else if (at_op("[")) {
        ++pos_;
        Node n = make_from(NodeKind::subscript, node);
        n.children.push_back(std::move(node));
        n.children.push_back(parse_slices());
        expect_op("]");
        close(n);
        node = std::move(n);
      } else {
        return node;
      }
    }
  }

  // Arguments up to (not including) ')'; appended to `out`.
  void parse_call_arguments(std::vector<Node>& out) {
    const std::size_t first = out.size();
    bool seen_keyword = false;
    bool seen_kwargs = false;
    while (!at_op(")")) {
      const Token& t = peek();
      if (accept_op("**")) {
        Node n = make(NodeKind::double_starred, t);
        n.children.push_back(parse_expression());
        close(n);
        out.push_back(std::move(n));
        seen_kwargs = true;
      } else if (accept_op("*")) {
        if (seen_kwargs && !opts_.pattern_mode) {
          error("iterable argument unpacking follows keyword argument unpacking");
        }
        Node n = make(NodeKind::starred, t);
        n.children.push_back(parse_expression());
        close(n);
        out.push_back(std::move(n));
      } else if (t.type == TokenType::name && at_op("=", 1)) {
        if (is_hard_keyword(t.text)) error("cannot assign to keyword");
        pos_ += 2;
        Node n = make(NodeKind::keyword, t);
        n.text = std::string(t.text);
        n.children.push_back(maybe_as(parse_expression()));
        close(n);
        out.push_back(std::move(n));
        seen_keyword = true;
      } else {
        if ((seen_keyword || seen_kwargs) && !opts_.pattern_mode) {
          error("positional argument follows keyword argument");
        }
        Node arg = maybe_as(parse_named_expression());
        if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
          Node gen = make_from(NodeKind::generator_exp, arg);
          gen.children.push_back(std::move(arg));
          parse_comprehension_clauses(gen.children);
          close(gen);
          if (out.size() != first || !at_op(")")) {
            error("generator expression must be parenthesized");
          }
          out.push_back(std::move(gen));
          return;
        }
        out.push_back(std::move(arg));
      }
      if (!accept_op(",")) break;
    }
  }

  Node parse_slices() {
    Node first = parse_slice();
    if (!at_op(",")) return first;
    Node tup = make_from(NodeKind::tuple, first);
    tup.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_op("]")) break;
      tup.children.push_back(parse_slice());
    }
    close(tup);
    return tup;
  }

  Node parse_slice() {
    const Token& start = peek();
    Node lower = empty();
    if (!at_op(":")) {
      lower = parse_star_named_expression();
      if (!at_op(":")) return lower;
    }
    Node s = make(NodeKind::slice, start);
    expect_op(":");
    Node upper = (at_op(":") || at_op(",") || at_op("]")) ? empty() : parse_expression();
    Node step = empty();
    if (accept_op(":")) {
      if (!at_op(",") && !at_op("]")) step = parse_expression();
    }
    s.children.push_back(std::move(lower));
    s.children.push_back(std::move(upper));
    s.children.push_back(std::move(step));
    close(s);
    return s;
  }

  Node parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case TokenType::name: {
        if (t.text == "True" || t.text == "False" || t.text == "None") {
          ++pos_;
          Node n = make(NodeKind::constant, t);
          n.text = std::string(t.text);
          close(n);
          return n;
        }
        if (is_hard_keyword(t.text)) error("invalid syntax");
        ++pos_;
        Node n = make(NodeKind::name, t);
        n.text = std::string(t.text);
        close(n);
        return n;
      }
      case TokenType::number: {
        ++pos_;
        Node n = make(NodeKind::num, t);
        n.text = normalize_number_literal(t.text);
        close(n);
        return n;
      }
      case TokenType::string:
        return parse_strings();
      case TokenType::op:
        break;
      default:
        error("invalid syntax");
    }
    if (t.text == "...") {
      ++pos_;
      Node n = make(NodeKind::ellipsis, t);
      n.text = "...";
      close(n);
      return n;
    }
    if (t.text == "(") return parse_paren();
    if (t.text == "[") return parse_list();
    if (t.text == "{") return parse_brace();
    error("invalid syntax");
  }

  Node parse_strings() {
    const Token& first = peek();
    Node n = make(NodeKind::str, first);
    bool any_bytes = false;
    bool any_text = false;
    while (peek().type == TokenType::string) {
      const Token& t = peek();
      ++pos_;
      const std::string_view prefix = string_part_prefix(t.text);
      bool is_bytes = false;
      for (char c : prefix) {
        const char lower = static_cast<char>(c | 0x20);
        if (lower == 'f') n.kind = NodeKind::fstr;
        if (lower == 'b') is_bytes = true;
      }
      (is_bytes ? any_bytes : any_text) = true;
      Node part = make(NodeKind::str_part, t);
      part.text = normalize_string_literal(t.text);
      part.end = t.end;
      part.end_line = t.end_line;
      n.children.push_back(std::move(part));
    }
    if (any_bytes && any_text) error("cannot mix bytes and nonbytes literals");
    close(n);
    return n;
  }

  Node parse_paren() {
    const Token& open = peek();
    ++pos_;
    if (at_op(")")) {
      ++pos_;
      Node n = make(NodeKind::tuple, open);
      close(n);
      return n;
    }
    if (at_kw("yield")) {
      Node y = parse_yield();
      expect_op(")");
      return y;
    }
    Node first = maybe_as(parse_star_named_expression());
    if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      Node gen = make(NodeKind::generator_exp, open);
      gen.children.push_back(std::move(first));
      parse_comprehension_clauses(gen.children);
      expect_op(")");
      close(gen);
      return gen;
    }
    if (at_op(",")) {
      Node tup = make(NodeKind::tuple, open);
      tup.children.push_back(std::move(first));
      while (accept_op(",")) {
        if (at_op(")")) break;
        tup.children.push_back(maybe_as(parse_star_named_expression()));
      }
      expect_op(")");
      close(tup);
      return tup;
    }
    expect_op(")");
    if (first.kind == NodeKind::starred && !in_case_pattern_) error("cannot use starred expression here");
    return first;
  }

  Node parse_list() {
    const Token& open = peek();
    ++pos_;
    Node n = make(NodeKind::list, open);
    if (accept_op("]")) {
      close(n);
      return n;
    }
    Node first = maybe_as(parse_star_named_expression());
    if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      n.kind = NodeKind::list_comp;
      n.children.push_back(std::move(first));
      parse_comprehension_clauses(n.children);
      expect_op("]");
      close(n);
      return n;
    }
    n.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_op("]")) break;
      n.children.push_back(maybe_as(parse_star_named_expression()));
    }
    expect_op("]");
    close(n);
    return n;
  }

  Node parse_dict_item() {
    if (at_op("**")) {
      Node d = make(NodeKind::double_starred, peek());
      ++pos_;
      d.children.push_back(in_case_pattern_ ? parse_atom() : parse_bitwise_or());
      close(d);
      return d;
    }
    Node key = parse_expression();
    Node item = make_from(NodeKind::dict_item, key);
    expect_op(":");
    item.children.push_back(std::move(key));
    item.children.push_back(maybe_as(parse_expression()));
    close(item);
    return item;
  }

  Node parse_brace() {
    const Token& open = peek();
    ++pos_;
    Node n = make(NodeKind::dict, open);
    if (accept_op("}")) {
      close(n);
      return n;
    }
    if (at_op("**")) {
      n.children.push_back(parse_dict_item());
    } else {
      Node first = parse_star_named_expression();
      if (accept_op(":")) {
        Node value = maybe_as(parse_expression());
        if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
          n.kind = NodeKind::dict_comp;
          n.children.push_back(std::move(first));
          n.children.push_back(std::move(value));
          parse_comprehension_clauses(n.children);
          expect_op("}");
          close(n);
          return n;
        }
        Node item = make_from(NodeKind::dict_item, first);
        item.children.push_back(std::move(first));
        item.children.push_back(std::move(value));
        item.end = item.children.back().end;
        item.end_line = item.children.back().end_line;
        n.children.push_back(std::move(item));
      } else {
        n.kind = NodeKind::set;
        if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
          n.kind = NodeKind::set_comp;
          n.children.push_back(std::move(first));
          parse_comprehension_clauses(n.children);
          expect_op("}");
          close(n);
          return n;
        }
        n.children.push_back(std::move(first));
      }
    }
    while (accept_op(",")) {
      if (at_op("}")) break;
      if (n.kind == NodeKind::set) {
        n.children.push_back(parse_star_named_expression());
      } else {
        n.children.push_back(parse_dict_item());
      }
    }
    expect_op("}");
    close(n);
    return n;
  }

  void parse_comprehension_clauses(std::vector<Node>& out) {
    while (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      Node c = make(NodeKind::comprehension, peek());
      if (accept_kw("async")) c.flags |= node_flags::is_async;
      expect_kw("for");
      c.children.push_back(parse_target_list());
      expect_kw("in");
      c.children.push_back(parse_disjunction());
      while (at_kw("if")) {
        ++pos_;
        c.children.push_back(parse_disjunction_or_lambda());
      }
      close(c);
      out.push_back(std::move(c));
    }
  }

  Node parse_disjunction_or_lambda() {
    if (at_kw("lambda")) return parse_lambda();
    return parse_disjunction();
  }

  Node parse_star_target() {
    if (at_op("*")) {
      Node s = make(NodeKind::starred, peek());
      ++pos_;
      s.children.push_back(parse_star_target());
      close(s);
      return s;
    }
    return parse_bitwise_or();
  }

  // Comma-separated assignment targets, as in `for a, b in ...`.
  Node parse_target_list() {
    Node first = parse_star_target();
    if (!at_op(",")) {
      check_target(first);
      return first;
    }
    Node tup = make_from(NodeKind::tuple, first);
    tup.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_kw("in")) break;
      tup.children.push_back(parse_star_target());
    }
    close(tup);
    check_target(tup);
    return tup;
  }

  Node parse_yield() {
    Node n = make(NodeKind::yield_expr, expect_kw("yield"));
    if (accept_kw("from")) {
      n.kind = NodeKind::yield_from;
      n.children.push_back(parse_expression());
    } else if (at_expression_start() && !at_kw("yield")) {
      n.children.push_back(parse_star_expressions());
    } else {
      n.children.push_back(empty());
    }
    close(n);
    return n;
  }

  std::string_view src_;
  ParseOptions opts_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::uint32_t> blank_prefix_;
  bool in_case_pattern_ = false;
};

}  // namespace detail

// Parses a module. Throws SyntaxError (from the tokenizer or the grammar).
inline Node parse_module(std::string_view src, ParseOptions opts = {}) {
  return detail::Parser(src, opts).parse_module();
}

// Parses `src` as a single expression; throws SyntaxError otherwise.
inline Node parse_expression(std::string_view src, ParseOptions opts = {}) {
  return detail::Parser(src, opts).parse_expression_source();
}

inline bool parses(std::string_view src) {
  try {
    parse_module(src);
    return true;
  } catch (const SyntaxError&) {
    return false;
  }
}

}  // namespace corpusqc::python
