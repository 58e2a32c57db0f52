#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/python/node.hpp"
#include "corpusqc/python/parser.hpp"

namespace corpusqc::python {

inline constexpr std::size_t kLineWidth = 88;

namespace detail {

// A logical line is a run of text fragments and bracket groups. Groups are
// the only places a line may be broken.
struct Frag {
  std::string text;
  bool is_group = false;
  bool invisible = false;       // brackets only appear when the group is split
  bool force_trailing = false;  // one-element tuple
  std::string open, close;
  std::vector<std::vector<Frag>> items;
};
using Line = std::vector<Frag>;

inline void put(Line& out, std::string_view s) {
  if (s.empty()) return;
  if (!out.empty() && !out.back().is_group) {
    out.back().text += s;
    return;
  }
  Frag f;
  f.text = std::string(s);
  out.push_back(std::move(f));
}

inline Frag make_group(std::string open, std::string close) {
  Frag g;
  g.is_group = true;
  g.open = std::move(open);
  g.close = std::move(close);
  return g;
}

inline void render_flat(const Line& line, std::string& out) {
  for (const Frag& f : line) {
    if (!f.is_group) {
      out += f.text;
      continue;
    }
    if (!f.invisible) out += f.open;
    for (std::size_t i = 0; i < f.items.size(); ++i) {
      if (i) out += ", ";
      render_flat(f.items[i], out);
    }
    if (f.force_trailing) out += ",";
    if (!f.invisible) out += f.close;
  }
}

inline std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

// Every physical segment of `s` (multi-line strings) fits after `indent`.
inline bool fits(std::string_view s, std::size_t indent, std::size_t width) {
  std::size_t start = 0;
  bool first = true;
  while (true) {
    const std::size_t nl = s.find('\n', start);
    const std::string_view seg = s.substr(start, nl == std::string_view::npos ? nl : nl - start);
    if ((first ? indent : 0) + display_width(seg) > width) return false;
    if (nl == std::string_view::npos) return true;
    first = false;
    start = nl + 1;
  }
}

enum Prec : int {
  kNamed = 1,
  kTuple,
  kYield,
  kTest,
  kOr,
  kAnd,
  kNot,
  kCmp,
  kBor,
  kBxor,
  kBand,
  kShift,
  kArith,
  kTerm,
  kFactor,
  kPower,
  kAwait,
  kAtom,
};

inline int binop_prec(std::string_view op) {
  if (op == "|") return kBor;
  if (op == "^") return kBxor;
  if (op == "&") return kBand;
  if (op == "<<" || op == ">>") return kShift;
  if (op == "+" || op == "-") return kArith;
  if (op == "**") return kPower;
  return kTerm;
}

inline int own_prec(const Node& n) {
  switch (n.kind) {
    case NodeKind::named_expr:
      return kNamed;
    case NodeKind::tuple:
      return kTuple;
    case NodeKind::yield_expr:
    case NodeKind::yield_from:
      return kYield;
    case NodeKind::if_exp:
    case NodeKind::lambda:
    case NodeKind::starred:
    case NodeKind::match_as:
      return kTest;
    case NodeKind::bool_op:
      return n.text == "or" ? kOr : kAnd;
    case NodeKind::unary_op:
      return n.text == "not" ? kNot : kFactor;
    case NodeKind::compare:
      return kCmp;
    case NodeKind::bin_op:
      return binop_prec(n.text);
    case NodeKind::await_expr:
      return kAwait;
    default:
      return kAtom;
  }
}

class Formatter {
 public:
  explicit Formatter(std::size_t width) : width_(width) {}

  std::string take() { return std::move(out_); }

  void statements(const std::vector<Node>& stmts, std::size_t level) {
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      if (i > 0 && stmts[i].has(node_flags::blank_before)) out_ += "\n";
      statement(stmts[i], level);
    }
  }

  void statement(const Node& s, std::size_t level) {
    switch (s.kind) {
      case NodeKind::function_def:
        function_def(s, level);
        return;
      case NodeKind::class_def:
        class_def(s, level);
        return;
      case NodeKind::if_stmt:
        if_stmt(s, level);
        return;
      case NodeKind::while_stmt: {
        Line l;
        put(l, "while ");
        wrapped_value(l, s.children[0], kNamed, false);
        put(l, ":");
        emit(l, level);
        block(s.children[1], level + 1);
        else_suite(s.children[2], level);
        return;
      }
      case NodeKind::for_stmt: {
        Line l;
        put(l, s.has(node_flags::is_async) ? "async for " : "for ");
        expr(l, s.children[0], kTuple);
        put(l, " in ");
        wrapped_value(l, s.children[1], kTuple, false);
        put(l, ":");
        emit(l, level);
        block(s.children[2], level + 1);
        else_suite(s.children[3], level);
        return;
      }
      case NodeKind::try_stmt:
        try_stmt(s, level);
        return;
      case NodeKind::with_stmt:
        with_stmt(s, level);
        return;
      case NodeKind::match_stmt:
        match_stmt(s, level);
        return;
      case NodeKind::block:
        statements(s.children, level);
        return;
      default: {
        Line l;
        simple(l, s);
        emit(l, level);
      }
    }
  }

  void expr(Line& out, const Node& n, int prec, bool yield_ok = false) {
    if (n.kind == NodeKind::tuple) {
      tuple(out, n, prec);
      return;
    }
    bool parens = own_prec(n) < prec;
    if (n.kind == NodeKind::yield_expr || n.kind == NodeKind::yield_from) {
      parens = !yield_ok || prec > kYield;
    }
    if (!parens) {
      expr_body(out, n);
      return;
    }
    Frag g = make_group("(", ")");
    g.items.emplace_back();
    expr_body(g.items.back(), n);
    out.push_back(std::move(g));
  }

  void param(Line& out, const Node& p, bool annotations) {
    if (p.kind == NodeKind::ellipsis) {
      put(out, "...");
      return;
    }
    put(out, p.text);
    const bool annotated = annotations && !p.children[0].is_empty();
    if (annotated) {
      put(out, ": ");
      expr(out, p.children[0], kTest);
    }
    if (!p.children[1].is_empty()) {
      put(out, annotated ? " = " : "=");
      expr(out, p.children[1], kTest);
    }
  }

 private:
  // ---- statements ----------------------------------------------------------

  void emit(const Line& line, std::size_t level, bool prefer_first = false) {
    write_line(line, level * 4, prefer_first);
  }

  void block(const Node& b, std::size_t level) {
    if (b.kind == NodeKind::block) {
      statements(b.children, level);
    } else {
      statement(b, level);
    }
  }

  void else_suite(const Node& orelse, std::size_t level) {
    if (orelse.kind != NodeKind::block) return;
    emit_text("else:", level);
    block(orelse, level + 1);
  }

  void emit_text(std::string_view text, std::size_t level) {
    Line l;
    put(l, text);
    emit(l, level);
  }

  void decorators(const Node& decos, std::size_t level) {
    for (const Node& d : decos.children) {
      Line l;
      put(l, "@");
      expr(l, d, kNamed);
      emit(l, level);
    }
  }

  void function_def(const Node& s, std::size_t level) {
    decorators(s.children[0], level);
    Line l;
    put(l, s.has(node_flags::is_async) ? "async def " : "def ");
    put(l, s.text);
    Frag g = make_group("(", ")");
    for (const Node& p : s.children[1].children) {
      g.items.emplace_back();
      param(g.items.back(), p, true);
    }
    l.push_back(std::move(g));
    if (!s.children[2].is_empty()) {
      put(l, " -> ");
      expr(l, s.children[2], kTest);
    }
    put(l, ":");
    emit(l, level, /*prefer_first=*/true);
    block(s.children[3], level + 1);
  }

  void class_def(const Node& s, std::size_t level) {
    decorators(s.children[0], level);
    Line l;
    put(l, "class ");
    put(l, s.text);
    if (!s.children[1].children.empty()) call_args(l, s.children[1].children, 0);
    put(l, ":");
    emit(l, level);
    block(s.children[2], level + 1);
  }

  void if_stmt(const Node& s, std::size_t level) {
    const Node* cur = &s;
    bool first = true;
    while (true) {
      Line l;
      put(l, first ? "if " : "elif ");
      wrapped_value(l, cur->children[0], kNamed, false);
      put(l, ":");
      emit(l, level);
      block(cur->children[1], level + 1);
      first = false;
      const Node& orelse = cur->children[2];
      if (orelse.kind == NodeKind::block && orelse.children.size() == 1 &&
          orelse.children[0].kind == NodeKind::if_stmt) {
        cur = &orelse.children[0];
        continue;
      }
      else_suite(orelse, level);
      return;
    }
  }

  void try_stmt(const Node& s, std::size_t level) {
    emit_text("try:", level);
    block(s.children[0], level + 1);
    for (const Node& h : s.children[1].children) {
      Line l;
      put(l, h.has(node_flags::star_handler) ? "except*" : "except");
      if (!h.children[0].is_empty()) {
        put(l, " ");
        expr(l, h.children[0], kTest);
        if (!h.text.empty()) {
          put(l, " as ");
          put(l, h.text);
        }
      }
      put(l, ":");
      emit(l, level);
      block(h.children[1], level + 1);
    }
    else_suite(s.children[2], level);
    if (s.children[3].kind == NodeKind::block) {
      emit_text("finally:", level);
      block(s.children[3], level + 1);
    }
  }

  void with_item(Line& out, const Node& item) {
    expr(out, item.children[0], kTest);
    if (!item.children[1].is_empty()) {
      put(out, " as ");
      expr(out, item.children[1], kAtom);
    }
  }

  void with_stmt(const Node& s, std::size_t level) {
    Line l;
    put(l, s.has(node_flags::is_async) ? "async with " : "with ");
    const std::size_t n_items = s.children.size() - 1;
    if (n_items == 1) {
      with_item(l, s.children[0]);
    } else {
      Frag g = make_group("(", ")");
      g.invisible = true;
      for (std::size_t i = 0; i < n_items; ++i) {
        g.items.emplace_back();
        with_item(g.items.back(), s.children[i]);
      }
      l.push_back(std::move(g));
    }
    put(l, ":");
    emit(l, level);
    block(s.children.back(), level + 1);
  }

  void match_stmt(const Node& s, std::size_t level) {
    Line l;
    put(l, "match ");
    expr(l, s.children[0], kTuple);
    put(l, ":");
    emit(l, level);
    for (std::size_t i = 1; i < s.children.size(); ++i) {
      const Node& c = s.children[i];
      Line cl;
      put(cl, "case ");
      expr(cl, c.children[0], kTuple);
      if (!c.children[1].is_empty()) {
        put(cl, " if ");
        expr(cl, c.children[1], kNamed);
      }
      put(cl, ":");
      emit(cl, level + 1);
      block(c.children[2], level + 2);
    }
  }

  // Values that may be wrapped in optional parentheses when split.
  void wrapped_value(Line& out, const Node& v, int prec, bool yield_ok) {
    if (v.kind == NodeKind::tuple) {
      expr(out, v, prec);
      return;
    }
    Frag g = make_group("(", ")");
    g.invisible = true;
    g.items.emplace_back();
    expr(g.items.back(), v, prec, yield_ok);
    out.push_back(std::move(g));
  }

  void alias(Line& out, const Node& a) {
    put(out, a.text);
    if (!a.children.empty()) {
      put(out, " as ");
      put(out, a.children[0].text);
    }
  }

  void simple(Line& l, const Node& s) {
    switch (s.kind) {
      case NodeKind::pass_stmt:
        put(l, "pass");
        return;
      case NodeKind::break_stmt:
        put(l, "break");
        return;
      case NodeKind::continue_stmt:
        put(l, "continue");
        return;
      case NodeKind::return_stmt:
        put(l, "return");
        if (!s.children[0].is_empty()) {
          put(l, " ");
          wrapped_value(l, s.children[0], kTuple, false);
        }
        return;
      case NodeKind::raise_stmt:
        put(l, "raise");
        if (!s.children[0].is_empty()) {
          put(l, " ");
          expr(l, s.children[0], kTest);
          if (!s.children[1].is_empty()) {
            put(l, " from ");
            expr(l, s.children[1], kTest);
          }
        }
        return;
      case NodeKind::global_stmt:
      case NodeKind::nonlocal_stmt:
        put(l, s.kind == NodeKind::global_stmt ? "global " : "nonlocal ");
        for (std::size_t i = 0; i < s.children.size(); ++i) {
          if (i) put(l, ", ");
          put(l, s.children[i].text);
        }
        return;
      case NodeKind::delete_stmt:
        put(l, "del ");
        for (std::size_t i = 0; i < s.children.size(); ++i) {
          if (i) put(l, ", ");
          expr(l, s.children[i], kTest);
        }
        return;
      case NodeKind::assert_stmt:
        put(l, "assert ");
        expr(l, s.children[0], kTest);
        if (!s.children[1].is_empty()) {
          put(l, ", ");
          expr(l, s.children[1], kTest);
        }
        return;
      case NodeKind::import_stmt:
        put(l, "import ");
        for (std::size_t i = 0; i < s.children.size(); ++i) {
          if (i) put(l, ", ");
          alias(l, s.children[i]);
        }
        return;
      case NodeKind::import_from: {
        put(l, "from ");
        put(l, s.text);
        put(l, " import ");
        if (s.children.size() == 1) {
          alias(l, s.children[0]);
          return;
        }
        Frag g = make_group("(", ")");
        g.invisible = true;
        for (const Node& a : s.children) {
          g.items.emplace_back();
          alias(g.items.back(), a);
        }
        l.push_back(std::move(g));
        return;
      }
      case NodeKind::assign:
        for (std::size_t i = 0; i + 1 < s.children.size(); ++i) {
          expr(l, s.children[i], kTuple);
          put(l, " = ");
        }
        wrapped_value(l, s.children.back(), kTuple, true);
        return;
      case NodeKind::aug_assign:
        expr(l, s.children[0], kTuple);
        put(l, " ");
        put(l, s.text);
        put(l, " ");
        wrapped_value(l, s.children[1], kTuple, true);
        return;
      case NodeKind::ann_assign:
        expr(l, s.children[0], kAtom);
        put(l, ": ");
        expr(l, s.children[1], kTest);
        if (!s.children[2].is_empty()) {
          put(l, " = ");
          wrapped_value(l, s.children[2], kTuple, true);
        }
        return;
      case NodeKind::expr_stmt:
        expr(l, s.children[0], kTuple, true);
        return;
      default:
        throw FormatError("cannot format statement");
    }
  }

  // ---- expressions ---------------------------------------------------------

  void tuple(Line& out, const Node& n, int prec) {
    Frag g = make_group("(", ")");
    for (const Node& c : n.children) {
      g.items.emplace_back();
      expr(g.items.back(), c, kTest);
    }
    g.force_trailing = n.children.size() == 1;
    g.invisible = prec <= kTuple && n.children.size() >= 2;
    out.push_back(std::move(g));
  }

  void items_group(Line& out, std::string open, std::string close, const std::vector<Node>& items) {
    Frag g = make_group(std::move(open), std::move(close));
    for (const Node& c : items) {
      g.items.emplace_back();
      element(g.items.back(), c);
    }
    out.push_back(std::move(g));
  }

  // List / set / dict element.
  void element(Line& out, const Node& c) {
    if (c.kind == NodeKind::dict_item) {
      expr(out, c.children[0], kTest);
      put(out, ": ");
      expr(out, c.children[1], kTest);
    } else if (c.kind == NodeKind::double_starred) {
      put(out, "**");
      expr(out, c.children[0], kBor);
    } else {
      expr(out, c, kTest);
    }
  }

  void comprehension_clauses(Line& out, const std::vector<Node>& children, std::size_t from) {
    for (std::size_t i = from; i < children.size(); ++i) {
      const Node& c = children[i];
      put(out, c.has(node_flags::is_async) ? " async for " : " for ");
      expr(out, c.children[0], kTuple);
      put(out, " in ");
      expr(out, c.children[1], kOr);
      for (std::size_t k = 2; k < c.children.size(); ++k) {
        put(out, " if ");
        expr(out, c.children[k], kOr);
      }
    }
  }

  void comprehension(Line& out, const Node& n, std::string open, std::string close) {
    Frag g = make_group(std::move(open), std::move(close));
    g.items.emplace_back();
    Line& item = g.items.back();
    std::size_t from = 1;
    if (n.kind == NodeKind::dict_comp) {
      expr(item, n.children[0], kTest);
      put(item, ": ");
      expr(item, n.children[1], kTest);
      from = 2;
    } else {
      expr(item, n.children[0], kTest);
    }
    comprehension_clauses(item, n.children, from);
    out.push_back(std::move(g));
  }

  void call_args(Line& out, const std::vector<Node>& args, std::size_t from) {
    Frag g = make_group("(", ")");
    for (std::size_t i = from; i < args.size(); ++i) {
      const Node& a = args[i];
      g.items.emplace_back();
      Line& item = g.items.back();
      switch (a.kind) {
        case NodeKind::keyword:
          put(item, a.text);
          put(item, "=");
          expr(item, a.children[0], kTest);
          break;
        case NodeKind::starred:
          put(item, "*");
          expr(item, a.children[0], kBor);
          break;
        case NodeKind::double_starred:
          put(item, "**");
          expr(item, a.children[0], kBor);
          break;
        case NodeKind::generator_exp:
          if (args.size() - from == 1) {
            expr(item, a.children[0], kTest);
            comprehension_clauses(item, a.children, 1);
            break;
          }
          expr(item, a, kTest);
          break;
        default:
          expr(item, a, kTest);
      }
    }
    out.push_back(std::move(g));
  }

  static bool is_plain_int(std::string_view num) {
    for (char c : num) {
      if (!(c >= '0' && c <= '9') && c != '_') return false;
    }
    return true;
  }

  void expr_body(Line& out, const Node& n) {
    switch (n.kind) {
      case NodeKind::name:
      case NodeKind::constant:
      case NodeKind::num:
      case NodeKind::ellipsis:
      case NodeKind::str_part:
        put(out, n.text);
        return;
      case NodeKind::str:
      case NodeKind::fstr:
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) put(out, " ");
          put(out, n.children[i].text);
        }
        return;
      case NodeKind::list:
        items_group(out, "[", "]", n.children);
        return;
      case NodeKind::set:
      case NodeKind::dict:
        items_group(out, "{", "}", n.children);
        return;
      case NodeKind::list_comp:
        comprehension(out, n, "[", "]");
        return;
      case NodeKind::set_comp:
      case NodeKind::dict_comp:
        comprehension(out, n, "{", "}");
        return;
      case NodeKind::generator_exp:
        comprehension(out, n, "(", ")");
        return;
      case NodeKind::named_expr:
        expr(out, n.children[0], kAtom);
        put(out, " := ");
        expr(out, n.children[1], kTest);
        return;
      case NodeKind::bool_op: {
        const int p = own_prec(n);
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) put(out, n.text == "or" ? " or " : " and ");
          expr(out, n.children[i], p + 1);
        }
        return;
      }
      case NodeKind::unary_op:
        if (n.text == "not") {
          put(out, "not ");
          expr(out, n.children[0], kNot);
        } else {
          put(out, n.text);
          expr(out, n.children[0], kFactor);
        }
        return;
      case NodeKind::bin_op: {
        const int p = binop_prec(n.text);
        const bool right_assoc = n.text == "**";
        expr(out, n.children[0], right_assoc ? p + 1 : p);
        put(out, " ");
        put(out, n.text);
        put(out, " ");
        expr(out, n.children[1], right_assoc ? p : p + 1);
        return;
      }
      case NodeKind::compare: {
        expr(out, n.children[0], kCmp + 1);
        std::size_t start = 0;
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          const std::size_t comma = n.text.find(',', start);
          const std::string_view op =
              std::string_view(n.text).substr(start, comma == std::string::npos ? comma : comma - start);
          start = comma == std::string::npos ? n.text.size() : comma + 1;
          put(out, " ");
          put(out, op);
          put(out, " ");
          expr(out, n.children[i], kCmp + 1);
        }
        return;
      }
      case NodeKind::if_exp:
        expr(out, n.children[0], kTest + 1);
        put(out, " if ");
        expr(out, n.children[1], kTest + 1);
        put(out, " else ");
        expr(out, n.children[2], kTest);
        return;
      case NodeKind::lambda: {
        put(out, "lambda");
        const auto& ps = n.children[0].children;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          put(out, i ? ", " : " ");
          param(out, ps[i], false);
        }
        put(out, ": ");
        expr(out, n.children[1], kTest);
        return;
      }
      case NodeKind::await_expr:
        put(out, "await ");
        expr(out, n.children[0], kAtom);
        return;
      case NodeKind::yield_expr:
        put(out, "yield");
        if (!n.children[0].is_empty()) {
          put(out, " ");
          expr(out, n.children[0], kTuple);
        }
        return;
      case NodeKind::yield_from:
        put(out, "yield from ");
        expr(out, n.children[0], kTest);
        return;
      case NodeKind::call:
        expr(out, n.children[0], kAtom);
        call_args(out, n.children, 1);
        return;
      case NodeKind::attribute: {
        const Node& v = n.children[0];
        if (v.kind == NodeKind::num && is_plain_int(v.text)) {
          Frag g = make_group("(", ")");
          g.items.emplace_back();
          put(g.items.back(), v.text);
          out.push_back(std::move(g));
        } else {
          expr(out, v, kAtom);
        }
        put(out, ".");
        put(out, n.text);
        return;
      }
      case NodeKind::subscript: {
        expr(out, n.children[0], kAtom);
        const Node& idx = n.children[1];
        Frag g = make_group("[", "]");
        if (idx.kind == NodeKind::tuple && !idx.children.empty()) {
          for (const Node& c : idx.children) {
            g.items.emplace_back();
            expr(g.items.back(), c, kTest);
          }
          g.force_trailing = idx.children.size() == 1;
        } else {
          g.items.emplace_back();
          expr(g.items.back(), idx, kTuple);
        }
        out.push_back(std::move(g));
        return;
      }
      case NodeKind::slice:
        if (!n.children[0].is_empty()) expr(out, n.children[0], kTest);
        put(out, ":");
        if (!n.children[1].is_empty()) expr(out, n.children[1], kTest);
        if (!n.children[2].is_empty()) {
          put(out, ":");
          expr(out, n.children[2], kTest);
        }
        return;
      case NodeKind::starred:
        put(out, "*");
        expr(out, n.children[0], kBor);
        return;
      case NodeKind::double_starred:
        put(out, "**");
        expr(out, n.children[0], kBor);
        return;
      case NodeKind::keyword:
        put(out, n.text);
        put(out, "=");
        expr(out, n.children[0], kTest);
        return;
      case NodeKind::dict_item:
        element(out, n);
        return;
      case NodeKind::match_as:
        expr(out, n.children[0], kBor);
        put(out, " as ");
        put(out, n.text);
        return;
      default:
        throw FormatError("cannot format expression");
    }
  }

  // ---- line splitting ------------------------------------------------------

  void append_line(std::size_t indent, std::string_view text) {
    out_.append(indent, ' ');
    out_ += text;
    out_ += '\n';
  }

  void write_line(const Line& line, std::size_t indent, bool prefer_first) {
    std::string flat;
    render_flat(line, flat);
    if (fits(flat, indent, width_)) {
      append_line(indent, flat);
      return;
    }
    std::size_t g = line.size();
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (!line[i].is_group || line[i].items.empty()) continue;
      g = i;
      if (prefer_first) break;
    }
    if (g == line.size()) {
      append_line(indent, flat);
      return;
    }
    const Frag& grp = line[g];
    if (grp.invisible && grp.items.size() == 1 && !grp.force_trailing) {
      const Line& item = grp.items[0];
      if (!item.empty() && item.back().is_group && !item.back().items.empty()) {
        Line merged(line.begin(), line.begin() + static_cast<std::ptrdiff_t>(g));
        merged.insert(merged.end(), item.begin(), item.end());
        merged.insert(merged.end(), line.begin() + static_cast<std::ptrdiff_t>(g) + 1, line.end());
        write_line(merged, indent, false);
        return;
      }
    }

    Line head(line.begin(), line.begin() + static_cast<std::ptrdiff_t>(g));
    put(head, grp.invisible ? std::string_view("(") : std::string_view(grp.open));
    write_line(head, indent, false);

    const std::size_t inner = indent + 4;
    const bool explode = grp.items.size() >= 2 || grp.force_trailing;
    if (!explode) {
      write_line(grp.items[0], inner, false);
    } else {
      std::string body;
      for (std::size_t i = 0; i < grp.items.size(); ++i) {
        if (i) body += ", ";
        render_flat(grp.items[i], body);
      }
      if (grp.force_trailing) body += ",";
      if (fits(body, inner, width_)) {
        append_line(inner, body);
      } else {
        for (const Line& item : grp.items) {
          Line with_comma = item;
          put(with_comma, ",");
          write_line(with_comma, inner, false);
        }
      }
    }

    Line tail;
    put(tail, grp.invisible ? std::string_view(")") : std::string_view(grp.close));
    tail.insert(tail.end(), line.begin() + static_cast<std::ptrdiff_t>(g) + 1, line.end());
    write_line(tail, indent, false);
  }

  std::size_t width_;
  std::string out_;
};

}  // namespace detail

// Canonical source for a parsed module.
inline std::string format_module(const Node& mod, std::size_t width = kLineWidth) {
  detail::Formatter f(width);
  f.statements(mod.children, 0);
  return f.take();
}

inline std::string format_statements(const std::vector<Node>& stmts, std::size_t width = kLineWidth) {
  detail::Formatter f(width);
  f.statements(stmts, 0);
  return f.take();
}

// Parses and reformats. Throws SyntaxError for invalid input.
inline std::string format_source(std::string_view src, std::size_t width = kLineWidth) {
  return format_module(parse_module(src), width);
}

// Single-line canonical text of any node, used for comparisons and regex
// filters. Statements are rendered without a width limit.
inline std::string unparse(const Node& n) {
  if (is_statement(n.kind) || n.kind == NodeKind::block || n.kind == NodeKind::module) {
    detail::Formatter f(static_cast<std::size_t>(-1) / 2);
    if (n.kind == NodeKind::module) {
      f.statements(n.children, 0);
    } else {
      f.statement(n, 0);
    }
    std::string s = f.take();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  }
  detail::Formatter f(0);
  detail::Line l;
  if (n.kind == NodeKind::param) {
    f.param(l, n, true);
  } else {
    f.expr(l, n, n.kind == NodeKind::tuple ? detail::kTuple : detail::kNamed, true);
  }
  std::string s;
  detail::render_flat(l, s);
  return s;
}

}  // namespace corpusqc::python
