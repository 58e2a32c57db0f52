#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/python/docstring.hpp"
#include "corpusqc/python/format.hpp"
#include "corpusqc/python/node.hpp"
#include "corpusqc/python/parser.hpp"

namespace corpusqc::qualscan {

using python::Node;
using python::NodeKind;

// A preorder index over a parsed function: parent links and subtree extents.
class Tree {
 public:
  explicit Tree(const Node& root) {
    add(root, -1);
    index_.reserve(nodes_.size());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(nodes_.size()); }
  const Node& node(std::uint32_t i) const { return *nodes_[i]; }
  std::int32_t parent(std::uint32_t i) const { return parent_[i]; }
  std::uint32_t end(std::uint32_t i) const { return end_[i]; }  // one past the last descendant
  std::uint32_t index_of(const Node* n) const { return index_.at(n); }

 private:
  void add(const Node& n, std::int32_t parent) {
    const auto i = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(&n);
    parent_.push_back(parent);
    end_.push_back(0);
    for (const Node& c : n.children) add(c, static_cast<std::int32_t>(i));
    end_[i] = static_cast<std::uint32_t>(nodes_.size());
  }

  std::vector<const Node*> nodes_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint32_t> end_;
  std::unordered_map<const Node*, std::uint32_t> index_;
};

// One metavariable binding: a node, a run of sibling nodes ($...X), or an
// identifier text (attribute, parameter or function name position).
struct Binding {
  std::string name;
  const Node* node = nullptr;
  std::size_t len = 1;
  bool sequence = false;
  std::string text;
};

using Env = std::vector<Binding>;

inline const Binding* find_binding(const Env& env, std::string_view name) {
  for (const Binding& b : env) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

inline std::string canonical_text(const Binding& b) {
  if (b.node == nullptr) return b.text;
  if (!b.sequence) return python::unparse(*b.node);
  std::string out;
  for (std::size_t k = 0; k < b.len; ++k) {
    if (k) out.push_back('\n');
    out += python::unparse(b.node[k]);
  }
  return out;
}

inline bool is_metavar(std::string_view s) {
  return s.size() > 1 && s[0] == '$' && s.substr(1, 3) != "...";
}

inline bool is_seq_metavar(std::string_view s) { return s.size() > 4 && s.substr(0, 4) == "$..."; }

class Pattern {
 public:
  enum class Op {
    code,
    any,
    all,
    negate,
    inside,
    not_inside,
    contains,
    not_contains,
    scope_has,
    scope_lacks,
    where,
  };
  enum class Shape { expression, statement, sequence };

  static Pattern compile(const json& j) {
    Pattern p = compile_any(j);
    p.require_positive("pattern");
    return p;
  }

  Op op() const { return op_; }
  Shape shape() const { return shape_; }
  const std::vector<Node>& code() const { return code_->children; }
  const std::vector<Pattern>& parts() const { return parts_; }
  const std::string& metavar() const { return metavar_; }
  bool regex_matches(const std::string& s) const { return std::regex_search(s, *regex_); }
  const std::string& source() const { return source_; }

 private:
  static Pattern compile_code(const std::string& src) {
    Pattern p;
    p.op_ = Op::code;
    p.source_ = src;
    python::Node mod;
    try {
      mod = python::parse_module(src, {.pattern_mode = true});
    } catch (const Error& e) {
      throw PatternError("pattern '" + src + "': " + e.what());
    }
    if (mod.children.empty()) throw PatternError("pattern '" + src + "': empty");
    if (mod.children.size() > 1) {
      p.shape_ = Shape::sequence;
    } else if (mod.children[0].kind == NodeKind::expr_stmt && mod.children[0].children[0].kind != NodeKind::ellipsis) {
      p.shape_ = Shape::expression;
      Node e = std::move(mod.children[0].children[0]);
      mod.children.clear();
      mod.children.push_back(std::move(e));
    } else {
      p.shape_ = Shape::statement;
    }
    p.code_ = std::make_shared<Node>(std::move(mod));
    return p;
  }

  static Pattern compile_any(const json& j) {
    if (j.is_string()) return compile_code(j.get<std::string>());
    if (!j.is_object()) throw PatternError("pattern must be a string or an object");
    if (j.contains("where")) {
      Pattern p;
      p.op_ = Op::where;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "where" && it.key() != "regex" && it.key() != "ignore_case") {
          throw PatternError("unknown key '" + it.key() + "' in where clause");
        }
      }
      if (!j["where"].is_string() || !is_metavar(j["where"].get<std::string>())) {
        throw PatternError("'where' must name a metavariable");
      }
      if (!j.contains("regex") || !j["regex"].is_string()) throw PatternError("'where' needs a 'regex' string");
      p.metavar_ = j["where"].get<std::string>();
      p.source_ = j["regex"].get<std::string>();
      auto flags = std::regex::ECMAScript;
      if (j.value("ignore_case", false)) flags |= std::regex::icase;
      try {
        p.regex_ = std::make_shared<std::regex>(p.source_, flags);
      } catch (const std::regex_error& e) {
        throw PatternError("bad regex '" + p.source_ + "': " + e.what());
      }
      return p;
    }
    if (j.size() != 1) throw PatternError("pattern object must have exactly one operator key");
    static const std::pair<const char*, Op> kOps[] = {
        {"pattern", Op::code},          {"any", Op::any},
        {"all", Op::all},               {"not", Op::negate},
        {"inside", Op::inside},         {"not_inside", Op::not_inside},
        {"contains", Op::contains},     {"not_contains", Op::not_contains},
        {"scope_has", Op::scope_has},   {"scope_lacks", Op::scope_lacks}};
    const std::string key = j.begin().key();
    const json& arg = j.begin().value();
    for (const auto& [name, op] : kOps) {
      if (key != name) continue;
      if (op == Op::code) {
        if (!arg.is_string()) throw PatternError("'pattern' must be a string");
        return compile_code(arg.get<std::string>());
      }
      Pattern p;
      p.op_ = op;
      if (op == Op::any || op == Op::all) {
        if (!arg.is_array() || arg.empty()) throw PatternError("'" + key + "' needs a non-empty list");
        for (const json& a : arg) p.parts_.push_back(compile_any(a));
        if (op == Op::any) {
          for (const Pattern& a : p.parts_) a.require_positive("'any' alternative");
        } else {
          p.parts_.front().require_positive("first 'all' term");
        }
      } else {
        p.parts_.push_back(compile_any(arg));
        p.parts_.front().require_positive("'" + key + "' operand");
      }
      return p;
    }
    throw PatternError("unknown pattern operator '" + key + "'");
  }

  void require_positive(const std::string& where) const {
    if (op_ != Op::code && op_ != Op::any && op_ != Op::all) {
      throw PatternError(where + " must be a code pattern, 'any' or 'all'");
    }
  }

  Op op_ = Op::code;
  Shape shape_ = Shape::expression;
  std::shared_ptr<const Node> code_;
  std::vector<Pattern> parts_;
  std::string metavar_;
  std::string source_;
  std::shared_ptr<const std::regex> regex_;
};

// Syntactic matching of compiled patterns against a Tree.
class Matcher {
 public:
  explicit Matcher(const Tree& tree) : tree_(tree) {}

  // Does `p` match with node `i` as its root? On success `env` holds the
  // bindings and `last` the final node of the match (differs from `i` for
  // statement sequences).
  bool eval(const Pattern& p, std::uint32_t i, Env& env, std::uint32_t& last) const {
    last = i;
    switch (p.op()) {
      case Pattern::Op::code:
        return eval_code(p, i, env, last);
      case Pattern::Op::any:
        for (const Pattern& alt : p.parts()) {
          const std::size_t mark = env.size();
          if (eval(alt, i, env, last)) return true;
          env.resize(mark);
        }
        return false;
      case Pattern::Op::all: {
        const std::size_t mark = env.size();
        if (!eval(p.parts().front(), i, env, last)) {
          env.resize(mark);
          return false;
        }
        for (std::size_t k = 1; k < p.parts().size(); ++k) {
          if (!filter(p.parts()[k], i, env)) {
            env.resize(mark);
            return false;
          }
        }
        return true;
      }
      default:
        return filter(p, i, env);
    }
  }

  bool match(const Node& p, const Node& t, Env& env) const {
    if (p.kind == NodeKind::name && is_metavar(p.text)) {
      if (!is_expression(t.kind)) return false;
      return bind_node(p.text, &t, 1, false, env);
    }
    if (p.kind == NodeKind::expr_stmt && p.children[0].kind == NodeKind::name && is_metavar(p.children[0].text)) {
      if (!python::is_statement(t.kind)) return false;
      const Node* target = t.kind == NodeKind::expr_stmt ? &t.children[0] : &t;
      return bind_node(p.children[0].text, target, 1, false, env);
    }
    if (p.kind == NodeKind::ellipsis) return true;
    if (p.kind == NodeKind::expr_stmt && p.children[0].kind == NodeKind::ellipsis) {
      return python::is_statement(t.kind);
    }
    if (p.kind == NodeKind::str) {
      if (is_wildcard_literal(p)) return t.kind == NodeKind::str;
      return t.kind == NodeKind::str && python::is_plain_string(p) == python::is_plain_string(t) &&
             python::string_value(p) == python::string_value(t);
    }
    if (p.kind == NodeKind::fstr && is_wildcard_literal(p)) return t.kind == NodeKind::fstr;
    if (p.kind != t.kind) return false;
    constexpr std::uint8_t semantic = python::node_flags::is_async | python::node_flags::star_handler;
    if ((p.flags & semantic) != (t.flags & semantic)) return false;
    if (is_metavar(p.text)) {
      if (t.text.empty() || !bind_text(p.text, t.text, env)) return false;
    } else if (p.text != t.text) {
      return false;
    }
    bool variadic = false;
    for (const Node& c : p.children) variadic = variadic || is_wildcard_item(c) || seq_name(c) != nullptr;
    if (variadic) return match_seq(p.children, 0, t.children, 0, t.children.size(), env, false, nullptr);
    if (p.children.size() != t.children.size()) return false;
    for (std::size_t k = 0; k < p.children.size(); ++k) {
      if (!match(p.children[k], t.children[k], env)) return false;
    }
    return true;
  }

 private:
  static bool is_expression(NodeKind k) {
    return k >= NodeKind::bool_op && k != NodeKind::str_part && k != NodeKind::comprehension &&
           k != NodeKind::dict_item && k != NodeKind::keyword;
  }

  static bool is_wildcard_literal(const Node& p) {
    return p.children.size() == 1 && python::string_part_body(p.children[0].text) == "...";
  }

  static bool is_wildcard_item(const Node& p) {
    return p.kind == NodeKind::ellipsis ||
           (p.kind == NodeKind::expr_stmt && p.children[0].kind == NodeKind::ellipsis);
  }

  static const std::string* seq_name(const Node& p) {
    if (p.kind == NodeKind::name && is_seq_metavar(p.text)) return &p.text;
    if (p.kind == NodeKind::expr_stmt && p.children[0].kind == NodeKind::name &&
        is_seq_metavar(p.children[0].text)) {
      return &p.children[0].text;
    }
    return nullptr;
  }

  static bool same_run(const Node* a, const Node* b, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
      if (!python::same_shape(a[k], b[k])) return false;
    }
    return true;
  }

  bool bind_node(const std::string& name, const Node* n, std::size_t len, bool sequence, Env& env) const {
    if (name == "$_" || name == "$..._") return true;
    if (const Binding* b = find_binding(env, name)) {
      if (b->node != nullptr && b->sequence == sequence) return b->len == len && same_run(b->node, n, len);
      Binding tmp{name, n, len, sequence, {}};
      return canonical_text(*b) == canonical_text(tmp);
    }
    env.push_back(Binding{name, n, len, sequence, {}});
    return true;
  }

  bool bind_text(const std::string& name, const std::string& text, Env& env) const {
    if (name == "$_") return true;
    if (const Binding* b = find_binding(env, name)) return canonical_text(*b) == text;
    env.push_back(Binding{name, nullptr, 0, false, text});
    return true;
  }

  // Matches pattern items ps[pi..] against ts[ti..tend). With `prefix`, the
  // targets need not be exhausted and the end of the match goes to *out_end.
  bool match_seq(const std::vector<Node>& ps, std::size_t pi, const std::vector<Node>& ts, std::size_t ti,
                 std::size_t tend, Env& env, bool prefix, std::size_t* out_end) const {
    if (pi == ps.size()) {
      if (prefix) {
        *out_end = ti;
        return true;
      }
      return ti == tend;
    }
    const Node& p = ps[pi];
    const std::size_t mark = env.size();
    if (is_wildcard_item(p)) {
      if (pi + 1 == ps.size()) {
        if (prefix) *out_end = ti;
        return true;
      }
      for (std::size_t k = ti; k <= tend; ++k) {
        if (match_seq(ps, pi + 1, ts, k, tend, env, prefix, out_end)) return true;
        env.resize(mark);
      }
      return false;
    }
    if (const std::string* name = seq_name(p)) {
      for (std::size_t k = ti; k <= tend; ++k) {
        if (bind_node(*name, ts.data() + ti, k - ti, true, env) &&
            match_seq(ps, pi + 1, ts, k, tend, env, prefix, out_end)) {
          return true;
        }
        env.resize(mark);
      }
      return false;
    }
    if (ti == tend) return false;
    if (match(p, ts[ti], env) && match_seq(ps, pi + 1, ts, ti + 1, tend, env, prefix, out_end)) return true;
    env.resize(mark);
    return false;
  }

  bool eval_code(const Pattern& p, std::uint32_t i, Env& env, std::uint32_t& last) const {
    const Node& t = tree_.node(i);
    if (p.shape() != Pattern::Shape::sequence) return match(p.code().front(), t, env);
    if (!python::is_statement(t.kind) || tree_.parent(i) < 0) return false;
    const Node& parent = tree_.node(static_cast<std::uint32_t>(tree_.parent(i)));
    if (parent.kind != NodeKind::block && parent.kind != NodeKind::module) return false;
    const auto pos = static_cast<std::size_t>(&t - parent.children.data());
    std::size_t end = pos;
    if (!match_seq(p.code(), 0, parent.children, pos, parent.children.size(), env, true, &end) || end == pos) {
      return false;
    }
    last = tree_.index_of(&parent.children[end - 1]);
    return true;
  }

  bool holds_somewhere(const Pattern& p, std::uint32_t from, std::uint32_t to, Env& env) const {
    std::uint32_t last = 0;
    for (std::uint32_t d = from; d < to; ++d) {
      const std::size_t mark = env.size();
      if (eval(p, d, env, last)) return true;
      env.resize(mark);
    }
    return false;
  }

  std::uint32_t scope_of(std::uint32_t i) const {
    std::int32_t a = tree_.parent(i);
    while (a >= 0) {
      const NodeKind k = tree_.node(static_cast<std::uint32_t>(a)).kind;
      if (k == NodeKind::function_def || k == NodeKind::lambda) return static_cast<std::uint32_t>(a);
      a = tree_.parent(static_cast<std::uint32_t>(a));
    }
    return 0;
  }

  bool filter(const Pattern& f, std::uint32_t i, Env& env) const {
    const std::size_t mark = env.size();
    std::uint32_t last = 0;
    auto negated = [&](bool found) {
      env.resize(mark);
      return !found;
    };
    switch (f.op()) {
      case Pattern::Op::code:
      case Pattern::Op::any:
      case Pattern::Op::all:
        return eval(f, i, env, last);
      case Pattern::Op::negate:
        return negated(eval(f.parts().front(), i, env, last));
      case Pattern::Op::inside:
      case Pattern::Op::not_inside: {
        bool found = false;
        for (std::int32_t a = static_cast<std::int32_t>(i); a >= 0 && !found;
             a = tree_.parent(static_cast<std::uint32_t>(a))) {
          found = eval(f.parts().front(), static_cast<std::uint32_t>(a), env, last);
          if (!found) env.resize(mark);
        }
        return f.op() == Pattern::Op::inside ? found : negated(found);
      }
      case Pattern::Op::contains:
        return holds_somewhere(f.parts().front(), i, tree_.end(i), env);
      case Pattern::Op::not_contains:
        return negated(holds_somewhere(f.parts().front(), i, tree_.end(i), env));
      case Pattern::Op::scope_has: {
        const std::uint32_t s = scope_of(i);
        return holds_somewhere(f.parts().front(), s, tree_.end(s), env);
      }
      case Pattern::Op::scope_lacks: {
        const std::uint32_t s = scope_of(i);
        return negated(holds_somewhere(f.parts().front(), s, tree_.end(s), env));
      }
      case Pattern::Op::where: {
        const Binding* b = find_binding(env, f.metavar());
        return b != nullptr && f.regex_matches(canonical_text(*b));
      }
    }
    return false;
  }

  const Tree& tree_;
};

// Replaces $NAME references in a message with the bound source text.
inline std::string interpolate(std::string_view message, const Env& env) {
  std::string out;
  std::size_t i = 0;
  while (i < message.size()) {
    if (message[i] == '$') {
      std::size_t j = i + 1;
      while (j < message.size() && (std::isalnum(static_cast<unsigned char>(message[j])) || message[j] == '_')) ++j;
      if (const Binding* b = find_binding(env, message.substr(i, j - i)); b != nullptr && j > i + 1) {
        out += canonical_text(*b);
        i = j;
        continue;
      }
    }
    out.push_back(message[i++]);
  }
  return out;
}

}  // namespace corpusqc::qualscan
