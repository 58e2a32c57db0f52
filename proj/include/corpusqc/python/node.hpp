#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corpusqc::python {

enum class NodeKind : std::uint8_t {
  module,
  block,
  empty,
  // statements
  function_def,  // text=name; [decorators, params, returns|empty, block]
  class_def,     // text=name; [decorators, arguments, block]
  decorators,
  params,
  param,  // text="name" | "*args" | "**kw" | "*" | "/"; [annotation|empty, default|empty]
  arguments,
  return_stmt,  // [value|empty]
  delete_stmt,
  assign,      // [target..., value]
  aug_assign,  // text=op; [target, value]
  ann_assign,  // [target, annotation, value|empty]
  for_stmt,    // [target, iter, body, orelse|empty]
  while_stmt,  // [test, body, orelse|empty]
  if_stmt,     // [test, body, orelse|empty]
  with_stmt,   // [with_item..., body]
  with_item,   // [context, target|empty]
  raise_stmt,  // [exc|empty, cause|empty]
  try_stmt,    // [body, handlers, orelse|empty, finalbody|empty]
  handlers,
  except_handler,  // text=bound name; [type|empty, body]
  assert_stmt,     // [test, msg|empty]
  import_stmt,
  import_from,  // text=module with leading dots
  alias,        // text=dotted name; [name(asname)] optional
  global_stmt,
  nonlocal_stmt,
  expr_stmt,
  pass_stmt,
  break_stmt,
  continue_stmt,
  match_stmt,  // [subject, match_case...]
  match_case,  // [pattern, guard|empty, body]
  match_as,    // text=name; [pattern]
  // expressions
  bool_op,     // text="and"|"or"; [operand...]
  named_expr,  // [target, value]
  bin_op,      // text=op; [lhs, rhs]
  unary_op,    // text=op; [operand]
  lambda,      // [params, body]
  if_exp,      // [body, test, orelse]
  dict,
  dict_item,  // [key, value]
  set,
  list,
  tuple,
  list_comp,      // [elt, comprehension...]
  set_comp,       // [elt, comprehension...]
  dict_comp,      // [key, value, comprehension...]
  generator_exp,  // [elt, comprehension...]
  comprehension,  // [target, iter, if...]
  await_expr,
  yield_expr,  // [value|empty]
  yield_from,
  compare,  // text=ops joined by ','; [operand...]
  call,     // [func, arg...]
  keyword,  // text=name ("" for **kwargs handled by double_starred); [value]
  str,      // [str_part...]
  str_part,  // text=normalized literal including prefix and quotes
  fstr,      // [str_part...]
  num,
  constant,  // True / False / None
  ellipsis,
  attribute,  // text=attr; [value]
  subscript,  // [value, index]
  slice,      // [lower|empty, upper|empty, step|empty]
  starred,
  double_starred,
  name,
};

namespace node_flags {
inline constexpr std::uint8_t is_async = 1;
inline constexpr std::uint8_t blank_before = 2;
inline constexpr std::uint8_t star_handler = 4;  // except*
inline constexpr std::uint8_t inline_suite = 8;  // block on the header line
}  // namespace node_flags

struct Node {
  NodeKind kind = NodeKind::empty;
  std::uint8_t flags = 0;
  std::string text;
  std::vector<Node> children;
  std::uint32_t begin = 0;  // byte offsets into the parsed source
  std::uint32_t end = 0;
  std::uint32_t line = 0;  // 1-based
  std::uint32_t end_line = 0;
  std::uint32_t col = 0;
  std::uint32_t aux = 0;  // function_def, lambda: offset just past the header colon

  bool has(std::uint8_t flag) const noexcept { return (flags & flag) != 0; }
  bool is_empty() const noexcept { return kind == NodeKind::empty; }
};

inline bool is_statement(NodeKind k) {
  switch (k) {
    case NodeKind::function_def:
    case NodeKind::class_def:
    case NodeKind::return_stmt:
    case NodeKind::delete_stmt:
    case NodeKind::assign:
    case NodeKind::aug_assign:
    case NodeKind::ann_assign:
    case NodeKind::for_stmt:
    case NodeKind::while_stmt:
    case NodeKind::if_stmt:
    case NodeKind::with_stmt:
    case NodeKind::raise_stmt:
    case NodeKind::try_stmt:
    case NodeKind::assert_stmt:
    case NodeKind::import_stmt:
    case NodeKind::import_from:
    case NodeKind::global_stmt:
    case NodeKind::nonlocal_stmt:
    case NodeKind::expr_stmt:
    case NodeKind::pass_stmt:
    case NodeKind::break_stmt:
    case NodeKind::continue_stmt:
    case NodeKind::match_stmt:
      return true;
    default:
      return false;
  }
}

// Structural equality: kind, text, async/star flags and children. Source
// positions and blank-line flags are ignored.
inline bool same_shape(const Node& a, const Node& b) {
  constexpr std::uint8_t semantic = node_flags::is_async | node_flags::star_handler;
  if (a.kind != b.kind || a.text != b.text || (a.flags & semantic) != (b.flags & semantic) ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_shape(a.children[i], b.children[i])) return false;
  }
  return true;
}

template <class Fn>
void visit_preorder(const Node& n, Fn&& fn) {
  fn(n);
  for (const Node& c : n.children) visit_preorder(c, fn);
}

// Value of a string literal part with prefix and quotes removed. Escapes are
// left as written.
inline std::string_view string_part_body(std::string_view literal) {
  std::size_t p = 0;
  while (p < literal.size() && literal[p] != '"' && literal[p] != '\'') ++p;
  std::string_view rest = literal.substr(p);
  const std::size_t q = rest.size() >= 6 && (rest.substr(0, 3) == "\"\"\"" || rest.substr(0, 3) == "'''")
                            ? 3
                            : 1;
  if (rest.size() < 2 * q) return {};
  return rest.substr(q, rest.size() - 2 * q);
}

inline std::string_view string_part_prefix(std::string_view literal) {
  std::size_t p = 0;
  while (p < literal.size() && literal[p] != '"' && literal[p] != '\'') ++p;
  return literal.substr(0, p);
}

}  // namespace corpusqc::python
