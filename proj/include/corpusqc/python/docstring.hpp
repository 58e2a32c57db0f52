#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpusqc/python/node.hpp"
#include "corpusqc/text.hpp"

namespace corpusqc::python {

inline bool prefix_has(std::string_view prefix, char lower) {
  for (char c : prefix) {
    if (ascii_lower(c) == lower) return true;
  }
  return false;
}

// Value of one literal part with escape sequences resolved. `\N{...}` is
// replaced by U+FFFD since no character-name table is bundled.
inline std::string decode_string_part(std::string_view literal) {
  const std::string_view prefix = string_part_prefix(literal);
  const std::string_view body = string_part_body(literal);
  if (prefix_has(prefix, 'r')) return std::string(body);
  const bool bytes = prefix_has(prefix, 'b');
  std::string out;
  out.reserve(body.size());
  auto hex_value = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c != '\\' || i + 1 >= body.size()) {
      out.push_back(c);
      continue;
    }
    const char e = body[++i];
    switch (e) {
      case '\n':
        break;
      case '\\':
      case '\'':
      case '"':
        out.push_back(e);
        break;
      case 'a':
        out.push_back('\a');
        break;
      case 'b':
        out.push_back('\b');
        break;
      case 'f':
        out.push_back('\f');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case 'r':
        out.push_back('\r');
        break;
      case 't':
        out.push_back('\t');
        break;
      case 'v':
        out.push_back('\v');
        break;
      case 'x': {
        if (i + 2 < body.size() && hex_value(body[i + 1]) >= 0 && hex_value(body[i + 2]) >= 0) {
          const auto v = static_cast<std::uint32_t>(hex_value(body[i + 1]) * 16 + hex_value(body[i + 2]));
          if (bytes) {
            out.push_back(static_cast<char>(v));
          } else {
            append_utf8(out, v);
          }
          i += 2;
        } else {
          out += "\\x";
        }
        break;
      }
      case 'u':
      case 'U': {
        const std::size_t width = e == 'u' ? 4 : 8;
        if (bytes || i + width >= body.size()) {
          out.push_back('\\');
          out.push_back(e);
          break;
        }
        std::uint32_t v = 0;
        bool ok = true;
        for (std::size_t k = 1; k <= width; ++k) {
          const int h = hex_value(body[i + k]);
          if (h < 0) {
            ok = false;
            break;
          }
          v = v * 16 + static_cast<std::uint32_t>(h);
        }
        if (!ok || v > 0x10FFFF) {
          out.push_back('\\');
          out.push_back(e);
          break;
        }
        append_utf8(out, v);
        i += width;
        break;
      }
      case 'N': {
        const std::size_t close = body.find('}', i);
        if (!bytes && i + 1 < body.size() && body[i + 1] == '{' && close != std::string_view::npos) {
          append_utf8(out, 0xFFFD);
          i = close;
        } else {
          out += "\\N";
        }
        break;
      }
      default:
        if (e >= '0' && e <= '7') {
          std::uint32_t v = static_cast<std::uint32_t>(e - '0');
          std::size_t k = 0;
          while (k < 2 && i + 1 < body.size() && body[i + 1] >= '0' && body[i + 1] <= '7') {
            v = v * 8 + static_cast<std::uint32_t>(body[++i] - '0');
            ++k;
          }
          if (bytes) {
            out.push_back(static_cast<char>(v & 0xFF));
          } else {
            append_utf8(out, v);
          }
        } else {
          out.push_back('\\');
          out.push_back(e);
        }
    }
  }
  return out;
}

// A plain (non-f, non-bytes) string expression, i.e. a docstring candidate.
inline bool is_plain_string(const Node& n) {
  if (n.kind != NodeKind::str) return false;
  for (const Node& part : n.children) {
    if (prefix_has(string_part_prefix(part.text), 'b')) return false;
  }
  return true;
}

inline std::string string_value(const Node& n) {
  std::string out;
  for (const Node& part : n.children) out += decode_string_part(part.text);
  return out;
}

// The docstring node of a body block, if its first statement is a bare
// string literal.
inline const Node* docstring_node(const Node& block) {
  if (block.children.empty()) return nullptr;
  const Node& first = block.children.front();
  if (first.kind != NodeKind::expr_stmt || !is_plain_string(first.children[0])) return nullptr;
  return &first;
}

inline std::string expand_tabs(std::string_view line, std::size_t tab = 8) {
  std::string out;
  for (char c : line) {
    if (c == '\t') {
      out.append(tab - out.size() % tab, ' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Indentation clean-up of a docstring: the first line is left-stripped, the
// common indentation of the remaining lines removed, and leading/trailing
// empty lines dropped.
inline std::string cleandoc(std::string_view doc) {
  std::vector<std::string> lines;
  for (std::string_view l : split_lines(doc)) lines.push_back(expand_tabs(l));
  std::size_t margin = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t content = ltrim(lines[i]).size();
    if (content) margin = std::min(margin, lines[i].size() - content);
  }
  if (!lines.empty()) lines[0] = std::string(ltrim(lines[0]));
  if (margin != std::numeric_limits<std::size_t>::max()) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      lines[i] = lines[i].size() > margin ? lines[i].substr(margin) : std::string();
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  std::string out;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (i > first) out.push_back('\n');
    out += lines[i];
  }
  return out;
}

}  // namespace corpusqc::python
