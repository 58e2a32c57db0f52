#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "corpusqc/config.hpp"
#include "corpusqc/error.hpp"
#include "corpusqc/ingest.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/parallel.hpp"
#include "corpusqc/python/docstring.hpp"
#include "corpusqc/python/format.hpp"
#include "corpusqc/python/lexer.hpp"
#include "corpusqc/python/parser.hpp"
#include "corpusqc/text.hpp"

namespace corpusqc {

enum class RejectStage {
  no_docstring,
  non_ascii,
  link,
  min_words,
  pass_function,
  test_function,
  format_failure,
  length,
};

inline constexpr std::array<RejectStage, 8> kRejectStages = {
    RejectStage::no_docstring,  RejectStage::non_ascii,     RejectStage::link,
    RejectStage::min_words,     RejectStage::pass_function, RejectStage::test_function,
    RejectStage::format_failure, RejectStage::length};

inline const char* to_string(RejectStage s) {
  switch (s) {
    case RejectStage::no_docstring:
      return "no_docstring";
    case RejectStage::non_ascii:
      return "non_ascii";
    case RejectStage::link:
      return "link";
    case RejectStage::min_words:
      return "min_words";
    case RejectStage::pass_function:
      return "pass_function";
    case RejectStage::test_function:
      return "test_function";
    case RejectStage::format_failure:
      return "format_failure";
    case RejectStage::length:
      return "length";
  }
  return "unknown";
}

inline RejectStage reject_stage_from(std::string_view s) {
  for (RejectStage st : kRejectStages) {
    if (s == to_string(st)) return st;
  }
  throw DataError("unknown reject stage '" + std::string(s) + "'");
}

struct Reject {
  RejectStage stage;
  std::string detail;
};

// Either a cleaned text or the reason it was discarded.
struct Cleaned {
  std::optional<std::string> text;
  Reject reject{RejectStage::format_failure, {}};

  bool ok() const { return text.has_value(); }
  static Cleaned accept(std::string t) { return Cleaned{std::move(t), {}}; }
  static Cleaned fail(RejectStage s, std::string detail) { return Cleaned{std::nullopt, {s, std::move(detail)}}; }
};

struct CuratedPair {
  std::string func_id;
  std::string description;
  std::string signature;
  std::string code;
  std::string file_id;
  std::string path;
  std::uint32_t start_line = 0;
  std::uint32_t end_line = 0;
};

struct RejectRecord {
  std::string func_id;
  RejectStage stage;
  std::string detail;
};

namespace detail {

inline std::size_t indent_of(std::string_view line) { return line.size() - ltrim(line).size(); }

inline bool is_underline(std::string_view line) {
  line = trim(line);
  if (line.size() < 3) return false;
  for (char c : line) {
    if (c != '-' && c != '=' && c != '~' && c != '^') return false;
  }
  return true;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && istarts_with(a, b);
}

inline bool in_list(std::string_view s, const std::vector<std::string>& list) {
  for (const std::string& x : list) {
    if (iequals(s, x)) return true;
  }
  return false;
}

inline std::string_view strip_colons(std::string_view s) {
  s = trim(s);
  while (!s.empty() && s.back() == ':') s.remove_suffix(1);
  return rtrim(s);
}

// Drops an indented block starting after `i`: every following line that is
// blank or indented deeper than `base`. Returns the next kept index.
inline std::size_t skip_indented(const std::vector<std::string_view>& lines, std::size_t i, std::size_t base) {
  while (i < lines.size() && (trim(lines[i]).empty() || indent_of(lines[i]) > base)) ++i;
  return i;
}

// Drops lines until the next underlined title (the title line is kept).
inline std::size_t skip_to_next_underlined(const std::vector<std::string_view>& lines, std::size_t i) {
  while (i < lines.size() && !(i + 1 < lines.size() && !trim(lines[i]).empty() && is_underline(lines[i + 1]))) ++i;
  return i;
}

inline std::vector<std::string_view> drop_sections(const std::vector<std::string_view>& lines,
                                                   const CurateOptions& opt) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string_view t = trim(lines[i]);
    const bool underlined = !t.empty() && i + 1 < lines.size() && is_underline(lines[i + 1]);
    if (underlined && in_list(strip_colons(t), opt.underlined_sections)) {
      i = skip_to_next_underlined(lines, i + 2);
      continue;
    }
    bool header = false;
    for (const std::string& h : opt.section_headers) {
      if (istarts_with(t, h)) {
        header = true;
        break;
      }
    }
    if (header) {
      i = skip_indented(lines, i + 1, indent_of(lines[i]));
      continue;
    }
    if (!is_underline(lines[i])) out.push_back(lines[i]);
    ++i;
  }
  return out;
}

inline std::vector<std::string_view> drop_examples(const std::vector<std::string_view>& lines,
                                                   const CurateOptions& opt) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string_view t = trim(lines[i]);
    if (t.substr(0, 3) == ">>>") {
      while (i < lines.size() && !trim(lines[i]).empty()) ++i;
      continue;
    }
    if (t.substr(0, 3) == "```") {
      ++i;
      while (i < lines.size() && trim(lines[i]).substr(0, 3) != "```") ++i;
      if (i < lines.size()) ++i;
      continue;
    }
    if (!t.empty() && in_list(strip_colons(t), opt.example_headers)) {
      if (i + 1 < lines.size() && is_underline(lines[i + 1])) {
        i = skip_to_next_underlined(lines, i + 2);
      } else {
        i = skip_indented(lines, i + 1, indent_of(lines[i]));
      }
      continue;
    }
    out.push_back(lines[i]);
    ++i;
  }
  return out;
}

inline bool is_tag_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.';
}

// Removes markup such as <summary>, </note>, <br/> or <see cref="x"/>. A '<'
// followed by whitespace, a digit or an operator is left alone.
inline std::string strip_tags_once(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '/') ++j;
      if (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) {
        while (j < s.size() && is_tag_char(s[j])) ++j;
        if (j < s.size() && is_space(s[j])) {
          while (j < s.size() && s[j] != '<' && s[j] != '>') ++j;
        }
        if (j < s.size() && s[j] == '/') ++j;
        if (j < s.size() && s[j] == '>') {
          i = j + 1;
          continue;
        }
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

inline std::string strip_tags(std::string s) {
  while (true) {
    std::string next = strip_tags_once(s);
    if (next == s) return s;
    s = std::move(next);
  }
}

inline bool has_link(std::string_view s) {
  return icontains(s, "http://") || icontains(s, "https://") || icontains(s, "www.");
}

inline bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

}  // namespace detail

// Words with leading and trailing punctuation marks counted as separate tokens.
inline std::size_t description_token_count(std::string_view text) {
  std::size_t n = 0;
  for (std::string_view w : split_whitespace(text)) {
    std::size_t b = 0;
    std::size_t e = w.size();
    while (b < e && detail::is_punct(w[b])) ++b;
    while (e > b && detail::is_punct(w[e - 1])) --e;
    n += b + (w.size() - e) + (e > b ? 1 : 0);
  }
  return n;
}

inline Cleaned clean_description(std::string_view docstring, const CurateOptions& opt = {}) {
  const std::string normalized = normalize_newlines(docstring);
  std::vector<std::string_view> lines = split_lines(normalized);
  lines = detail::drop_sections(lines, opt);
  lines = detail::drop_examples(lines, opt);
  std::string text;
  for (std::string_view l : lines) {
    if (trim(l).empty()) continue;
    if (!text.empty()) text.push_back('\n');
    text += l;
  }
  if (!is_ascii(text)) return Cleaned::fail(RejectStage::non_ascii, "description contains non-ASCII characters");
  text = detail::strip_tags(std::move(text));
  if (detail::has_link(text)) return Cleaned::fail(RejectStage::link, "description contains a hyperlink");
  const std::vector<std::string_view> words = split_whitespace(text);
  std::string collapsed;
  for (std::string_view w : words) {
    if (!collapsed.empty()) collapsed.push_back(' ');
    collapsed += w;
  }
  if (words.size() < opt.min_words) {
    return Cleaned::fail(RejectStage::min_words, "description has " + std::to_string(words.size()) +
                                                     " words, need " + std::to_string(opt.min_words));
  }
  return Cleaned::accept(std::move(collapsed));
}

namespace detail {

inline bool is_placeholder(const python::Node& s) {
  using python::NodeKind;
  return s.kind == NodeKind::pass_stmt ||
         (s.kind == NodeKind::expr_stmt && s.children[0].kind == NodeKind::ellipsis);
}

inline void strip_nested_docstrings(python::Node& n) {
  using python::NodeKind;
  for (python::Node& c : n.children) strip_nested_docstrings(c);
  if (n.kind != NodeKind::function_def && n.kind != NodeKind::class_def) return;
  python::Node& block = n.children.back();
  if (python::docstring_node(block) == nullptr) return;
  block.children.erase(block.children.begin());
  if (block.children.empty()) {
    python::Node pass;
    pass.kind = NodeKind::pass_stmt;
    block.children.push_back(std::move(pass));
  }
}

}  // namespace detail

// Removes docstrings and comments and applies the canonical formatter.
inline Cleaned clean_code(const RawFunction& f) {
  if (trim(f.body).empty()) return Cleaned::fail(RejectStage::pass_function, "empty body");
  python::Node mod;
  try {
    mod = python::parse_module(f.signature + "\n" + f.body + "\n");
  } catch (const python::SyntaxError& e) {
    return Cleaned::fail(RejectStage::format_failure, e.what());
  }
  if (mod.children.size() != 1 || mod.children[0].kind != python::NodeKind::function_def) {
    return Cleaned::fail(RejectStage::format_failure, "not a single function definition");
  }
  python::Node& fn = mod.children[0];
  const python::Node& block = fn.children[3];
  const bool placeholder_only = std::all_of(block.children.begin(), block.children.end(), detail::is_placeholder);
  if (placeholder_only) return Cleaned::fail(RejectStage::pass_function, "body is a placeholder");
  if (icontains(f.name, "test")) return Cleaned::fail(RejectStage::test_function, "name contains 'test'");
  for (python::Node& c : fn.children[3].children) detail::strip_nested_docstrings(c);
  fn.flags &= static_cast<std::uint8_t>(~python::node_flags::blank_before);
  std::string code = python::format_statements(mod.children);
  while (!code.empty() && code.back() == '\n') code.pop_back();
  return Cleaned::accept(std::move(code));
}

inline bool length_gate(std::string_view description, std::string_view code, const CurateOptions& opt = {}) {
  if (description_token_count(description) > opt.max_description_tokens) return false;
  return python::count_lexical_tokens(code) <= opt.max_code_tokens || utf8_length(code) <= opt.max_code_chars;
}

using CurateOutcome = std::variant<CuratedPair, RejectRecord>;

inline CurateOutcome curate_one(const RawFunction& f, const CurateOptions& opt = {}) {
  auto reject = [&](RejectStage s, std::string detail) { return RejectRecord{f.func_id, s, std::move(detail)}; };
  if (!f.docstring || trim(*f.docstring).empty()) return reject(RejectStage::no_docstring, "no docstring");
  Cleaned d = clean_description(*f.docstring, opt);
  if (!d.ok()) return reject(d.reject.stage, std::move(d.reject.detail));
  Cleaned c = clean_code(f);
  if (!c.ok()) return reject(c.reject.stage, std::move(c.reject.detail));
  if (!length_gate(*d.text, *c.text, opt)) {
    return reject(RejectStage::length, std::to_string(description_token_count(*d.text)) + " description tokens, " +
                                           std::to_string(python::count_lexical_tokens(*c.text)) + " code tokens, " +
                                           std::to_string(utf8_length(*c.text)) + " code characters");
  }
  return CuratedPair{f.func_id, std::move(*d.text), f.signature, std::move(*c.text),
                     f.file_id, f.path,              f.start_line, f.end_line};
}

struct CurateStats {
  std::size_t input = 0;
  std::size_t pairs = 0;
  std::size_t rejects = 0;
};

// Streams records through curate_one in bounded batches. Each input lands in
// exactly one of the two sinks, in input order.
template <class OnPair, class OnReject>
CurateStats curate(const std::vector<RawFunction>& funcs, const CurateOptions& opt, unsigned threads,
                   OnPair&& on_pair, OnReject&& on_reject, std::size_t batch = 256) {
  CurateStats stats;
  batched_map(funcs, batch, threads, [&](const RawFunction& f) { return curate_one(f, opt); },
              [&](CurateOutcome&& o) {
                ++stats.input;
                if (auto* p = std::get_if<CuratedPair>(&o)) {
                  ++stats.pairs;
                  on_pair(std::move(*p));
                } else {
                  ++stats.rejects;
                  on_reject(std::move(std::get<RejectRecord>(o)));
                }
              });
  return stats;
}

// A curated pair viewed again as a raw function whose docstring is the
// cleaned description; signature and body are split from the formatted code.
inline RawFunction rewrap(const CuratedPair& p) {
  const python::Node mod = python::parse_module(p.code + "\n");
  const python::Node& fn = mod.children.at(0);
  RawFunction f;
  f.func_id = p.func_id;
  f.file_id = p.file_id;
  f.path = p.path;
  f.name = fn.text;
  f.kind = fn.has(python::node_flags::is_async) ? FunctionKind::async_function : FunctionKind::function;
  f.signature = p.code.substr(0, fn.aux);
  f.docstring = p.description;
  f.body = p.code.substr(std::min<std::size_t>(fn.aux + 1, p.code.size()));
  f.start_line = p.start_line;
  f.end_line = p.end_line;
  return f;
}

inline json to_json(const CuratedPair& p) {
  return json{{"func_id", p.func_id},
              {"description", p.description},
              {"signature", p.signature},
              {"code", p.code},
              {"provenance",
               {{"file_id", p.file_id}, {"path", p.path}, {"start_line", p.start_line}, {"end_line", p.end_line}}}};
}

inline CuratedPair curated_pair_from_json(const json& j) {
  CuratedPair p;
  p.func_id = field<std::string>(j, "func_id");
  p.description = field<std::string>(j, "description");
  p.signature = field<std::string>(j, "signature");
  p.code = field<std::string>(j, "code");
  if (auto it = j.find("provenance"); it != j.end() && it->is_object()) {
    p.file_id = it->value("file_id", std::string());
    p.path = it->value("path", std::string());
    p.start_line = it->value("start_line", 0u);
    p.end_line = it->value("end_line", 0u);
  }
  return p;
}

inline json to_json(const RejectRecord& r) {
  return json{{"func_id", r.func_id}, {"stage", to_string(r.stage)}, {"detail", r.detail}};
}

inline RejectRecord reject_record_from_json(const json& j) {
  return RejectRecord{field<std::string>(j, "func_id"), reject_stage_from(field<std::string>(j, "stage")),
                      j.value("detail", std::string())};
}

}  // namespace corpusqc
