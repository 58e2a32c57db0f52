#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/hash.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/parallel.hpp"
#include "corpusqc/python/docstring.hpp"
#include "corpusqc/python/lexer.hpp"
#include "corpusqc/python/parser.hpp"
#include "corpusqc/text.hpp"

namespace corpusqc {

struct SourceFile {
  std::string path;
  std::string content;  // UTF-8, BOM removed, newlines normalized to "\n"
  std::string file_id;  // sha256 of the raw bytes
};

enum class FunctionKind { function, async_function, lambda };

inline const char* to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::function:
      return "function";
    case FunctionKind::async_function:
      return "async_function";
    case FunctionKind::lambda:
      return "lambda";
  }
  return "function";
}

inline FunctionKind function_kind_from(std::string_view s) {
  if (s == "function") return FunctionKind::function;
  if (s == "async_function") return FunctionKind::async_function;
  if (s == "lambda") return FunctionKind::lambda;
  throw DataError("unknown function kind '" + std::string(s) + "'");
}

struct RawFunction {
  std::string func_id;
  std::string file_id;
  std::string path;
  std::string name;
  FunctionKind kind = FunctionKind::function;
  std::string signature;
  std::optional<std::string> docstring;
  std::string body;
  std::uint32_t start_line = 0;
  std::uint32_t end_line = 0;
  std::uint32_t col = 0;
};

struct IngestReject {
  std::string path;
  std::string reason;  // io_error | encoding_error | parse_failure
  std::string detail;
};

struct ExtractResult {
  std::vector<RawFunction> functions;
  std::optional<IngestReject> parse_failure;  // set when any region failed to parse
};

inline std::string make_func_id(std::string_view file_id, std::uint32_t start_line, std::string_view name) {
  std::string key(file_id);
  key += ':';
  key += std::to_string(start_line);
  key += ':';
  key += name;
  return sha256_hex(key).substr(0, 32);
}

// Validates and normalizes raw bytes. Throws EncodingError for non-text input.
inline SourceFile make_source_file(std::string path, std::string_view raw) {
  SourceFile f;
  f.path = std::move(path);
  f.file_id = sha256_hex(raw);
  std::string_view text = raw;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  if (text.find('\0') != std::string_view::npos) throw EncodingError(f.path + ": contains NUL bytes");
  if (!is_valid_utf8(text)) throw EncodingError(f.path + ": not valid UTF-8");
  f.content = normalize_newlines(text);
  return f;
}

inline SourceFile load_source_file(const std::filesystem::path& path) {
  std::string raw;
  try {
    raw = read_file(path);
  } catch (const IoError&) {
    throw IoError(path.string() + ": unreadable");
  }
  return make_source_file(path.generic_string(), raw);
}

namespace detail {

inline std::uint32_t statement_begin(const python::Node& s) {
  using python::NodeKind;
  if ((s.kind == NodeKind::function_def || s.kind == NodeKind::class_def) && !s.children[0].children.empty()) {
    return s.children[0].begin;
  }
  return s.begin;
}

// Leading whitespace of the line containing `offset`.
inline std::string_view line_indent(std::string_view src, std::size_t offset) {
  std::size_t start = src.rfind('\n', offset == 0 ? 0 : offset - 1);
  start = (start == std::string_view::npos || offset == 0) ? 0 : start + 1;
  std::size_t end = start;
  while (end < src.size() && (src[end] == ' ' || src[end] == '\t' || src[end] == '\f')) ++end;
  return src.substr(start, end - start);
}

class Extractor {
 public:
  Extractor(const SourceFile& file, std::string_view src, std::uint32_t line_offset)
      : file_(file), src_(src), line_offset_(line_offset) {}

  void run(const python::Node& n, std::vector<RawFunction>& out) {
    using python::NodeKind;
    if (n.kind == NodeKind::function_def) out.push_back(function(n));
    if (n.kind == NodeKind::lambda) out.push_back(lambda(n));
    for (const python::Node& c : n.children) run(c, out);
  }

 private:
  RawFunction base(const python::Node& n, std::string name) const {
    RawFunction f;
    f.file_id = file_.file_id;
    f.path = file_.path;
    f.name = std::move(name);
    f.start_line = n.line + line_offset_;
    f.end_line = std::max(n.end_line, n.line) + line_offset_;
    f.col = n.col;
    return f;
  }

  RawFunction function(const python::Node& n) const {
    RawFunction f = base(n, n.text);
    f.kind = n.has(python::node_flags::is_async) ? FunctionKind::async_function : FunctionKind::function;
    f.func_id = make_func_id(file_.file_id, f.start_line, f.name);
    f.signature = std::string(src_.substr(n.begin, n.aux - n.begin));
    const python::Node& block = n.children[3];
    std::size_t first = 0;
    if (const python::Node* doc = python::docstring_node(block)) {
      f.docstring = python::cleandoc(python::string_value(doc->children[0]));
      first = 1;
    }
    if (first < block.children.size()) {
      const std::uint32_t begin = statement_begin(block.children[first]);
      std::string indent = block.has(python::node_flags::inline_suite)
                               ? std::string("    ")
                               : std::string(line_indent(src_, statement_begin(block.children[0])));
      if (indent.empty()) indent = "    ";
      f.body = indent + std::string(src_.substr(begin, n.end - begin));
    }
    return f;
  }

  RawFunction lambda(const python::Node& n) const {
    RawFunction f = base(n, "<lambda>");
    f.kind = FunctionKind::lambda;
    // Several lambdas may share a line; the column keeps ids unique.
    f.func_id = make_func_id(file_.file_id, f.start_line, f.name + "@" + std::to_string(n.col));
    f.signature = std::string(rtrim(src_.substr(n.begin, n.aux - n.begin)));
    f.body = std::string(trim(src_.substr(n.aux, n.end - n.aux)));
    return f;
  }

  const SourceFile& file_;
  std::string_view src_;
  std::uint32_t line_offset_;
};

// Starting lines (1-based) of column-0 statements, used to carve an
// unparsable file into independently parsable regions.
inline std::vector<std::uint32_t> region_starts(std::string_view src) {
  using python::TokenType;
  const auto toks = python::tokenize(src, {.tolerant = true});
  std::vector<std::uint32_t> starts;
  bool at_logical_start = true;
  bool prev_was_decorator = false;
  std::uint32_t prev_line = 0;
  for (const python::Token& t : toks) {
    if (t.type == TokenType::comment || t.type == TokenType::nl || t.type == TokenType::indent ||
        t.type == TokenType::dedent) {
      continue;
    }
    if (t.type == TokenType::newline) {
      at_logical_start = true;
      continue;
    }
    // An unclosed bracket hides later statement boundaries, so definition
    // keywords opening a physical line at column 0 always start a region.
    const bool line_start = t.line != prev_line;
    prev_line = t.end_line;
    if (!at_logical_start && line_start && t.col == 0 &&
        (t.text == "def" || t.text == "class" || t.text == "async" || t.text == "@")) {
      at_logical_start = true;
      prev_was_decorator = false;
    }
    if (at_logical_start && t.col == 0) {
      const bool continuation = t.text == "else" || t.text == "elif" || t.text == "except" ||
                                t.text == "finally" || t.text == ")" || t.text == "]" || t.text == "}";
      if (!continuation && !prev_was_decorator) starts.push_back(t.line);
      prev_was_decorator = t.text == "@";
    } else if (at_logical_start) {
      prev_was_decorator = false;
    }
    at_logical_start = false;
  }
  if (starts.empty() || starts.front() != 1) starts.insert(starts.begin(), 1);
  return starts;
}

}  // namespace detail

// Every function definition (methods and nested functions included) and
// every lambda, in source order.
inline ExtractResult extract_functions(const SourceFile& file) {
  ExtractResult result;
  auto sort_out = [&] {
    std::stable_sort(result.functions.begin(), result.functions.end(), [](const RawFunction& a, const RawFunction& b) {
      return a.start_line != b.start_line ? a.start_line < b.start_line : a.col < b.col;
    });
  };
  try {
    const python::Node mod = python::parse_module(file.content);
    detail::Extractor(file, file.content, 0).run(mod, result.functions);
    sort_out();
    return result;
  } catch (const python::SyntaxError& e) {
    result.parse_failure = IngestReject{file.path, "parse_failure",
                                        e.what()};
  }
  const std::vector<std::uint32_t> starts = detail::region_starts(file.content);
  std::vector<std::size_t> line_offsets{0};
  for (std::size_t i = 0; i < file.content.size(); ++i) {
    if (file.content[i] == '\n') line_offsets.push_back(i + 1);
  }
  std::size_t failed = 0;
  for (std::size_t r = 0; r < starts.size(); ++r) {
    const std::size_t begin = line_offsets[std::min<std::size_t>(starts[r] - 1, line_offsets.size() - 1)];
    const std::size_t end = r + 1 < starts.size()
                                ? line_offsets[std::min<std::size_t>(starts[r + 1] - 1, line_offsets.size() - 1)]
                                : file.content.size();
    const std::string_view region = std::string_view(file.content).substr(begin, end - begin);
    try {
      const python::Node mod = python::parse_module(region);
      detail::Extractor(file, region, starts[r] - 1).run(mod, result.functions);
    } catch (const python::SyntaxError&) {
      ++failed;
    }
  }
  result.parse_failure->detail += "; " + std::to_string(failed) + " of " + std::to_string(starts.size()) +
                                  " regions unparsable, " + std::to_string(result.functions.size()) +
                                  " functions recovered";
  sort_out();
  return result;
}

inline std::vector<RawFunction> require_docstring(std::vector<RawFunction> funcs) {
  std::erase_if(funcs, [](const RawFunction& f) { return !f.docstring || trim(*f.docstring).empty(); });
  return funcs;
}

// Text of a function that parses back to the same signature and body.
inline std::string reconstruct_source(const RawFunction& f) {
  if (f.kind == FunctionKind::lambda) return f.signature + " " + f.body + "\n";
  std::string out = f.signature + "\n";
  std::string indent = std::string(detail::line_indent(f.body, 0));
  if (indent.empty()) indent = "    ";
  if (f.docstring) {
    std::string escaped;
    for (char c : *f.docstring) {
      if (c == '\\' || c == '"') escaped.push_back('\\');
      escaped.push_back(c);
    }
    out += indent + "\"\"\"" + escaped + "\"\"\"\n";
  }
  if (!f.body.empty()) {
    out += f.body;
    out += "\n";
  } else if (!f.docstring) {
    out += indent + "pass\n";
  }
  return out;
}

inline json to_json(const RawFunction& f) {
  return json{{"func_id", f.func_id},
              {"file_id", f.file_id},
              {"path", f.path},
              {"name", f.name},
              {"kind", to_string(f.kind)},
              {"signature", f.signature},
              {"docstring", f.docstring ? json(*f.docstring) : json(nullptr)},
              {"body", f.body},
              {"start_line", f.start_line},
              {"end_line", f.end_line},
              {"col", f.col}};
}

inline RawFunction raw_function_from_json(const json& j) {
  RawFunction f;
  f.func_id = field<std::string>(j, "func_id");
  f.file_id = j.value("file_id", std::string());
  f.path = j.value("path", std::string());
  f.name = field<std::string>(j, "name");
  f.kind = function_kind_from(j.value("kind", std::string("function")));
  f.signature = field<std::string>(j, "signature");
  if (auto it = j.find("docstring"); it != j.end() && !it->is_null()) f.docstring = it->get<std::string>();
  f.body = field<std::string>(j, "body");
  f.start_line = field<std::uint32_t>(j, "start_line");
  f.end_line = field<std::uint32_t>(j, "end_line");
  f.col = j.value("col", 0u);
  return f;
}

inline json to_json(const IngestReject& r) {
  return json{{"path", r.path}, {"reason", r.reason}, {"detail", r.detail}};
}

// Expands directories (recursively, *.py) and manifest files (one path per
// line, relative to the manifest) into a sorted, de-duplicated file list.
inline std::vector<std::filesystem::path> list_source_files(const std::vector<std::string>& roots) {
  namespace fs = std::filesystem;
  std::set<std::string> seen;
  std::vector<fs::path> out;
  auto add = [&](const fs::path& p) {
    const std::string key = p.lexically_normal().generic_string();
    if (seen.insert(key).second) out.emplace_back(key);
  };
  for (const std::string& root : roots) {
    const fs::path p(root);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (fs::recursive_directory_iterator it(p, fs::directory_options::skip_permission_denied, ec), end;
           it != end; it.increment(ec)) {
        if (ec) break;
        if (it->is_regular_file(ec) && it->path().extension() == ".py") add(it->path());
      }
      if (ec) throw IoError("cannot list " + root + ": " + ec.message());
    } else if (p.extension() == ".py") {
      add(p);
    } else if (fs::is_regular_file(p, ec)) {
      const std::string text = read_file(p);
      for (std::string_view line : split_lines(text)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        fs::path entry(std::string{line});
        add(entry.is_absolute() ? entry : p.parent_path() / entry);
      }
    } else {
      throw IoError("no such corpus path: " + root);
    }
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  return out;
}

struct FileOutcome {
  std::vector<RawFunction> functions;
  std::optional<IngestReject> reject;
};

inline FileOutcome ingest_file(const std::filesystem::path& path) {
  FileOutcome out;
  try {
    const SourceFile file = load_source_file(path);
    ExtractResult r = extract_functions(file);
    out.functions = std::move(r.functions);
    out.reject = std::move(r.parse_failure);
  } catch (const EncodingError& e) {
    out.reject = IngestReject{path.generic_string(), "encoding_error", e.what()};
  } catch (const IoError& e) {
    out.reject = IngestReject{path.generic_string(), "io_error", e.what()};
  }
  return out;
}

struct IngestStats {
  std::size_t files = 0;
  std::size_t functions = 0;
  std::size_t rejects = 0;
};

inline constexpr std::uintmax_t kIngestBatchBytes = 1u << 20;

// Streams every file through extraction in batches of at most `batch` files and
// roughly kIngestBatchBytes of source; output order is (path, start_line)
// regardless of thread count.
template <class OnFunction, class OnReject>
IngestStats ingest_corpus(const std::vector<std::filesystem::path>& files, unsigned threads,
                          std::size_t batch, OnFunction&& on_function, OnReject&& on_reject) {
  IngestStats stats;
  batch = std::max<std::size_t>(1, batch);
  auto sink = [&](FileOutcome&& o) {
    ++stats.files;
    for (RawFunction& f : o.functions) {
      ++stats.functions;
      on_function(std::move(f));
    }
    if (o.reject) {
      ++stats.rejects;
      on_reject(std::move(*o.reject));
    }
  };
  std::vector<std::filesystem::path> chunk;
  std::uintmax_t bytes = 0;
  auto flush = [&] {
    for (FileOutcome& o : parallel_map(chunk, [](const std::filesystem::path& p) { return ingest_file(p); }, threads)) {
      sink(std::move(o));
    }
    chunk.clear();
    bytes = 0;
  };
  for (const std::filesystem::path& p : files) {
    std::error_code ec;
    const std::uintmax_t size = std::filesystem::file_size(p, ec);
    if (!chunk.empty() && (chunk.size() >= batch || bytes + (ec ? 0 : size) > kIngestBatchBytes)) flush();
    chunk.push_back(p);
    bytes += ec ? 0 : size;
  }
  if (!chunk.empty()) flush();
  return stats;
}

}  // namespace corpusqc
