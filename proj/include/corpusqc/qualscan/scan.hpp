#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/python/lexer.hpp"
#include "corpusqc/python/parser.hpp"
#include "corpusqc/qualscan/builtin_rules.hpp"
#include "corpusqc/qualscan/pattern.hpp"
#include "corpusqc/qualscan/rule.hpp"

namespace corpusqc::qualscan {

struct Rule {
  std::string id;
  Category category = Category::best_practice;
  Severity severity = Severity::warning;
  std::optional<std::string> cwe;
  std::string message;
  Pattern pattern;
};

inline Rule compile_rule(const json& j) {
  if (!j.is_object()) throw PatternError("rule must be a JSON object");
  static const std::unordered_set<std::string> kKeys = {"id", "category", "severity", "cwe", "message", "pattern"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!kKeys.count(it.key())) throw PatternError("rule: unknown field '" + it.key() + "'");
  }
  auto text = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw PatternError(std::string("rule: missing string field '") + key + "'");
    return it->get<std::string>();
  };
  Rule r;
  r.id = text("id");
  if (r.id.empty()) throw PatternError("rule: empty id");
  const std::string cat = text("category");
  const std::string sev = text("severity");
  if (auto c = parse_category(cat)) {
    r.category = *c;
  } else {
    throw PatternError("rule " + r.id + ": unknown category '" + cat + "'");
  }
  if (auto s = parse_severity(sev)) {
    r.severity = *s;
  } else {
    throw PatternError("rule " + r.id + ": unknown severity '" + sev + "'");
  }
  if (auto it = j.find("cwe"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw PatternError("rule " + r.id + ": cwe must be a string");
    r.cwe = it->get<std::string>();
  }
  r.message = text("message");
  if (!j.contains("pattern")) throw PatternError("rule " + r.id + ": missing pattern");
  try {
    r.pattern = Pattern::compile(j["pattern"]);
  } catch (const PatternError& e) {
    throw PatternError("rule " + r.id + ": " + e.what());
  }
  return r;
}

// Rules keyed by id; a rule present in several rule sets runs once.
class Registry {
 public:
  bool add(Rule r) {
    if (!ids_.insert(r.id).second) {
      ++duplicates_;
      return false;
    }
    rules_.push_back(std::move(r));
    return true;
  }

  // A document holds one rule object or an array of them.
  std::size_t load_json(const json& doc) {
    std::size_t added = 0;
    if (doc.is_array()) {
      for (const json& r : doc) added += add(compile_rule(r)) ? 1 : 0;
    } else {
      added += add(compile_rule(doc)) ? 1 : 0;
    }
    return added;
  }

  // Loads a rule file, or every *.json file of a directory in name order.
  std::size_t load_path(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::size_t added = 0;
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(path)) {
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const fs::path& f : files) added += load_path(f);
      return added;
    }
    json doc;
    try {
      doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
      throw PatternError(path.string() + ": " + e.what());
    }
    try {
      return load_json(doc);
    } catch (const PatternError& e) {
      throw PatternError(path.string() + ": " + e.what());
    }
  }

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  std::size_t duplicates() const { return duplicates_; }
  bool contains(const std::string& id) const { return ids_.count(id) != 0; }

 private:
  std::vector<Rule> rules_;
  std::unordered_set<std::string> ids_;
  std::size_t duplicates_ = 0;
};

inline Registry builtin_registry() {
  Registry r;
  r.load_json(json::parse(kBuiltinRules));
  return r;
}

// True when `code` is exactly one (possibly decorated) function definition.
inline bool check_syntax(std::string_view code) {
  try {
    const python::Node mod = python::parse_module(code);
    return mod.children.size() == 1 && mod.children[0].kind == NodeKind::function_def;
  } catch (const python::SyntaxError&) {
    return false;
  }
}

// One finding per match; a match nested inside an earlier match of the same
// rule is not reported again.
inline std::vector<Finding> match_rule(const Rule& rule, const Tree& tree) {
  std::vector<Finding> out;
  const Matcher m(tree);
  std::uint32_t covered = 0;
  Env env;
  for (std::uint32_t i = 0; i < tree.size(); ++i) {
    if (i < covered) continue;
    env.clear();
    std::uint32_t last = i;
    if (!m.eval(rule.pattern, i, env, last)) continue;
    covered = tree.end(last);
    const Node& first = tree.node(i);
    const Node& final = tree.node(last);
    out.push_back(Finding{rule.id, rule.severity, rule.category, first.line,
                          std::max(final.end_line, first.line), interpolate(rule.message, env), rule.cwe});
  }
  return out;
}

inline std::vector<Finding> match_rule(const Rule& rule, const python::Node& root) {
  return match_rule(rule, Tree(root));
}

inline ScanVerdict scan_code(std::string func_id, std::string_view code, const Registry& registry) {
  ScanVerdict v;
  v.func_id = std::move(func_id);
  python::Node mod;
  try {
    mod = python::parse_module(code);
  } catch (const python::SyntaxError&) {
    v.status = Status::syntactically_incorrect;
    return v;
  }
  if (mod.children.size() != 1 || mod.children[0].kind != NodeKind::function_def) {
    v.status = Status::syntactically_incorrect;
    return v;
  }
  const Tree tree(mod);
  for (const Rule& r : registry.rules()) {
    std::vector<Finding> f = match_rule(r, tree);
    v.findings.insert(v.findings.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  v.status = v.findings.empty() ? Status::clean : Status::low_quality;
  return v;
}

inline Severity max_severity(const ScanVerdict& v) {
  Severity s = Severity::info;
  for (const Finding& f : v.findings) s = std::max(s, f.severity);
  return s;
}

inline bool trips_gate(const ScanVerdict& v, Severity gate) {
  for (const Finding& f : v.findings) {
    if (f.severity >= gate) return true;
  }
  return false;
}

}  // namespace corpusqc::qualscan
