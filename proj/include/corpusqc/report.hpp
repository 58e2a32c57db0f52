#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/qualscan/rule.hpp"

namespace corpusqc::report {

using qualscan::Category;
using qualscan::ScanVerdict;
using qualscan::Severity;
using qualscan::Status;

inline constexpr std::size_t kCategories = 6;
inline constexpr std::size_t kSeverities = 3;

inline constexpr std::array<Category, kCategories> kCategoryOrder = {
    Category::security,        Category::correctness,     Category::best_practice,
    Category::maintainability, Category::compatibility, Category::performance};

inline constexpr std::array<Severity, kSeverities> kSeverityOrder = {Severity::error, Severity::warning,
                                                                     Severity::info};

inline std::size_t index_of(Category c) { return static_cast<std::size_t>(c); }
inline std::size_t index_of(Severity s) { return static_cast<std::size_t>(s); }

struct RuleCount {
  std::string rule_id;
  std::uint64_t count = 0;
};

struct RuleTally {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kSeverities> by_severity{};
};

struct IssueBreakdown {
  std::uint64_t total_functions = 0;
  std::uint64_t clean_count = 0;
  std::uint64_t low_quality_count = 0;
  std::uint64_t syntactically_incorrect_count = 0;
  std::uint64_t total_findings = 0;
  std::array<std::uint64_t, kCategories> category_counts{};
  std::array<double, kCategories> category_shares{};
  // Low-quality functions with at least one finding in the category.
  std::array<std::uint64_t, kCategories> category_functions{};
  std::array<std::uint64_t, kSeverities> severity_counts{};
  std::array<double, kSeverities> severity_shares{};
  std::map<std::pair<Category, std::string>, RuleTally> rules;
  std::array<std::vector<RuleCount>, kCategories> top_rules;
  double issue_density = 0.0;
};

// Associative, commutative fold over verdicts; finish() derives shares and
// top-k lists.
class BreakdownAccumulator {
 public:
  void add(const ScanVerdict& v) {
    ++b_.total_functions;
    switch (v.status) {
      case Status::clean:
        ++b_.clean_count;
        break;
      case Status::low_quality:
        ++b_.low_quality_count;
        break;
      case Status::syntactically_incorrect:
        ++b_.syntactically_incorrect_count;
        break;
    }
    std::array<bool, kCategories> hit{};
    for (const qualscan::Finding& f : v.findings) {
      ++b_.total_findings;
      ++b_.category_counts[index_of(f.category)];
      ++b_.severity_counts[index_of(f.severity)];
      RuleTally& t = b_.rules[{f.category, f.rule_id}];
      ++t.total;
      ++t.by_severity[index_of(f.severity)];
      hit[index_of(f.category)] = true;
    }
    for (std::size_t c = 0; c < kCategories; ++c) b_.category_functions[c] += hit[c] ? 1 : 0;
  }

  void merge(const BreakdownAccumulator& o) {
    const IssueBreakdown& x = o.b_;
    b_.total_functions += x.total_functions;
    b_.clean_count += x.clean_count;
    b_.low_quality_count += x.low_quality_count;
    b_.syntactically_incorrect_count += x.syntactically_incorrect_count;
    b_.total_findings += x.total_findings;
    for (std::size_t c = 0; c < kCategories; ++c) {
      b_.category_counts[c] += x.category_counts[c];
      b_.category_functions[c] += x.category_functions[c];
    }
    for (std::size_t s = 0; s < kSeverities; ++s) b_.severity_counts[s] += x.severity_counts[s];
    for (const auto& [key, t] : x.rules) {
      RuleTally& mine = b_.rules[key];
      mine.total += t.total;
      for (std::size_t s = 0; s < kSeverities; ++s) mine.by_severity[s] += t.by_severity[s];
    }
  }

  IssueBreakdown finish(std::size_t top_k = 5) const {
    IssueBreakdown b = b_;
    const double total = static_cast<double>(b.total_findings);
    for (std::size_t c = 0; c < kCategories; ++c) {
      b.category_shares[c] = b.total_findings ? static_cast<double>(b.category_counts[c]) / total : 0.0;
    }
    for (std::size_t s = 0; s < kSeverities; ++s) {
      b.severity_shares[s] = b.total_findings ? static_cast<double>(b.severity_counts[s]) / total : 0.0;
    }
    b.issue_density = b.low_quality_count
                          ? static_cast<double>(b.total_findings) / static_cast<double>(b.low_quality_count)
                          : 0.0;
    for (const auto& [key, t] : b.rules) b.top_rules[index_of(key.first)].push_back(RuleCount{key.second, t.total});
    for (auto& list : b.top_rules) {
      std::sort(list.begin(), list.end(), [](const RuleCount& x, const RuleCount& y) {
        return x.count != y.count ? x.count > y.count : x.rule_id < y.rule_id;
      });
      if (list.size() > top_k) list.resize(top_k);
    }
    return b;
  }

 private:
  IssueBreakdown b_;
};

template <class Range>
IssueBreakdown breakdown(const Range& verdicts, std::size_t top_k = 5) {
  BreakdownAccumulator acc;
  for (const ScanVerdict& v : verdicts) acc.add(v);
  return acc.finish(top_k);
}

struct ComparisonRow {
  std::string model_id;
  std::uint64_t n = 0;
  std::uint64_t syntactically_incorrect = 0;
  std::uint64_t low_quality = 0;
  std::uint64_t total_findings = 0;
  std::array<std::uint64_t, kCategories> category_counts{};

  double pct_syntactically_incorrect() const {
    return n ? 100.0 * static_cast<double>(syntactically_incorrect) / static_cast<double>(n) : 0.0;
  }
  double pct_low_quality() const {
    return n ? 100.0 * static_cast<double>(low_quality) / static_cast<double>(n) : 0.0;
  }
  double category_share(std::size_t c) const {
    return total_findings ? static_cast<double>(category_counts[c]) / static_cast<double>(total_findings) : 0.0;
  }
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

// One row per model, ordered by model_id. Every run must cover the same ids.
inline ComparisonTable comparison_table(const std::map<std::string, std::vector<ScanVerdict>>& runs) {
  ComparisonTable t;
  std::set<std::string> reference;
  bool first = true;
  for (const auto& [model, verdicts] : runs) {
    std::set<std::string> ids;
    ComparisonRow row;
    row.model_id = model;
    for (const ScanVerdict& v : verdicts) {
      if (!ids.insert(v.func_id).second) throw DuplicateId(model + ": duplicate verdict for " + v.func_id);
      ++row.n;
      if (v.status == Status::syntactically_incorrect) ++row.syntactically_incorrect;
      if (v.status == Status::low_quality) ++row.low_quality;
      for (const qualscan::Finding& f : v.findings) {
        ++row.total_findings;
        ++row.category_counts[index_of(f.category)];
      }
    }
    if (first) {
      reference = std::move(ids);
      first = false;
    } else if (ids != reference) {
      throw MismatchedIds("run " + model + " covers a different set of func_ids");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline json to_json(const IssueBreakdown& b) {
  json cats = json::object();
  for (Category c : kCategoryOrder) {
    const std::size_t i = index_of(c);
    json top = json::array();
    for (const RuleCount& r : b.top_rules[i]) top.push_back(json{{"rule_id", r.rule_id}, {"count", r.count}});
    cats[qualscan::to_string(c)] = json{{"findings", b.category_counts[i]},
                                        {"share", b.category_shares[i]},
                                        {"functions", b.category_functions[i]},
                                        {"top_rules", std::move(top)}};
  }
  json sevs = json::object();
  for (Severity s : kSeverityOrder) {
    const std::size_t i = index_of(s);
    sevs[qualscan::to_string(s)] = json{{"findings", b.severity_counts[i]}, {"share", b.severity_shares[i]}};
  }
  json rules = json::array();
  for (const auto& [key, t] : b.rules) {
    json by_sev = json::object();
    for (Severity s : kSeverityOrder) by_sev[qualscan::to_string(s)] = t.by_severity[index_of(s)];
    rules.push_back(json{{"rule_id", key.second},
                         {"category", qualscan::to_string(key.first)},
                         {"findings", t.total},
                         {"by_severity", std::move(by_sev)}});
  }
  return json{{"total_functions", b.total_functions},
              {"clean", b.clean_count},
              {"low_quality", b.low_quality_count},
              {"syntactically_incorrect", b.syntactically_incorrect_count},
              {"total_findings", b.total_findings},
              {"issue_density", b.issue_density},
              {"categories", std::move(cats)},
              {"severities", std::move(sevs)},
              {"rules", std::move(rules)}};
}

inline json to_json(const ComparisonTable& t) {
  json rows = json::array();
  for (const ComparisonRow& r : t.rows) {
    json cats = json::object();
    for (Category c : kCategoryOrder) {
      const std::size_t i = index_of(c);
      cats[qualscan::to_string(c)] = json{{"findings", r.category_counts[i]}, {"share", r.category_share(i)}};
    }
    rows.push_back(json{{"model_id", r.model_id},
                        {"n", r.n},
                        {"syntactically_incorrect", r.syntactically_incorrect},
                        {"pct_syntactically_incorrect", r.pct_syntactically_incorrect()},
                        {"low_quality", r.low_quality},
                        {"pct_low_quality", r.pct_low_quality()},
                        {"total_findings", r.total_findings},
                        {"categories", std::move(cats)}});
  }
  return json{{"rows", std::move(rows)}};
}

// Flow data for a three-layer Sankey: category -> rule -> severity. With a
// single category the root layer carries no information and is dropped.
inline json sankey(const IssueBreakdown& b) {
  std::size_t used = 0;
  for (std::size_t c = 0; c < kCategories; ++c) used += b.category_counts[c] ? 1 : 0;
  const bool with_categories = used > 1;
  json nodes = json::array();
  json links = json::array();
  std::map<std::string, std::size_t> index;
  auto node = [&](const std::string& id, const std::string& label, const std::string& layer,
                  std::uint64_t value) {
    auto [it, fresh] = index.emplace(id, nodes.size());
    if (fresh) nodes.push_back(json{{"id", id}, {"label", label}, {"layer", layer}, {"value", value}});
    return it->second;
  };
  if (with_categories) {
    for (Category c : kCategoryOrder) {
      const std::size_t i = index_of(c);
      if (!b.category_counts[i]) continue;
      const std::string name = qualscan::to_string(c);
      node("category:" + name, name, "category", b.category_counts[i]);
    }
  }
  for (const auto& [key, t] : b.rules) {
    const std::string cat = qualscan::to_string(key.first);
    const std::string rid = "rule:" + cat + "/" + key.second;
    node(rid, key.second, "rule", t.total);
    if (with_categories) {
      links.push_back(json{{"source", "category:" + cat}, {"target", rid}, {"value", t.total}});
    }
  }
  for (Severity s : kSeverityOrder) {
    const std::size_t i = index_of(s);
    if (!b.severity_counts[i]) continue;
    const std::string name = qualscan::to_string(s);
    node("severity:" + name, name, "severity", b.severity_counts[i]);
  }
  for (const auto& [key, t] : b.rules) {
    const std::string rid = "rule:" + std::string(qualscan::to_string(key.first)) + "/" + key.second;
    for (Severity s : kSeverityOrder) {
      const std::uint64_t v = t.by_severity[index_of(s)];
      if (v) links.push_back(json{{"source", rid}, {"target", "severity:" + std::string(qualscan::to_string(s))}, {"value", v}});
    }
  }
  json layers = json::array();
  if (with_categories) layers.push_back("category");
  layers.push_back("rule");
  layers.push_back("severity");
  return json{{"layers", std::move(layers)}, {"nodes", std::move(nodes)}, {"links", std::move(links)}};
}

inline std::string pct(double share) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * share);
  return buf;
}

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string markdown(const IssueBreakdown& b) {
  std::string out;
  out += "# Quality issues\n\n";
  out += "| functions | clean | low-quality | syntactically incorrect | findings | issue density |\n";
  out += "|---:|---:|---:|---:|---:|---:|\n";
  out += "| " + std::to_string(b.total_functions) + " | " + std::to_string(b.clean_count) + " | " +
         std::to_string(b.low_quality_count) + " | " + std::to_string(b.syntactically_incorrect_count) + " | " +
         std::to_string(b.total_findings) + " | " + fixed(b.issue_density, 3) + " |\n\n";
  out += "## Categories\n\n| category | findings | share | functions |\n|---|---:|---:|---:|\n";
  for (Category c : kCategoryOrder) {
    const std::size_t i = index_of(c);
    out += "| " + std::string(qualscan::to_string(c)) + " | " + std::to_string(b.category_counts[i]) + " | " +
           pct(b.category_shares[i]) + " | " + std::to_string(b.category_functions[i]) + " |\n";
  }
  out += "\n## Severities\n\n| severity | findings | share |\n|---|---:|---:|\n";
  for (Severity s : kSeverityOrder) {
    const std::size_t i = index_of(s);
    out += "| " + std::string(qualscan::to_string(s)) + " | " + std::to_string(b.severity_counts[i]) + " | " +
           pct(b.severity_shares[i]) + " |\n";
  }
  out += "\n## Top rules\n\n| category | rule | findings |\n|---|---|---:|\n";
  for (Category c : kCategoryOrder) {
    for (const RuleCount& r : b.top_rules[index_of(c)]) {
      out += "| " + std::string(qualscan::to_string(c)) + " | " + r.rule_id + " | " + std::to_string(r.count) + " |\n";
    }
  }
  return out;
}

inline std::string markdown(const ComparisonTable& t) {
  std::string out = "| model | n | syntactically incorrect | low-quality | findings |";
  for (Category c : kCategoryOrder) out += " " + std::string(qualscan::to_string(c)) + " |";
  out += "\n|---|---:|---:|---:|---:|";
  for (std::size_t i = 0; i < kCategories; ++i) out += "---:|";
  out += "\n";
  for (const ComparisonRow& r : t.rows) {
    out += "| " + r.model_id + " | " + std::to_string(r.n) + " | " + std::to_string(r.syntactically_incorrect) +
           " (" + fixed(r.pct_syntactically_incorrect(), 2) + "%) | " + std::to_string(r.low_quality) + " (" +
           fixed(r.pct_low_quality(), 2) + "%) | " + std::to_string(r.total_findings) + " |";
    for (Category c : kCategoryOrder) {
      const std::size_t i = index_of(c);
      out += " " + std::to_string(r.category_counts[i]) + " (" + pct(r.category_share(i)) + ") |";
    }
    out += "\n";
  }
  return out;
}

// Formats: "markdown" (or "md"), "json", and for breakdowns "sankey".
inline std::string render(const IssueBreakdown& b, std::string_view format) {
  if (format == "markdown" || format == "md") return markdown(b);
  if (format == "json") return to_json(b).dump(2) + "\n";
  if (format == "sankey") return sankey(b).dump(2) + "\n";
  throw UnsupportedFormat("unsupported breakdown format '" + std::string(format) + "'");
}

inline std::string render(const ComparisonTable& t, std::string_view format) {
  if (format == "markdown" || format == "md") return markdown(t);
  if (format == "json") return to_json(t).dump(2) + "\n";
  throw UnsupportedFormat("unsupported table format '" + std::string(format) + "'");
}

}  // namespace corpusqc::report
