#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"

namespace corpusqc::qualscan {

enum class Category { security, correctness, best_practice, compatibility, maintainability, performance };
enum class Severity { info, warning, error };

inline constexpr std::array<Category, 6> kCategories = {Category::security,      Category::correctness,
                                                        Category::best_practice, Category::compatibility,
                                                        Category::maintainability, Category::performance};
inline constexpr std::array<Severity, 3> kSeverities = {Severity::info, Severity::warning, Severity::error};

inline const char* to_string(Category c) {
  switch (c) {
    case Category::security:
      return "security";
    case Category::correctness:
      return "correctness";
    case Category::best_practice:
      return "best-practice";
    case Category::compatibility:
      return "compatibility";
    case Category::maintainability:
      return "maintainability";
    case Category::performance:
      return "performance";
  }
  return "unknown";
}

inline const char* to_string(Severity s) {
  switch (s) {
    case Severity::info:
      return "info";
    case Severity::warning:
      return "warning";
    case Severity::error:
      return "error";
  }
  return "unknown";
}

inline std::optional<Category> parse_category(std::string_view s) {
  for (Category c : kCategories) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

inline std::optional<Severity> parse_severity(std::string_view s) {
  for (Severity v : kSeverities) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

inline Category category_from(std::string_view s) {
  if (auto c = parse_category(s)) return *c;
  throw DataError("unknown category '" + std::string(s) + "'");
}

inline Severity severity_from(std::string_view s) {
  if (auto v = parse_severity(s)) return *v;
  throw DataError("unknown severity '" + std::string(s) + "'");
}

struct Finding {
  std::string rule_id;
  Severity severity = Severity::warning;
  Category category = Category::best_practice;
  std::uint32_t start_line = 0;
  std::uint32_t end_line = 0;
  std::string message;
  std::optional<std::string> cwe;
};

enum class Status { clean, low_quality, syntactically_incorrect };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::clean:
      return "clean";
    case Status::low_quality:
      return "low_quality";
    case Status::syntactically_incorrect:
      return "syntactically_incorrect";
  }
  return "unknown";
}

inline Status status_from(std::string_view s) {
  if (s == "clean") return Status::clean;
  if (s == "low_quality") return Status::low_quality;
  if (s == "syntactically_incorrect") return Status::syntactically_incorrect;
  throw DataError("unknown status '" + std::string(s) + "'");
}

struct ScanVerdict {
  std::string func_id;
  Status status = Status::clean;
  std::vector<Finding> findings;
};

inline json to_json(const Finding& f) {
  json j{{"rule_id", f.rule_id},
         {"severity", to_string(f.severity)},
         {"category", to_string(f.category)},
         {"lines", json::array({f.start_line, f.end_line})},
         {"message", f.message}};
  j["cwe"] = f.cwe ? json(*f.cwe) : json(nullptr);
  return j;
}

inline Finding finding_from_json(const json& j) {
  Finding f;
  f.rule_id = field<std::string>(j, "rule_id");
  f.severity = severity_from(field<std::string>(j, "severity"));
  f.category = category_from(field<std::string>(j, "category"));
  const json& lines = j.at("lines");
  if (!lines.is_array() || lines.size() != 2) throw DataError("finding 'lines' must be [start, end]");
  f.start_line = lines[0].get<std::uint32_t>();
  f.end_line = lines[1].get<std::uint32_t>();
  f.message = j.value("message", std::string());
  if (auto it = j.find("cwe"); it != j.end() && !it->is_null()) f.cwe = it->get<std::string>();
  return f;
}

inline json to_json(const ScanVerdict& v) {
  json findings = json::array();
  for (const Finding& f : v.findings) findings.push_back(to_json(f));
  return json{{"func_id", v.func_id}, {"status", to_string(v.status)}, {"findings", std::move(findings)}};
}

inline ScanVerdict verdict_from_json(const json& j) {
  ScanVerdict v;
  v.func_id = field<std::string>(j, "func_id");
  v.status = status_from(field<std::string>(j, "status"));
  if (auto it = j.find("findings"); it != j.end()) {
    for (const json& f : *it) v.findings.push_back(finding_from_json(f));
  }
  if ((v.status == Status::low_quality) != !v.findings.empty()) {
    throw DataError("verdict " + v.func_id + ": findings must be non-empty exactly when low_quality");
  }
  return v;
}

}  // namespace corpusqc::qualscan
