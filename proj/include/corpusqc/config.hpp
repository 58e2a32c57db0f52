#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/parallel.hpp"

namespace corpusqc {

struct CurateOptions {
  std::size_t min_words = 10;
  std::size_t max_description_tokens = 50;
  std::size_t max_code_tokens = 450;
  std::size_t max_code_chars = 800;
  // Line prefixes (case-insensitive) that open a dropped docstring section.
  std::vector<std::string> section_headers = {
      "Parameters:", "Params:", "Returns:", "Return:", "Args:", "Arguments:", "Raises:",
      "Yields:", "Keyword Arguments:", "Kwargs:", "Other Parameters:", ":param", ":parameter",
      ":arg", ":argument", ":key", ":keyword", ":type", ":return", ":returns", ":rtype",
      ":raise", ":raises", ":except", ":yield", ":yields", "@param", "@return", "@rtype",
      "@raise", "@type"};
  // Underlined (numpydoc) section titles that are dropped with their content.
  std::vector<std::string> underlined_sections = {
      "Parameters", "Other Parameters", "Returns", "Yields", "Receives", "Raises", "Warns",
      "Keyword Arguments", "Attributes"};
  std::vector<std::string> example_headers = {"Example", "Examples", "Usage", "Doctest", "Doctests"};
};

struct MetricsOptions {
  std::size_t max_n = 4;
  std::size_t shared_k = 500;
  double epsilon = 1e-9;
};

struct StatsOptions {
  std::size_t exact_threshold = 25;
  double alpha = 0.05;
};

struct PipelineConfig {
  std::string language = "python";
  std::vector<std::string> corpus;
  std::string output_dir = "corpusqc-out";
  std::vector<std::string> rules;
  bool builtin_rules = true;
  std::uint64_t seed = 42;
  unsigned parallelism = default_parallelism();
  std::size_t batch_size = 256;
  std::size_t top_k = 5;
  CurateOptions curate;
  MetricsOptions metrics;
  StatsOptions stats;
};

inline json to_json(const CurateOptions& c) {
  return json{{"min_words", c.min_words},
              {"max_description_tokens", c.max_description_tokens},
              {"max_code_tokens", c.max_code_tokens},
              {"max_code_chars", c.max_code_chars},
              {"section_headers", c.section_headers},
              {"underlined_sections", c.underlined_sections},
              {"example_headers", c.example_headers}};
}

inline json to_json(const MetricsOptions& m) {
  return json{{"max_n", m.max_n}, {"shared_k", m.shared_k}, {"epsilon", m.epsilon}};
}

inline json to_json(const StatsOptions& s) {
  return json{{"exact_threshold", s.exact_threshold}, {"alpha", s.alpha}};
}

inline json to_json(const PipelineConfig& c) {
  return json{{"language", c.language},         {"corpus", c.corpus},
              {"output_dir", c.output_dir},     {"rules", c.rules},
              {"builtin_rules", c.builtin_rules}, {"seed", c.seed},
              {"parallelism", c.parallelism},   {"batch_size", c.batch_size},
              {"top_k", c.top_k},               {"curate", to_json(c.curate)},
              {"metrics", to_json(c.metrics)},  {"stats", to_json(c.stats)}};
}

namespace detail {

template <class T>
void read_field(const json& obj, const std::string& prefix, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
    if (it->is_number_integer() && !it->is_number_unsigned()) {
      throw ConfigError("config field '" + prefix + key + "': must be positive");
    }
    if (it->is_number_float()) throw ConfigError("config field '" + prefix + key + "': must be an integer");
  }
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + prefix + key + "': wrong type");
  }
}

inline void reject_unknown(const json& obj, const std::string& prefix, const json& known) {
  if (!obj.is_object()) throw ConfigError("config field '" + prefix + "': expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.contains(it.key())) throw ConfigError("config field '" + prefix + it.key() + "': unknown field");
  }
}

inline void require_positive(double v, const std::string& field) {
  if (!(v > 0)) throw ConfigError("config field '" + field + "': must be positive");
}

}  // namespace detail

inline void validate(const PipelineConfig& c) {
  if (c.language != "python") throw ConfigError("config field 'language': only 'python' is supported");
  detail::require_positive(static_cast<double>(c.parallelism), "parallelism");
  detail::require_positive(static_cast<double>(c.batch_size), "batch_size");
  detail::require_positive(static_cast<double>(c.curate.min_words), "curate.min_words");
  detail::require_positive(static_cast<double>(c.curate.max_description_tokens),
                           "curate.max_description_tokens");
  detail::require_positive(static_cast<double>(c.curate.max_code_tokens), "curate.max_code_tokens");
  detail::require_positive(static_cast<double>(c.curate.max_code_chars), "curate.max_code_chars");
  detail::require_positive(static_cast<double>(c.metrics.max_n), "metrics.max_n");
  detail::require_positive(c.metrics.epsilon, "metrics.epsilon");
  if (!(c.stats.alpha > 0 && c.stats.alpha < 1)) throw ConfigError("config field 'stats.alpha': must be in (0, 1)");
}

inline PipelineConfig config_from_json(const json& j) {
  PipelineConfig c;
  const json defaults = to_json(c);
  detail::reject_unknown(j, "", defaults);
  detail::read_field(j, "", "language", c.language);
  detail::read_field(j, "", "corpus", c.corpus);
  detail::read_field(j, "", "output_dir", c.output_dir);
  detail::read_field(j, "", "rules", c.rules);
  detail::read_field(j, "", "builtin_rules", c.builtin_rules);
  detail::read_field(j, "", "seed", c.seed);
  detail::read_field(j, "", "parallelism", c.parallelism);
  detail::read_field(j, "", "batch_size", c.batch_size);
  detail::read_field(j, "", "top_k", c.top_k);
  if (auto it = j.find("curate"); it != j.end()) {
    detail::reject_unknown(*it, "curate.", defaults["curate"]);
    detail::read_field(*it, "curate.", "min_words", c.curate.min_words);
    detail::read_field(*it, "curate.", "max_description_tokens", c.curate.max_description_tokens);
    detail::read_field(*it, "curate.", "max_code_tokens", c.curate.max_code_tokens);
    detail::read_field(*it, "curate.", "max_code_chars", c.curate.max_code_chars);
    detail::read_field(*it, "curate.", "section_headers", c.curate.section_headers);
    detail::read_field(*it, "curate.", "underlined_sections", c.curate.underlined_sections);
    detail::read_field(*it, "curate.", "example_headers", c.curate.example_headers);
  }
  if (auto it = j.find("metrics"); it != j.end()) {
    detail::reject_unknown(*it, "metrics.", defaults["metrics"]);
    detail::read_field(*it, "metrics.", "max_n", c.metrics.max_n);
    detail::read_field(*it, "metrics.", "shared_k", c.metrics.shared_k);
    detail::read_field(*it, "metrics.", "epsilon", c.metrics.epsilon);
  }
  if (auto it = j.find("stats"); it != j.end()) {
    detail::reject_unknown(*it, "stats.", defaults["stats"]);
    detail::read_field(*it, "stats.", "exact_threshold", c.stats.exact_threshold);
    detail::read_field(*it, "stats.", "alpha", c.stats.alpha);
  }
  validate(c);
  return c;
}

// Applies CORPUSQC_<PATH> environment overrides, e.g. CORPUSQC_SEED or
// CORPUSQC_CURATE_MIN_WORDS. Values are parsed as JSON when possible; list
// fields also accept comma-separated text.
inline json apply_env_overrides(json j, const std::function<const char*(const char*)>& getenv_fn = ::getenv) {
  std::function<void(json&, const std::string&)> walk = [&](json& node, const std::string& prefix) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      std::string name = prefix + it.key();
      for (char& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (it->is_object()) {
        walk(*it, name + "_");
        continue;
      }
      const std::string var = "CORPUSQC_" + name;
      const char* raw = getenv_fn(var.c_str());
      if (raw == nullptr) continue;
      const std::string text(raw);
      json parsed = json::parse(text, nullptr, false);
      if (parsed.is_discarded()) parsed = text;
      if (it->is_array() && !parsed.is_array()) {
        json list = json::array();
        std::size_t start = 0;
        while (start <= text.size()) {
          const std::size_t comma = text.find(',', start);
          const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
          if (!item.empty()) list.push_back(item);
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        parsed = std::move(list);
      }
      *it = std::move(parsed);
    }
  };
  walk(j, "");
  return j;
}

// Loads defaults, then the optional JSON file, then environment overrides.
inline PipelineConfig load_config(const std::filesystem::path& path = {},
                                  const std::function<const char*(const char*)>& getenv_fn = ::getenv) {
  json merged = to_json(PipelineConfig{});
  if (!path.empty()) {
    json file;
    try {
      file = json::parse(read_file(path));
    } catch (const json::exception& e) {
      throw ConfigError("config file " + path.string() + ": " + e.what());
    }
    detail::reject_unknown(file, "", merged);
    for (auto it = file.begin(); it != file.end(); ++it) {
      if (it->is_object() && merged[it.key()].is_object()) {
        detail::reject_unknown(*it, it.key() + ".", merged[it.key()]);
        for (auto sub = it->begin(); sub != it->end(); ++sub) merged[it.key()][sub.key()] = *sub;
      } else {
        merged[it.key()] = *it;
      }
    }
  }
  return config_from_json(apply_env_overrides(std::move(merged), getenv_fn));
}

// Threshold snapshot recorded in manifests (no machine-dependent fields).
inline json threshold_snapshot(const PipelineConfig& c) {
  return json{{"curate", to_json(c.curate)}, {"metrics", to_json(c.metrics)}, {"seed", c.seed}};
}

}  // namespace corpusqc
