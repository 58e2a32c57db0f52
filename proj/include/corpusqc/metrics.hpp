#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "corpusqc/config.hpp"
#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/python/format.hpp"
#include "corpusqc/python/lexer.hpp"
#include "corpusqc/qualscan/rule.hpp"
#include "corpusqc/text.hpp"

namespace corpusqc {

using Tokens = std::vector<std::string>;

// An n-gram key: tokens joined by NUL, so string order equals token-sequence
// order.
using NgramSet = std::unordered_set<std::string>;

inline std::string ngram_key(const Tokens& toks, std::size_t begin, std::size_t n) {
  std::string key;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) key.push_back('\0');
    key += toks[begin + k];
  }
  return key;
}

inline Tokens split_ngram_key(std::string_view key) {
  Tokens out(1);
  for (char c : key) {
    if (c == '\0') {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

// Canonical form used by every code comparison: formatted when the text
// parses, otherwise only trailing whitespace is normalized.
inline std::string normalize_code(std::string_view code) {
  try {
    return strip_trailing_whitespace(python::format_source(code));
  } catch (const python::SyntaxError&) {
    return strip_trailing_whitespace(normalize_newlines(code));
  }
}

inline Tokens code_tokens(std::string_view code) { return python::lexical_tokens(normalize_code(code)); }

inline bool exact_match(std::string_view prediction, std::string_view target) {
  return normalize_code(prediction) == normalize_code(target);
}

// Pooled counts of all 1..max_n grams over a corpus.
class NgramCounter {
 public:
  explicit NgramCounter(std::size_t max_n) : max_n_(max_n) {
    if (max_n == 0) throw ConfigError("max_n must be at least 1");
  }

  void add(const Tokens& toks) {
    for (std::size_t n = 1; n <= max_n_; ++n) {
      for (std::size_t i = 0; i + n <= toks.size(); ++i) ++counts_[ngram_key(toks, i, n)];
    }
  }

  // The k most frequent n-grams; ties broken by lexicographic n-gram order.
  std::vector<std::pair<std::string, std::uint64_t>> top(std::size_t k) const {
    std::vector<std::pair<std::string, std::uint64_t>> all(counts_.begin(), counts_.end());
    auto better = [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    };
    k = std::min(k, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), better);
    all.resize(k);
    return all;
  }

  std::size_t distinct() const { return counts_.size(); }

 private:
  std::size_t max_n_;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

inline NgramSet trivially_shared_ngrams(const std::vector<Tokens>& corpus, std::size_t k, std::size_t max_n) {
  NgramSet out;
  if (k == 0) return out;
  NgramCounter counter(max_n);
  for (const Tokens& t : corpus) counter.add(t);
  for (auto& [key, count] : counter.top(k)) out.insert(key);
  return out;
}

struct BleuResult {
  double score = 0.0;
  bool empty_after_filtering = false;
  std::vector<std::size_t> matched;  // clipped matches per order
  std::vector<std::size_t> total;    // prediction n-grams per order
};

namespace detail {

inline std::unordered_map<std::string, std::size_t> ngram_counts(const Tokens& toks, std::size_t n,
                                                                 const NgramSet& shared) {
  std::unordered_map<std::string, std::size_t> out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    std::string key = ngram_key(toks, i, n);
    if (!shared.count(key)) ++out[std::move(key)];
  }
  return out;
}

inline std::size_t total_count(const std::unordered_map<std::string, std::size_t>& m) {
  std::size_t t = 0;
  for (const auto& [k, v] : m) t += v;
  return t;
}

}  // namespace detail

// Sentence-level BLEU with the shared n-grams removed from both sides.
// Orders without any prediction n-gram are left out of the geometric mean;
// a zero match count contributes `epsilon` as its precision. Lengths for the
// brevity penalty are the unigram counts remaining after removal.
inline BleuResult crystal_bleu_detail(const Tokens& prediction, const Tokens& target, const NgramSet& shared,
                                      std::size_t max_n = 4, double epsilon = 1e-9) {
  BleuResult r;
  bool pred_empty = true;
  bool target_empty = true;
  double log_sum = 0.0;
  std::size_t orders = 0;
  std::size_t pred_len = 0;
  std::size_t target_len = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto p = detail::ngram_counts(prediction, n, shared);
    const auto t = detail::ngram_counts(target, n, shared);
    const std::size_t total = detail::total_count(p);
    std::size_t matched = 0;
    for (const auto& [key, c] : p) {
      auto it = t.find(key);
      if (it != t.end()) matched += std::min(c, it->second);
    }
    r.matched.push_back(matched);
    r.total.push_back(total);
    if (total) pred_empty = false;
    if (!t.empty()) target_empty = false;
    if (n == 1) {
      pred_len = total;
      target_len = detail::total_count(t);
    }
    if (total == 0) continue;
    ++orders;
    log_sum += matched ? std::log(static_cast<double>(matched) / static_cast<double>(total)) : std::log(epsilon);
  }
  if (pred_empty || target_empty) {
    r.empty_after_filtering = true;
    r.score = pred_empty && target_empty ? 1.0 : 0.0;
    return r;
  }
  double bp = 1.0;
  if (pred_len == 0) {
    bp = 0.0;
  } else if (pred_len < target_len) {
    bp = std::exp(1.0 - static_cast<double>(target_len) / static_cast<double>(pred_len));
  }
  r.score = bp * std::exp(log_sum / static_cast<double>(orders));
  return r;
}

inline double crystal_bleu(const Tokens& prediction, const Tokens& target, const NgramSet& shared,
                           std::size_t max_n = 4, double epsilon = 1e-9) {
  return crystal_bleu_detail(prediction, target, shared, max_n, epsilon).score;
}

struct PassVerdict {
  std::string func_id;
  bool passed = false;
};

// Mean of the pass flags (pass@1 with one sample per item); 0 when empty.
inline double pass_rate(const std::vector<PassVerdict>& verdicts) {
  std::unordered_set<std::string> seen;
  std::size_t passed = 0;
  for (const PassVerdict& v : verdicts) {
    if (!seen.insert(v.func_id).second) throw DuplicateId("duplicate verdict for " + v.func_id);
    passed += v.passed ? 1 : 0;
  }
  return verdicts.empty() ? 0.0 : static_cast<double>(passed) / static_cast<double>(verdicts.size());
}

struct GenerationRecord {
  std::string func_id;
  std::string model_id;
  std::string completion;
};

inline GenerationRecord generation_from_json(const json& j) {
  return GenerationRecord{field<std::string>(j, "func_id"), field<std::string>(j, "model_id"),
                          field<std::string>(j, "completion")};
}

struct ScoreRow {
  std::string func_id;
  std::string model_id;
  bool exact_match = false;
  double crystal_bleu = 0.0;
  std::optional<qualscan::ScanVerdict> verdict;
};

inline json to_json(const ScoreRow& r) {
  json j{{"func_id", r.func_id},
         {"model_id", r.model_id},
         {"exact_match", r.exact_match},
         {"crystal_bleu", r.crystal_bleu}};
  if (r.verdict) {
    j["status"] = qualscan::to_string(r.verdict->status);
    j["findings"] = r.verdict->findings.size();
  }
  return j;
}

// Scores one generation against its target. EM and CrystalBLEU both work on
// the canonical form, so an exact match always scores 1.
inline ScoreRow score_generation(const GenerationRecord& g, std::string_view target, const NgramSet& shared,
                                 const MetricsOptions& opt = {}) {
  ScoreRow row;
  row.func_id = g.func_id;
  row.model_id = g.model_id;
  const std::string pred = normalize_code(g.completion);
  const std::string tgt = normalize_code(target);
  row.exact_match = pred == tgt;
  row.crystal_bleu = crystal_bleu(python::lexical_tokens(pred), python::lexical_tokens(tgt), shared, opt.max_n,
                                  opt.epsilon);
  return row;
}

struct Descriptive {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;  // sample standard deviation
};

inline Descriptive describe(std::vector<double> xs) {
  Descriptive d;
  d.n = xs.size();
  if (xs.empty()) return d;
  double sum = 0.0;
  for (double x : xs) sum += x;
  d.mean = sum / static_cast<double>(xs.size());
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  d.median = xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - d.mean) * (x - d.mean);
    d.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return d;
}

struct ModelSummary {
  std::string model_id;
  std::size_t n = 0;
  std::size_t exact_matches = 0;
  Descriptive crystal_bleu;
  std::optional<double> pass_at_1;
};

// Per-model summary rows ordered by model_id.
inline std::vector<ModelSummary> summarize(const std::vector<ScoreRow>& rows,
                                           const std::map<std::string, double>& pass_rates = {}) {
  std::map<std::string, std::vector<const ScoreRow*>> by_model;
  for (const ScoreRow& r : rows) by_model[r.model_id].push_back(&r);
  std::vector<ModelSummary> out;
  for (auto& [model, rs] : by_model) {
    ModelSummary s;
    s.model_id = model;
    s.n = rs.size();
    std::vector<double> bleu;
    for (const ScoreRow* r : rs) {
      s.exact_matches += r->exact_match ? 1 : 0;
      bleu.push_back(r->crystal_bleu);
    }
    s.crystal_bleu = describe(std::move(bleu));
    if (auto it = pass_rates.find(model); it != pass_rates.end()) s.pass_at_1 = it->second;
    out.push_back(std::move(s));
  }
  return out;
}

inline json to_json(const ModelSummary& s) {
  json j{{"model_id", s.model_id},
         {"n", s.n},
         {"exact_matches", s.exact_matches},
         {"exact_match_rate", s.n ? static_cast<double>(s.exact_matches) / static_cast<double>(s.n) : 0.0},
         {"crystal_bleu",
          {{"mean", s.crystal_bleu.mean}, {"median", s.crystal_bleu.median}, {"sd", s.crystal_bleu.sd}}}};
  j["pass_at_1"] = s.pass_at_1 ? json(*s.pass_at_1) : json(nullptr);
  return j;
}

}  // namespace corpusqc
