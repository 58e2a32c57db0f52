#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "corpusqc/config.hpp"
#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"

namespace corpusqc::stats {

struct TestResult {
  std::string name;
  std::string test;    // "mcnemar" | "wilcoxon"
  std::string method;  // "exact" | "chi2_cc" | "normal_cc"
  double statistic = 0.0;
  double p_value = 1.0;
  std::optional<double> p_adjusted;
  std::string effect_name;
  double effect_size = 0.0;
  std::size_t n = 0;
  bool degenerate = false;
};

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Upper tail of N(0,1).
inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

inline double chi2_sf_df1(double x) { return x <= 0 ? 1.0 : std::erfc(std::sqrt(x / 2.0)); }

struct Discordance {
  std::size_t n11 = 0, n10 = 0, n01 = 0, n00 = 0;
};

inline Discordance discordance(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) throw MismatchedIds("paired outcomes differ in length");
  Discordance d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) ++d.n11;
    if (a[i] && !b[i]) ++d.n10;
    if (!a[i] && b[i]) ++d.n01;
    if (!a[i] && !b[i]) ++d.n00;
  }
  return d;
}

// Two-sided exact binomial p for k successes in m trials at 1/2, k <= m / 2.
inline double binomial_two_sided(std::uint64_t k, std::uint64_t m) {
  double tail = 0.0;
  if (m <= 60) {
    std::uint64_t c = 1;
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
      sum += c;
      c = c * (m - i) / (i + 1);
    }
    tail = std::ldexp(static_cast<double>(sum), -static_cast<int>(m));
  } else {
    const double lm = std::lgamma(static_cast<double>(m) + 1.0);
    for (std::uint64_t i = 0; i <= k; ++i) {
      tail += std::exp(lm - std::lgamma(static_cast<double>(i) + 1.0) -
                       std::lgamma(static_cast<double>(m - i) + 1.0) - static_cast<double>(m) * std::log(2.0));
    }
  }
  return std::min(1.0, 2.0 * tail);
}

// McNemar's test on the discordant pairs. Exact binomial when n10 + n01 is at
// most `exact_threshold`, otherwise chi-square with continuity correction.
// Effect size is the odds ratio n10 / n01 (Haldane +0.5 on a zero cell).
inline TestResult mcnemar(std::size_t n10, std::size_t n01, std::size_t exact_threshold = 25) {
  TestResult r;
  r.test = "mcnemar";
  r.effect_name = "odds_ratio";
  r.n = n10 + n01;
  const double b = static_cast<double>(n10);
  const double c = static_cast<double>(n01);
  if (n10 == 0 || n01 == 0) {
    r.effect_size = (b + 0.5) / (c + 0.5);
  } else {
    r.effect_size = b / c;
  }
  if (r.n == 0) {
    r.method = "exact";
    r.degenerate = true;
    r.p_value = 1.0;
    return r;
  }
  if (r.n <= exact_threshold) {
    r.method = "exact";
    r.statistic = static_cast<double>(std::min(n10, n01));
    r.p_value = binomial_two_sided(std::min(n10, n01), r.n);
  } else {
    r.method = "chi2_cc";
    const double diff = std::fabs(b - c) - 1.0;
    r.statistic = diff * diff / (b + c);
    r.p_value = chi2_sf_df1(r.statistic);
  }
  return r;
}

inline TestResult mcnemar(const Discordance& d, std::size_t exact_threshold = 25) {
  return mcnemar(d.n10, d.n01, exact_threshold);
}

// Benjamini-Hochberg step-up adjusted p-values, in input order.
inline std::vector<double> benjamini_hochberg(const std::vector<double>& p) {
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) throw DataError("p-value outside [0, 1]");
  }
  const std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::vector<double> out(m);
  double running = 1.0;
  for (std::size_t k = m; k-- > 0;) {
    const std::size_t i = order[k];
    running = std::min(running, p[i] * static_cast<double>(m) / static_cast<double>(k + 1));
    out[i] = std::min(1.0, std::max(running, p[i]));
  }
  return out;
}

// Average ranks (1-based) of `xs`, ties sharing the mean of their positions.
inline std::vector<double> midranks(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

// Null distribution of W+ for the given ranks: P(W+ <= w). Ranks are doubled
// so midranks stay integral.
inline double signed_rank_cdf(const std::vector<double>& ranks, double w) {
  std::vector<std::size_t> r2;
  std::size_t total = 0;
  for (double r : ranks) {
    r2.push_back(static_cast<std::size_t>(std::llround(2.0 * r)));
    total += r2.back();
  }
  std::vector<double> counts(total + 1, 0.0);
  counts[0] = 1.0;
  std::size_t reach = 0;
  for (std::size_t r : r2) {
    reach += r;
    for (std::size_t s = reach; s >= r; --s) {
      counts[s] += counts[s - r];
      if (s == r) break;
    }
  }
  const auto limit = static_cast<std::size_t>(std::llround(2.0 * w));
  double below = 0.0;
  for (std::size_t s = 0; s <= std::min(limit, total); ++s) below += counts[s];
  return std::ldexp(below, -static_cast<int>(ranks.size()));
}

// Wilcoxon signed-rank test on paired differences a - b. Zero differences
// are dropped; W = min(W+, W-). Exact null distribution (midranks included)
// for at most `exact_threshold` nonzero pairs, otherwise the normal
// approximation with tie and continuity corrections.
inline TestResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                       std::size_t exact_threshold = 25) {
  if (a.size() != b.size()) throw MismatchedIds("paired samples differ in length");
  TestResult r;
  r.test = "wilcoxon";
  std::vector<double> mag;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::isnan(d)) throw DataError("NaN in paired samples");
    if (d == 0.0) continue;
    mag.push_back(std::fabs(d));
    positive.push_back(d > 0);
  }
  const std::size_t n = mag.size();
  r.n = n;
  if (n == 0) {
    r.method = "exact";
    r.degenerate = true;
    r.p_value = 1.0;
    return r;
  }
  const std::vector<double> ranks = midranks(mag);
  double wp = 0.0;
  double wm = 0.0;
  for (std::size_t i = 0; i < n; ++i) (positive[i] ? wp : wm) += ranks[i];
  r.statistic = std::min(wp, wm);
  const double nd = static_cast<double>(n);
  if (n <= exact_threshold) {
    r.method = "exact";
    r.p_value = std::min(1.0, 2.0 * signed_rank_cdf(ranks, r.statistic));
  } else {
    r.method = "normal_cc";
    const double mean = nd * (nd + 1.0) / 4.0;
    double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
    std::vector<double> sorted = mag;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && sorted[j] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i);
      var -= (t * t * t - t) / 48.0;
      i = j;
    }
    if (var <= 0) {
      r.degenerate = true;
      r.p_value = 1.0;
      return r;
    }
    const double dev = r.statistic - mean;
    const double corr = dev > 0 ? 0.5 : (dev < 0 ? -0.5 : 0.0);
    const double z = (dev - corr) / std::sqrt(var);
    r.p_value = std::min(1.0, 2.0 * normal_sf(std::fabs(z)));
  }
  return r;
}

namespace detail {

inline double cliffs_delta_quadratic(const std::vector<double>& a, const std::vector<double>& b) {
  long long s = 0;
  for (double x : a) {
    for (double y : b) s += (x > y) - (x < y);
  }
  return static_cast<double>(s) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

inline double cliffs_delta_sorted(const std::vector<double>& a, std::vector<double> b) {
  std::sort(b.begin(), b.end());
  long long s = 0;
  for (double x : a) {
    const auto lo = std::lower_bound(b.begin(), b.end(), x) - b.begin();
    const auto hi = b.end() - std::upper_bound(b.begin(), b.end(), x);
    s += lo - hi;
  }
  return static_cast<double>(s) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

}  // namespace detail

// Cliff's delta: P(a > b) - P(a < b) over all cross pairs.
inline double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw DataError("cliffs_delta needs two non-empty samples");
  if (a.size() * b.size() <= 4096) return detail::cliffs_delta_quadratic(a, b);
  return detail::cliffs_delta_sorted(a, b);
}

inline const char* cliffs_magnitude(double d) {
  const double m = std::fabs(d);
  if (m < 0.147) return "negligible";
  if (m < 0.33) return "small";
  if (m < 0.474) return "medium";
  return "large";
}

struct NormalityResult {
  double a2 = 0.0;
  double a2_star = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

// Anderson-Darling test for normality with mean and variance estimated from
// the sample; A*2 carries the small-sample correction.
inline NormalityResult anderson_darling_normality(std::vector<double> x) {
  const std::size_t n = x.size();
  if (n < 8) throw DataError("anderson_darling_normality needs at least 8 values");
  const double nd = static_cast<double>(n);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= nd;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (nd - 1.0));
  if (!(sd > 0.0)) throw DegenerateTest("anderson_darling_normality: zero variance");
  std::sort(x.begin(), x.end());
  // log Phi(z) and log(1 - Phi(z)) via erfc keep both tails accurate.
  auto log_cdf = [](double z) { return std::log(0.5 * std::erfc(-z / std::sqrt(2.0))); };
  auto log_sf = [](double z) { return std::log(0.5 * std::erfc(z / std::sqrt(2.0))); };
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double zi = (x[i] - mean) / sd;
    const double zj = (x[n - 1 - i] - mean) / sd;
    s += (2.0 * static_cast<double>(i) + 1.0) * (log_cdf(zi) + log_sf(zj));
  }
  NormalityResult r;
  r.n = n;
  r.a2 = -nd - s / nd;
  const double a = r.a2 * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
  r.a2_star = a;
  double p;
  if (a > 13.0) {
    p = 0.0;
  } else if (a >= 0.6) {
    p = std::exp(1.2937 - 5.709 * a + 0.0186 * a * a);
  } else if (a >= 0.34) {
    p = std::exp(0.9177 - 4.279 * a - 1.38 * a * a);
  } else if (a >= 0.2) {
    p = 1.0 - std::exp(-8.318 + 42.796 * a - 59.938 * a * a);
  } else {
    p = 1.0 - std::exp(-13.436 + 101.14 * a - 223.73 * a * a);
  }
  r.p_value = std::clamp(p, 0.0, 1.0);
  return r;
}

// Per-item outcomes for one model, keyed by item id.
struct Sample {
  std::string model_id;
  std::vector<std::string> ids;
  std::vector<double> values;
};

// One entry of a comparison family: two models on the same items.
struct Comparison {
  std::string name;
  Sample a;
  Sample b;
  bool binary = false;  // McNemar on 0/1 outcomes; Wilcoxon otherwise
};

// Values of b re-ordered to a's id order. Both sides must cover the same
// ids, each exactly once.
inline std::vector<double> align(const Sample& a, const Sample& b) {
  if (a.ids.size() != a.values.size() || b.ids.size() != b.values.size()) {
    throw DataError("sample ids and values differ in length");
  }
  std::unordered_map<std::string, double> by_id;
  for (std::size_t i = 0; i < b.ids.size(); ++i) {
    if (!by_id.emplace(b.ids[i], b.values[i]).second) throw DuplicateId("duplicate id " + b.ids[i]);
  }
  std::unordered_set<std::string> seen;
  std::vector<double> out;
  out.reserve(a.ids.size());
  for (const std::string& id : a.ids) {
    if (!seen.insert(id).second) throw DuplicateId("duplicate id " + id);
    auto it = by_id.find(id);
    if (it == by_id.end()) throw MismatchedIds("id " + id + " missing from " + b.model_id);
    out.push_back(it->second);
  }
  if (out.size() != b.ids.size()) throw MismatchedIds(b.model_id + " has ids missing from " + a.model_id);
  return out;
}

// Runs every comparison of the family and adds Benjamini-Hochberg adjusted
// p-values across the whole family.
inline std::vector<TestResult> compare_models(const std::vector<Comparison>& family, const StatsOptions& opt = {}) {
  std::vector<TestResult> out;
  for (const Comparison& c : family) {
    const std::vector<double> bv = align(c.a, c.b);
    TestResult r;
    if (c.binary) {
      std::vector<bool> x, y;
      for (std::size_t i = 0; i < bv.size(); ++i) {
        x.push_back(c.a.values[i] != 0.0);
        y.push_back(bv[i] != 0.0);
      }
      r = mcnemar(discordance(x, y), opt.exact_threshold);
    } else {
      r = wilcoxon_signed_rank(c.a.values, bv, opt.exact_threshold);
      r.effect_name = "cliffs_delta";
      r.effect_size = c.a.values.empty() ? 0.0 : cliffs_delta(c.a.values, bv);
    }
    r.name = c.name;
    out.push_back(std::move(r));
  }
  std::vector<double> ps;
  for (const TestResult& r : out) ps.push_back(r.p_value);
  const std::vector<double> adj = benjamini_hochberg(ps);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].p_adjusted = adj[i];
  return out;
}

inline json to_json(const TestResult& r) {
  json j{{"name", r.name},
         {"test", r.test},
         {"method", r.method},
         {"n", r.n},
         {"statistic", r.statistic},
         {"p_value", r.p_value}};
  j["p_adjusted"] = r.p_adjusted ? json(*r.p_adjusted) : json(nullptr);
  j["effect"] = json{{"name", r.effect_name}, {"value", r.effect_size}};
  if (r.effect_name == "cliffs_delta") j["effect"]["magnitude"] = cliffs_magnitude(r.effect_size);
  j["degenerate"] = r.degenerate;
  return j;
}

inline json to_json(const NormalityResult& r) {
  return json{{"n", r.n}, {"a2", r.a2}, {"a2_star", r.a2_star}, {"p_value", r.p_value}};
}

}  // namespace corpusqc::stats
