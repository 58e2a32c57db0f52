#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>

#include "corpusqc/report.hpp"
#include "test_util.hpp"

using namespace corpusqc;
using namespace corpusqc::report;
using qualscan::Category;
using qualscan::Finding;
using qualscan::ScanVerdict;
using qualscan::Severity;
using qualscan::Status;

namespace {

Finding finding(const std::string& rule, Category c, Severity s) {
  Finding f;
  f.rule_id = rule;
  f.category = c;
  f.severity = s;
  f.start_line = 1;
  f.end_line = 1;
  return f;
}

ScanVerdict verdict(const std::string& id, Status st, std::vector<Finding> fs = {}) {
  return ScanVerdict{id, st, std::move(fs)};
}

// Random verdict streams over a fixed rule vocabulary.
std::vector<ScanVerdict> random_verdicts(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::pair<std::string, Category>> rules = {
      {"insecure-hash", Category::security},      {"sql-injection", Category::security},
      {"use-timeout", Category::best_practice},   {"arbitrary-sleep", Category::best_practice},
      {"use-sys-exit", Category::correctness},    {"dead-code-after-return", Category::maintainability},
      {"py2-print", Category::compatibility},     {"loop-append", Category::performance}};
  std::vector<ScanVerdict> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "f" + std::to_string(i);
    const auto r = rng() % 10;
    if (r < 6) {
      out.push_back(verdict(id, Status::clean));
    } else if (r < 7) {
      out.push_back(verdict(id, Status::syntactically_incorrect));
    } else {
      std::vector<Finding> fs;
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) {
        const auto& [rule, cat] = rules[rng() % rules.size()];
        fs.push_back(finding(rule, cat, static_cast<Severity>(rng() % 3)));
      }
      out.push_back(verdict(id, Status::low_quality, std::move(fs)));
    }
  }
  return out;
}

void expect_shares_sum_to_one(const IssueBreakdown& b) {
  if (b.total_findings == 0) return;
  double c = 0.0;
  double s = 0.0;
  for (double x : b.category_shares) c += x;
  for (double x : b.severity_shares) s += x;
  EXPECT_NEAR(c, 1.0, 1e-9);
  EXPECT_NEAR(s, 1.0, 1e-9);
}

std::string two_decimals(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

TEST(Breakdown, EmptyStream) {
  const IssueBreakdown b = breakdown(std::vector<ScanVerdict>{});
  EXPECT_EQ(b.total_functions, 0u);
  EXPECT_EQ(b.total_findings, 0u);
  EXPECT_EQ(b.issue_density, 0.0);
  for (double x : b.category_shares) EXPECT_EQ(x, 0.0);
  EXPECT_NO_THROW(json::parse(render(b, "sankey")));
}

TEST(Breakdown, SingleCategoryShareIsOne) {
  std::vector<ScanVerdict> vs;
  for (int i = 0; i < 10; ++i) {
    vs.push_back(verdict("f" + std::to_string(i), Status::low_quality,
                         {finding(i % 2 ? "insecure-hash" : "eval-injection", Category::security, Severity::warning)}));
  }
  const IssueBreakdown b = breakdown(vs);
  EXPECT_DOUBLE_EQ(b.category_shares[index_of(Category::security)], 1.0);
  EXPECT_DOUBLE_EQ(b.issue_density, 1.0);
  const json s = sankey(b);
  EXPECT_EQ(s["layers"], json::array({"rule", "severity"}));
  for (const json& n : s["nodes"]) EXPECT_NE(n["layer"], "category");
}

TEST(Breakdown, TopRulesTieBreakAndCut) {
  std::vector<ScanVerdict> vs;
  const std::vector<std::string> rules = {"b-rule", "a-rule", "c-rule", "a-rule", "b-rule", "d-rule"};
  for (std::size_t i = 0; i < rules.size(); ++i) {
    vs.push_back(verdict("f" + std::to_string(i), Status::low_quality,
                         {finding(rules[i], Category::correctness, Severity::error)}));
  }
  const IssueBreakdown b = breakdown(vs, 3);
  const auto& top = b.top_rules[index_of(Category::correctness)];
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].rule_id, "a-rule");
  EXPECT_EQ(top[1].rule_id, "b-rule");
  EXPECT_EQ(top[2].rule_id, "c-rule");
  EXPECT_EQ(top[2].count, 1u);
}

TEST(Breakdown, DensityAndSeverityReplay) {
  // 219,723 low-quality functions carrying 310,051 findings: 248,661 warnings,
  // 55,809 errors and 5,581 infos.
  BreakdownAccumulator acc;
  std::array<std::uint64_t, 3> sev_left = {5581, 248661, 55809};  // info, warning, error
  for (std::uint64_t i = 0; i < 219723; ++i) {
    const std::uint64_t k = i < 310051 - 219723 ? 2 : 1;
    std::vector<Finding> fs;
    for (std::uint64_t j = 0; j < k; ++j) {
      std::size_t s = 0;
      while (sev_left[s] == 0) ++s;
      --sev_left[s];
      fs.push_back(finding("rule-" + std::to_string(s), Category::security, static_cast<Severity>(s)));
    }
    acc.add(verdict("f", Status::low_quality, std::move(fs)));
  }
  const IssueBreakdown b = acc.finish();
  EXPECT_EQ(b.total_findings, 310051u);
  EXPECT_NEAR(b.issue_density, 1.411, 0.001);
  EXPECT_NEAR(b.severity_shares[index_of(Severity::warning)], 0.80, 0.005);
  EXPECT_NEAR(b.severity_shares[index_of(Severity::error)], 0.18, 0.005);
  EXPECT_LT(b.severity_shares[index_of(Severity::info)], 0.02);
  expect_shares_sum_to_one(b);
}

TEST(BreakdownProperty, SharesSankeyConservationAndPermutation) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 60; ++round) {
    auto vs = random_verdicts(rng, 1 + rng() % 400);
    const IssueBreakdown b = breakdown(vs);
    expect_shares_sum_to_one(b);
    EXPECT_EQ(b.clean_count + b.low_quality_count + b.syntactically_incorrect_count, b.total_functions);
    EXPECT_GE(b.total_findings, b.low_quality_count);
    if (b.low_quality_count) {
      EXPECT_DOUBLE_EQ(b.issue_density, static_cast<double>(b.total_findings) / static_cast<double>(b.low_quality_count));
    }
    const json s = sankey(b);
    std::map<std::string, std::uint64_t> in;
    std::map<std::string, std::uint64_t> out;
    for (const json& l : s["links"]) {
      in[l["target"].get<std::string>()] += l["value"].get<std::uint64_t>();
      out[l["source"].get<std::string>()] += l["value"].get<std::uint64_t>();
    }
    const bool cats = s["layers"].size() == 3;
    for (const json& n : s["nodes"]) {
      const std::string id = n["id"].get<std::string>();
      const std::uint64_t v = n["value"].get<std::uint64_t>();
      if (n["layer"] == "rule") {
        if (cats) {
          EXPECT_EQ(in[id], v) << id;
        }
        EXPECT_EQ(out[id], v) << id;
      } else if (n["layer"] == "category") {
        EXPECT_EQ(out[id], v);
      } else {
        EXPECT_EQ(in[id], v);
      }
    }
    std::shuffle(vs.begin(), vs.end(), rng);
    EXPECT_EQ(to_json(breakdown(vs)), to_json(b));
    EXPECT_EQ(render(breakdown(vs), "markdown"), render(b, "markdown"));
  }
}

TEST(BreakdownProperty, MergeOfPartsEqualsWhole) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    const auto vs = random_verdicts(rng, 300);
    const std::size_t cut = rng() % vs.size();
    BreakdownAccumulator a;
    BreakdownAccumulator b;
    for (std::size_t i = 0; i < vs.size(); ++i) (i < cut ? a : b).add(vs[i]);
    b.merge(a);
    EXPECT_EQ(to_json(b.finish()), to_json(breakdown(vs)));
  }
}

TEST(Comparison, RatesReplayAtScale) {
  // Low-quality and syntactically incorrect counts over 551,641 generations.
  const std::size_t n = 551641;
  const std::map<std::string, std::pair<std::size_t, std::size_t>> counts = {
      {"PTO", {39111, 85229}}, {"DSC_f", {32271, 39332}}, {"DSC_c", {11915, 36850}}};
  std::map<std::string, std::vector<ScanVerdict>> runs;
  for (const auto& [model, c] : counts) {
    auto& vs = runs[model];
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      char id[16];
      std::snprintf(id, sizeof id, "t%06zu", i);
      if (i < c.first) {
        vs.push_back(verdict(id, Status::low_quality, {finding("r", Category::security, Severity::warning)}));
      } else if (i < c.first + c.second) {
        vs.push_back(verdict(id, Status::syntactically_incorrect));
      } else {
        vs.push_back(verdict(id, Status::clean));
      }
    }
  }
  const ComparisonTable t = comparison_table(runs);
  ASSERT_EQ(t.rows.size(), 3u);
  std::map<std::string, const ComparisonRow*> by;
  for (const ComparisonRow& r : t.rows) by[r.model_id] = &r;
  EXPECT_EQ(two_decimals(by["PTO"]->pct_low_quality()), "7.09");
  EXPECT_EQ(two_decimals(by["DSC_f"]->pct_low_quality()), "5.85");
  EXPECT_EQ(two_decimals(by["DSC_c"]->pct_low_quality()), "2.16");
  EXPECT_EQ(two_decimals(by["PTO"]->pct_syntactically_incorrect()), "15.45");
  EXPECT_EQ(two_decimals(by["DSC_f"]->pct_syntactically_incorrect()), "7.13");
  EXPECT_EQ(two_decimals(by["DSC_c"]->pct_syntactically_incorrect()), "6.68");
  // Percentages recompute exactly from the emitted counts.
  const json j = to_json(t);
  for (const json& r : j["rows"]) {
    EXPECT_DOUBLE_EQ(r["pct_low_quality"].get<double>(),
                     100.0 * r["low_quality"].get<double>() / r["n"].get<double>());
  }
}

TEST(Comparison, AllCleanAndMismatch) {
  const ComparisonTable t = comparison_table({{"m", {verdict("a", Status::clean), verdict("b", Status::clean)}}});
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].pct_low_quality(), 0.0);
  EXPECT_EQ(t.rows[0].pct_syntactically_incorrect(), 0.0);
  EXPECT_THROW(comparison_table({{"m1", {verdict("a", Status::clean)}}, {"m2", {verdict("b", Status::clean)}}}),
               MismatchedIds);
  EXPECT_THROW(comparison_table({{"m1", {verdict("a", Status::clean), verdict("a", Status::clean)}}}), DuplicateId);
}

TEST(ComparisonProperty, CategorySharesSumToOne) {
  std::mt19937_64 rng(4);
  auto vs = random_verdicts(rng, 500);
  auto ws = random_verdicts(rng, 500);
  const ComparisonTable t = comparison_table({{"a", vs}, {"b", ws}});
  for (const ComparisonRow& r : t.rows) {
    double s = 0.0;
    for (std::size_t c = 0; c < kCategories; ++c) s += r.category_share(c);
    if (r.total_findings) {
      EXPECT_NEAR(s, 1.0, 1e-9);
    }
    EXPECT_GE(r.pct_low_quality(), 0.0);
    EXPECT_LE(r.pct_low_quality(), 100.0);
  }
}

TEST(Render, FormatsAndDeterminism) {
  std::mt19937_64 rng(1);
  const IssueBreakdown b = breakdown(random_verdicts(rng, 200));
  EXPECT_EQ(render(b, "md"), render(b, "markdown"));
  EXPECT_NO_THROW(json::parse(render(b, "json")));
  EXPECT_EQ(render(b, "sankey"), render(b, "sankey"));
  EXPECT_THROW(render(b, "html"), UnsupportedFormat);
  const ComparisonTable t = comparison_table({{"m", {verdict("a", Status::clean)}}});
  EXPECT_NE(render(t, "markdown").find("| m | 1 |"), std::string::npos);
  EXPECT_THROW(render(t, "sankey"), UnsupportedFormat);
}
