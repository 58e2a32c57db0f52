// Pairwise comparison of three models on the same 200 items: McNemar on
// exact-match outcomes, Benjamini-Hochberg across the family.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "corpusqc/stats.hpp"

int main() {
  using namespace corpusqc::stats;
  std::mt19937_64 rng(7);
  std::bernoulli_distribution hit_a(0.45), hit_b(0.40), hit_c(0.30);
  Sample a{"full", {}, {}}, b{"cleaned", {}, {}}, c{"baseline", {}, {}};
  for (int i = 0; i < 200; ++i) {
    const std::string id = "item" + std::to_string(i);
    for (Sample* s : {&a, &b, &c}) s->ids.push_back(id);
    a.values.push_back(hit_a(rng));
    b.values.push_back(hit_b(rng));
    c.values.push_back(hit_c(rng));
  }
  std::vector<Comparison> family = {{"full vs cleaned", a, b, true},
                                    {"full vs baseline", a, c, true},
                                    {"cleaned vs baseline", b, c, true}};
  for (const TestResult& r : compare_models(family)) {
    std::printf("%-20s OR=%.3f p=%.4g p_adj=%.4g\n", r.name.c_str(), r.effect_size, r.p_value, *r.p_adjusted);
  }
}
