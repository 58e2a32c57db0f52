// Splits a synthetic pool of ids and shows how the cleaned variant shrinks
// the training split while eval and test stay fixed.
#include <cstdio>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpusqc/dataset.hpp"

int main() {
  using namespace corpusqc;
  std::vector<std::string> ids;
  for (int i = 0; i < 1000; ++i) ids.push_back("f" + std::to_string(i));
  std::vector<SplitAssignment> a = split_ids(ids, 42);
  std::unordered_map<std::string, qualscan::Status> verdicts;
  for (int i = 0; i < 1000; ++i) {
    verdicts["f" + std::to_string(i)] = i % 20 == 0 ? qualscan::Status::low_quality : qualscan::Status::clean;
  }
  apply_variants(a, verdicts);
  std::size_t counts[3] = {};
  std::size_t cleaned_train = 0;
  for (const SplitAssignment& s : a) {
    ++counts[static_cast<int>(s.split)];
    if (s.split == Split::train && s.in_cleaned) ++cleaned_train;
  }
  std::printf("train %zu (cleaned %zu), eval %zu, test %zu\n", counts[0], cleaned_train, counts[1], counts[2]);
}
