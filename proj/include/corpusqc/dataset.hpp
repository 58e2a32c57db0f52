#pragma once

#include <algorithm>
#include <concepts>
#include <array>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "corpusqc/config.hpp"
#include "corpusqc/curate.hpp"
#include "corpusqc/error.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/qualscan/rule.hpp"
#include "corpusqc/version.hpp"

namespace corpusqc {

enum class Split : std::uint8_t { train, eval, test };

inline const char* to_string(Split s) {
  switch (s) {
    case Split::train:
      return "train";
    case Split::eval:
      return "eval";
    case Split::test:
      return "test";
  }
  return "unknown";
}

inline constexpr std::array<Split, 3> kSplits = {Split::train, Split::eval, Split::test};

struct SplitAssignment {
  std::string func_id;
  Split split = Split::train;
  bool in_full = true;
  bool in_cleaned = true;
};

// Sizes for n items: eval and test get floor(n / 10), train the remainder.
inline std::array<std::size_t, 3> split_sizes(std::size_t n) {
  const std::size_t tenth = n / 10;
  return {n - 2 * tenth, tenth, tenth};
}

// Unbiased draw in [0, bound) by rejection, identical on every platform
// (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Split label for each of n positions: a Fisher-Yates shuffle driven by
// mt19937_64(seed), then contiguous train / eval / test blocks.
inline std::vector<Split> assign_splits(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = bounded(rng, i);
    std::swap(order[i - 1], order[j]);
  }
  const auto sizes = split_sizes(n);
  std::vector<Split> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[order[k]] = k < sizes[0] ? Split::train : (k < sizes[0] + sizes[1] ? Split::eval : Split::test);
  }
  return out;
}

// Assignments for a set of ids. Ids are put in lexicographic order first, so
// the result does not depend on the order in which they were supplied.
inline std::vector<SplitAssignment> split_ids(std::vector<std::string> ids, std::uint64_t seed) {
  if (ids.empty()) throw DataError("cannot split an empty set of pairs");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DuplicateId("duplicate func_id " + *std::adjacent_find(ids.begin(), ids.end()));
  }
  const std::vector<Split> labels = assign_splits(ids.size(), seed);
  std::vector<SplitAssignment> out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) out[i] = SplitAssignment{std::move(ids[i]), labels[i], true, true};
  return out;
}

inline std::vector<SplitAssignment> split(const std::vector<CuratedPair>& pairs, std::uint64_t seed) {
  std::vector<std::string> ids;
  ids.reserve(pairs.size());
  for (const CuratedPair& p : pairs) ids.push_back(p.func_id);
  return split_ids(std::move(ids), seed);
}

template <class Id>
struct Variants {
  std::vector<Id> full;
  std::vector<Id> cleaned;
};

// full = the whole pool; cleaned = the members whose verdict is clean.
// `verdict_of(id)` returns an optional Status; a missing one is an error.
template <class Id, class Lookup>
  requires std::invocable<Lookup&, const Id&>
Variants<Id> make_variants(const std::vector<Id>& pool, Lookup&& verdict_of) {
  Variants<Id> v;
  v.full = pool;
  for (const Id& id : pool) {
    const std::optional<qualscan::Status> s = verdict_of(id);
    if (!s) {
      if constexpr (std::is_convertible_v<Id, std::string>) {
        throw MissingVerdict("no verdict for " + std::string(id));
      } else {
        throw MissingVerdict("no verdict for " + std::to_string(id));
      }
    }
    if (*s == qualscan::Status::clean) v.cleaned.push_back(id);
  }
  return v;
}

inline Variants<std::string> make_variants(const std::vector<std::string>& pool,
                                           const std::unordered_map<std::string, qualscan::Status>& verdicts) {
  return make_variants(pool, [&](const std::string& id) -> std::optional<qualscan::Status> {
    auto it = verdicts.find(id);
    if (it == verdicts.end()) return std::nullopt;
    return it->second;
  });
}

// Marks in_cleaned on train assignments; eval and test stay in both variants.
inline void apply_variants(std::vector<SplitAssignment>& assignments,
                           const std::unordered_map<std::string, qualscan::Status>& verdicts) {
  for (SplitAssignment& a : assignments) {
    if (a.split != Split::train) continue;
    auto it = verdicts.find(a.func_id);
    if (it == verdicts.end()) throw MissingVerdict("no verdict for " + a.func_id);
    a.in_cleaned = it->second == qualscan::Status::clean;
  }
}

inline json to_json(const SplitAssignment& a) {
  return json{{"func_id", a.func_id}, {"split", to_string(a.split)}, {"in_full", a.in_full}, {"in_cleaned", a.in_cleaned}};
}

enum class Variant { full, cleaned };

inline const char* to_string(Variant v) { return v == Variant::full ? "full" : "cleaned"; }

inline std::string make_prompt(const CuratedPair& p) { return p.description + "\n" + p.signature; }

struct DatasetManifest {
  std::string variant;
  std::uint64_t seed = 0;
  std::array<std::size_t, 3> counts{};
  std::array<std::string, 3> digests;
  json thresholds;
};

inline json to_json(const DatasetManifest& m) {
  json files = json::object();
  for (Split s : kSplits) {
    const auto k = static_cast<std::size_t>(s);
    files[std::string(to_string(s)) + ".jsonl"] = json{{"lines", m.counts[k]}, {"sha256", m.digests[k]}};
  }
  return json{{"tool", kToolName},
              {"version", kVersion},
              {"variant", m.variant},
              {"seed", m.seed},
              {"shuffle", "mt19937_64 Fisher-Yates over func_ids in lexicographic order, rejection-sampled bounds"},
              {"prompt_format", kPromptFormat},
              {"token_counter", kTokenCounter},
              {"counts",
               {{"train", m.counts[0]}, {"eval", m.counts[1]}, {"test", m.counts[2]}}},
              {"files", std::move(files)},
              {"thresholds", m.thresholds}};
}

// Writes train/eval/test JSONL files for one variant into `dir`, each sorted
// by func_id, and a manifest.json describing them.
inline DatasetManifest emit(const std::vector<CuratedPair>& pairs, const std::vector<SplitAssignment>& assignments,
                            Variant variant, const std::filesystem::path& dir, std::uint64_t seed,
                            const json& thresholds = json::object()) {
  std::unordered_map<std::string_view, const SplitAssignment*> by_id;
  by_id.reserve(assignments.size());
  for (const SplitAssignment& a : assignments) by_id.emplace(a.func_id, &a);
  std::array<std::vector<const CuratedPair*>, 3> buckets;
  for (const CuratedPair& p : pairs) {
    auto it = by_id.find(p.func_id);
    if (it == by_id.end()) throw DataError("pair " + p.func_id + " has no split assignment");
    const SplitAssignment& a = *it->second;
    if (variant == Variant::cleaned ? !a.in_cleaned : !a.in_full) continue;
    buckets[static_cast<std::size_t>(a.split)].push_back(&p);
  }
  std::filesystem::create_directories(dir);
  DatasetManifest m;
  m.variant = to_string(variant);
  m.seed = seed;
  m.thresholds = thresholds;
  for (Split s : kSplits) {
    auto& bucket = buckets[static_cast<std::size_t>(s)];
    std::sort(bucket.begin(), bucket.end(),
              [](const CuratedPair* a, const CuratedPair* b) { return a->func_id < b->func_id; });
    JsonlWriter out(dir / (std::string(to_string(s)) + ".jsonl"));
    for (const CuratedPair* p : bucket) {
      out.write(json{{"func_id", p->func_id}, {"prompt", make_prompt(*p)}, {"completion", p->code}});
    }
    out.close();
    m.counts[static_cast<std::size_t>(s)] = out.lines();
    m.digests[static_cast<std::size_t>(s)] = out.digest();
  }
  write_file(dir / "manifest.json", to_json(m).dump(2) + "\n");
  return m;
}

}  // namespace corpusqc
