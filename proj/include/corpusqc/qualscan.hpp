#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "corpusqc/curate.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/parallel.hpp"
#include "corpusqc/qualscan/rule.hpp"
#include "corpusqc/qualscan/scan.hpp"

namespace corpusqc::qualscan {

inline ScanVerdict scan(const CuratedPair& p, const Registry& registry) {
  return scan_code(p.func_id, p.code, registry);
}

struct ScanStats {
  std::size_t functions = 0;
  std::size_t clean = 0;
  std::size_t low_quality = 0;
  std::size_t syntactically_incorrect = 0;
  std::size_t findings = 0;
  std::size_t gated = 0;  // verdicts at or above the gate severity
};

// Scans a JSONL file of pairs ("code") or generations ("completion", with
// "model_id") and writes one verdict per record, in input order.
inline ScanStats scan_file(const std::filesystem::path& in, JsonlWriter& out, const Registry& registry,
                           unsigned threads, std::size_t batch, std::optional<Severity> gate = std::nullopt) {
  struct Item {
    std::string func_id;
    std::optional<std::string> model_id;
    std::string code;
  };
  ScanStats stats;
  read_jsonl_batches(in, batch, [&](std::vector<json>& records) {
    std::vector<Item> items;
    items.reserve(records.size());
    for (const json& r : records) {
      Item it;
      it.func_id = field<std::string>(r, "func_id");
      if (r.contains("model_id")) it.model_id = field<std::string>(r, "model_id");
      it.code = r.contains("code") ? field<std::string>(r, "code") : field<std::string>(r, "completion");
      items.push_back(std::move(it));
    }
    auto verdicts = parallel_map(items, [&](const Item& it) { return scan_code(it.func_id, it.code, registry); },
                                 threads);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      const ScanVerdict& v = verdicts[i];
      ++stats.functions;
      stats.findings += v.findings.size();
      if (v.status == Status::clean) ++stats.clean;
      if (v.status == Status::low_quality) ++stats.low_quality;
      if (v.status == Status::syntactically_incorrect) ++stats.syntactically_incorrect;
      if (gate && trips_gate(v, *gate)) ++stats.gated;
      json j = to_json(v);
      if (items[i].model_id) j["model_id"] = *items[i].model_id;
      out.write(j);
    }
  });
  return stats;
}

}  // namespace corpusqc::qualscan
