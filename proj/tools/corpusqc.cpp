#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "corpusqc/corpusqc.hpp"

namespace fs = std::filesystem;
using namespace corpusqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitGate = 2;

void log(const std::string& msg) { std::fprintf(stderr, "corpusqc: %s\n", msg.c_str()); }

std::pair<std::string, std::string> split_named(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("expected NAME=PATH, got '" + spec + "'");
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

fs::path out_dir(const PipelineConfig& cfg, const std::string& flag) {
  return flag.empty() ? fs::path(cfg.output_dir) : fs::path(flag);
}

struct Globals {
  std::string config;
  unsigned threads = 0;
  bool version = false;
};

PipelineConfig load(const Globals& g) {
  PipelineConfig cfg = load_config(g.config);
  if (g.threads) cfg.parallelism = g.threads;
  return cfg;
}

// ingest -------------------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> corpus;
  std::string out;
};

int run_ingest(const Globals& g, const IngestArgs& a) {
  const PipelineConfig cfg = load(g);
  const std::vector<std::string> roots = a.corpus.empty() ? cfg.corpus : a.corpus;
  if (roots.empty()) throw ConfigError("config field 'corpus': no corpus path given");
  const fs::path dir = out_dir(cfg, a.out);
  const auto files = list_source_files(roots);
  JsonlWriter funcs(dir / "functions.jsonl");
  JsonlWriter rejects(dir / "ingest_rejects.jsonl");
  const IngestStats s = ingest_corpus(
      files, cfg.parallelism, cfg.batch_size, [&](RawFunction&& f) { funcs.write(to_json(f)); },
      [&](IngestReject&& r) { rejects.write(to_json(r)); });
  funcs.close();
  rejects.close();
  log("ingest: " + std::to_string(s.files) + " files, " + std::to_string(s.functions) + " functions, " +
      std::to_string(s.rejects) + " rejected files");
  return kExitOk;
}

// curate -------------------------------------------------------------------

struct CurateArgs {
  std::string in;
  std::string out;
};

int run_curate(const Globals& g, const CurateArgs& a) {
  const PipelineConfig cfg = load(g);
  const fs::path dir = out_dir(cfg, a.out);
  const fs::path in = a.in.empty() ? dir / "functions.jsonl" : fs::path(a.in);
  JsonlWriter pairs(dir / "pairs.jsonl");
  JsonlWriter rejects(dir / "curate_rejects.jsonl");
  std::map<std::string, std::size_t> by_stage;
  for (RejectStage st : kRejectStages) by_stage[to_string(st)] = 0;
  std::size_t input = 0;
  std::size_t kept = 0;
  read_jsonl_batches(in, cfg.batch_size, [&](std::vector<json>& records) {
    std::vector<RawFunction> funcs;
    funcs.reserve(records.size());
    for (const json& r : records) funcs.push_back(raw_function_from_json(r));
    auto outcomes =
        parallel_map(funcs, [&](const RawFunction& f) { return curate_one(f, cfg.curate); }, cfg.parallelism);
    for (auto& o : outcomes) {
      ++input;
      if (auto* p = std::get_if<CuratedPair>(&o)) {
        ++kept;
        pairs.write(to_json(*p));
      } else {
        const RejectRecord& r = std::get<RejectRecord>(o);
        ++by_stage[to_string(r.stage)];
        rejects.write(to_json(r));
      }
    }
  });
  pairs.close();
  rejects.close();
  json stats{{"input", input}, {"pairs", kept}, {"rejects", input - kept}, {"by_stage", by_stage}};
  write_file(dir / "curate_stats.json", stats.dump(2) + "\n");
  log("curate: " + std::to_string(input) + " functions, " + std::to_string(kept) + " pairs");
  return kExitOk;
}

// scan ---------------------------------------------------------------------

struct ScanArgs {
  std::string in;
  std::string out;
  std::vector<std::string> rules;
  bool no_builtin = false;
  std::string gate;
};

qualscan::Registry make_registry(const PipelineConfig& cfg, const std::vector<std::string>& extra, bool no_builtin) {
  qualscan::Registry reg;
  if (cfg.builtin_rules && !no_builtin) reg.load_json(json::parse(qualscan::kBuiltinRules));
  for (const std::string& p : cfg.rules) reg.load_path(p);
  for (const std::string& p : extra) reg.load_path(p);
  if (reg.size() == 0) throw ConfigError("no rules loaded");
  return reg;
}

int run_scan(const Globals& g, const ScanArgs& a) {
  const PipelineConfig cfg = load(g);
  const qualscan::Registry reg = make_registry(cfg, a.rules, a.no_builtin);
  std::optional<qualscan::Severity> gate;
  if (!a.gate.empty()) {
    gate = qualscan::parse_severity(a.gate);
    if (!gate) throw ConfigError("--gate: unknown severity '" + a.gate + "'");
  }
  const fs::path dir = out_dir(cfg, "");
  const fs::path in = a.in.empty() ? dir / "pairs.jsonl" : fs::path(a.in);
  const fs::path out = a.out.empty() ? dir / "verdicts.jsonl" : fs::path(a.out);
  JsonlWriter w(out);
  const qualscan::ScanStats s = qualscan::scan_file(in, w, reg, cfg.parallelism, cfg.batch_size, gate);
  w.close();
  log("scan: " + std::to_string(s.functions) + " functions, " + std::to_string(s.low_quality) + " low-quality, " +
      std::to_string(s.syntactically_incorrect) + " syntactically incorrect, " + std::to_string(s.findings) +
      " findings (" + std::to_string(reg.size()) + " rules)");
  if (gate && s.gated) {
    log("gate: " + std::to_string(s.gated) + " functions with " + a.gate + "-or-worse findings");
    return kExitGate;
  }
  return kExitOk;
}

// build-dataset ------------------------------------------------------------

struct BuildArgs {
  std::string pairs;
  std::string verdicts;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string variant = "both";
};

int run_build(const Globals& g, const BuildArgs& a) {
  const PipelineConfig cfg = load(g);
  const fs::path dir = out_dir(cfg, a.out);
  const std::uint64_t seed = a.seed.value_or(cfg.seed);
  if (a.variant != "full" && a.variant != "cleaned" && a.variant != "both") {
    throw ConfigError("--variant: expected full, cleaned or both");
  }
  const fs::path pairs_path = a.pairs.empty() ? fs::path(cfg.output_dir) / "pairs.jsonl" : fs::path(a.pairs);
  std::vector<CuratedPair> pairs;
  read_jsonl(pairs_path, [&](json&& j) { pairs.push_back(curated_pair_from_json(j)); });
  std::vector<SplitAssignment> assignments = split(pairs, seed);
  if (a.variant != "full") {
    const fs::path vpath = a.verdicts.empty() ? fs::path(cfg.output_dir) / "verdicts.jsonl" : fs::path(a.verdicts);
    std::unordered_map<std::string, qualscan::Status> verdicts;
    read_jsonl(vpath, [&](json&& j) {
      qualscan::ScanVerdict v = qualscan::verdict_from_json(j);
      if (!verdicts.emplace(v.func_id, v.status).second) throw DuplicateId("duplicate verdict for " + v.func_id);
    });
    apply_variants(assignments, verdicts);
  }
  JsonlWriter splits(dir / "splits.jsonl");
  for (const SplitAssignment& s : assignments) splits.write(to_json(s));
  splits.close();
  PipelineConfig snap = cfg;
  snap.seed = seed;
  const json thresholds = threshold_snapshot(snap);
  for (Variant v : {Variant::full, Variant::cleaned}) {
    if (a.variant != "both" && a.variant != to_string(v)) continue;
    const DatasetManifest m = emit(pairs, assignments, v, dir / to_string(v), seed, thresholds);
    log(std::string("build-dataset: ") + to_string(v) + " train " + std::to_string(m.counts[0]) + ", eval " +
        std::to_string(m.counts[1]) + ", test " + std::to_string(m.counts[2]));
  }
  return kExitOk;
}

// score --------------------------------------------------------------------

struct ScoreArgs {
  std::string generations;
  std::string targets;
  std::string reference;
  std::string pass;
  std::string out;
};

std::string code_field(const json& j) {
  return j.contains("code") ? field<std::string>(j, "code") : field<std::string>(j, "completion");
}

int run_score(const Globals& g, const ScoreArgs& a) {
  const PipelineConfig cfg = load(g);
  const fs::path dir = out_dir(cfg, a.out);
  std::unordered_map<std::string, std::string> targets;
  read_jsonl(a.targets, [&](json&& j) {
    std::string id = field<std::string>(j, "func_id");
    if (!targets.emplace(id, code_field(j)).second) throw DuplicateId("duplicate target " + id);
  });
  NgramSet shared;
  if (!a.reference.empty() && cfg.metrics.shared_k > 0) {
    NgramCounter counter(cfg.metrics.max_n);
    read_jsonl(a.reference, [&](json&& j) { counter.add(code_tokens(code_field(j))); });
    for (auto& [key, count] : counter.top(cfg.metrics.shared_k)) shared.insert(key);
  }
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<ScoreRow> rows;
  JsonlWriter out(dir / "scores.jsonl");
  read_jsonl_batches(a.generations, cfg.batch_size, [&](std::vector<json>& records) {
    std::vector<GenerationRecord> gens;
    for (const json& r : records) {
      GenerationRecord gen = generation_from_json(r);
      if (!seen.emplace(gen.model_id, gen.func_id).second) {
        throw DuplicateId("duplicate generation " + gen.model_id + "/" + gen.func_id);
      }
      if (!targets.count(gen.func_id)) throw DataError("generation for unknown func_id " + gen.func_id);
      gens.push_back(std::move(gen));
    }
    auto scored = parallel_map(
        gens, [&](const GenerationRecord& gen) { return score_generation(gen, targets.at(gen.func_id), shared, cfg.metrics); },
        cfg.parallelism);
    for (ScoreRow& r : scored) {
      out.write(to_json(r));
      rows.push_back(std::move(r));
    }
  });
  out.close();
  std::map<std::string, double> pass_rates;
  if (!a.pass.empty()) {
    std::map<std::string, std::vector<PassVerdict>> by_model;
    read_jsonl(a.pass, [&](json&& j) {
      by_model[field<std::string>(j, "model_id")].push_back(
          PassVerdict{field<std::string>(j, "func_id"), field<bool>(j, "passed")});
    });
    for (auto& [model, vs] : by_model) pass_rates[model] = pass_rate(vs);
  }
  json models = json::array();
  for (const ModelSummary& s : summarize(rows, pass_rates)) models.push_back(to_json(s));
  json summary{{"metrics", to_json(cfg.metrics)}, {"shared_ngrams", shared.size()}, {"models", std::move(models)}};
  write_file(dir / "score_summary.json", summary.dump(2) + "\n");
  log("score: " + std::to_string(rows.size()) + " generations scored");
  return kExitOk;
}

// compare ------------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> inputs;
  std::string scores;
  std::string field_name;
  std::string equals;
  std::string out;
};

int run_compare(const Globals& g, const CompareArgs& a) {
  const PipelineConfig cfg = load(g);
  if (a.field_name.empty()) throw ConfigError("--field is required");
  std::vector<stats::Sample> samples;
  std::map<std::string, std::size_t> index;
  bool binary = !a.equals.empty();
  bool all_bool = true;
  auto value_of = [&](const json& j) -> double {
    auto it = j.find(a.field_name);
    if (it == j.end()) throw DataError("record without field '" + a.field_name + "'");
    if (!a.equals.empty()) return (it->is_string() ? it->get<std::string>() : it->dump()) == a.equals ? 1.0 : 0.0;
    if (it->is_boolean()) return it->get<bool>() ? 1.0 : 0.0;
    all_bool = false;
    if (!it->is_number()) throw DataError("field '" + a.field_name + "' is neither boolean nor numeric");
    return it->get<double>();
  };
  auto sample_for = [&](const std::string& model) -> stats::Sample& {
    auto [it, fresh] = index.emplace(model, samples.size());
    if (fresh) samples.push_back(stats::Sample{model, {}, {}});
    return samples[it->second];
  };
  for (const std::string& spec : a.inputs) {
    auto [name, path] = split_named(spec);
    stats::Sample& s = sample_for(name);
    read_jsonl(path, [&](json&& j) {
      s.ids.push_back(field<std::string>(j, "func_id"));
      s.values.push_back(value_of(j));
    });
  }
  if (!a.scores.empty()) {
    std::map<std::string, stats::Sample> grouped;
    read_jsonl(a.scores, [&](json&& j) {
      stats::Sample& s = grouped[field<std::string>(j, "model_id")];
      s.ids.push_back(field<std::string>(j, "func_id"));
      s.values.push_back(value_of(j));
    });
    for (auto& [model, s] : grouped) {
      stats::Sample& dst = sample_for(model);
      dst.ids = std::move(s.ids);
      dst.values = std::move(s.values);
    }
  }
  if (samples.size() < 2) throw ConfigError("compare needs at least two models");
  binary = binary || all_bool;
  std::vector<stats::Comparison> family;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      family.push_back(
          stats::Comparison{samples[i].model_id + " vs " + samples[j].model_id, samples[i], samples[j], binary});
    }
  }
  json results = json::array();
  for (const stats::TestResult& r : stats::compare_models(family, cfg.stats)) {
    json j = stats::to_json(r);
    j["significant"] = r.p_adjusted && *r.p_adjusted < cfg.stats.alpha;
    results.push_back(std::move(j));
  }
  json doc{{"field", a.field_name},
           {"kind", binary ? "binary" : "real"},
           {"alpha", cfg.stats.alpha},
           {"correction", "benjamini-hochberg"},
           {"results", std::move(results)}};
  const fs::path out = a.out.empty() ? fs::path(cfg.output_dir) / "compare.json" : fs::path(a.out);
  write_file(out, doc.dump(2) + "\n");
  log("compare: " + std::to_string(family.size()) + " comparisons");
  return kExitOk;
}

// report -------------------------------------------------------------------

struct ReportArgs {
  std::string verdicts;
  std::vector<std::string> runs;
  std::optional<std::size_t> top_k;
  std::string out;
};

int run_report(const Globals& g, const ReportArgs& a) {
  const PipelineConfig cfg = load(g);
  const fs::path dir = out_dir(cfg, a.out);
  const std::size_t top_k = a.top_k.value_or(cfg.top_k);
  std::string md;
  if (!a.verdicts.empty()) {
    report::BreakdownAccumulator acc;
    read_jsonl(a.verdicts, [&](json&& j) { acc.add(qualscan::verdict_from_json(j)); });
    const report::IssueBreakdown b = acc.finish(top_k);
    write_file(dir / "breakdown.json", report::render(b, "json"));
    write_file(dir / "sankey.json", report::render(b, "sankey"));
    md += report::render(b, "markdown");
  }
  if (!a.runs.empty()) {
    std::map<std::string, std::vector<qualscan::ScanVerdict>> runs;
    for (const std::string& spec : a.runs) {
      auto [name, path] = split_named(spec);
      auto& vs = runs[name];
      read_jsonl(path, [&](json&& j) { vs.push_back(qualscan::verdict_from_json(j)); });
    }
    const report::ComparisonTable t = report::comparison_table(runs);
    write_file(dir / "comparison.json", report::render(t, "json"));
    if (!md.empty()) md += "\n";
    md += "# Model comparison\n\n" + report::render(t, "markdown");
  }
  if (md.empty()) throw ConfigError("report needs --verdicts or --run");
  write_file(dir / "report.md", md);
  log("report: written to " + dir.string());
  return kExitOk;
}

json version_json() {
  return json{{"tool", kToolName}, {"version", kVersion}, {"token_counter", kTokenCounter}, {"prompt_format", kPromptFormat}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quality control for code-generation corpora: ingest, curate, scan, split, score, compare, report"};
  app.require_subcommand(0, 1);
  Globals g;
  app.add_option("--config", g.config, "JSON config file (CORPUSQC_* environment variables override it)");
  app.add_option("--threads", g.threads, "Worker threads (default: config parallelism)")->check(CLI::PositiveNumber);
  app.add_flag("--version", g.version, "Print version information as JSON");

  IngestArgs ia;
  auto* ingest = app.add_subcommand("ingest", "Extract functions from Python sources");
  ingest->add_option("--corpus", ia.corpus, "Source roots: directories, .py files or manifest files");
  ingest->add_option("--out", ia.out, "Output directory");

  CurateArgs ca;
  auto* curate = app.add_subcommand("curate", "Clean docstrings and code into description/code pairs");
  curate->add_option("--in", ca.in, "functions.jsonl (default: <out>/functions.jsonl)");
  curate->add_option("--out", ca.out, "Output directory");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Run quality rules over pairs or generations");
  scan->add_option("--in", sa.in, "pairs.jsonl or generations.jsonl");
  scan->add_option("--out", sa.out, "Verdict file (default: <out>/verdicts.jsonl)");
  scan->add_option("--rules", sa.rules, "Extra rule files or directories");
  scan->add_flag("--no-builtin", sa.no_builtin, "Do not load the built-in rules");
  scan->add_option("--gate", sa.gate, "Exit 2 if any finding has this severity or worse (info, warning, error)");

  BuildArgs ba;
  auto* build = app.add_subcommand("build-dataset", "Split pairs and emit the full and cleaned variants");
  build->add_option("--pairs", ba.pairs, "pairs.jsonl");
  build->add_option("--verdicts", ba.verdicts, "verdicts.jsonl for the pairs");
  build->add_option("--out", ba.out, "Output directory");
  build->add_option("--seed", ba.seed, "Shuffle seed (default: config seed)");
  build->add_option("--variant", ba.variant, "full, cleaned or both")->check(CLI::IsMember({"full", "cleaned", "both"}));

  ScoreArgs oa;
  auto* score = app.add_subcommand("score", "Exact match and CrystalBLEU of generations against targets");
  score->add_option("--generations", oa.generations, "JSONL of {func_id, model_id, completion}")->required();
  score->add_option("--targets", oa.targets, "JSONL of {func_id, completion|code}")->required();
  score->add_option("--reference", oa.reference, "Corpus for trivially shared n-grams (e.g. train.jsonl)");
  score->add_option("--pass", oa.pass, "JSONL of {func_id, model_id, passed}");
  score->add_option("--out", oa.out, "Output directory");

  CompareArgs pa;
  auto* compare = app.add_subcommand("compare", "Paired significance tests between models");
  compare->add_option("--input", pa.inputs, "NAME=FILE, one JSONL per model");
  compare->add_option("--scores", pa.scores, "scores.jsonl grouped by model_id");
  compare->add_option("--field", pa.field_name, "Record field to compare")->required();
  compare->add_option("--equals", pa.equals, "Compare the boolean outcome field == VALUE");
  compare->add_option("--out", pa.out, "Output file (default: <out>/compare.json)");

  ReportArgs ra;
  auto* rep = app.add_subcommand("report", "Issue breakdown, Sankey data and model comparison table");
  rep->add_option("--verdicts", ra.verdicts, "Verdict file to break down");
  rep->add_option("--run", ra.runs, "NAME=FILE verdict file per model");
  rep->add_option("--top-k", ra.top_k, "Rules listed per category (default: config top_k)");
  rep->add_option("--out", ra.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (g.version) {
    std::cout << version_json().dump() << "\n";
    return kExitOk;
  }
  try {
    if (*ingest) return run_ingest(g, ia);
    if (*curate) return run_curate(g, ca);
    if (*scan) return run_scan(g, sa);
    if (*build) return run_build(g, ba);
    if (*score) return run_score(g, oa);
    if (*compare) return run_compare(g, pa);
    if (*rep) return run_report(g, ra);
    std::cout << app.help();
    return kExitInvalid;
  } catch (const Error& e) {
    log(std::string("error: ") + e.what());
    return kExitInvalid;
  } catch (const json::exception& e) {
    log(std::string("error: ") + e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    log(std::string("internal error: ") + e.what());
    return kExitInvalid;
  }
}
