// Copyright 2026 The termlabel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// termlabel: build term indexes, label classes and evaluate labels.
//
//   termlabel index    --corpus c.jsonl --classes k.jsonl --assignments a.csv --out x.idx
//   termlabel label    ... [--index x.idx] [--approach tfs] [--top-n 3]
//   termlabel evaluate ... [--approach all] [--fields title,keywords ...]
//   termlabel synth    --seed 1 --out dir
//
// Every option may also come from a key/value file given with --config.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "termlabel/corpus.h"
#include "termlabel/error.h"
#include "termlabel/evaluation.h"
#include "termlabel/extraction.h"
#include "termlabel/hierarchy.h"
#include "termlabel/labeling.h"
#include "termlabel/lexicon.h"
#include "termlabel/synthetic.h"
#include "termlabel/term_index.h"
#include "termlabel/weighting.h"

namespace termlabel {
namespace {

namespace fs = std::filesystem;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Config {
  // Inputs.
  std::string corpus;
  std::string classes;
  std::string assignments;
  std::string index;
  // Extraction.
  std::vector<std::string> fields;
  std::string mode = "builtin";
  std::string lexicon;
  std::string lemma_exceptions;
  std::string address_stopwords;
  // Hierarchy.
  size_t min_class_size = HierarchyOptions{}.min_class_size;
  bool no_rollup = false;
  bool require_disjoint = false;
  bool split_amp = false;
  bool single_phrase_labels = false;
  bool no_virtual_root = false;
  // Index.
  uint32_t threshold = IndexOptions{}.support_threshold;
  // Weighting and labeling.
  std::vector<std::string> approaches;
  double wve_m = kDefaultWveM;
  double tfs_alpha = kDefaultTfsAlpha;
  std::string level_spec;
  std::vector<int> top_n;
  std::string stoplist;
  std::string format = "tsv";
  // Evaluation.
  bool include_root = false;
  double ci_level = 0.95;
  // Synthetic baseline.
  uint64_t seed = 1;
  SyntheticParams synth;
  // General.
  int threads = 0;
  std::string out;
};

[[noreturn]] void Usage(const std::string& message) {
  throw Error(Error::Code::kUsage, message);
}

void RequirePath(const std::string& path, const std::string& what) {
  if (path.empty()) Usage("--" + what + " is required");
  if (!fs::exists(path)) Usage(what + " not found: " + path);
}

void Warn(const std::string& what, const std::vector<RowError>& rows) {
  constexpr size_t kShown = 5;
  for (size_t i = 0; i < rows.size() && i < kShown; ++i) {
    std::cerr << "warning: " << what << " line " << rows[i].line << ": "
              << rows[i].message << "\n";
  }
  if (rows.size() > kShown) {
    std::cerr << "warning: " << what << ": " << rows.size() - kShown
              << " more rejected rows\n";
  }
}

ExtractionMode ParseMode(const std::string& mode) {
  if (mode == "builtin") return ExtractionMode::kBuiltin;
  if (mode == "pretagged") return ExtractionMode::kPretagged;
  Usage("unknown extraction mode '" + mode + "'");
}

std::vector<FieldSet> FieldSets(const Config& cfg) {
  std::vector<FieldSet> out;
  for (const auto& text : cfg.fields) out.push_back(FieldSet::Parse(text));
  if (out.empty()) out.push_back(ExtractionOptions{}.fields);
  return out;
}

std::vector<WeightingSpec> Specs(const Config& cfg) {
  std::vector<std::string> names = cfg.approaches;
  if (names.empty()) names.push_back("tfs");
  std::vector<WeightingSpec> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (Approach a : StandardApproaches()) {
        out.push_back({a, cfg.wve_m, cfg.tfs_alpha});
      }
      continue;
    }
    auto approach = ParseApproach(name);
    if (!approach) Usage("unknown approach '" + name + "'");
    out.push_back({*approach, cfg.wve_m, cfg.tfs_alpha});
  }
  for (const auto& spec : out) spec.Validate();
  return out;
}

LevelSpecs MakeLevelSpecs(const Config& cfg, const WeightingSpec& fallback) {
  LevelSpecs specs;
  specs.fallback = fallback;
  if (!cfg.level_spec.empty()) specs.by_level = LevelSpecs::Parse(cfg.level_spec);
  return specs;
}

StopList LabelStopList(const Config& cfg) {
  if (cfg.stoplist.empty()) return {};
  if (cfg.stoplist == "sample") return StopList::SampleLabel();
  RequirePath(cfg.stoplist, "stoplist");
  return StopList::Load(cfg.stoplist);
}

TermExtractor MakeExtractor(const Config& cfg, const FieldSet& fields) {
  ExtractionOptions options;
  options.fields = fields;
  options.mode = ParseMode(cfg.mode);
  if (!cfg.address_stopwords.empty()) {
    RequirePath(cfg.address_stopwords, "address-stopwords");
    options.address_stopwords = StopList::Load(cfg.address_stopwords);
  }
  PosLexicon lexicon = PosLexicon::Default();
  if (!cfg.lexicon.empty()) {
    RequirePath(cfg.lexicon, "lexicon");
    lexicon = PosLexicon::Load(cfg.lexicon);
  }
  Lemmatizer lemmatizer = Lemmatizer::Default();
  if (!cfg.lemma_exceptions.empty()) {
    RequirePath(cfg.lemma_exceptions, "lemma-exceptions");
    lemmatizer = Lemmatizer::Load(cfg.lemma_exceptions);
  }
  return TermExtractor(std::move(options), std::move(lexicon),
                       std::move(lemmatizer));
}

// Corpus and hierarchy, shared by every field set of a run.
struct Inputs {
  Corpus corpus;
  Hierarchy hierarchy;
};

Inputs LoadInputs(const Config& cfg) {
  RequirePath(cfg.corpus, "corpus");
  RequirePath(cfg.classes, "classes");
  RequirePath(cfg.assignments, "assignments");
  if (cfg.min_class_size < 1) Usage("--min-class-size must be >= 1");
  if (cfg.threads < 0) Usage("--threads must be >= 0");

  Inputs in;
  IngestResult ingest = IngestCorpus(cfg.corpus, GuessCorpusFormat(cfg.corpus));
  Warn("corpus", ingest.rejects);
  in.corpus = std::move(ingest.corpus);

  HierarchyOptions options;
  options.min_class_size = cfg.min_class_size;
  options.rollup = !cfg.no_rollup;
  options.require_disjoint_levels = cfg.require_disjoint;
  options.virtual_root = !cfg.no_virtual_root;
  options.split_amp = cfg.split_amp;
  options.require_single_phrase_labels = cfg.single_phrase_labels;
  // Gold labels only go through normalization, which ignores the field set.
  const TermExtractor label_pipeline = MakeExtractor(cfg, FieldSet::All());
  std::vector<RowError> row_errors;
  in.hierarchy = LoadHierarchy(cfg.classes, cfg.assignments, in.corpus, options,
                               label_pipeline, &row_errors);
  Warn("assignments", row_errors);
  return in;
}

// Builds the index for one field set, or loads --index when given.
TermIndex ObtainIndex(const Config& cfg, const Inputs& in,
                      const FieldSet& fields) {
  if (!cfg.index.empty()) {
    RequirePath(cfg.index, "index");
    TermIndex index = TermIndex::Load(cfg.index);
    if (!cfg.fields.empty() && index.fields() != fields.ToString()) {
      Usage("index was built for fields " + index.fields() + ", not " +
            fields.ToString());
    }
    index.CheckMatches(in.hierarchy);
    return index;
  }
  const TermExtractor extractor = MakeExtractor(cfg, fields);
  TermIndex::BuildReport report;
  TermIndex index = TermIndex::Build(
      in.corpus, in.hierarchy, extractor,
      IndexOptions{.support_threshold = cfg.threshold, .threads = cfg.threads},
      &report);
  for (const auto& e : report.record_errors) std::cerr << "warning: " << e << "\n";
  return index;
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  f.close();
  if (!f) {
    throw Error(Error::Code::kFailedPrecondition,
                "cannot write " + path.string());
  }
}

int CmdIndex(const Config& cfg) {
  if (cfg.out.empty()) Usage("--out is required");
  if (cfg.fields.size() > 1) Usage("index takes a single --fields value");
  Config build = cfg;
  build.index.clear();
  const Inputs in = LoadInputs(build);
  const TermIndex index = ObtainIndex(build, in, FieldSets(cfg).front());
  index.Save(cfg.out);

  std::set<uint32_t> candidates;
  for (const auto& table : index.tables()) {
    if (table.kind != FrequencyTable::Kind::kClass) continue;
    for (uint32_t t : index.CandidateTermIds(table)) candidates.insert(t);
  }
  std::cout << "publications\t" << in.corpus.size() << "\n"
            << "indexed_publications\t" << index.publications() << "\n"
            << "classes\t" << in.hierarchy.size() << "\n"
            << "target_classes\t" << in.hierarchy.TargetClasses().size() << "\n"
            << "terms\t" << index.terms().size() << "\n"
            << "candidate_terms\t" << candidates.size() << "\n"
            << "fields\t" << index.fields() << "\n"
            << "index\t" << cfg.out << "\n";
  return 0;
}

int CmdLabel(const Config& cfg) {
  if (cfg.fields.size() > 1) Usage("label takes a single --fields value");
  if (cfg.top_n.size() > 1) Usage("label takes a single --top-n value");
  if (cfg.format != "tsv" && cfg.format != "json") {
    Usage("--format must be tsv or json");
  }
  const std::vector<WeightingSpec> specs = Specs(cfg);
  if (specs.size() != 1) Usage("label takes a single approach");
  const int top_n = cfg.top_n.empty() ? kDefaultTopN : cfg.top_n.front();
  if (top_n < 1) Usage("--top-n must be >= 1");
  const StopList stoplist = LabelStopList(cfg);

  const Inputs in = LoadInputs(cfg);
  const TermIndex index = ObtainIndex(cfg, in, FieldSets(cfg).front());
  const auto labels =
      LabelHierarchy(in.hierarchy, index, MakeLevelSpecs(cfg, specs.front()),
                     top_n, stoplist, cfg.threads);
  const std::string text =
      cfg.format == "json" ? LabelsToJson(labels) : LabelsToTsv(labels);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    WriteFile(cfg.out, text);
    std::cout << "labels\t" << cfg.out << "\n";
  }
  return 0;
}

int CmdEvaluate(const Config& cfg) {
  const std::vector<FieldSet> field_sets = FieldSets(cfg);
  if (!cfg.index.empty() && field_sets.size() > 1) {
    Usage("--index cannot be combined with a field-set sweep");
  }
  const std::vector<WeightingSpec> specs = Specs(cfg);
  EvaluationOptions options;
  if (!cfg.top_n.empty()) options.top_n = cfg.top_n;
  for (int n : options.top_n) {
    if (n < 1) Usage("--top-n must be >= 1");
  }
  if (!(cfg.ci_level > 0 && cfg.ci_level < 1)) {
    Usage("--ci-level must lie in (0, 1)");
  }
  options.exclude_root = !cfg.include_root;
  options.ci_level = cfg.ci_level;
  options.stoplist = LabelStopList(cfg);
  options.threads = cfg.threads;

  const Inputs in = LoadInputs(cfg);
  std::vector<EvaluationReport> reports;
  for (const FieldSet& fields : field_sets) {
    // One index per field set, shared by every approach.
    const TermIndex index = ObtainIndex(cfg, in, fields);
    for (const WeightingSpec& spec : specs) {
      auto part =
          Evaluate(in.hierarchy, index, MakeLevelSpecs(cfg, spec), options);
      reports.insert(reports.end(), part.begin(), part.end());
    }
  }
  if (!cfg.out.empty()) {
    const fs::path dir = cfg.out;
    WriteFile(dir / "report.json", ReportsToJson(reports));
    WriteFile(dir / "levels.tsv", ReportsToLevelTsv(reports));
    WriteFile(dir / "summary.csv", ReportsToCsv(reports));
  }
  std::cout << ReportsToCsv(reports);
  return 0;
}

int CmdSynth(const Config& cfg) {
  if (cfg.out.empty()) Usage("--out is required");
  const SyntheticParams& p = cfg.synth;
  if (p.n_classes < 1 || p.depth < 1 || p.pubs_per_class < 1 ||
      p.vocab_size < 1 || p.noise_words < 0 || p.discipline_levels < 0) {
    Usage("synthetic sizes must be positive");
  }
  for (double rate : {p.plant_rate, p.background_rate, p.planted_fraction}) {
    if (rate < 0 || rate > 1) Usage("synthetic rates must lie in [0, 1]");
  }
  const SyntheticBaseline b = GenerateSyntheticBaseline(cfg.seed, p);
  WriteSyntheticBaseline(b, cfg.out);
  std::cout << "publications\t" << b.corpus.size() << "\n"
            << "classes\t" << b.classes.size() << "\n"
            << "assignments\t" << b.assignments.size() << "\n"
            << "out\t" << cfg.out << "\n";
  return 0;
}

void AddOptions(CLI::App& app, Config& cfg) {
  app.add_option("--corpus", cfg.corpus, "Publications (.jsonl or .csv)");
  app.add_option("--classes", cfg.classes, "Class definitions (.jsonl)");
  app.add_option("--assignments", cfg.assignments,
                 "publication_id,class_id rows (.csv)");
  app.add_option("--index", cfg.index, "Prebuilt index to use instead of "
                                       "extracting terms");
  app.add_option("--fields", cfg.fields,
                 "Field set such as title,keywords; repeat to sweep");
  app.add_option("--mode", cfg.mode, "Extraction mode: builtin or pretagged")
      ->capture_default_str();
  app.add_option("--lexicon", cfg.lexicon, "Part-of-speech lexicon (TSV)");
  app.add_option("--lemma-exceptions", cfg.lemma_exceptions,
                 "Plural/singular exceptions (TSV)");
  app.add_option("--address-stopwords", cfg.address_stopwords,
                 "Stop words for the addresses field");
  app.add_option("--min-class-size", cfg.min_class_size,
                 "Smallest class that gets labeled")
      ->capture_default_str();
  app.add_flag("--no-rollup", cfg.no_rollup,
               "Do not merge descendants into their ancestors");
  app.add_flag("--require-disjoint", cfg.require_disjoint,
               "Reject publications in two classes of one level");
  app.add_flag("--split-amp", cfg.split_amp, "Split labels on '&'");
  app.add_flag("--single-phrase-labels", cfg.single_phrase_labels,
               "Skip classes whose label is not one noun phrase");
  app.add_flag("--no-virtual-root", cfg.no_virtual_root,
               "Leave top-level classes without a parent");
  app.add_option("--threshold", cfg.threshold,
                 "Minimum publications per class for a candidate term")
      ->capture_default_str();
  app.add_option("--approach", cfg.approaches,
                 "chi_square, jsd, jsd_raw, jsdq, tf_idf, wve, tfs or all; "
                 "repeat to sweep");
  app.add_option("--wve-m", cfg.wve_m, "WvE smoothing constant")
      ->capture_default_str();
  app.add_option("--tfs-alpha", cfg.tfs_alpha, "TFS weight in [0, 1]")
      ->capture_default_str();
  app.add_option("--level-spec", cfg.level_spec,
                 "Per-level approaches, e.g. 1:tfs:0.667,2:wve:25");
  app.add_option("--top-n", cfg.top_n, "Terms per class; repeat to sweep");
  app.add_option("--stoplist", cfg.stoplist,
                 "Terms never used as labels (file, or 'sample')");
  app.add_option("--format", cfg.format, "Label output: tsv or json")
      ->capture_default_str();
  app.add_flag("--include-root", cfg.include_root,
               "Evaluate level-1 classes too");
  app.add_option("--ci-level", cfg.ci_level, "Confidence level of intervals")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Synthetic generator seed")
      ->capture_default_str();
  app.add_option("--n-classes", cfg.synth.n_classes)->capture_default_str();
  app.add_option("--depth", cfg.synth.depth)->capture_default_str();
  app.add_option("--pubs-per-class", cfg.synth.pubs_per_class)
      ->capture_default_str();
  app.add_option("--vocab-size", cfg.synth.vocab_size)->capture_default_str();
  app.add_option("--plant-rate", cfg.synth.plant_rate)->capture_default_str();
  app.add_option("--background-rate", cfg.synth.background_rate)
      ->capture_default_str();
  app.add_option("--planted-fraction", cfg.synth.planted_fraction)
      ->capture_default_str();
  app.add_option("--discipline-levels", cfg.synth.discipline_levels)
      ->capture_default_str();
  app.add_option("--noise-words", cfg.synth.noise_words)
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  app.add_option("--out", cfg.out,
                 "Output file (index, label) or directory (evaluate, synth)");
}

// Keeps error output to one line.
std::string OneLine(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

int Run(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Label classes of a publication hierarchy with ranked terms"};
  app.set_config("--config", "", "Key/value file with option defaults");
  app.require_subcommand(1);
  // Options live on the top level and may follow the subcommand.
  app.fallthrough();
  AddOptions(app, cfg);
  auto* index = app.add_subcommand("index", "Extract terms and write an index");
  auto* label = app.add_subcommand("label", "Rank terms and print labels");
  auto* evaluate =
      app.add_subcommand("evaluate", "Score labels against gold labels");
  auto* synth = app.add_subcommand("synth", "Write a planted synthetic corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (*index) return CmdIndex(cfg);
    if (*label) return CmdLabel(cfg);
    if (*evaluate) return CmdEvaluate(cfg);
    if (*synth) return CmdSynth(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return e.code() == Error::Code::kUsage ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace termlabel

int main(int argc, char** argv) { return termlabel::Run(argc, argv); }
