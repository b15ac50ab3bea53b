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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/evaluation.h"
#include "termlabel/extraction.h"
#include "termlabel/hierarchy.h"
#include "termlabel/labeling.h"
#include "termlabel/synthetic.h"
#include "termlabel/term_index.h"
#include "termlabel/thread_pool.h"
#include "termlabel/weighting.h"
#include "testing/fixtures.h"
#include "testing/generators.h"
#include "testing/oracles.h"
#ifdef TERMLABEL_CLI_PATH
#include "testing/cli_runner.h"
#endif

namespace termlabel::testing {
namespace {

namespace fs = std::filesystem;

// Collects failed checks for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  size_t checks() const { return checks_; }
  std::string Summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_ > 0) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  size_t checks_ = 0;
  size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

OracleCounts ToOracle(const ClassTermStats& s) {
  return {static_cast<double>(s.tf_cj),   static_cast<double>(s.tf_cp),
          static_cast<double>(s.size_cj), static_cast<double>(s.size_cp),
          static_cast<double>(s.tf_cref), static_cast<double>(s.totals_cj),
          static_cast<double>(s.totals_cref)};
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// 1. Raw and restricted JSD on the two-term example.
Outcome SkewedReferenceJsd() {
  Checker c;
  ClassTermStats t1, t2;
  t1.tf_cref = 225; t1.tf_cj = 1;
  t2.tf_cref = 10;  t2.tf_cj = 20;
  for (auto* s : {&t1, &t2}) {
    s->totals_cref = 1000;
    s->totals_cj = 100;
    s->size_cj = 100;
    s->size_cp = 1100;
    s->tf_cp = s->tf_cj + s->tf_cref;
  }
  const double raw1 = Jsd(t1, true), raw2 = Jsd(t2, true);
  const double fix1 = Jsd(t1), fix2 = Jsd(t2);
  c.Expect(std::abs(raw1 - 0.122) <= 0.001, "raw t1 " + Fixed(raw1));
  c.Expect(std::abs(raw2 - 0.105) <= 0.001, "raw t2 " + Fixed(raw2));
  c.Expect(fix1 == 0, "fixed t1 " + Fixed(fix1));
  c.Expect(std::abs(fix2 - 0.105) <= 0.001, "fixed t2 " + Fixed(fix2));
  StatSet set{{"t1", "t2"}, {t1, t2}};
  c.Expect(RankBySpec(set, WeightingSpec::JsdRaw()) ==
               std::vector<std::string>{"t1", "t2"},
           "raw ranking");
  c.Expect(RankBySpec(set, WeightingSpec::Jsd()) ==
               std::vector<std::string>{"t2", "t1"},
           "fixed ranking");
  return {c.ok(), "raw " + Fixed(raw1, 3) + "/" + Fixed(raw2, 3) + ", fixed " +
                      Fixed(fix1, 3) + "/" + Fixed(fix2, 3) + "; " +
                      c.Summary()};
}

// 2. The 17 terms of the polymer films record, per field and mode.
Outcome SampleRecordTerms() {
  Checker c;
  const auto want = PolymerFilmsTerms();
  size_t total = 0;
  for (const auto& [field, terms] : want) total += terms.size();
  c.Expect(total == 17, "expected table holds " + std::to_string(total));
  struct Mode {
    ExtractionMode mode;
    PublicationRecord record;
    const char* name;
  };
  for (const Mode& m :
       {Mode{ExtractionMode::kBuiltin, PolymerFilmsCleanedRecord(), "builtin"},
        Mode{ExtractionMode::kPretagged, PolymerFilmsPretaggedRecord(),
             "pretagged"}}) {
    size_t got_total = 0;
    for (const auto& [field, terms] : want) {
      TermExtractor ex(ExtractionOptions{.fields = {field}, .mode = m.mode});
      auto got = ex.Extract(m.record);
      std::set<std::string> got_set(got.begin(), got.end());
      got_total += got_set.size();
      c.Expect(got_set == terms,
               std::string(m.name) + " " + std::string(FieldName(field)));
    }
    c.Expect(got_total == 17, std::string(m.name) + " total " +
                                  std::to_string(got_total));
  }
  return {c.ok(), c.Summary()};
}

// 3. Every approach against the direct-formula oracle, random and boundary
// tuples.
Outcome FormulaOracle() {
  Checker c;
  std::mt19937_64 rng(31337);
  std::vector<ClassTermStats> tuples;
  for (int i = 0; i < 100; ++i) {
    uint64_t size_cj = Uniform(rng, 1, 300);
    uint64_t size_cp = size_cj + Uniform(rng, 0, 900);
    ClassTermStats s = RandomStats(rng, size_cj, size_cp, Uniform(rng, 1, 6000),
                                   Uniform(rng, 1, 6000));
    s.tf_cref = std::min(s.tf_cref, s.totals_cref);
    tuples.push_back(s);
  }
  // observed = expected: tf_cj |c_p| = tf_cp |c_j|.
  tuples.push_back({.tf_cj = 10, .tf_cp = 40, .size_cj = 100, .size_cp = 400,
                    .tf_cref = 30, .totals_cj = 500, .totals_cref = 1500});
  tuples.push_back({.tf_cj = 7, .tf_cp = 7, .size_cj = 50, .size_cp = 50,
                    .tf_cref = 0, .totals_cj = 90, .totals_cref = 0});
  // Q = P.
  tuples.push_back({.tf_cj = 5, .tf_cp = 15, .size_cj = 20, .size_cp = 60,
                    .tf_cref = 10, .totals_cj = 100, .totals_cref = 200});
  // tf_cp = |c_p|.
  tuples.push_back({.tf_cj = 30, .tf_cp = 90, .size_cj = 30, .size_cp = 90,
                    .tf_cref = 60, .totals_cj = 120, .totals_cref = 300});
  tuples.push_back({.tf_cj = 12, .tf_cp = 90, .size_cj = 30, .size_cp = 90,
                    .tf_cref = 78, .totals_cj = 120, .totals_cref = 300});
  // Term absent from the class.
  tuples.push_back({.tf_cj = 0, .tf_cp = 9, .size_cj = 30, .size_cp = 90,
                    .tf_cref = 9, .totals_cj = 120, .totals_cref = 300});

  size_t compared = 0;
  auto expect_close = [&](double got, double want, const std::string& what) {
    ++compared;
    c.Expect(RelativeError(got, want) <= 1e-12,
             what + " got " + std::to_string(got) + " want " +
                 std::to_string(want));
  };
  for (size_t i = 0; i < tuples.size(); ++i) {
    const ClassTermStats& s = tuples[i];
    const OracleCounts o = ToOracle(s);
    const std::string tag = "#" + std::to_string(i) + " ";
    expect_close(ChiSquare(s), OracleChiSquare(o), tag + "chi_square");
    expect_close(Jsd(s), OracleJsd(o, true), tag + "jsd");
    expect_close(Jsd(s, true), OracleJsd(o, false), tag + "jsd_raw");
    expect_close(Jsdq(s), OracleJsdq(o), tag + "jsdq");
    expect_close(TfIdf(s), OracleTfIdf(o), tag + "tf_idf");
    for (double m : {0.0, 1.0, 25.0}) {
      expect_close(Wve(s, m), OracleWve(o, m), tag + "wve");
    }
    for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
      expect_close(Tfs(s, alpha), OracleTfs(o, alpha), tag + "tfs");
    }
  }
  // The boundary rows hit their defining values exactly.
  c.Expect(ChiSquare(tuples[100]) == 0 && ChiSquare(tuples[101]) == 0,
           "chi_square at observed = expected");
  c.Expect(Jsd(tuples[102]) == 0 && Jsd(tuples[102], true) == 0 &&
               Jsdq(tuples[102]) == 0,
           "jsd family at Q = P");
  c.Expect(TfIdf(tuples[103]) == 0 && TfIdf(tuples[104]) == 0,
           "tf_idf at tf_cp = |c_p|");
  c.Expect(Tfs(tuples[104], 1) == 12.0 / 30, "tfs alpha=1 is ptf");
  c.Expect(Wve(tuples[104], 0) == 12.0 / 90, "wve m=0 is tf ratio");
  return {c.ok(), std::to_string(tuples.size()) + " tuples, " +
                      std::to_string(compared) + " comparisons; " +
                      c.Summary()};
}

// 4. Limiting weights reduce to simple sort keys.
Outcome RankingReductions() {
  Checker c;
  std::mt19937_64 rng(4242);
  size_t wve_ties_reordered = 0;
  for (int i = 0; i < 1000; ++i) {
    StatSet set = RandomStatSet(rng, 2 + rng() % 40);
    const std::string tag = "set " + std::to_string(i);
    c.Expect(RankBySpec(set, WeightingSpec::Tfs(1)) ==
                 RankByRational(set, PtfKey),
             tag + " tfs(1)");
    c.Expect(RankBySpec(set, WeightingSpec::Tfs(0)) ==
                 RankByRational(set, SpecificityKey),
             tag + " tfs(0)");
    c.Expect(RankBySpec(set, WeightingSpec::Wve(0)) ==
                 RankByRational(set, TfRatioKey),
             tag + " wve(0)");
    // At m = 1e9 the order is a frequency sort: tf_cj never increases down
    // the ranking. Within one frequency the smoothed scores still differ
    // by tf_cp, so those ties follow tf_cp rather than the term name.
    const auto big = RankBySpec(set, WeightingSpec::Wve(1e9));
    std::map<std::string, ClassTermStats> by_term;
    for (size_t k = 0; k < set.terms.size(); ++k) by_term[set.terms[k]] = set.stats[k];
    bool frequency_sorted = true;
    for (size_t k = 1; k < big.size(); ++k) {
      const auto& a = by_term[big[k - 1]];
      const auto& b = by_term[big[k]];
      frequency_sorted &= a.tf_cj >= b.tf_cj;
      if (a.tf_cj == b.tf_cj) frequency_sorted &= a.tf_cp <= b.tf_cp;
    }
    c.Expect(frequency_sorted, tag + " wve(1e9)");
    wve_ties_reordered += big != RankByRational(set, TfKey);
  }
  return {c.ok(), "1000 sets; " + c.Summary() + "; wve(1e9) equal-frequency " +
                      "ties ordered by tf_cp in " +
                      std::to_string(wve_ties_reordered) + " sets"};
}

// 5. Index counts against a naive recount.
Outcome IndexOracle() {
  Checker c;
  SyntheticParams p;
  p.n_classes = 20;
  p.depth = 3;
  p.pubs_per_class = 10;
  p.vocab_size = 60;
  p.background_rate = 0.05;
  const SyntheticBaseline base = GenerateSyntheticBaseline(2020, p);
  c.Expect(base.corpus.size() == 200, "corpus size");
  const TermExtractor ex(ExtractionOptions{});
  size_t pairs = 0;
  for (bool rollup : {true, false}) {
    const Hierarchy h = MakeHierarchy(base.classes, base.assignments,
                                      base.corpus,
                                      {.min_class_size = 1, .rollup = rollup});
    const TermIndex idx = TermIndex::Build(base.corpus, h, ex, {.threads = 4});
    for (const auto& node : h.nodes()) {
      std::map<std::string, uint32_t> naive;
      for (uint32_t m : node.members) {
        for (const auto& t : ex.Extract(base.corpus[m])) ++naive[t];
      }
      const FrequencyTable* table = idx.ClassTable(node.id);
      c.Expect(table != nullptr, node.id + " table");
      if (table == nullptr) continue;
      c.Expect(table->entries.size() == naive.size(), node.id + " term count");
      for (const auto& [term, count] : naive) {
        ++pairs;
        c.Expect(idx.Tf(node.id, term) == count, node.id + " tf " + term);
      }
      if (!rollup) continue;
      if (auto parent = h.parent(*h.Find(node.id))) {
        for (const auto& [term, count] : naive) {
          c.Expect(count <= idx.Tf(h.node(*parent).id, term),
                   node.id + " child <= parent " + term);
        }
      }
    }
  }
  return {c.ok(), std::to_string(pairs) + " (term, class) pairs; " +
                      c.Summary()};
}

struct Pipeline {
  SyntheticBaseline base;
  Hierarchy hierarchy;
  TermIndex index;
};

Pipeline BuildPipeline(uint64_t seed, const SyntheticParams& p,
                       const FieldSet& fields, HierarchyOptions hopt = {}) {
  Pipeline out;
  out.base = GenerateSyntheticBaseline(seed, p);
  const TermExtractor ex(ExtractionOptions{.fields = fields});
  out.hierarchy = Hierarchy::Build(out.base.classes, out.base.assignments,
                                   out.base.corpus, hopt, ex);
  out.index = TermIndex::Build(out.base.corpus, out.hierarchy, ex, {});
  return out;
}

// 6. Match@N on the planted baseline.
Outcome PlantedBaseline() {
  Checker c;
  SyntheticParams p;
  p.n_classes = 50;
  p.depth = 3;
  p.pubs_per_class = 100;
  p.plant_rate = 0.8;
  p.background_rate = 0.01;
  const Pipeline pl = BuildPipeline(606, p, ExtractionOptions{}.fields);
  EvaluationOptions options;
  options.top_n = {1, 3, 10};
  std::string detail;
  for (Approach a : StandardApproaches()) {
    LevelSpecs specs;
    specs.fallback = WeightingSpec{a};
    const auto reports = Evaluate(pl.hierarchy, pl.index, specs, options);
    const std::string name(ApproachName(a));
    c.Expect(reports.size() == 3, name + " report count");
    if (reports.size() != 3) continue;
    for (const auto& r : reports) {
      c.Expect(r.match_rate <= r.max_possible,
               name + " @" + std::to_string(r.n) + " above max possible");
    }
    c.Expect(reports[0].match_rate <= reports[1].match_rate &&
                 reports[1].match_rate <= reports[2].match_rate,
             name + " not monotone in N");
    if (a == Approach::kTfs) {
      c.Expect(reports[1].match_rate >= 0.95,
               "tfs Match@3 " + Fixed(reports[1].match_rate));
    }
    detail += name + "@3=" + Fixed(reports[1].match_rate, 3) + " ";
  }
  return {c.ok(), detail + "; " + c.Summary()};
}

// 7. Match@N and max possible counted by hand on ten classes.
Outcome HandCountedFixture() {
  Checker c;
  Corpus corpus;
  std::vector<Assignment> assignments;
  int serial = 0;
  // n publications of `cls` carrying `keywords`.
  auto add = [&](const std::string& cls, int n,
                 std::vector<std::string> keywords) {
    for (int i = 0; i < n; ++i) {
      PublicationRecord r;
      r.id = "P" + std::to_string(serial++);
      r.keywords = keywords;
      corpus.Add(r);
      assignments.push_back({r.id, cls});
    }
  };
  // Every leaf holds six publications.
  add("A1", 6, {"apple", "zest"});
  add("A2", 3, {"alpha", "beta", "gamma", "delta", "banana"});
  add("A2", 3, {"alpha", "beta", "gamma", "delta"});
  add("A3", 2, {"melon", "cherry"});
  add("A3", 4, {"melon"});
  add("A4", 6, {"melon"});
  add("B1", 6, {"elder"});
  add("B2", 5, {"kiwi", "lime", "fig"});
  add("B2", 1, {"kiwi", "lime"});
  add("B3", 4, {"kiwi", "grape"});
  add("B3", 2, {"kiwi"});
  add("B4", 3, {"quince", "hazel"});
  add("B4", 3, {"quince"});
  std::vector<ClassDef> classes = {
      {"A", {}, {"fruit"}},       {"B", {}, {"kiwi"}},
      {"A1", "A", {"apple"}},     {"A2", "A", {"banana"}},
      {"A3", "A", {"cherry"}},    {"A4", "A", {"damson"}},
      {"B1", "B", {"elder"}},     {"B2", "B", {"fig"}},
      {"B3", "B", {"grape"}},     {"B4", "B", {"hazel"}}};
  const Hierarchy h = MakeHierarchy(classes, assignments, corpus);
  const TermIndex idx = TermIndex::Build(
      corpus, h, TermExtractor(ExtractionOptions{.fields = {Field::kKeywords}}),
      {});
  // tfs(alpha=1) ranks by in-class frequency, so the counts below follow
  // from the keyword lists:
  //   extracted (label tf >= 3): A1 A2 B B1 B2 B3 B4               -> 7
  //   top 1: A1 (apple beats zest by name), B1, B (kiwi in 12 of 24) -> 3
  //   top 3: adds B2 (kiwi, lime, fig), B3 (kiwi, grape), B4       -> 6
  //   top 10: adds A2 (banana after four full-frequency terms)      -> 7
  // A3 has cherry twice, A4 and A never see their label.
  LevelSpecs specs;
  specs.fallback = WeightingSpec::Tfs(1.0);
  EvaluationOptions options;
  options.top_n = {1, 3, 10};
  options.exclude_root = false;
  const auto all = Evaluate(h, idx, specs, options);
  const size_t want_success[] = {3, 6, 7};
  for (size_t k = 0; k < all.size() && k < 3; ++k) {
    const auto& r = all[k];
    const std::string tag = "@" + std::to_string(r.n);
    c.Expect(r.n_total == 10, tag + " n_total");
    c.Expect(r.n_extracted == 7, tag + " n_extracted");
    c.Expect(r.n_successful == want_success[k], tag + " n_successful " +
                                                    std::to_string(r.n_successful));
    c.Expect(r.match_rate == static_cast<double>(want_success[k]) / 10,
             tag + " match rate");
    c.Expect(r.max_possible == 0.7, tag + " max possible");
  }
  c.Expect(all.size() == 3, "report count");
  if (all.size() == 3) {
    c.Expect(all[1].per_level.at(1).n_total == 2 &&
                 all[1].per_level.at(1).n_successful == 1 &&
                 all[1].per_level.at(1).n_extracted == 1,
             "level 1 row");
    c.Expect(all[1].per_level.at(2).n_total == 8 &&
                 all[1].per_level.at(2).n_successful == 5 &&
                 all[1].per_level.at(2).n_extracted == 6,
             "level 2 row");
  }
  // Root classes out: 8 leaves, 5 found in the top 3, 6 extracted.
  options.exclude_root = true;
  options.top_n = {3};
  const auto leaves = Evaluate(h, idx, specs, options).at(0);
  c.Expect(leaves.n_total == 8 && leaves.n_successful == 5 &&
               leaves.n_extracted == 6,
           "leaves only");
  c.Expect(leaves.match_rate == 5.0 / 8 && leaves.max_possible == 6.0 / 8,
           "leaves rates");
  return {c.ok(), c.Summary()};
}

// 8. Byte-identical CLI outputs across runs and thread counts.
Outcome CliDeterminism() {
#ifdef TERMLABEL_CLI_PATH
  Checker c;
  const fs::path dir = fs::temp_directory_path() /
                       ("termlabel_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const auto inputs =
      Concat({InputArgs(TestDataDir() / "spine"), {"--min-class-size", "1"}});
  std::string index0, labels0;
  int run = 0;
  for (const char* threads : {"1", "8", "1", "8"}) {
    const fs::path idx = dir / ("run" + std::to_string(run++) + ".idx");
    CliResult a = RunCli(
        Concat({{"index"}, inputs, {"--threads", threads, "--out", idx.string()}}));
    CliResult b = RunCli(Concat({{"label"}, inputs, {"--threads", threads}}));
    c.Expect(a.exit_code == 0 && b.exit_code == 0, "exit codes");
    const std::string index = ReadFile(idx);
    if (index0.empty()) {
      index0 = index;
      labels0 = b.out;
    }
    c.Expect(!index.empty() && index == index0,
             std::string("index bytes, threads ") + threads);
    c.Expect(!b.out.empty() && b.out == labels0,
             std::string("label bytes, threads ") + threads);
  }
  fs::remove_all(dir);
  return {c.ok(), "4 runs, threads {1, 8}; " + c.Summary()};
#else
  return {false, "command-line tool not built"};
#endif
}

// 9. Topic gold favors title/keywords, discipline gold favors journal and
// addresses.
Outcome FieldDirection() {
  Checker c;
  SyntheticParams p;
  p.n_classes = 40;
  p.depth = 3;
  p.pubs_per_class = 60;
  p.discipline_levels = 1;
  HierarchyOptions hopt;
  EvaluationOptions options;
  options.exclude_root = false;
  std::map<std::string, EvaluationReport> by_fields;
  for (const char* fields : {"title,keywords", "journal,addresses"}) {
    const Pipeline pl = BuildPipeline(909, p, FieldSet::Parse(fields), hopt);
    by_fields[fields] = Evaluate(pl.hierarchy, pl.index, LevelSpecs{}, options).at(0);
  }
  auto level_rate = [](const EvaluationReport& r, bool discipline) {
    size_t total = 0, ok = 0;
    for (const auto& [level, row] : r.per_level) {
      if ((level == 1) != discipline) continue;
      total += row.n_total;
      ok += row.n_successful;
    }
    return total == 0 ? 0.0 : static_cast<double>(ok) / total;
  };
  const auto& tk = by_fields["title,keywords"];
  const auto& ja = by_fields["journal,addresses"];
  const double topic_gap = level_rate(tk, false) - level_rate(ja, false);
  const double discipline_gap = level_rate(ja, true) - level_rate(tk, true);
  c.Expect(topic_gap >= 0.2, "topic gap " + Fixed(topic_gap));
  c.Expect(discipline_gap >= 0.2, "discipline gap " + Fixed(discipline_gap));
  return {c.ok(), "topic gap " + Fixed(topic_gap, 3) + ", discipline gap " +
                      Fixed(discipline_gap, 3) + "; " + c.Summary()};
}

double PeakRssMb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss / 1024.0;  // kilobytes on Linux
}

// 10. Index, label and evaluate at 100k publications.
Outcome Performance() {
  Checker c;
  SyntheticParams p;
  p.n_classes = 1000;
  p.depth = 3;
  p.pubs_per_class = 100;
  const SyntheticBaseline base = GenerateSyntheticBaseline(1010, p);
  c.Expect(base.corpus.size() == 100000, "corpus size");

  const auto start = std::chrono::steady_clock::now();
  const TermExtractor ex(ExtractionOptions{});
  const Hierarchy h = Hierarchy::Build(base.classes, base.assignments,
                                       base.corpus, {}, ex);
  const TermIndex idx = TermIndex::Build(base.corpus, h, ex, {});
  const auto labels = LabelHierarchy(h, idx, LevelSpecs{}, kDefaultTopN);
  const auto reports = Evaluate(h, idx, LevelSpecs{}, {});
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const double peak_mb = PeakRssMb();
  c.Expect(labels.size() == 1000, "label count");
  c.Expect(!reports.empty() && reports[0].match_rate > 0.5, "sane match rate");
  c.Expect(seconds < 60, "time " + Fixed(seconds, 1) + " s");
  c.Expect(peak_mb < 4096, "peak " + Fixed(peak_mb, 0) + " MB");
  return {c.ok(), Fixed(seconds, 1) + " s, peak RSS " + Fixed(peak_mb, 0) +
                      " MB (process), " + std::to_string(ResolveThreads(0)) +
                      " threads; " + c.Summary()};
}

}  // namespace
}  // namespace termlabel::testing

int main() {
  using namespace termlabel::testing;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"skewed_jsd", SkewedReferenceJsd},
      {"sample_record_terms", SampleRecordTerms},
      {"formula_oracle", FormulaOracle},
      {"ranking_reductions", RankingReductions},
      {"index_oracle", IndexOracle},
      {"planted_match_at_n", PlantedBaseline},
      {"hand_counted_rates", HandCountedFixture},
      {"cli_determinism", CliDeterminism},
      {"field_direction", FieldDirection},
      {"performance_100k", Performance},
  };
  int failed = 0;
  int number = 0;
  for (const auto& crit : criteria) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    failed += !o.pass;
    std::printf("%s %2d %-20s %9.1f ms  %s\n", o.pass ? "PASS" : "FAIL", number,
                crit.name, ms, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
