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

// Python bindings for the termlabel pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <string>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/error.h"
#include "termlabel/evaluation.h"
#include "termlabel/extraction.h"
#include "termlabel/hierarchy.h"
#include "termlabel/labeling.h"
#include "termlabel/synthetic.h"
#include "termlabel/term_index.h"
#include "termlabel/weighting.h"

namespace py = pybind11;

namespace termlabel {
namespace {

ExtractionMode ParseMode(const std::string& mode) {
  if (mode == "builtin") return ExtractionMode::kBuiltin;
  if (mode == "pretagged") return ExtractionMode::kPretagged;
  throw Error(Error::Code::kUsage, "unknown extraction mode '" + mode + "'");
}

WeightingSpec MakeSpec(const std::string& approach, double m, double alpha) {
  auto a = ParseApproach(approach);
  if (!a) throw Error(Error::Code::kUsage, "unknown approach '" + approach + "'");
  WeightingSpec spec{*a, m, alpha};
  spec.Validate();
  return spec;
}

std::vector<std::string> ExtractTermsJson(const std::string& json_line,
                                          const std::string& fields,
                                          const std::string& mode) {
  std::istringstream in(json_line);
  IngestResult r = IngestCorpus(in, CorpusFormat::kJsonl);
  if (!r.rejects.empty()) {
    throw Error(Error::Code::kInvalidData, r.rejects.front().message);
  }
  TermExtractor ex(ExtractionOptions{.fields = FieldSet::Parse(fields),
                                     .mode = ParseMode(mode)});
  return ex.Extract(r.corpus[0]);
}

double ScoreStats(const std::string& approach, const py::dict& stats, double m,
                  double alpha) {
  auto get = [&](const char* key) -> uint64_t {
    return stats.contains(key) ? stats[key].cast<uint64_t>() : 0;
  };
  ClassTermStats s;
  s.tf_cj = get("tf_cj");
  s.tf_cp = get("tf_cp");
  s.size_cj = get("size_cj");
  s.size_cp = get("size_cp");
  s.tf_cref = get("tf_cref");
  s.totals_cj = get("totals_cj");
  s.totals_cref = get("totals_cref");
  return Score(s, MakeSpec(approach, m, alpha));
}

// Corpus, hierarchy and index held together for repeated queries.
class Pipeline {
 public:
  Pipeline(const std::filesystem::path& corpus,
           const std::filesystem::path& classes,
           const std::filesystem::path& assignments, const std::string& fields,
           const std::string& mode, size_t min_class_size, bool rollup,
           uint32_t threshold, int threads)
      : threads_(threads) {
    py::gil_scoped_release release;
    corpus_ = IngestCorpus(corpus, GuessCorpusFormat(corpus)).corpus;
    TermExtractor ex(ExtractionOptions{.fields = FieldSet::Parse(fields),
                                       .mode = ParseMode(mode)});
    HierarchyOptions options;
    options.min_class_size = min_class_size;
    options.rollup = rollup;
    hierarchy_ = LoadHierarchy(classes, assignments, corpus_, options, ex);
    index_ = TermIndex::Build(corpus_, hierarchy_, ex,
                              {.support_threshold = threshold, .threads = threads});
  }

  size_t publications() const { return corpus_.size(); }
  size_t classes() const { return hierarchy_.size(); }
  void SaveIndex(const std::filesystem::path& path) const { index_.Save(path); }

  py::list Labels(const std::string& approach, double m, double alpha,
                  int top_n) const {
    LevelSpecs specs;
    specs.fallback = MakeSpec(approach, m, alpha);
    std::map<std::string, LabelResult> labels;
    {
      py::gil_scoped_release release;
      labels = LabelHierarchy(hierarchy_, index_, specs, top_n, {}, threads_);
    }
    py::list out;
    for (const auto& [id, r] : labels) {
      py::list terms;
      for (const auto& t : r.ranked_terms) {
        terms.append(py::make_tuple(t.term, t.score, t.tf));
      }
      py::dict d;
      d["class_id"] = id;
      d["level"] = r.level;
      d["terms"] = terms;
      d["unlabelable"] = r.unlabelable;
      d["not_target"] = r.not_target;
      out.append(d);
    }
    return out;
  }

  py::list Evaluate(const std::vector<std::string>& approaches,
                    const std::vector<int>& top_n, bool exclude_root, double m,
                    double alpha) const {
    EvaluationOptions options;
    options.top_n = top_n;
    options.exclude_root = exclude_root;
    options.threads = threads_;
    std::vector<EvaluationReport> reports;
    for (const auto& name : approaches) {
      LevelSpecs specs;
      specs.fallback = MakeSpec(name, m, alpha);
      py::gil_scoped_release release;
      auto part = termlabel::Evaluate(hierarchy_, index_, specs, options);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    py::list out;
    for (const auto& r : reports) {
      py::dict d;
      d["approach"] = r.approach;
      d["fields"] = r.fields;
      d["n"] = r.n;
      d["n_total"] = r.n_total;
      d["n_successful"] = r.n_successful;
      d["n_extracted"] = r.n_extracted;
      d["match_rate"] = r.match_rate;
      d["max_possible"] = r.max_possible;
      d["ci"] = py::make_tuple(r.ci_low, r.ci_high);
      out.append(d);
    }
    return out;
  }

 private:
  int threads_;
  Corpus corpus_;
  Hierarchy hierarchy_;
  TermIndex index_;
};

py::dict GenerateSynthetic(const std::filesystem::path& out, uint64_t seed,
                           const SyntheticParams& params) {
  SyntheticBaseline b;
  {
    py::gil_scoped_release release;
    b = GenerateSyntheticBaseline(seed, params);
    WriteSyntheticBaseline(b, out);
  }
  py::dict d;
  d["publications"] = b.corpus.size();
  d["classes"] = b.classes.size();
  d["assignments"] = b.assignments.size();
  return d;
}

}  // namespace
}  // namespace termlabel

PYBIND11_MODULE(_core, m) {
  using namespace termlabel;
  m.doc() = "Term extraction, weighting and label evaluation";

  py::register_exception<Error>(m, "TermlabelError", PyExc_ValueError);

  m.def("normalize", [](const std::string& s) { return Normalize(s); },
        py::arg("text"));
  m.def("extract_terms_json", &ExtractTermsJson, py::arg("json_line"),
        py::arg("fields") = "title,keywords", py::arg("mode") = "builtin");
  m.def("score", &ScoreStats, py::arg("approach"), py::arg("stats"),
        py::arg("m") = kDefaultWveM, py::arg("alpha") = kDefaultTfsAlpha);
  m.def("confidence_interval", &ConfidenceInterval, py::arg("successes"),
        py::arg("total"), py::arg("level") = 0.95);
  m.def("standard_approaches", [] {
    std::vector<std::string> out;
    for (Approach a : StandardApproaches()) out.emplace_back(ApproachName(a));
    return out;
  });

  py::class_<SyntheticParams>(m, "SyntheticParams")
      .def(py::init<>())
      .def_readwrite("n_classes", &SyntheticParams::n_classes)
      .def_readwrite("depth", &SyntheticParams::depth)
      .def_readwrite("pubs_per_class", &SyntheticParams::pubs_per_class)
      .def_readwrite("vocab_size", &SyntheticParams::vocab_size)
      .def_readwrite("plant_rate", &SyntheticParams::plant_rate)
      .def_readwrite("background_rate", &SyntheticParams::background_rate)
      .def_readwrite("planted_fraction", &SyntheticParams::planted_fraction)
      .def_readwrite("discipline_levels", &SyntheticParams::discipline_levels)
      .def_readwrite("noise_words", &SyntheticParams::noise_words);
  m.def("generate_synthetic", &GenerateSynthetic, py::arg("out"),
        py::arg("seed"), py::arg("params"));

  py::class_<Pipeline>(m, "Pipeline")
      .def(py::init<const std::filesystem::path&, const std::filesystem::path&,
                    const std::filesystem::path&, const std::string&,
                    const std::string&, size_t, bool, uint32_t, int>(),
           py::arg("corpus"), py::arg("classes"), py::arg("assignments"),
           py::arg("fields") = "title,keywords", py::arg("mode") = "builtin",
           py::arg("min_class_size") = HierarchyOptions{}.min_class_size,
           py::arg("rollup") = true,
           py::arg("threshold") = IndexOptions{}.support_threshold,
           py::arg("threads") = 0)
      .def_property_readonly("publications", &Pipeline::publications)
      .def_property_readonly("classes", &Pipeline::classes)
      .def("save_index", &Pipeline::SaveIndex, py::arg("path"))
      .def("labels", &Pipeline::Labels, py::arg("approach") = "tfs",
           py::arg("m") = kDefaultWveM, py::arg("alpha") = kDefaultTfsAlpha,
           py::arg("top_n") = kDefaultTopN)
      .def("evaluate", &Pipeline::Evaluate,
           py::arg("approaches") = std::vector<std::string>{"tfs"},
           py::arg("top_n") = std::vector<int>{kDefaultTopN},
           py::arg("exclude_root") = true, py::arg("m") = kDefaultWveM,
           py::arg("alpha") = kDefaultTfsAlpha);
}
