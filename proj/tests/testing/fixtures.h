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

#ifndef TERMLABEL_TESTS_TESTING_FIXTURES_H_
#define TERMLABEL_TESTS_TESTING_FIXTURES_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/hierarchy.h"

#ifndef TERMLABEL_TEST_DATA_DIR
#error "TERMLABEL_TEST_DATA_DIR must point at tests/data"
#endif

namespace termlabel::testing {

// PubMed record 30966711 as printed, with its two raw addresses.
inline PublicationRecord PolymerFilmsRecord() {
  PublicationRecord r;
  r.id = "30966711";
  r.title =
      "Preparation of Compositional Gradient Polymeric Films Based on "
      "Gradient Mesh Template";
  r.keywords = {"compositional gradient", "filling method",
                "gradient mesh template", "hydrophilic/hydrophobic",
                "water vapor permeability"};
  r.journal = "Polymers";
  r.addresses = {
      "Shandong Provincial Key Laboratory of Molecular Engineering, School of "
      "Chemistry and Pharmaceutical Engineering, Qilu University of "
      "Technology (Shandong Academy of Sciences), Jinan 250353, China.",
      "College of Chemistry, Chemical Engineering and Materials Science, "
      "Shandong Normal University, Jinan 250100, China."};
  return r;
}

// The same record with the address field in its upstream-cleaned form:
// suborganizations only, abbreviations expanded.
inline PublicationRecord PolymerFilmsCleanedRecord() {
  PublicationRecord r = PolymerFilmsRecord();
  r.addresses = {
      "Shandong Provincial Key Laboratory of Molecular Engineering, School of "
      "Chemistry and Pharmaceutical Engineering, Academy of Sciences",
      "College of Chemistry, Chemical Chemical Engineering and Materials "
      "Science"};
  return r;
}

// The same record carrying externally tagged noun phrases.
inline PublicationRecord PolymerFilmsPretaggedRecord() {
  PublicationRecord r = PolymerFilmsRecord();
  r.pretagged_terms = std::map<Field, std::vector<std::string>>{
      {Field::kTitle,
       {"Preparation", "Compositional Gradient Polymeric Films",
        "Gradient Mesh Template"}},
      {Field::kKeywords,
       {"compositional gradient", "method", "gradient mesh template",
        "hydrophilic", "hydrophobic", "water vapor permeability"}},
      {Field::kJournal, {"Polymers"}},
      {Field::kAddresses,
       {"Shandong Provincial Key", "Molecular Engineering", "Chemistry",
        "Pharmaceutical Engineering", "Sciences", "Chemistry",
        "Chemical Chemical Engineering", "Materials Science"}},
  };
  return r;
}

// Extracted noun phrases per field for the record above.
inline std::map<Field, std::set<std::string>> PolymerFilmsTerms() {
  return {
      {Field::kTitle,
       {"preparation", "compositional gradient polymeric film",
        "gradient mesh template"}},
      {Field::kJournal, {"polymer"}},
      {Field::kAddresses,
       {"science", "molecular engineering", "shandong provincial key",
        "pharmaceutical engineering", "chemistry", "materials science",
        "chemical chemical engineering"}},
      {Field::kKeywords,
       {"water vapor permeability", "method", "gradient mesh template",
        "compositional gradient", "hydrophobic", "hydrophilic"}},
  };
}

// Builds a hierarchy straight from in-memory definitions with test-friendly
// defaults (no size floor).
inline Hierarchy MakeHierarchy(std::vector<ClassDef> classes,
                               const std::vector<Assignment>& assignments,
                               const Corpus& corpus,
                               HierarchyOptions options = {.min_class_size = 1},
                               std::vector<RowError>* errors = nullptr) {
  static const TermExtractor pipeline(ExtractionOptions{});
  return Hierarchy::Build(std::move(classes), assignments, corpus, options,
                          pipeline, errors);
}

inline Corpus CorpusWithIds(const std::vector<std::string>& ids) {
  Corpus c;
  for (const auto& id : ids) {
    PublicationRecord r;
    r.id = id;
    c.Add(std::move(r));
  }
  return c;
}

inline std::filesystem::path TestDataDir() { return TERMLABEL_TEST_DATA_DIR; }

struct LoadedFixture {
  Corpus corpus;
  Hierarchy hierarchy;
};

// Spinal curvature classes with a sibling branch, 80 publications.
inline LoadedFixture LoadSpineFixture(
    HierarchyOptions options = {.min_class_size = 1}) {
  const auto dir = TestDataDir() / "spine";
  LoadedFixture f;
  f.corpus = IngestCorpus(dir / "corpus.jsonl", CorpusFormat::kJsonl).corpus;
  static const TermExtractor pipeline(ExtractionOptions{});
  f.hierarchy = LoadHierarchy(dir / "classes.jsonl", dir / "assignments.csv",
                              f.corpus, options, pipeline);
  return f;
}

}  // namespace termlabel::testing

#endif  // TERMLABEL_TESTS_TESTING_FIXTURES_H_
