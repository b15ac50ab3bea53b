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

#ifndef TERMLABEL_TERM_INDEX_H_
#define TERMLABEL_TERM_INDEX_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/extraction.h"
#include "termlabel/hierarchy.h"

namespace termlabel {

// Publication frequencies of terms over one set of publications.
struct FrequencyTable {
  enum class Kind : uint8_t {
    kClass = 0,
    // Members of a class that also belong to its parent. Only stored when
    // the class is not a subset of its parent (rollup off).
    kOverlap = 1,
    // Union of every classified publication.
    kVirtualRoot = 2,
  };

  Kind kind = Kind::kClass;
  std::string class_id;  // empty for the virtual root
  uint32_t size = 0;     // publications in the set
  uint64_t total = 0;    // sum of all counts
  // (term id, count), sorted by term id, every count >= 1.
  std::vector<std::pair<uint32_t, uint32_t>> entries;

  uint32_t Tf(uint32_t term) const;

  friend bool operator==(const FrequencyTable&,
                         const FrequencyTable&) = default;
};

struct IndexOptions {
  uint32_t support_threshold = 3;
  int threads = 0;
};

// Class x term publication-frequency index. Term ids follow lexicographic
// term order, so iteration by id is iteration by term.
class TermIndex {
 public:
  struct BuildReport {
    size_t publications_extracted = 0;
    std::vector<std::string> record_errors;
  };

  static TermIndex Build(const Corpus& corpus, const Hierarchy& hierarchy,
                         const TermExtractor& extractor,
                         const IndexOptions& options,
                         BuildReport* report = nullptr);

  // Binary format: "TXIDX1", u32 header length, JSON header, term
  // dictionary, then one block per table sorted by (kind, class id). All
  // integers little-endian.
  std::string Serialize() const;
  static TermIndex Deserialize(std::string_view bytes);
  void Save(const std::filesystem::path& path) const;
  static TermIndex Load(const std::filesystem::path& path);

  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(uint32_t id) const { return terms_[id]; }
  std::optional<uint32_t> TermId(std::string_view term) const;

  const FrequencyTable* ClassTable(std::string_view class_id) const;
  const FrequencyTable* OverlapTable(std::string_view class_id) const;
  const FrequencyTable& root_table() const { return tables_[root_]; }
  const std::vector<FrequencyTable>& tables() const { return tables_; }

  // Throws Error for an unknown class.
  uint32_t Tf(std::string_view class_id, std::string_view term) const;
  uint32_t ClassSize(std::string_view class_id) const;
  uint64_t TermTotal(std::string_view class_id) const;

  // Terms with tf >= support_threshold, in term order. Throws Error for an
  // unknown class.
  std::vector<std::string> CandidateTerms(std::string_view class_id) const;
  std::vector<uint32_t> CandidateTermIds(const FrequencyTable& table) const;

  uint32_t support_threshold() const { return support_threshold_; }
  const std::string& fields() const { return fields_; }
  const std::string& mode() const { return mode_; }
  size_t publications() const { return publications_; }

  // Throws Error unless every target class of `hierarchy` has a table whose
  // size matches its member count.
  void CheckMatches(const Hierarchy& hierarchy) const;

 private:
  const FrequencyTable& RequireClass(std::string_view class_id) const;
  void Finalize();

  std::vector<std::string> terms_;
  std::vector<FrequencyTable> tables_;
  std::vector<size_t> class_lookup_;    // class tables sorted by id
  std::vector<size_t> overlap_lookup_;  // overlap tables sorted by id
  size_t root_ = 0;
  uint32_t support_threshold_ = 3;
  std::string fields_;
  std::string mode_;
  size_t publications_ = 0;
  bool rollup_ = true;
};

}  // namespace termlabel

#endif  // TERMLABEL_TERM_INDEX_H_
