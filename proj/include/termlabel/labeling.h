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

#ifndef TERMLABEL_LABELING_H_
#define TERMLABEL_LABELING_H_

#include <map>
#include <string>
#include <vector>

#include "termlabel/hierarchy.h"
#include "termlabel/lexicon.h"
#include "termlabel/term_index.h"
#include "termlabel/weighting.h"

namespace termlabel {

inline constexpr int kDefaultTopN = 3;

struct LabelResult {
  std::string class_id;
  int level = 1;
  std::vector<ScoredTerm> ranked_terms;  // at most N, in ranking order
  WeightingSpec spec_used;
  bool unlabelable = false;
  bool degenerate_reference = false;
  // Set for classes reported but not labeled (too small, rejected label or
  // no parent).
  bool not_target = false;
};

// Per-level weighting: levels without an entry use `fallback`.
struct LevelSpecs {
  WeightingSpec fallback = WeightingSpec::Tfs(kDefaultTfsAlpha);
  std::map<int, WeightingSpec> by_level;

  const WeightingSpec& For(int level) const;
  // Parses "1:tfs:0.667,2:wve:25,3:chi_square". Throws Error on bad input.
  static std::map<int, WeightingSpec> Parse(std::string_view text);
};

// Top-N ranked terms of one class after removing stop-listed terms.
LabelResult LabelClass(size_t class_index, const TermIndex& index,
                       const Hierarchy& hierarchy, const WeightingSpec& spec,
                       int top_n, const StopList& stoplist = {});

// Labels every class of the hierarchy, keyed by class id. Non-target classes
// appear with `not_target` set and no terms.
std::map<std::string, LabelResult> LabelHierarchy(
    const Hierarchy& hierarchy, const TermIndex& index,
    const LevelSpecs& specs, int top_n, const StopList& stoplist = {},
    int threads = 0);

// class_id, level, rank, term, score: one row per labeled term, with a
// header row.
std::string LabelsToTsv(const std::map<std::string, LabelResult>& labels);
// JSON array of LabelResult objects, pretty printed, in class-id order.
std::string LabelsToJson(const std::map<std::string, LabelResult>& labels);

// Shortest round-trippable decimal form ("inf" for the sentinel).
std::string FormatScore(double score);

}  // namespace termlabel

#endif  // TERMLABEL_LABELING_H_
