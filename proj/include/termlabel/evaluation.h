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

#ifndef TERMLABEL_EVALUATION_H_
#define TERMLABEL_EVALUATION_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "termlabel/hierarchy.h"
#include "termlabel/labeling.h"
#include "termlabel/term_index.h"

namespace termlabel {

// True if any ranked term equals one of the (normalized) gold labels.
bool IsSuccessful(const LabelResult& result,
                  const std::vector<std::string>& gold_labels);

// True if some gold label is a candidate term of the class.
bool MaxPossiblePerClass(std::string_view class_id, const TermIndex& index,
                         const std::vector<std::string>& gold_labels);

// Equal-tailed Jeffreys interval: quantiles of
// Beta(successes + 1/2, total - successes + 1/2), with the lower end set to 0
// when successes == 0 and the upper end set to 1 when successes == total.
std::pair<double, double> ConfidenceInterval(size_t successes, size_t total,
                                             double level = 0.95);

struct LevelRow {
  size_t n_total = 0;
  size_t n_successful = 0;
  size_t n_extracted = 0;
  double rate = 0;
  double ci_low = 0;
  double ci_high = 0;
};

struct EvaluationReport {
  std::string approach;  // spec description
  std::string fields;
  int n = kDefaultTopN;
  size_t n_total = 0;
  size_t n_successful = 0;
  size_t n_extracted = 0;
  double match_rate = 0;    // n_successful / n_total
  double max_possible = 0;  // n_extracted / n_total
  double ci_low = 0;
  double ci_high = 0;
  std::map<int, LevelRow> per_level;
  // Classes left out of n_total because their label is not one noun phrase.
  size_t excluded_label_classes = 0;
  size_t unlabelable_classes = 0;
};

struct EvaluationOptions {
  std::vector<int> top_n = {kDefaultTopN};
  // Skip level-1 classes.
  bool exclude_root = true;
  double ci_level = 0.95;
  StopList stoplist;
  int threads = 0;
};

// Scores each evaluated class once and reports Match@N for every requested
// N, in the order given. Throws Error if no class qualifies for evaluation.
std::vector<EvaluationReport> Evaluate(const Hierarchy& hierarchy,
                                       const TermIndex& index,
                                       const LevelSpecs& specs,
                                       const EvaluationOptions& options);

// Classes that count towards n_total, in class-id order.
std::vector<size_t> EvaluationClasses(const Hierarchy& hierarchy,
                                      bool exclude_root);

std::string DescribeSpecs(const LevelSpecs& specs);

std::string ReportsToJson(const std::vector<EvaluationReport>& reports);
// approach, fields, n, level, n_total, n_successful, rate, ci_low, ci_high
std::string ReportsToLevelTsv(const std::vector<EvaluationReport>& reports);
// approach, fields, n, n_total, n_successful, n_extracted, match_rate,
// max_possible, ci_low, ci_high
std::string ReportsToCsv(const std::vector<EvaluationReport>& reports);

}  // namespace termlabel

#endif  // TERMLABEL_EVALUATION_H_
