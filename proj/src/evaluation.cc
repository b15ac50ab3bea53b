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

#include "termlabel/evaluation.h"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>
#include <limits>

#include "json.hpp"
#include "termlabel/csv.h"
#include "termlabel/error.h"
#include "termlabel/thread_pool.h"

namespace termlabel {
namespace {

bool IsGold(const std::vector<std::string>& gold, const std::string& term) {
  return std::find(gold.begin(), gold.end(), term) != gold.end();
}

std::string Num(double v) { return FormatScore(v); }

}  // namespace

bool IsSuccessful(const LabelResult& result,
                  const std::vector<std::string>& gold_labels) {
  return std::any_of(result.ranked_terms.begin(), result.ranked_terms.end(),
                     [&](const ScoredTerm& t) {
                       return IsGold(gold_labels, t.term);
                     });
}

bool MaxPossiblePerClass(std::string_view class_id, const TermIndex& index,
                         const std::vector<std::string>& gold_labels) {
  for (const auto& label : gold_labels) {
    if (index.Tf(class_id, label) >= index.support_threshold()) return true;
  }
  return false;
}

std::pair<double, double> ConfidenceInterval(size_t successes, size_t total,
                                             double level) {
  if (total == 0 || successes > total) {
    throw Error(Error::Code::kUsage, "confidence interval needs 0 <= x <= n, n >= 1");
  }
  if (!(level > 0 && level < 1)) {
    throw Error(Error::Code::kUsage, "confidence level must lie in (0, 1)");
  }
  const double tail = (1.0 - level) / 2.0;
  boost::math::beta_distribution<double> posterior(
      static_cast<double>(successes) + 0.5,
      static_cast<double>(total - successes) + 0.5);
  double low = successes == 0 ? 0.0 : boost::math::quantile(posterior, tail);
  double high =
      successes == total ? 1.0 : boost::math::quantile(posterior, 1.0 - tail);
  return {std::clamp(low, 0.0, 1.0), std::clamp(high, 0.0, 1.0)};
}

std::vector<size_t> EvaluationClasses(const Hierarchy& hierarchy,
                                      bool exclude_root) {
  std::vector<size_t> out;
  for (size_t i : hierarchy.TargetClasses()) {
    const ClassNode& node = hierarchy.node(i);
    if (node.labels.empty()) continue;
    if (exclude_root && node.level == 1) continue;
    out.push_back(i);
  }
  return out;
}

std::string DescribeSpecs(const LevelSpecs& specs) {
  if (specs.by_level.empty()) return specs.fallback.ToString();
  std::string out = specs.fallback.ToString();
  for (const auto& [level, spec] : specs.by_level) {
    out += ";L" + std::to_string(level) + "=" + spec.ToString();
  }
  return out;
}

std::vector<EvaluationReport> Evaluate(const Hierarchy& hierarchy,
                                       const TermIndex& index,
                                       const LevelSpecs& specs,
                                       const EvaluationOptions& options) {
  const std::vector<size_t> classes =
      EvaluationClasses(hierarchy, options.exclude_root);
  if (classes.empty()) {
    throw Error(Error::Code::kFailedPrecondition,
                "no classes qualify for evaluation");
  }
  if (options.top_n.empty()) {
    throw Error(Error::Code::kUsage, "at least one N is required");
  }
  const int max_n = *std::max_element(options.top_n.begin(), options.top_n.end());

  // Per class: 0-based rank of the first gold hit within the top max_n terms
  // (or max_n when none), whether a gold label is a candidate, and
  // whether the class had no candidates at all.
  struct Outcome {
    int first_hit = 0;
    bool extracted = false;
    bool unlabelable = false;
  };
  std::vector<Outcome> outcomes(classes.size());
  ParallelFor(classes.size(), options.threads, [&](size_t k, int) {
    const size_t c = classes[k];
    const ClassNode& node = hierarchy.node(c);
    LabelResult labels = LabelClass(c, index, hierarchy, specs.For(node.level),
                                    max_n, options.stoplist);
    Outcome& o = outcomes[k];
    o.first_hit = max_n;
    for (size_t r = 0; r < labels.ranked_terms.size(); ++r) {
      if (IsGold(node.labels, labels.ranked_terms[r].term)) {
        o.first_hit = static_cast<int>(r);
        break;
      }
    }
    o.extracted = MaxPossiblePerClass(node.id, index, node.labels);
    o.unlabelable = labels.unlabelable;
  });

  std::vector<EvaluationReport> reports;
  for (int n : options.top_n) {
    if (n < 1) throw Error(Error::Code::kUsage, "top-n must be >= 1");
    EvaluationReport report;
    report.approach = DescribeSpecs(specs);
    report.fields = index.fields();
    report.n = n;
    report.excluded_label_classes = hierarchy.excluded_label_count();
    for (size_t k = 0; k < classes.size(); ++k) {
      const Outcome& o = outcomes[k];
      const bool success = o.first_hit < n;
      LevelRow& row = report.per_level[hierarchy.node(classes[k]).level];
      ++row.n_total;
      ++report.n_total;
      if (success) {
        ++row.n_successful;
        ++report.n_successful;
      }
      if (o.extracted) {
        ++row.n_extracted;
        ++report.n_extracted;
      }
      if (o.unlabelable) ++report.unlabelable_classes;
    }
    const double total = static_cast<double>(report.n_total);
    report.match_rate = report.n_successful / total;
    report.max_possible = report.n_extracted / total;
    std::tie(report.ci_low, report.ci_high) = ConfidenceInterval(
        report.n_successful, report.n_total, options.ci_level);
    for (auto& [level, row] : report.per_level) {
      row.rate = static_cast<double>(row.n_successful) / row.n_total;
      std::tie(row.ci_low, row.ci_high) =
          ConfidenceInterval(row.n_successful, row.n_total, options.ci_level);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string ReportsToJson(const std::vector<EvaluationReport>& reports) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  for (const auto& r : reports) {
    json levels = json::array();
    for (const auto& [level, row] : r.per_level) {
      levels.push_back({{"level", level},
                        {"n_total", row.n_total},
                        {"n_successful", row.n_successful},
                        {"n_extracted", row.n_extracted},
                        {"rate", row.rate},
                        {"ci_low", row.ci_low},
                        {"ci_high", row.ci_high}});
    }
    arr.push_back({{"approach", r.approach},
                   {"fields", r.fields},
                   {"n", r.n},
                   {"n_total", r.n_total},
                   {"n_successful", r.n_successful},
                   {"n_extracted", r.n_extracted},
                   {"match_rate", r.match_rate},
                   {"max_possible", r.max_possible},
                   {"ci_low", r.ci_low},
                   {"ci_high", r.ci_high},
                   {"excluded_label_classes", r.excluded_label_classes},
                   {"unlabelable_classes", r.unlabelable_classes},
                   {"per_level", std::move(levels)}});
  }
  return arr.dump(2) + "\n";
}

std::string ReportsToLevelTsv(const std::vector<EvaluationReport>& reports) {
  std::string out =
      "approach\tfields\tn\tlevel\tn_total\tn_successful\trate\tci_low\tci_high\n";
  for (const auto& r : reports) {
    for (const auto& [level, row] : r.per_level) {
      out += r.approach + '\t' + r.fields + '\t' + std::to_string(r.n) + '\t' +
             std::to_string(level) + '\t' + std::to_string(row.n_total) + '\t' +
             std::to_string(row.n_successful) + '\t' + Num(row.rate) + '\t' +
             Num(row.ci_low) + '\t' + Num(row.ci_high) + '\n';
    }
  }
  return out;
}

std::string ReportsToCsv(const std::vector<EvaluationReport>& reports) {
  std::string out =
      "approach,fields,n,n_total,n_successful,n_extracted,match_rate,"
      "max_possible,ci_low,ci_high\n";
  for (const auto& r : reports) {
    out += CsvEscape(r.approach) + ',' + CsvEscape(r.fields) + ',' +
           std::to_string(r.n) + ',' + std::to_string(r.n_total) + ',' +
           std::to_string(r.n_successful) + ',' +
           std::to_string(r.n_extracted) + ',' + Num(r.match_rate) + ',' +
           Num(r.max_possible) + ',' + Num(r.ci_low) + ',' + Num(r.ci_high) +
           '\n';
  }
  return out;
}

}  // namespace termlabel
