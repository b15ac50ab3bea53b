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

#ifndef TERMLABEL_WEIGHTING_H_
#define TERMLABEL_WEIGHTING_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "termlabel/hierarchy.h"
#include "termlabel/term_index.h"

namespace termlabel {

enum class Approach {
  kChiSquare,
  kJsd,     // JSD restricted to terms with Q > P
  kJsdRaw,  // unrestricted JSD
  kJsdq,
  kTfIdf,
  kWve,
  kTfs,
};

std::string_view ApproachName(Approach approach);
std::optional<Approach> ParseApproach(std::string_view name);
// The six approaches of the comparison (raw JSD is excluded).
const std::vector<Approach>& StandardApproaches();

inline constexpr double kDefaultWveM = 25.0;
inline constexpr double kDefaultTfsAlpha = 0.5;

struct WeightingSpec {
  Approach approach = Approach::kTfs;
  double m = kDefaultWveM;          // WvE only
  double alpha = kDefaultTfsAlpha;  // TFS only

  static WeightingSpec ChiSquare() { return {Approach::kChiSquare}; }
  static WeightingSpec Jsd() { return {Approach::kJsd}; }
  static WeightingSpec JsdRaw() { return {Approach::kJsdRaw}; }
  static WeightingSpec Jsdq() { return {Approach::kJsdq}; }
  static WeightingSpec TfIdf() { return {Approach::kTfIdf}; }
  static WeightingSpec Wve(double m) { return {Approach::kWve, m}; }
  static WeightingSpec Tfs(double alpha) {
    return {Approach::kTfs, kDefaultWveM, alpha};
  }

  // Throws Error if m < 0 or alpha outside [0, 1].
  void Validate() const;
  // "tfs(alpha=0.5)", "wve(m=25)", "chi_square", ...
  std::string ToString() const;

  friend bool operator==(const WeightingSpec& a, const WeightingSpec& b) {
    if (a.approach != b.approach) return false;
    if (a.approach == Approach::kWve) return a.m == b.m;
    if (a.approach == Approach::kTfs) return a.alpha == b.alpha;
    return true;
  }
};

// Per (term, class) counts read by the scoring formulas. c_j is the focal
// class, c_p its parent and c_ref = c_p \ c_j.
struct ClassTermStats {
  uint64_t tf_cj = 0;
  uint64_t tf_cp = 0;
  uint64_t size_cj = 0;
  uint64_t size_cp = 0;
  uint64_t tf_cref = 0;
  uint64_t totals_cj = 0;
  uint64_t totals_cref = 0;
};

// Ranks above every finite score.
inline constexpr double kInfiniteScore = std::numeric_limits<double>::infinity();

// tf_cp * size_cj / size_cp. Throws Error when size_cp is 0.
double ExpectedFrequency(const ClassTermStats& s);
double ChiSquare(const ClassTermStats& s);
// Q > P restricted form; with `raw` the plain divergence.
double Jsd(const ClassTermStats& s, bool raw = false);
double Jsdq(const ClassTermStats& s);
double TfIdf(const ClassTermStats& s);
double Wve(const ClassTermStats& s, double m);
double Tfs(const ClassTermStats& s, double alpha);

double Score(const ClassTermStats& s, const WeightingSpec& spec);

// JSD-family scores need a non-empty reference collection.
bool NeedsReference(Approach approach);

// Rounds to 12 significant digits. Rankings compare rounded scores so that
// last-ulp differences between platforms cannot reorder terms.
double RoundForRanking(double score);

struct ScoredTerm {
  std::string term;
  double score = 0;
  uint64_t tf = 0;

  friend bool operator==(const ScoredTerm&, const ScoredTerm&) = default;
};

// Sort order: rounded score descending, tf descending, term ascending.
bool RanksBefore(const ScoredTerm& a, const ScoredTerm& b);
void SortRanking(std::vector<ScoredTerm>& terms);

// Resolved tables for one class: its own counts, its parent's counts and the
// part of the class that lies inside the parent.
class ClassContext {
 public:
  // Throws Error if the class has no table in `index` or has no parent set.
  ClassContext(const TermIndex& index, const Hierarchy& hierarchy,
               size_t class_index);

  ClassTermStats Stats(uint32_t term) const;
  const FrequencyTable& table() const { return *own_; }
  bool degenerate_reference() const { return totals_cref_ == 0; }

 private:
  const FrequencyTable* own_;
  const FrequencyTable* parent_;
  const FrequencyTable* inside_parent_;
  uint64_t totals_cref_ = 0;
};

struct ClassScores {
  std::vector<ScoredTerm> ranked;
  bool unlabelable = false;           // no candidate terms
  bool degenerate_reference = false;  // empty c_ref under a JSD-family score
};

// Scores every candidate term of the class and sorts them.
ClassScores ScoreTerms(size_t class_index, const TermIndex& index,
                       const Hierarchy& hierarchy, const WeightingSpec& spec);

}  // namespace termlabel

#endif  // TERMLABEL_WEIGHTING_H_
