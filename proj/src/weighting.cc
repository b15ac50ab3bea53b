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

#include "termlabel/weighting.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "termlabel/error.h"

namespace termlabel {
namespace {

struct ApproachEntry {
  Approach approach;
  std::string_view name;
};

constexpr ApproachEntry kApproaches[] = {
    {Approach::kChiSquare, "chi_square"}, {Approach::kJsd, "jsd"},
    {Approach::kJsdRaw, "jsd_raw"},       {Approach::kJsdq, "jsdq"},
    {Approach::kTfIdf, "tf_idf"},         {Approach::kWve, "wve"},
    {Approach::kTfs, "tfs"},
};

// x * ln(x / m) with 0 * ln(0) = 0.
double XLogXOverM(double x, double m) {
  return x > 0 ? x * std::log(x / m) : 0.0;
}

std::string FormatParam(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string_view ApproachName(Approach approach) {
  for (const auto& e : kApproaches) {
    if (e.approach == approach) return e.name;
  }
  return "unknown";
}

std::optional<Approach> ParseApproach(std::string_view name) {
  for (const auto& e : kApproaches) {
    if (e.name == name) return e.approach;
  }
  if (name == "chi2" || name == "chisquare") return Approach::kChiSquare;
  if (name == "tfidf") return Approach::kTfIdf;
  return std::nullopt;
}

const std::vector<Approach>& StandardApproaches() {
  static const std::vector<Approach> all = {
      Approach::kChiSquare, Approach::kJsd, Approach::kJsdq,
      Approach::kTfIdf,     Approach::kWve, Approach::kTfs};
  return all;
}

void WeightingSpec::Validate() const {
  if (approach == Approach::kWve && !(m >= 0 && std::isfinite(m))) {
    throw Error(Error::Code::kUsage, "wve m must be a finite value >= 0");
  }
  if (approach == Approach::kTfs && !(alpha >= 0 && alpha <= 1)) {
    throw Error(Error::Code::kUsage, "tfs alpha must lie in [0, 1]");
  }
}

std::string WeightingSpec::ToString() const {
  std::string out(ApproachName(approach));
  if (approach == Approach::kWve) out += "(m=" + FormatParam(m) + ")";
  if (approach == Approach::kTfs) out += "(alpha=" + FormatParam(alpha) + ")";
  return out;
}

double ExpectedFrequency(const ClassTermStats& s) {
  if (s.size_cp == 0) {
    throw Error(Error::Code::kFailedPrecondition,
                "score undefined: parent class is empty");
  }
  return static_cast<double>(s.tf_cp) * static_cast<double>(s.size_cj) /
         static_cast<double>(s.size_cp);
}

double ChiSquare(const ClassTermStats& s) {
  const double expected = ExpectedFrequency(s);
  if (expected == 0) return s.tf_cj > 0 ? kInfiniteScore : 0.0;
  // observed - expected = (tf_cj * |c_p| - tf_cp * |c_j|) / |c_p|, with the
  // numerator formed exactly so that near-equal counts do not cancel.
  using Wide = __int128;
  const Wide diff_scaled = static_cast<Wide>(s.tf_cj) * s.size_cp -
                           static_cast<Wide>(s.tf_cp) * s.size_cj;
  if (diff_scaled <= 0) return 0.0;
  const double diff =
      static_cast<double>(diff_scaled) / static_cast<double>(s.size_cp);
  return diff * diff / expected;
}

double Jsd(const ClassTermStats& s, bool raw) {
  if (s.totals_cref == 0 || s.totals_cj == 0) return 0.0;
  const double p = static_cast<double>(s.tf_cref) / s.totals_cref;
  const double q = static_cast<double>(s.tf_cj) / s.totals_cj;
  if (!raw && q <= p) return 0.0;
  const double m = 0.5 * (p + q);
  return XLogXOverM(p, m) + XLogXOverM(q, m);
}

double Jsdq(const ClassTermStats& s) {
  if (s.totals_cref == 0 || s.totals_cj == 0) return 0.0;
  const double p = static_cast<double>(s.tf_cref) / s.totals_cref;
  const double q = static_cast<double>(s.tf_cj) / s.totals_cj;
  return XLogXOverM(q, 0.5 * (p + q));
}

double TfIdf(const ClassTermStats& s) {
  if (s.tf_cp == 0 || s.tf_cj == 0) return 0.0;
  return static_cast<double>(s.tf_cj) *
         std::log(static_cast<double>(s.size_cp) / static_cast<double>(s.tf_cp));
}

double Wve(const ClassTermStats& s, double m) {
  const double denom = static_cast<double>(s.tf_cp) + m;
  if (denom <= 0) return 0.0;
  return static_cast<double>(s.tf_cj) / denom;
}

double Tfs(const ClassTermStats& s, double alpha) {
  if (s.size_cj == 0 || s.tf_cj == 0) return 0.0;
  const double tf = static_cast<double>(s.tf_cj);
  const double ptf = tf / static_cast<double>(s.size_cj);
  if (alpha == 1.0) return ptf;
  const double expected = ExpectedFrequency(s);
  if (expected == 0) return kInfiniteScore;
  const double specificity = tf / expected;
  if (alpha == 0.0) return specificity;
  return std::pow(ptf, alpha) * std::pow(specificity, 1.0 - alpha);
}

double Score(const ClassTermStats& s, const WeightingSpec& spec) {
  switch (spec.approach) {
    case Approach::kChiSquare:
      return ChiSquare(s);
    case Approach::kJsd:
      return Jsd(s, /*raw=*/false);
    case Approach::kJsdRaw:
      return Jsd(s, /*raw=*/true);
    case Approach::kJsdq:
      return Jsdq(s);
    case Approach::kTfIdf:
      return TfIdf(s);
    case Approach::kWve:
      return Wve(s, spec.m);
    case Approach::kTfs:
      return Tfs(s, spec.alpha);
  }
  return 0.0;
}

bool NeedsReference(Approach approach) {
  return approach == Approach::kJsd || approach == Approach::kJsdRaw ||
         approach == Approach::kJsdq;
}

double RoundForRanking(double score) {
  if (!std::isfinite(score) || score == 0) return score;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", score);
  return std::strtod(buf, nullptr);
}

bool RanksBefore(const ScoredTerm& a, const ScoredTerm& b) {
  const double ra = RoundForRanking(a.score);
  const double rb = RoundForRanking(b.score);
  if (ra != rb) return ra > rb;
  if (a.tf != b.tf) return a.tf > b.tf;
  return a.term < b.term;
}

void SortRanking(std::vector<ScoredTerm>& terms) {
  // Round once up front; RanksBefore would redo it per comparison.
  struct Keyed {
    double key;
    size_t index;
  };
  std::vector<Keyed> keyed(terms.size());
  for (size_t i = 0; i < terms.size(); ++i) {
    keyed[i] = {RoundForRanking(terms[i].score), i};
  }
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key > b.key;
    const ScoredTerm& ta = terms[a.index];
    const ScoredTerm& tb = terms[b.index];
    if (ta.tf != tb.tf) return ta.tf > tb.tf;
    return ta.term < tb.term;
  });
  std::vector<ScoredTerm> sorted;
  sorted.reserve(terms.size());
  for (const auto& k : keyed) sorted.push_back(std::move(terms[k.index]));
  terms = std::move(sorted);
}

ClassContext::ClassContext(const TermIndex& index, const Hierarchy& hierarchy,
                           size_t class_index) {
  const ClassNode& node = hierarchy.node(class_index);
  own_ = index.ClassTable(node.id);
  if (!own_) {
    throw Error(Error::Code::kFailedPrecondition,
                "class '" + node.id + "' is missing from the index");
  }
  if (auto p = hierarchy.parent(class_index)) {
    parent_ = index.ClassTable(hierarchy.node(*p).id);
    if (!parent_) {
      throw Error(Error::Code::kFailedPrecondition,
                  "class '" + hierarchy.node(*p).id +
                      "' is missing from the index");
    }
  } else if (hierarchy.options().virtual_root) {
    parent_ = &index.root_table();
  } else {
    throw Error(Error::Code::kFailedPrecondition,
                "class '" + node.id + "' has no parent to compare against");
  }
  inside_parent_ = index.OverlapTable(node.id);
  if (!inside_parent_) inside_parent_ = own_;
  totals_cref_ = parent_->total - inside_parent_->total;
}

ClassTermStats ClassContext::Stats(uint32_t term) const {
  ClassTermStats s;
  s.tf_cj = own_->Tf(term);
  s.tf_cp = parent_->Tf(term);
  s.size_cj = own_->size;
  s.size_cp = parent_->size;
  s.tf_cref = s.tf_cp - inside_parent_->Tf(term);
  s.totals_cj = own_->total;
  s.totals_cref = totals_cref_;
  return s;
}

ClassScores ScoreTerms(size_t class_index, const TermIndex& index,
                       const Hierarchy& hierarchy, const WeightingSpec& spec) {
  spec.Validate();
  ClassScores out;
  ClassContext context(index, hierarchy, class_index);
  const auto candidates = index.CandidateTermIds(context.table());
  if (candidates.empty()) {
    out.unlabelable = true;
    return out;
  }
  out.degenerate_reference =
      NeedsReference(spec.approach) && context.degenerate_reference();
  out.ranked.reserve(candidates.size());
  for (uint32_t term : candidates) {
    const ClassTermStats stats = context.Stats(term);
    out.ranked.push_back({index.term(term), Score(stats, spec), stats.tf_cj});
  }
  SortRanking(out.ranked);
  return out;
}

}  // namespace termlabel
