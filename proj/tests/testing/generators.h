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

#ifndef TERMLABEL_TESTS_TESTING_GENERATORS_H_
#define TERMLABEL_TESTS_TESTING_GENERATORS_H_

// Seeded generators for property checks on scoring and ranking.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "termlabel/weighting.h"

namespace termlabel::testing {

inline uint64_t Uniform(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

// One consistent (term, class) tuple: tf_cj <= tf_cp <= size_cp,
// tf_cj <= size_cj <= size_cp and the reference counts derived from a
// rollup-style c_ref = c_p \ c_j.
inline ClassTermStats RandomStats(std::mt19937_64& rng, uint64_t size_cj,
                                  uint64_t size_cp, uint64_t totals_cj,
                                  uint64_t totals_cref) {
  ClassTermStats s;
  s.size_cj = size_cj;
  s.size_cp = size_cp;
  s.tf_cj = Uniform(rng, 1, size_cj);
  s.tf_cp = s.tf_cj + Uniform(rng, 0, size_cp - size_cj);
  s.tf_cref = s.tf_cp - s.tf_cj;
  s.totals_cj = totals_cj;
  s.totals_cref = totals_cref;
  return s;
}

// Candidate terms of one class: shared sizes and totals, per-term counts.
struct StatSet {
  std::vector<std::string> terms;
  std::vector<ClassTermStats> stats;
};

inline StatSet RandomStatSet(std::mt19937_64& rng, size_t n_terms,
                             uint64_t max_size = 1000) {
  StatSet set;
  const uint64_t size_cj = Uniform(rng, 3, max_size / 2);
  const uint64_t size_cp = size_cj + Uniform(rng, 1, max_size / 2);
  const uint64_t totals_cj = Uniform(rng, size_cj, size_cj * 20);
  const uint64_t totals_cref =
      Uniform(rng, size_cp - size_cj, (size_cp - size_cj) * 20);
  for (size_t i = 0; i < n_terms; ++i) {
    set.terms.push_back("t" + std::to_string(rng() % 100000));
    set.stats.push_back(
        RandomStats(rng, size_cj, size_cp, totals_cj, totals_cref));
  }
  // Terms are unique within a class.
  for (size_t i = 0; i < n_terms; ++i) set.terms[i] += "_" + std::to_string(i);
  return set;
}

// Ranking of a stat set under a library spec.
inline std::vector<std::string> RankBySpec(const StatSet& set,
                                           const WeightingSpec& spec) {
  std::vector<ScoredTerm> scored;
  for (size_t i = 0; i < set.terms.size(); ++i) {
    scored.push_back({set.terms[i], Score(set.stats[i], spec),
                      set.stats[i].tf_cj});
  }
  SortRanking(scored);
  std::vector<std::string> out;
  for (const auto& s : scored) out.push_back(s.term);
  return out;
}

// Exact rational key num/den compared by cross-multiplication.
struct RationalKey {
  unsigned __int128 num;
  unsigned __int128 den;
};

// Sorts by key descending, then tf_cj descending, then term ascending.
inline std::vector<std::string> RankByRational(
    const StatSet& set, RationalKey (*key)(const ClassTermStats&)) {
  std::vector<size_t> order(set.terms.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    RationalKey ka = key(set.stats[a]);
    RationalKey kb = key(set.stats[b]);
    unsigned __int128 lhs = ka.num * kb.den;
    unsigned __int128 rhs = kb.num * ka.den;
    if (lhs != rhs) return lhs > rhs;
    if (set.stats[a].tf_cj != set.stats[b].tf_cj) {
      return set.stats[a].tf_cj > set.stats[b].tf_cj;
    }
    return set.terms[a] < set.terms[b];
  });
  std::vector<std::string> out;
  for (size_t i : order) out.push_back(set.terms[i]);
  return out;
}

inline RationalKey PtfKey(const ClassTermStats& s) {
  return {s.tf_cj, s.size_cj};
}

// s = tf_cj / (tf_cp * size_cj / size_cp)
inline RationalKey SpecificityKey(const ClassTermStats& s) {
  return {static_cast<unsigned __int128>(s.tf_cj) * s.size_cp,
          static_cast<unsigned __int128>(s.tf_cp) * s.size_cj};
}

inline RationalKey TfRatioKey(const ClassTermStats& s) {
  return {s.tf_cj, s.tf_cp};
}

inline RationalKey TfKey(const ClassTermStats& s) { return {s.tf_cj, 1}; }

}  // namespace termlabel::testing

#endif  // TERMLABEL_TESTS_TESTING_GENERATORS_H_
