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

#include "termlabel/labeling.h"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "termlabel/error.h"
#include "termlabel/thread_pool.h"

namespace termlabel {

const WeightingSpec& LevelSpecs::For(int level) const {
  auto it = by_level.find(level);
  return it == by_level.end() ? fallback : it->second;
}

std::map<int, WeightingSpec> LevelSpecs::Parse(std::string_view text) {
  std::map<int, WeightingSpec> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    auto bad = [&] {
      return Error(Error::Code::kUsage,
                   "bad level spec '" + std::string(item) +
                       "' (expected level:approach[:param])");
    };
    const size_t c1 = item.find(':');
    if (c1 == std::string_view::npos) throw bad();
    int level = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + c1, level);
    if (ec != std::errc() || p != item.data() + c1 || level < 1) throw bad();
    std::string_view rest = item.substr(c1 + 1);
    const size_t c2 = rest.find(':');
    auto approach = ParseApproach(rest.substr(0, c2));
    if (!approach) throw bad();
    WeightingSpec spec{*approach};
    if (c2 != std::string_view::npos) {
      const std::string param(rest.substr(c2 + 1));
      char* parse_end = nullptr;
      const double v = std::strtod(param.c_str(), &parse_end);
      if (param.empty() || *parse_end != '\0') throw bad();
      if (*approach == Approach::kWve) spec.m = v;
      if (*approach == Approach::kTfs) spec.alpha = v;
    }
    spec.Validate();
    out[level] = spec;
  }
  return out;
}

LabelResult LabelClass(size_t class_index, const TermIndex& index,
                       const Hierarchy& hierarchy, const WeightingSpec& spec,
                       int top_n, const StopList& stoplist) {
  if (top_n < 1) throw Error(Error::Code::kUsage, "top-n must be >= 1");
  const ClassNode& node = hierarchy.node(class_index);
  LabelResult result;
  result.class_id = node.id;
  result.level = node.level;
  result.spec_used = spec;
  ClassScores scores = ScoreTerms(class_index, index, hierarchy, spec);
  result.unlabelable = scores.unlabelable;
  result.degenerate_reference = scores.degenerate_reference;
  for (auto& scored : scores.ranked) {
    if (static_cast<int>(result.ranked_terms.size()) == top_n) break;
    if (stoplist.Contains(scored.term)) continue;
    result.ranked_terms.push_back(std::move(scored));
  }
  return result;
}

std::map<std::string, LabelResult> LabelHierarchy(
    const Hierarchy& hierarchy, const TermIndex& index,
    const LevelSpecs& specs, int top_n, const StopList& stoplist,
    int threads) {
  std::vector<LabelResult> results(hierarchy.size());
  ParallelFor(hierarchy.size(), threads, [&](size_t i, int) {
    const ClassNode& node = hierarchy.node(i);
    const WeightingSpec& spec = specs.For(node.level);
    if (!node.is_target()) {
      results[i].class_id = node.id;
      results[i].level = node.level;
      results[i].spec_used = spec;
      results[i].not_target = true;
      return;
    }
    results[i] = LabelClass(i, index, hierarchy, spec, top_n, stoplist);
  });
  std::map<std::string, LabelResult> out;
  for (auto& r : results) {
    std::string id = r.class_id;
    out.emplace(std::move(id), std::move(r));
  }
  return out;
}

std::string FormatScore(double score) {
  if (std::isinf(score)) return score > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), score);
  return std::string(buf, end);
}

std::string LabelsToTsv(const std::map<std::string, LabelResult>& labels) {
  std::string out = "class_id\tlevel\trank\tterm\tscore\n";
  for (const auto& [id, result] : labels) {
    for (size_t r = 0; r < result.ranked_terms.size(); ++r) {
      const auto& t = result.ranked_terms[r];
      out += id + '\t' + std::to_string(result.level) + '\t' +
             std::to_string(r + 1) + '\t' + t.term + '\t' +
             FormatScore(t.score) + '\n';
    }
  }
  return out;
}

std::string LabelsToJson(const std::map<std::string, LabelResult>& labels) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  for (const auto& [id, result] : labels) {
    json terms = json::array();
    for (const auto& t : result.ranked_terms) {
      json score = std::isfinite(t.score) ? json(t.score)
                                          : json(FormatScore(t.score));
      terms.push_back({{"term", t.term}, {"score", score}, {"tf", t.tf}});
    }
    arr.push_back({{"class_id", id},
                   {"level", result.level},
                   {"spec", result.spec_used.ToString()},
                   {"ranked_terms", std::move(terms)},
                   {"unlabelable", result.unlabelable},
                   {"degenerate_reference", result.degenerate_reference},
                   {"not_target", result.not_target}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace termlabel
