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

#include "termlabel/hierarchy.h"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "termlabel/csv.h"
#include "termlabel/error.h"

namespace termlabel {
namespace {

using json = nlohmann::json;

std::vector<uint32_t> MergeUnion(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<std::string> SplitAmp(const std::string& label) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= label.size()) {
    size_t end = label.find('&', start);
    if (end == std::string::npos) end = label.size();
    out.push_back(label.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool HasControlChars(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return c < 0x20; });
}

}  // namespace

Hierarchy Hierarchy::Build(std::vector<ClassDef> classes,
                           const std::vector<Assignment>& assignments,
                           const Corpus& corpus,
                           const HierarchyOptions& options,
                           const TermExtractor& label_pipeline,
                           std::vector<RowError>* row_errors) {
  Hierarchy h;
  h.options_ = options;
  const size_t n = classes.size();
  h.nodes_.resize(n);
  h.parent_.assign(n, std::nullopt);
  h.children_.assign(n, {});

  for (size_t i = 0; i < n; ++i) {
    ClassDef& def = classes[i];
    if (def.class_id.empty() || HasControlChars(def.class_id)) {
      throw Error(Error::Code::kInvalidData,
                  "invalid class id '" + def.class_id + "'");
    }
    if (!h.by_id_.emplace(def.class_id, i).second) {
      throw Error(Error::Code::kInvalidData,
                  "duplicate class id '" + def.class_id + "'");
    }
    ClassNode& node = h.nodes_[i];
    node.id = def.class_id;
    node.parent_id = def.parent_id;
    node.raw_labels = def.labels;
    std::vector<std::string> parts;
    for (const auto& raw : def.labels) {
      if (options.split_amp) {
        for (auto& p : SplitAmp(raw)) parts.push_back(std::move(p));
      } else {
        parts.push_back(raw);
      }
    }
    for (const auto& part : parts) {
      std::string term = NormalizeTerm(part, label_pipeline.lemmatizer());
      if (term.empty()) continue;
      if (options.require_single_phrase_labels &&
          !label_pipeline.IsSingleNounPhrase(part)) {
        node.label_not_single_phrase = true;
      }
      node.labels.push_back(std::move(term));
    }
    std::sort(node.labels.begin(), node.labels.end());
    node.labels.erase(std::unique(node.labels.begin(), node.labels.end()),
                      node.labels.end());
  }

  for (size_t i = 0; i < n; ++i) {
    const auto& pid = h.nodes_[i].parent_id;
    if (!pid) continue;
    auto it = h.by_id_.find(*pid);
    if (it == h.by_id_.end()) {
      throw Error(Error::Code::kInvalidData, "class '" + h.nodes_[i].id +
                                                 "' has unknown parent '" +
                                                 *pid + "'");
    }
    h.parent_[i] = it->second;
    h.children_[it->second].push_back(i);
  }

  // Levels by walking up; a walk longer than n means a cycle.
  for (size_t i = 0; i < n; ++i) {
    int level = 1;
    std::optional<size_t> p = h.parent_[i];
    while (p) {
      if (++level > static_cast<int>(n)) {
        throw Error(Error::Code::kInvalidData,
                    "cycle detected through class '" + h.nodes_[i].id + "'");
      }
      p = h.parent_[*p];
    }
    h.nodes_[i].level = level;
    h.max_level_ = std::max(h.max_level_, level);
  }

  for (size_t row = 0; row < assignments.size(); ++row) {
    const auto& a = assignments[row];
    auto cls = h.by_id_.find(a.class_id);
    if (cls == h.by_id_.end()) {
      if (row_errors) {
        row_errors->push_back(
            {row + 1, "assignment to unknown class '" + a.class_id + "'"});
      }
      continue;
    }
    auto pub = corpus.IndexOf(a.publication_id);
    if (!pub) {
      if (row_errors) {
        row_errors->push_back({row + 1, "assignment of unknown publication '" +
                                            a.publication_id + "'"});
      }
      continue;
    }
    h.nodes_[cls->second].members.push_back(*pub);
  }
  for (auto& node : h.nodes_) {
    std::sort(node.members.begin(), node.members.end());
    node.members.erase(std::unique(node.members.begin(), node.members.end()),
                       node.members.end());
  }

  if (options.rollup) {
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return h.nodes_[a].level > h.nodes_[b].level;
    });
    for (size_t i : order) {
      if (auto p = h.parent_[i]) {
        h.nodes_[*p].members =
            MergeUnion(h.nodes_[*p].members, h.nodes_[i].members);
      }
    }
  }

  for (const auto& node : h.nodes_) {
    h.all_members_.insert(h.all_members_.end(), node.members.begin(),
                          node.members.end());
  }
  std::sort(h.all_members_.begin(), h.all_members_.end());
  h.all_members_.erase(
      std::unique(h.all_members_.begin(), h.all_members_.end()),
      h.all_members_.end());

  if (options.require_disjoint_levels) {
    for (int level = 1; level <= h.max_level_; ++level) {
      std::unordered_map<uint32_t, size_t> owner;
      for (size_t i = 0; i < n; ++i) {
        if (h.nodes_[i].level != level) continue;
        for (uint32_t m : h.nodes_[i].members) {
          auto [it, inserted] = owner.emplace(m, i);
          if (!inserted) {
            throw Error(Error::Code::kInvalidData,
                        "classes '" + h.nodes_[it->second].id + "' and '" +
                            h.nodes_[i].id + "' at level " +
                            std::to_string(level) + " share publication '" +
                            corpus[m].id + "'");
          }
        }
      }
    }
  }

  for (size_t i = 0; i < n; ++i) {
    ClassNode& node = h.nodes_[i];
    node.below_min_size = node.members.size() < options.min_class_size;
    node.no_parent = !h.parent_[i] && !options.virtual_root;
  }
  return h;
}

std::optional<size_t> Hierarchy::Find(std::string_view class_id) const {
  auto it = by_id_.find(std::string(class_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::span<const uint32_t> Hierarchy::ParentMembers(size_t i) const {
  if (auto p = parent_[i]) return nodes_[*p].members;
  if (options_.virtual_root) return all_members_;
  return {};
}

std::vector<uint32_t> Hierarchy::ReferenceCollection(size_t i) const {
  auto parent = ParentMembers(i);
  const auto& own = nodes_[i].members;
  std::vector<uint32_t> out;
  std::set_difference(parent.begin(), parent.end(), own.begin(), own.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<size_t> Hierarchy::TargetClasses() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_target()) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), [&](size_t a, size_t b) {
    return nodes_[a].id < nodes_[b].id;
  });
  return out;
}

size_t Hierarchy::excluded_label_count() const {
  return std::count_if(nodes_.begin(), nodes_.end(), [](const ClassNode& c) {
    return c.label_not_single_phrase;
  });
}

std::vector<ClassDef> ReadClassFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Error::Code::kNotFound, "class file not found: " + path.string());
  }
  std::vector<ClassDef> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      ClassDef def;
      def.class_id = j.at("class_id").get<std::string>();
      if (auto p = j.find("parent_id"); p != j.end() && !p->is_null()) {
        def.parent_id = p->get<std::string>();
      }
      if (auto l = j.find("labels"); l != j.end() && !l->is_null()) {
        def.labels = l->get<std::vector<std::string>>();
      }
      out.push_back(std::move(def));
    } catch (const json::exception& e) {
      throw Error(Error::Code::kInvalidData, path.string() + ":" +
                                                 std::to_string(line_no) +
                                                 ": " + e.what());
    }
  }
  return out;
}

std::vector<Assignment> ReadAssignmentFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Error::Code::kNotFound,
                "assignment file not found: " + path.string());
  }
  CsvReader reader(in);
  std::vector<Assignment> out;
  std::vector<std::string> row;
  bool first = true;
  while (reader.Next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (first && row.size() == 2 && row[0] == "publication_id") {
      first = false;
      continue;
    }
    first = false;
    if (row.size() != 2) {
      throw Error(Error::Code::kInvalidData,
                  path.string() + ":" + std::to_string(reader.line()) +
                      ": expected publication_id,class_id");
    }
    out.push_back({std::move(row[0]), std::move(row[1])});
  }
  return out;
}

Hierarchy LoadHierarchy(const std::filesystem::path& class_file,
                        const std::filesystem::path& assignment_file,
                        const Corpus& corpus, const HierarchyOptions& options,
                        const TermExtractor& label_pipeline,
                        std::vector<RowError>* row_errors) {
  return Hierarchy::Build(ReadClassFile(class_file),
                          ReadAssignmentFile(assignment_file), corpus, options,
                          label_pipeline, row_errors);
}

std::string ClassDefToJson(const ClassDef& def) {
  json j = json::object();
  j["class_id"] = def.class_id;
  if (def.parent_id) j["parent_id"] = *def.parent_id;
  j["labels"] = def.labels;
  return j.dump();
}

}  // namespace termlabel
