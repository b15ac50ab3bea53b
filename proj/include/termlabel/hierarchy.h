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

#ifndef TERMLABEL_HIERARCHY_H_
#define TERMLABEL_HIERARCHY_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/extraction.h"

namespace termlabel {

struct HierarchyOptions {
  // Smaller classes stay in the tree (and in rollup) but are not labeled.
  size_t min_class_size = 50;
  // Each class absorbs its descendants' members, so child ⊆ parent.
  bool rollup = true;
  bool require_disjoint_levels = false;
  // Top-level classes use the union of all classified publications as their
  // parent. When off, top-level classes cannot be scored.
  bool virtual_root = true;
  // Split raw labels on '&' ("Nanoscience & Nanotechnology").
  bool split_amp = false;
  // Classes whose label is not exactly one noun phrase are excluded from
  // labeling and evaluation (and counted).
  bool require_single_phrase_labels = false;
};

// One line of the class file.
struct ClassDef {
  std::string class_id;
  std::optional<std::string> parent_id;
  std::vector<std::string> labels;
};

// One row of the assignment file.
struct Assignment {
  std::string publication_id;
  std::string class_id;
};

struct ClassNode {
  std::string id;
  std::optional<std::string> parent_id;
  std::vector<std::string> raw_labels;
  // Gold labels passed through NormalizeTerm; sorted, unique.
  std::vector<std::string> labels;
  int level = 1;
  // Sorted corpus indices.
  std::vector<uint32_t> members;

  bool below_min_size = false;
  bool label_not_single_phrase = false;
  bool no_parent = false;  // top level without a virtual root

  bool is_target() const {
    return !below_min_size && !label_not_single_phrase && !no_parent;
  }
};

class Hierarchy {
 public:
  // Validates and assembles the tree. Assignments naming an unknown class or
  // publication land in `row_errors` (1-based positions in `assignments`).
  // Throws Error on duplicate class ids, unknown parents, cycles and, when
  // required, overlapping classes at one level.
  static Hierarchy Build(std::vector<ClassDef> classes,
                         const std::vector<Assignment>& assignments,
                         const Corpus& corpus, const HierarchyOptions& options,
                         const TermExtractor& label_pipeline,
                         std::vector<RowError>* row_errors = nullptr);

  size_t size() const { return nodes_.size(); }
  const ClassNode& node(size_t i) const { return nodes_[i]; }
  const std::vector<ClassNode>& nodes() const { return nodes_; }
  std::optional<size_t> Find(std::string_view class_id) const;
  std::optional<size_t> parent(size_t i) const { return parent_[i]; }
  const std::vector<size_t>& children(size_t i) const { return children_[i]; }
  int max_level() const { return max_level_; }
  const HierarchyOptions& options() const { return options_; }

  // Union of the members of every class (the virtual root).
  const std::vector<uint32_t>& all_members() const { return all_members_; }

  // Members of the parent class; the virtual root for top-level classes, or
  // nothing when the virtual root is disabled.
  std::span<const uint32_t> ParentMembers(size_t i) const;
  // ParentMembers(i) minus members of i.
  std::vector<uint32_t> ReferenceCollection(size_t i) const;

  // Indices of classes that get labeled, in class-id order.
  std::vector<size_t> TargetClasses() const;
  size_t excluded_label_count() const;

 private:
  HierarchyOptions options_;
  std::vector<ClassNode> nodes_;
  std::vector<std::optional<size_t>> parent_;
  std::vector<std::vector<size_t>> children_;
  std::unordered_map<std::string, size_t> by_id_;
  std::vector<uint32_t> all_members_;
  int max_level_ = 0;
};

// Class file: JSONL {"class_id": str, "parent_id": str?, "labels": [str]}.
std::vector<ClassDef> ReadClassFile(const std::filesystem::path& path);
// Assignment file: CSV publication_id,class_id with an optional header row.
std::vector<Assignment> ReadAssignmentFile(const std::filesystem::path& path);

Hierarchy LoadHierarchy(const std::filesystem::path& class_file,
                        const std::filesystem::path& assignment_file,
                        const Corpus& corpus, const HierarchyOptions& options,
                        const TermExtractor& label_pipeline,
                        std::vector<RowError>* row_errors = nullptr);

std::string ClassDefToJson(const ClassDef& def);

}  // namespace termlabel

#endif  // TERMLABEL_HIERARCHY_H_
