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

#include "termlabel/term_index.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "termlabel/error.h"
#include "termlabel/thread_pool.h"

namespace termlabel {
namespace {

using json = nlohmann::json;

constexpr std::string_view kMagic = "TXIDX1";
constexpr int kFormatVersion = 1;

class Writer {
 public:
  void Bytes(std::string_view b) { out_.append(b); }
  void U8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void Str(std::string_view s) {
    U32(static_cast<uint32_t>(s.size()));
    Bytes(s);
  }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::string_view Bytes(size_t n) {
    if (pos_ + n > in_.size()) Truncated();
    auto out = in_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  uint8_t U8() { return static_cast<uint8_t>(Bytes(1)[0]); }
  uint32_t U32() {
    auto b = Bytes(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(uint8_t(b[i])) << (8 * i);
    return v;
  }
  uint64_t U64() {
    auto b = Bytes(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(uint8_t(b[i])) << (8 * i);
    return v;
  }
  std::string Str() { return std::string(Bytes(U32())); }
  bool done() const { return pos_ == in_.size(); }

 private:
  [[noreturn]] static void Truncated() {
    throw Error(Error::Code::kInvalidData, "index file is truncated");
  }
  std::string_view in_;
  size_t pos_ = 0;
};

bool TableLess(const FrequencyTable& a, const FrequencyTable& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.class_id < b.class_id;
}

}  // namespace

uint32_t FrequencyTable::Tf(uint32_t term) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), term,
      [](const std::pair<uint32_t, uint32_t>& e, uint32_t t) {
        return e.first < t;
      });
  return it != entries.end() && it->first == term ? it->second : 0;
}

TermIndex TermIndex::Build(const Corpus& corpus, const Hierarchy& hierarchy,
                           const TermExtractor& extractor,
                           const IndexOptions& options, BuildReport* report) {
  const auto& pubs = hierarchy.all_members();
  std::vector<std::string> missing;
  for (uint32_t p : pubs) {
    if (p >= corpus.size()) missing.push_back("#" + std::to_string(p));
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ",") + m;
    throw Error(Error::Code::kFailedPrecondition,
                "hierarchy members missing from corpus: " + list);
  }
  const int threads = ResolveThreads(options.threads);

  std::vector<std::vector<std::string>> extracted(pubs.size());
  std::vector<std::string> errors(pubs.size());
  ParallelFor(pubs.size(), threads, [&](size_t i, int) {
    try {
      extracted[i] = extractor.Extract(corpus[pubs[i]]);
    } catch (const RecordExtractionError& e) {
      errors[i] = e.what();
    }
  });

  // Term ids in lexicographic order; per-publication term lists are already
  // sorted, so their id lists come out sorted too.
  std::unordered_map<std::string_view, uint32_t> ids;
  for (const auto& list : extracted) {
    for (const auto& t : list) ids.emplace(t, 0);
  }
  TermIndex idx;
  idx.terms_.reserve(ids.size());
  for (const auto& [t, _] : ids) idx.terms_.emplace_back(t);
  std::sort(idx.terms_.begin(), idx.terms_.end());
  for (uint32_t i = 0; i < idx.terms_.size(); ++i) ids[idx.terms_[i]] = i;

  std::vector<int64_t> slot(corpus.size(), -1);
  for (size_t i = 0; i < pubs.size(); ++i) slot[pubs[i]] = static_cast<int64_t>(i);
  std::vector<std::vector<uint32_t>> pub_terms(pubs.size());
  for (size_t i = 0; i < pubs.size(); ++i) {
    pub_terms[i].reserve(extracted[i].size());
    for (const auto& t : extracted[i]) pub_terms[i].push_back(ids.at(t));
  }
  ids.clear();
  extracted.clear();
  extracted.shrink_to_fit();

  // Table specs: one per class, overlaps where the class is not inside its
  // parent, and the virtual root.
  struct Spec {
    FrequencyTable::Kind kind;
    std::string class_id;
    std::vector<uint32_t> members;
    const std::vector<uint32_t>* ref = nullptr;
  };
  std::vector<Spec> specs;
  for (size_t c = 0; c < hierarchy.size(); ++c) {
    const ClassNode& node = hierarchy.node(c);
    specs.push_back({FrequencyTable::Kind::kClass, node.id, {}, &node.members});
    auto parent = hierarchy.ParentMembers(c);
    if (!hierarchy.parent(c)) continue;
    if (!std::includes(parent.begin(), parent.end(), node.members.begin(),
                       node.members.end())) {
      Spec overlap{FrequencyTable::Kind::kOverlap, node.id, {}, nullptr};
      std::set_intersection(parent.begin(), parent.end(), node.members.begin(),
                            node.members.end(),
                            std::back_inserter(overlap.members));
      specs.push_back(std::move(overlap));
    }
  }
  specs.push_back({FrequencyTable::Kind::kVirtualRoot, "", {},
                   &hierarchy.all_members()});

  idx.tables_.resize(specs.size());
  std::vector<std::vector<uint32_t>> counts(threads);
  std::vector<std::vector<uint32_t>> touched(threads);
  ParallelFor(specs.size(), threads, [&](size_t s, int worker) {
    auto& count = counts[worker];
    auto& seen = touched[worker];
    if (count.size() != idx.terms_.size()) count.assign(idx.terms_.size(), 0);
    const Spec& spec = specs[s];
    const auto& members = spec.ref ? *spec.ref : spec.members;
    FrequencyTable& table = idx.tables_[s];
    table.kind = spec.kind;
    table.class_id = spec.class_id;
    table.size = static_cast<uint32_t>(members.size());
    seen.clear();
    for (uint32_t m : members) {
      for (uint32_t t : pub_terms[slot[m]]) {
        if (count[t]++ == 0) seen.push_back(t);
      }
    }
    std::sort(seen.begin(), seen.end());
    table.entries.reserve(seen.size());
    for (uint32_t t : seen) {
      table.entries.emplace_back(t, count[t]);
      table.total += count[t];
      count[t] = 0;
    }
  });

  idx.support_threshold_ = options.support_threshold;
  idx.fields_ = extractor.options().fields.ToString();
  idx.mode_ = extractor.options().mode == ExtractionMode::kPretagged
                  ? "pretagged"
                  : "builtin";
  idx.publications_ = pubs.size();
  idx.rollup_ = hierarchy.options().rollup;
  idx.Finalize();

  if (report) {
    report->publications_extracted = pubs.size();
    report->record_errors.clear();
    for (auto& e : errors) {
      if (!e.empty()) report->record_errors.push_back(std::move(e));
    }
  }
  return idx;
}

void TermIndex::Finalize() {
  std::sort(tables_.begin(), tables_.end(), TableLess);
  class_lookup_.clear();
  overlap_lookup_.clear();
  bool has_root = false;
  for (size_t i = 0; i < tables_.size(); ++i) {
    switch (tables_[i].kind) {
      case FrequencyTable::Kind::kClass:
        class_lookup_.push_back(i);
        break;
      case FrequencyTable::Kind::kOverlap:
        overlap_lookup_.push_back(i);
        break;
      case FrequencyTable::Kind::kVirtualRoot:
        root_ = i;
        has_root = true;
        break;
    }
  }
  if (!has_root) {
    throw Error(Error::Code::kInvalidData, "index has no virtual root table");
  }
}

std::string TermIndex::Serialize() const {
  json header = {
      {"format", std::string(kMagic)},
      {"version", kFormatVersion},
      {"fields", fields_},
      {"mode", mode_},
      {"support_threshold", support_threshold_},
      {"publications", publications_},
      {"rollup", rollup_},
      {"n_terms", terms_.size()},
      {"n_tables", tables_.size()},
  };
  Writer w;
  w.Bytes(kMagic);
  w.Str(header.dump());
  w.U32(static_cast<uint32_t>(terms_.size()));
  for (const auto& t : terms_) w.Str(t);
  w.U32(static_cast<uint32_t>(tables_.size()));
  for (const auto& table : tables_) {
    w.U8(static_cast<uint8_t>(table.kind));
    w.Str(table.class_id);
    w.U32(table.size);
    w.U64(table.total);
    w.U32(static_cast<uint32_t>(table.entries.size()));
    for (const auto& [term, count] : table.entries) {
      w.U32(term);
      w.U32(count);
    }
  }
  return w.Take();
}

TermIndex TermIndex::Deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (bytes.size() < kMagic.size() || r.Bytes(kMagic.size()) != kMagic) {
    throw Error(Error::Code::kInvalidData, "not an index file (bad magic)");
  }
  TermIndex idx;
  json header;
  try {
    header = json::parse(r.Str());
  } catch (const json::exception& e) {
    throw Error(Error::Code::kInvalidData,
                std::string("bad index header: ") + e.what());
  }
  if (header.value("version", 0) != kFormatVersion) {
    throw Error(Error::Code::kInvalidData, "unsupported index version");
  }
  idx.fields_ = header.value("fields", "");
  idx.mode_ = header.value("mode", "");
  idx.support_threshold_ = header.value("support_threshold", 3u);
  idx.publications_ = header.value("publications", size_t{0});
  idx.rollup_ = header.value("rollup", true);

  const uint32_t n_terms = r.U32();
  idx.terms_.reserve(n_terms);
  for (uint32_t i = 0; i < n_terms; ++i) idx.terms_.push_back(r.Str());
  const uint32_t n_tables = r.U32();
  idx.tables_.resize(n_tables);
  for (auto& table : idx.tables_) {
    const uint8_t kind = r.U8();
    if (kind > 2) throw Error(Error::Code::kInvalidData, "bad table kind");
    table.kind = static_cast<FrequencyTable::Kind>(kind);
    table.class_id = r.Str();
    table.size = r.U32();
    table.total = r.U64();
    const uint32_t n = r.U32();
    table.entries.resize(n);
    for (auto& [term, count] : table.entries) {
      term = r.U32();
      count = r.U32();
      if (term >= n_terms) {
        throw Error(Error::Code::kInvalidData, "term id out of range");
      }
    }
  }
  if (!r.done()) {
    throw Error(Error::Code::kInvalidData, "trailing bytes in index file");
  }
  idx.Finalize();
  return idx;
}

void TermIndex::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Error::Code::kNotFound, "cannot write " + path.string());
  const std::string bytes = Serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

TermIndex TermIndex::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Code::kNotFound, "index not found: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return Deserialize(ss.str());
}

std::optional<uint32_t> TermIndex::TermId(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<uint32_t>(it - terms_.begin());
}

namespace {

const FrequencyTable* FindIn(const std::vector<FrequencyTable>& tables,
                             const std::vector<size_t>& lookup,
                             std::string_view class_id) {
  auto it = std::lower_bound(lookup.begin(), lookup.end(), class_id,
                             [&](size_t i, std::string_view id) {
                               return tables[i].class_id < id;
                             });
  if (it == lookup.end() || tables[*it].class_id != class_id) return nullptr;
  return &tables[*it];
}

}  // namespace

const FrequencyTable* TermIndex::ClassTable(std::string_view class_id) const {
  return FindIn(tables_, class_lookup_, class_id);
}

const FrequencyTable* TermIndex::OverlapTable(std::string_view class_id) const {
  return FindIn(tables_, overlap_lookup_, class_id);
}

const FrequencyTable& TermIndex::RequireClass(std::string_view class_id) const {
  const FrequencyTable* table = ClassTable(class_id);
  if (!table) {
    throw Error(Error::Code::kNotFound,
                "unknown class '" + std::string(class_id) + "'");
  }
  return *table;
}

uint32_t TermIndex::Tf(std::string_view class_id, std::string_view term) const {
  const FrequencyTable& table = RequireClass(class_id);
  auto id = TermId(term);
  return id ? table.Tf(*id) : 0;
}

uint32_t TermIndex::ClassSize(std::string_view class_id) const {
  return RequireClass(class_id).size;
}

uint64_t TermIndex::TermTotal(std::string_view class_id) const {
  return RequireClass(class_id).total;
}

std::vector<uint32_t> TermIndex::CandidateTermIds(
    const FrequencyTable& table) const {
  std::vector<uint32_t> out;
  for (const auto& [term, count] : table.entries) {
    if (count >= support_threshold_) out.push_back(term);
  }
  return out;
}

std::vector<std::string> TermIndex::CandidateTerms(
    std::string_view class_id) const {
  std::vector<std::string> out;
  for (uint32_t id : CandidateTermIds(RequireClass(class_id))) {
    out.push_back(terms_[id]);
  }
  return out;
}

void TermIndex::CheckMatches(const Hierarchy& hierarchy) const {
  for (const auto& node : hierarchy.nodes()) {
    const FrequencyTable* table = ClassTable(node.id);
    if (!table || table->size != node.members.size()) {
      throw Error(Error::Code::kFailedPrecondition,
                  "index does not match hierarchy at class '" + node.id + "'");
    }
  }
}

}  // namespace termlabel
