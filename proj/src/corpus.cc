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

#include "termlabel/corpus.h"

#include <fstream>

#include "json.hpp"
#include "termlabel/csv.h"
#include "termlabel/error.h"

namespace termlabel {
namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 5> kFieldNames = {
    "title", "keywords", "abstract", "journal", "addresses"};

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string RequireString(const json& j, const char* key) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string("'") + key + "' must be a string");
  }
  return j.get<std::string>();
}

std::optional<std::string> OptionalString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return RequireString(*it, key);
}

std::vector<std::string> StringList(const json& obj, const char* key) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw std::invalid_argument(std::string("'") + key +
                                "' must be an array of strings");
  }
  for (const auto& e : *it) out.push_back(RequireString(e, key));
  return out;
}

PublicationRecord RecordFromJson(const json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("row is not an object");
  PublicationRecord r;
  auto id = obj.find("id");
  if (id == obj.end() || id->is_null()) {
    throw std::invalid_argument("missing id");
  }
  r.id = RequireString(*id, "id");
  r.title = OptionalString(obj, "title").value_or("");
  r.abstract = OptionalString(obj, "abstract");
  r.keywords = StringList(obj, "keywords");
  r.journal = OptionalString(obj, "journal");
  r.addresses = StringList(obj, "addresses");
  auto pre = obj.find("pretagged_terms");
  if (pre != obj.end() && !pre->is_null()) {
    if (!pre->is_object()) {
      throw std::invalid_argument("'pretagged_terms' must be an object");
    }
    std::map<Field, std::vector<std::string>> terms;
    for (const auto& [name, list] : pre->items()) {
      auto field = ParseFieldName(name);
      if (!field) {
        throw std::invalid_argument("unknown pretagged field '" + name + "'");
      }
      terms[*field] = StringList(*pre, name.c_str());
    }
    r.pretagged_terms = std::move(terms);
  }
  return r;
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(';', start);
    if (end == std::string_view::npos) end = s.size();
    auto item = Trim(s.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

void AddOrReject(IngestResult& result, PublicationRecord record, size_t line) {
  if (record.id.empty()) {
    result.rejects.push_back({line, "missing id"});
    return;
  }
  std::string id = record.id;
  if (!result.corpus.Add(std::move(record))) {
    result.rejects.push_back({line, "duplicate id '" + id + "'"});
  }
}

void IngestJsonl(std::istream& in, IngestResult& result) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      AddOrReject(result, RecordFromJson(json::parse(line)), line_no);
    } catch (const json::exception& e) {
      result.rejects.push_back({line_no, std::string("bad JSON: ") + e.what()});
    } catch (const std::invalid_argument& e) {
      result.rejects.push_back({line_no, e.what()});
    }
  }
}

void IngestCsv(std::istream& in, IngestResult& result) {
  CsvReader reader(in);
  std::vector<std::string> row;
  if (!reader.Next(row)) return;
  // Header maps column names to positions; only "id" is mandatory.
  std::map<std::string, size_t> column;
  for (size_t i = 0; i < row.size(); ++i) column[std::string(Trim(row[i]))] = i;
  if (!column.contains("id")) {
    throw Error(Error::Code::kInvalidData, "CSV header lacks an 'id' column");
  }
  auto cell = [&](const std::vector<std::string>& r,
                  const char* name) -> std::string_view {
    auto it = column.find(name);
    if (it == column.end() || it->second >= r.size()) return {};
    return r[it->second];
  };
  while (reader.Next(row)) {
    if (row.size() == 1 && Trim(row[0]).empty()) continue;
    if (row.size() > column.size()) {
      result.rejects.push_back({reader.line(), "too many columns"});
      continue;
    }
    PublicationRecord r;
    r.id = std::string(Trim(cell(row, "id")));
    r.title = std::string(cell(row, "title"));
    if (auto a = cell(row, "abstract"); !Trim(a).empty()) r.abstract = std::string(a);
    r.keywords = SplitList(cell(row, "keywords"));
    if (auto j = cell(row, "journal"); !Trim(j).empty()) r.journal = std::string(j);
    r.addresses = SplitList(cell(row, "addresses"));
    AddOrReject(result, std::move(r), reader.line());
  }
}

}  // namespace

std::string_view FieldName(Field field) {
  return kFieldNames[static_cast<size_t>(field)];
}

std::optional<Field> ParseFieldName(std::string_view name) {
  for (size_t i = 0; i < kFieldNames.size(); ++i) {
    if (kFieldNames[i] == name) return static_cast<Field>(i);
  }
  // Singular aliases used in the literature's tables.
  if (name == "keyword") return Field::kKeywords;
  if (name == "address") return Field::kAddresses;
  if (name == "titles") return Field::kTitle;
  if (name == "journals") return Field::kJournal;
  if (name == "abstracts") return Field::kAbstract;
  return std::nullopt;
}

FieldSet::FieldSet(std::initializer_list<Field> fields) {
  for (Field f : fields) bits_ |= static_cast<uint8_t>(1u << Index(f));
  if (bits_ == 0) {
    throw Error(Error::Code::kUsage, "field set must not be empty");
  }
}

FieldSet FieldSet::Parse(std::string_view text) {
  uint8_t bits = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find_first_of(",+", start);
    if (end == std::string_view::npos) end = text.size();
    auto name = Trim(text.substr(start, end - start));
    if (!name.empty()) {
      auto field = ParseFieldName(name);
      if (!field) {
        throw Error(Error::Code::kUsage,
                    "unknown field '" + std::string(name) + "'");
      }
      bits |= static_cast<uint8_t>(1u << Index(*field));
    }
    start = end + 1;
  }
  if (bits == 0) throw Error(Error::Code::kUsage, "field set must not be empty");
  return FieldSet(bits);
}

FieldSet FieldSet::All() { return FieldSet(0x1f); }

std::vector<Field> FieldSet::Members() const {
  std::vector<Field> out;
  for (Field f : kAllFields) {
    if (Contains(f)) out.push_back(f);
  }
  return out;
}

FieldSet FieldSet::Union(const FieldSet& other) const {
  return FieldSet(static_cast<uint8_t>(bits_ | other.bits_));
}

std::string FieldSet::ToString() const {
  std::string out;
  for (Field f : Members()) {
    if (!out.empty()) out += ',';
    out += FieldName(f);
  }
  return out;
}

bool PublicationRecord::HasField(Field field) const {
  switch (field) {
    case Field::kTitle:
      return !title.empty();
    case Field::kKeywords:
      return !keywords.empty();
    case Field::kAbstract:
      return abstract && !abstract->empty();
    case Field::kJournal:
      return journal && !journal->empty();
    case Field::kAddresses:
      return !addresses.empty();
  }
  return false;
}

bool Corpus::Add(PublicationRecord record) {
  if (record.id.empty() || by_id_.contains(record.id)) return false;
  by_id_.emplace(record.id, static_cast<uint32_t>(records_.size()));
  records_.push_back(std::move(record));
  return true;
}

std::optional<uint32_t> Corpus::IndexOf(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

CorpusFormat GuessCorpusFormat(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? CorpusFormat::kCsv : CorpusFormat::kJsonl;
}

IngestResult IngestCorpus(std::istream& in, CorpusFormat format) {
  IngestResult result;
  if (format == CorpusFormat::kJsonl) {
    IngestJsonl(in, result);
  } else {
    IngestCsv(in, result);
  }
  if (result.corpus.empty()) {
    throw Error(Error::Code::kInvalidData,
                "no valid records (" + std::to_string(result.rejects.size()) +
                    " rejected)");
  }
  return result;
}

IngestResult IngestCorpus(const std::filesystem::path& path,
                          CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Error::Code::kNotFound,
                "corpus not found: " + path.string());
  }
  return IngestCorpus(in, format);
}

std::string RecordToJson(const PublicationRecord& r) {
  json j = json::object();
  j["id"] = r.id;
  j["title"] = r.title;
  if (r.abstract) j["abstract"] = *r.abstract;
  j["keywords"] = r.keywords;
  if (r.journal) j["journal"] = *r.journal;
  j["addresses"] = r.addresses;
  if (r.pretagged_terms) {
    json pre = json::object();
    for (const auto& [field, terms] : *r.pretagged_terms) {
      pre[std::string(FieldName(field))] = terms;
    }
    j["pretagged_terms"] = std::move(pre);
  }
  return j.dump();
}

std::vector<std::pair<Field, std::string_view>> FieldView(
    const PublicationRecord& record, const FieldSet& fields) {
  std::vector<std::pair<Field, std::string_view>> out;
  for (Field f : fields.Members()) {
    switch (f) {
      case Field::kTitle:
        if (!record.title.empty()) out.emplace_back(f, record.title);
        break;
      case Field::kKeywords:
        for (const auto& k : record.keywords) out.emplace_back(f, k);
        break;
      case Field::kAbstract:
        if (record.abstract) out.emplace_back(f, *record.abstract);
        break;
      case Field::kJournal:
        if (record.journal) out.emplace_back(f, *record.journal);
        break;
      case Field::kAddresses:
        for (const auto& a : record.addresses) out.emplace_back(f, a);
        break;
    }
  }
  return out;
}

}  // namespace termlabel
