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

#ifndef TERMLABEL_CORPUS_H_
#define TERMLABEL_CORPUS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace termlabel {

// Bibliographic fields, declared in the fixed order used by field views.
enum class Field : uint8_t { kTitle, kKeywords, kAbstract, kJournal, kAddresses };

inline constexpr std::array<Field, 5> kAllFields = {
    Field::kTitle, Field::kKeywords, Field::kAbstract, Field::kJournal,
    Field::kAddresses};

std::string_view FieldName(Field field);
std::optional<Field> ParseFieldName(std::string_view name);

// Non-empty set of fields. Iteration follows the fixed field order.
class FieldSet {
 public:
  FieldSet(std::initializer_list<Field> fields);

  // Parses a comma- or '+'-separated list such as "title,keywords".
  // Throws Error on unknown names or an empty list.
  static FieldSet Parse(std::string_view text);
  static FieldSet All();

  bool Contains(Field field) const { return (bits_ >> Index(field)) & 1u; }
  std::vector<Field> Members() const;
  FieldSet Union(const FieldSet& other) const;
  // "title,keywords" in fixed field order.
  std::string ToString() const;
  uint8_t bits() const { return bits_; }

  friend bool operator==(const FieldSet&, const FieldSet&) = default;

 private:
  explicit FieldSet(uint8_t bits) : bits_(bits) {}
  static unsigned Index(Field f) { return static_cast<unsigned>(f); }

  uint8_t bits_ = 0;
};

struct PublicationRecord {
  std::string id;
  std::string title;
  std::optional<std::string> abstract;
  std::vector<std::string> keywords;
  std::optional<std::string> journal;
  std::vector<std::string> addresses;
  // Terms produced by an external tagger, keyed by field.
  std::optional<std::map<Field, std::vector<std::string>>> pretagged_terms;

  // True if the record carries any text for `field`.
  bool HasField(Field field) const;

  friend bool operator==(const PublicationRecord&,
                         const PublicationRecord&) = default;
};

// Ordered, id-unique collection of records. Immutable once built.
class Corpus {
 public:
  Corpus() = default;

  // Appends a record; returns false (and leaves the corpus unchanged) if the
  // id is empty or already present.
  bool Add(PublicationRecord record);

  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const PublicationRecord& operator[](size_t i) const { return records_[i]; }
  const std::vector<PublicationRecord>& records() const { return records_; }
  std::optional<uint32_t> IndexOf(std::string_view id) const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<PublicationRecord> records_;
  std::unordered_map<std::string, uint32_t> by_id_;
};

enum class CorpusFormat { kJsonl, kCsv };

// Picks the format from the file extension (.csv, otherwise JSONL).
CorpusFormat GuessCorpusFormat(const std::filesystem::path& path);

struct RowError {
  size_t line = 0;  // 1-based
  std::string message;
};

struct IngestResult {
  Corpus corpus;
  std::vector<RowError> rejects;
};

// Reads every valid record. Malformed rows, rows without an id and rows that
// repeat an earlier id are collected in `rejects`. Throws Error if the file
// cannot be read or no valid record remains.
IngestResult IngestCorpus(const std::filesystem::path& path,
                          CorpusFormat format);
IngestResult IngestCorpus(std::istream& in, CorpusFormat format);

// Serializes one record in the JSONL schema (no trailing newline).
std::string RecordToJson(const PublicationRecord& record);

// (field, raw text) pairs for the selected fields, in fixed field order.
// Keyword and address lists expand to one pair per element.
std::vector<std::pair<Field, std::string_view>> FieldView(
    const PublicationRecord& record, const FieldSet& fields);

}  // namespace termlabel

#endif  // TERMLABEL_CORPUS_H_
