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

#ifndef TERMLABEL_LEXICON_H_
#define TERMLABEL_LEXICON_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace termlabel {

enum class Pos : uint8_t { kNoun, kAdjective, kOther };

char PosCode(Pos pos);  // 'N', 'J' or 'O'

// Word -> coarse part of speech, with suffix fallbacks for unknown words.
class PosLexicon {
 public:
  PosLexicon() = default;

  // The lexicon shipped in data/pos_lexicon.tsv.
  static const PosLexicon& Default();
  // "token<TAB>tag" lines, tags in {N, J, O}; '#' starts a comment.
  static PosLexicon Load(const std::filesystem::path& path);
  static PosLexicon Parse(std::string_view text);

  void Set(std::string token, Pos pos) { entries_[std::move(token)] = pos; }
  size_t size() const { return entries_.size(); }

  // Lexicon entry if present; otherwise digits-only tokens are kOther, common
  // adjectival suffixes give kAdjective, and everything else is a noun.
  Pos Tag(std::string_view token) const;

 private:
  std::unordered_map<std::string, Pos> entries_;
};

// Rule-based English singularizer with an exception lexicon.
class Lemmatizer {
 public:
  Lemmatizer() = default;

  static const Lemmatizer& Default();
  // "plural<TAB>singular" lines; an entry mapping a word to itself marks it
  // invariant.
  static Lemmatizer Load(const std::filesystem::path& path);
  static Lemmatizer Parse(std::string_view text);

  void AddException(std::string plural, std::string singular) {
    exceptions_[std::move(plural)] = std::move(singular);
  }
  size_t size() const { return exceptions_.size(); }

  // Maps a lowercase alphanumeric token to its singular form.
  std::string Lemmatize(std::string_view token) const;

 private:
  std::unordered_map<std::string, std::string> exceptions_;
};

// Set of normalized terms, one per line in files.
class StopList {
 public:
  StopList() = default;
  StopList(std::initializer_list<std::string> terms) : terms_(terms) {}

  static StopList Load(const std::filesystem::path& path);
  static StopList Parse(std::string_view text);
  // data/address_stopwords.txt
  static const StopList& DefaultAddress();
  // data/label_stoplist.txt ("journal", "effect", "result", ...); labeling uses
  // an empty stop list unless this one is requested.
  static const StopList& SampleLabel();

  void Insert(std::string term) { terms_.insert(std::move(term)); }
  bool Contains(std::string_view term) const {
    return terms_.find(std::string(term)) != terms_.end();
  }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::set<std::string>& terms() const { return terms_; }

 private:
  std::set<std::string> terms_;
};

}  // namespace termlabel

#endif  // TERMLABEL_LEXICON_H_
