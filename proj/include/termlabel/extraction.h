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

#ifndef TERMLABEL_EXTRACTION_H_
#define TERMLABEL_EXTRACTION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/lexicon.h"

namespace termlabel {

// Hyphens and every other non-alphanumeric character become spaces, ASCII
// letters are lowercased, and whitespace runs collapse to single spaces with
// no leading or trailing space. Bytes outside ASCII count as non-alphanumeric.
std::string Normalize(std::string_view raw);

// True if `term` is non-empty, made of [a-z0-9] words separated by single
// spaces.
bool IsValidTerm(std::string_view term);

// Splits raw text at punctuation (any ASCII character that is neither
// alphanumeric, whitespace, '-' nor '\''). Noun phrases never cross these
// boundaries.
std::vector<std::string_view> SplitSegments(std::string_view raw);

struct TaggedToken {
  std::string text;
  Pos pos;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// Tags each space-separated token of normalized text.
std::vector<TaggedToken> TagTokens(std::string_view normalized,
                                   const PosLexicon& lexicon);

// Maximal runs of adjectives and nouns, each cut back to its last noun.
// Tokens are lemmatized and joined with single spaces. Runs without a noun
// are dropped.
std::vector<std::string> ChunkNounPhrases(std::span<const TaggedToken> tokens,
                                          const Lemmatizer& lemmatizer);

// Normalizes a whole phrase and lemmatizes every token. Used for gold labels,
// pretagged terms and stop lists so that they compare equal to extracted
// terms.
std::string NormalizeTerm(std::string_view raw, const Lemmatizer& lemmatizer);

enum class ExtractionMode { kBuiltin, kPretagged };

struct ExtractionOptions {
  FieldSet fields = {Field::kTitle, Field::kKeywords};
  ExtractionMode mode = ExtractionMode::kBuiltin;
  // Applied to the addresses field only. Single-word entries are removed as
  // tokens before chunking; every entry also removes matching whole terms.
  StopList address_stopwords = StopList::DefaultAddress();
};

// Raised for a single record (pretagged mode without pretagged terms).
class RecordExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TermExtractor {
 public:
  explicit TermExtractor(ExtractionOptions options,
                         PosLexicon lexicon = PosLexicon::Default(),
                         Lemmatizer lemmatizer = Lemmatizer::Default());

  // Terms of one field text in builtin mode (punctuation split, normalize,
  // tag, chunk). Duplicates are kept.
  std::vector<std::string> ExtractText(std::string_view raw,
                                       bool address = false) const;

  // Sorted, duplicate-free terms over the selected fields of `record`.
  // Throws RecordExtractionError in pretagged mode when a selected field has
  // text but no pretagged terms.
  std::vector<std::string> Extract(const PublicationRecord& record) const;

  // True if `raw` reads as exactly one noun phrase spanning the whole text.
  bool IsSingleNounPhrase(std::string_view raw) const;

  const ExtractionOptions& options() const { return options_; }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  ExtractionOptions options_;
  PosLexicon lexicon_;
  Lemmatizer lemmatizer_;
  StopList address_stop_tokens_;
  StopList address_stop_terms_;
};

}  // namespace termlabel

#endif  // TERMLABEL_EXTRACTION_H_
