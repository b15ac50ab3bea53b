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

#include "termlabel/extraction.h"

#include <algorithm>

namespace termlabel {
namespace {

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool IsAsciiSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsBoundary(unsigned char c) {
  return c < 0x80 && !IsAsciiAlnum(c) && !IsAsciiSpace(c) && c != '-' &&
         c != '\'';
}

void SortUnique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string Normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char c : raw) {
    if (IsAsciiAlnum(c)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
    } else {
      pending_space = true;
    }
  }
  return out;
}

bool IsValidTerm(std::string_view term) {
  if (term.empty() || term.front() == ' ' || term.back() == ' ') return false;
  char prev = 'x';
  for (char c : term) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    (c == ' ' && prev != ' ');
    if (!ok) return false;
    prev = c;
  }
  return true;
}

std::vector<std::string_view> SplitSegments(std::string_view raw) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || IsBoundary(static_cast<unsigned char>(raw[i]))) {
      if (i > start) out.push_back(raw.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<TaggedToken> TagTokens(std::string_view normalized,
                                   const PosLexicon& lexicon) {
  std::vector<TaggedToken> out;
  size_t start = 0;
  while (start < normalized.size()) {
    size_t end = normalized.find(' ', start);
    if (end == std::string_view::npos) end = normalized.size();
    if (end > start) {
      auto token = normalized.substr(start, end - start);
      out.push_back({std::string(token), lexicon.Tag(token)});
    }
    start = end + 1;
  }
  return out;
}

std::vector<std::string> ChunkNounPhrases(std::span<const TaggedToken> tokens,
                                          const Lemmatizer& lemmatizer) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].pos == Pos::kOther) {
      ++i;
      continue;
    }
    size_t run_end = i;
    size_t last_noun = tokens.size();
    while (run_end < tokens.size() && tokens[run_end].pos != Pos::kOther) {
      if (tokens[run_end].pos == Pos::kNoun) last_noun = run_end;
      ++run_end;
    }
    if (last_noun != tokens.size()) {
      std::string term;
      for (size_t k = i; k <= last_noun; ++k) {
        if (!term.empty()) term.push_back(' ');
        term += lemmatizer.Lemmatize(tokens[k].text);
      }
      out.push_back(std::move(term));
    }
    i = run_end;
  }
  return out;
}

std::string NormalizeTerm(std::string_view raw, const Lemmatizer& lemmatizer) {
  const std::string normalized = Normalize(raw);
  std::string out;
  size_t start = 0;
  while (start < normalized.size()) {
    size_t end = normalized.find(' ', start);
    if (end == std::string::npos) end = normalized.size();
    if (!out.empty()) out.push_back(' ');
    out += lemmatizer.Lemmatize(
        std::string_view(normalized).substr(start, end - start));
    start = end + 1;
  }
  return out;
}

TermExtractor::TermExtractor(ExtractionOptions options, PosLexicon lexicon,
                             Lemmatizer lemmatizer)
    : options_(std::move(options)),
      lexicon_(std::move(lexicon)),
      lemmatizer_(std::move(lemmatizer)) {
  for (const auto& entry : options_.address_stopwords.terms()) {
    std::string term = NormalizeTerm(entry, lemmatizer_);
    if (term.empty()) continue;
    if (term.find(' ') == std::string::npos) {
      address_stop_tokens_.Insert(term);
    }
    address_stop_terms_.Insert(std::move(term));
  }
}

std::vector<std::string> TermExtractor::ExtractText(std::string_view raw,
                                                    bool address) const {
  std::vector<std::string> terms;
  for (auto segment : SplitSegments(raw)) {
    auto tokens = TagTokens(Normalize(segment), lexicon_);
    if (address && !address_stop_tokens_.empty()) {
      for (auto& t : tokens) {
        if (address_stop_tokens_.Contains(lemmatizer_.Lemmatize(t.text))) {
          t.pos = Pos::kOther;
        }
      }
    }
    for (auto& term : ChunkNounPhrases(tokens, lemmatizer_)) {
      if (address && address_stop_terms_.Contains(term)) continue;
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

std::vector<std::string> TermExtractor::Extract(
    const PublicationRecord& record) const {
  std::vector<std::string> terms;
  if (options_.mode == ExtractionMode::kPretagged) {
    for (Field field : options_.fields.Members()) {
      if (!record.HasField(field)) continue;
      const std::vector<std::string>* supplied = nullptr;
      if (record.pretagged_terms) {
        auto it = record.pretagged_terms->find(field);
        if (it != record.pretagged_terms->end()) supplied = &it->second;
      }
      if (supplied == nullptr) {
        throw RecordExtractionError("record '" + record.id +
                                    "' has no pretagged terms for field '" +
                                    std::string(FieldName(field)) + "'");
      }
      for (const auto& raw : *supplied) {
        std::string term = NormalizeTerm(raw, lemmatizer_);
        if (term.empty()) continue;
        if (field == Field::kAddresses && address_stop_terms_.Contains(term)) {
          continue;
        }
        terms.push_back(std::move(term));
      }
    }
  } else {
    for (const auto& [field, text] : FieldView(record, options_.fields)) {
      auto part = ExtractText(text, field == Field::kAddresses);
      terms.insert(terms.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
  }
  SortUnique(terms);
  return terms;
}

bool TermExtractor::IsSingleNounPhrase(std::string_view raw) const {
  auto segments = SplitSegments(raw);
  if (segments.size() != 1) return false;
  auto tokens = TagTokens(Normalize(segments[0]), lexicon_);
  auto chunks = ChunkNounPhrases(tokens, lemmatizer_);
  return chunks.size() == 1 && chunks[0] == NormalizeTerm(raw, lemmatizer_);
}

}  // namespace termlabel
