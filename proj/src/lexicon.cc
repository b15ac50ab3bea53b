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

#include "termlabel/lexicon.h"

#include <fstream>
#include <sstream>

#include "termlabel/embedded_data.h"
#include "termlabel/error.h"

namespace termlabel {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Code::kNotFound, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Calls fn(line) for each non-blank, non-comment line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn fn) {
  size_t start = 0;
  size_t line_no = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!Trim(line).empty() && Trim(line)[0] != '#') fn(line, line_no);
    start = end + 1;
  }
}

std::pair<std::string_view, std::string_view> SplitTab(std::string_view line,
                                                        size_t line_no) {
  auto tab = line.find('\t');
  if (tab == std::string_view::npos) {
    throw Error(Error::Code::kInvalidData,
                "line " + std::to_string(line_no) + ": expected a TAB");
  }
  return {Trim(line.substr(0, tab)), Trim(line.substr(tab + 1))};
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

char PosCode(Pos pos) {
  switch (pos) {
    case Pos::kNoun:
      return 'N';
    case Pos::kAdjective:
      return 'J';
    case Pos::kOther:
      return 'O';
  }
  return 'O';
}

const PosLexicon& PosLexicon::Default() {
  static const PosLexicon lexicon =
      Parse(embedded::Get("pos_lexicon.tsv"));
  return lexicon;
}

PosLexicon PosLexicon::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

PosLexicon PosLexicon::Parse(std::string_view text) {
  PosLexicon lexicon;
  ForEachLine(text, [&](std::string_view line, size_t line_no) {
    auto [token, tag] = SplitTab(line, line_no);
    Pos pos;
    if (tag == "N") {
      pos = Pos::kNoun;
    } else if (tag == "J") {
      pos = Pos::kAdjective;
    } else if (tag == "O") {
      pos = Pos::kOther;
    } else {
      throw Error(Error::Code::kInvalidData,
                  "line " + std::to_string(line_no) + ": unknown tag '" +
                      std::string(tag) + "'");
    }
    lexicon.Set(std::string(token), pos);
  });
  return lexicon;
}

Pos PosLexicon::Tag(std::string_view token) const {
  if (auto it = entries_.find(std::string(token)); it != entries_.end()) {
    return it->second;
  }
  if (token.find_first_not_of("0123456789") == std::string_view::npos) {
    return Pos::kOther;
  }
  const size_t n = token.size();
  if (n > 4 && EndsWith(token, "ly")) return Pos::kOther;
  if (n > 4 && (EndsWith(token, "al") || EndsWith(token, "ic") ||
                EndsWith(token, "ous") || EndsWith(token, "ive") ||
                EndsWith(token, "ful") || EndsWith(token, "less") ||
                EndsWith(token, "ular") || EndsWith(token, "ed"))) {
    return Pos::kAdjective;
  }
  if (n > 5 && (EndsWith(token, "able") || EndsWith(token, "ible") ||
                EndsWith(token, "ory") || EndsWith(token, "ary"))) {
    return Pos::kAdjective;
  }
  return Pos::kNoun;
}

const Lemmatizer& Lemmatizer::Default() {
  static const Lemmatizer lemmatizer =
      Parse(embedded::Get("lemma_exceptions.tsv"));
  return lemmatizer;
}

Lemmatizer Lemmatizer::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

Lemmatizer Lemmatizer::Parse(std::string_view text) {
  Lemmatizer lemmatizer;
  ForEachLine(text, [&](std::string_view line, size_t line_no) {
    auto [plural, singular] = SplitTab(line, line_no);
    lemmatizer.AddException(std::string(plural), std::string(singular));
  });
  return lemmatizer;
}

std::string Lemmatizer::Lemmatize(std::string_view token) const {
  if (auto it = exceptions_.find(std::string(token)); it != exceptions_.end()) {
    return it->second;
  }
  const size_t n = token.size();
  if (n <= 3 || token.back() != 's') return std::string(token);
  if (token.find_first_not_of("0123456789s") == std::string_view::npos) {
    return std::string(token);
  }
  // Singular endings that merely look plural.
  if (EndsWith(token, "ss") || EndsWith(token, "us") || EndsWith(token, "is")) {
    return std::string(token);
  }
  if (n > 4 && EndsWith(token, "ies")) {
    return std::string(token.substr(0, n - 3)) + "y";
  }
  if (EndsWith(token, "sses") || EndsWith(token, "xes") ||
      EndsWith(token, "ches") || EndsWith(token, "shes") ||
      EndsWith(token, "zzes") || EndsWith(token, "uses")) {
    return std::string(token.substr(0, n - 2));
  }
  return std::string(token.substr(0, n - 1));
}

StopList StopList::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

StopList StopList::Parse(std::string_view text) {
  StopList list;
  ForEachLine(text, [&](std::string_view line, size_t) {
    list.Insert(std::string(Trim(line)));
  });
  return list;
}

const StopList& StopList::DefaultAddress() {
  static const StopList list = Parse(embedded::Get("address_stopwords.txt"));
  return list;
}

const StopList& StopList::SampleLabel() {
  static const StopList list = Parse(embedded::Get("label_stoplist.txt"));
  return list;
}

}  // namespace termlabel
