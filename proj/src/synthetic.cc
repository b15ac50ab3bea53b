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

#include "termlabel/synthetic.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <unordered_set>

#include "termlabel/csv.h"
#include "termlabel/error.h"
#include "termlabel/extraction.h"

namespace termlabel {
namespace {

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  double Uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return Uniform() < p; }
  size_t Below(size_t n) { return static_cast<size_t>(rng_() % n); }
  // Failures before the next success of a Bernoulli(p) sequence.
  size_t GeometricSkip(double p) {
    if (p >= 1) return 0;
    const double u = 1.0 - Uniform();  // (0, 1]
    return static_cast<size_t>(std::floor(std::log(u) / std::log1p(-p)));
  }

 private:
  std::mt19937_64 rng_;
};

// Pronounceable made-up words that the builtin tagger reads as nouns and the
// lemmatizer leaves untouched.
class WordMaker {
 public:
  explicit WordMaker(Sampler& sampler) : sampler_(sampler) {}

  std::string Next() {
    static constexpr std::string_view kOnset = "bdfgkmnprtvz";
    static constexpr std::string_view kVowel = "aeiou";
    static constexpr std::string_view kCoda = "kmnprt";
    while (true) {
      std::string w;
      for (int s = 0; s < 3; ++s) {
        w += kOnset[sampler_.Below(kOnset.size())];
        w += kVowel[sampler_.Below(kVowel.size())];
      }
      w += kCoda[sampler_.Below(kCoda.size())];
      if (PosLexicon::Default().Tag(w) != Pos::kNoun) continue;
      if (Lemmatizer::Default().Lemmatize(w) != w) continue;
      if (used_.insert(w).second) return w;
    }
  }

 private:
  Sampler& sampler_;
  std::unordered_set<std::string> used_;
};

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::string PadNumber(size_t v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

void Validate(const SyntheticParams& p) {
  if (p.n_classes < 1 || p.depth < 1 || p.pubs_per_class < 1 ||
      p.vocab_size < 1 || p.noise_words < 0) {
    throw Error(Error::Code::kUsage, "synthetic parameters must be positive");
  }
  if (p.depth > p.n_classes) {
    throw Error(Error::Code::kUsage, "depth cannot exceed the class count");
  }
  for (double r : {p.plant_rate, p.background_rate, p.planted_fraction}) {
    if (!(r >= 0 && r <= 1)) {
      throw Error(Error::Code::kUsage, "rates must lie in [0, 1]");
    }
  }
}

// Classes per level grow geometrically (1, 2, 4, ... weights), at least one
// per level, summing to n.
std::vector<int> LevelCounts(int n, int depth) {
  double weight_sum = 0;
  for (int l = 0; l < depth; ++l) weight_sum += std::ldexp(1.0, l);
  std::vector<int> counts(depth);
  int assigned = 0;
  for (int l = 0; l < depth - 1; ++l) {
    counts[l] = std::max(
        1, static_cast<int>(std::lround(n * std::ldexp(1.0, l) / weight_sum)));
    assigned += counts[l];
  }
  counts[depth - 1] = n - assigned;
  // Borrow from upper levels if rounding left the last level empty.
  for (int l = depth - 2; counts[depth - 1] < 1 && l >= 0; --l) {
    while (counts[l] > 1 && counts[depth - 1] < 1) {
      --counts[l];
      ++counts[depth - 1];
    }
  }
  return counts;
}

}  // namespace

SyntheticBaseline GenerateSyntheticBaseline(uint64_t seed,
                                            const SyntheticParams& params) {
  Validate(params);
  Sampler sampler(seed);
  WordMaker words(sampler);
  const int n = params.n_classes;

  // Tree: classes numbered level by level; each class hangs under a class of
  // the previous level, round robin.
  const std::vector<int> counts = LevelCounts(n, params.depth);
  std::vector<int> level(n);
  std::vector<int> parent(n, -1);
  {
    int next = 0;
    int prev_start = 0;
    for (int l = 0; l < params.depth; ++l) {
      const int start = next;
      for (int k = 0; k < counts[l]; ++k, ++next) {
        level[next] = l + 1;
        if (l > 0) parent[next] = prev_start + k % counts[l - 1];
      }
      prev_start = start;
    }
  }

  std::vector<std::string> labels(n);
  for (int c = 0; c < n; ++c) {
    labels[c] = words.Next();
    if (c % 4 == 3) labels[c] += " " + words.Next();
  }
  std::vector<bool> planted(n);
  const int n_planted =
      static_cast<int>(std::lround(params.planted_fraction * n));
  for (int c = 0; c < n; ++c) planted[c] = c < n_planted;
  std::vector<std::string> vocab(params.vocab_size);
  for (auto& w : vocab) w = words.Next();

  SyntheticBaseline out;
  const int width = static_cast<int>(std::to_string(n).size());
  for (int c = 0; c < n; ++c) {
    ClassDef def;
    def.class_id = "c" + PadNumber(c, width);
    if (parent[c] >= 0) def.parent_id = "c" + PadNumber(parent[c], width);
    def.labels = {Capitalize(labels[c])};
    out.classes.push_back(std::move(def));
  }

  const size_t n_pubs = static_cast<size_t>(n) * params.pubs_per_class;
  const int pub_width = static_cast<int>(std::to_string(n_pubs).size());
  const bool discipline_mode = params.discipline_levels > 0;
  auto is_discipline = [&](int c) { return level[c] <= params.discipline_levels; };

  std::vector<int> chain;
  for (size_t p = 0; p < n_pubs; ++p) {
    const int cls = static_cast<int>(p / params.pubs_per_class);
    chain.clear();
    for (int a = cls; a >= 0; a = parent[a]) chain.push_back(a);

    std::vector<int> carried;
    for (int a : chain) {
      if (planted[a] && sampler.Bernoulli(params.plant_rate)) carried.push_back(a);
    }
    if (params.background_rate > 0) {
      for (size_t b = sampler.GeometricSkip(params.background_rate);
           b < static_cast<size_t>(n);
           b += 1 + sampler.GeometricSkip(params.background_rate)) {
        const int other = static_cast<int>(b);
        if (planted[other] &&
            std::find(chain.begin(), chain.end(), other) == chain.end()) {
          carried.push_back(other);
        }
      }
    }

    PublicationRecord r;
    r.id = "p" + PadNumber(p, pub_width);
    std::vector<std::string> title_parts;
    std::vector<std::string> discipline_parts;
    for (int c : carried) {
      if (discipline_mode && is_discipline(c)) {
        discipline_parts.push_back(Capitalize(labels[c]));
      } else if (sampler.Bernoulli(0.5)) {
        title_parts.push_back(Capitalize(labels[c]));
      } else {
        r.keywords.push_back(labels[c]);
      }
    }
    for (int w = 0; w < params.noise_words; ++w) {
      title_parts.push_back(vocab[sampler.Below(vocab.size())]);
    }
    // Interleave so planted phrases do not always lead the title.
    for (size_t i = title_parts.size(); i > 1; --i) {
      std::swap(title_parts[i - 1], title_parts[sampler.Below(i)]);
    }
    for (size_t i = 0; i < title_parts.size(); ++i) {
      if (i > 0) r.title += (i % 2 == 1) ? " of " : ", ";
      r.title += title_parts[i];
    }
    r.keywords.push_back(vocab[sampler.Below(vocab.size())]);

    if (discipline_mode) {
      if (!discipline_parts.empty()) {
        r.journal = "Journal of " + discipline_parts.front();
      } else {
        r.journal = "Journal of " + Capitalize(vocab[sampler.Below(vocab.size())]);
      }
      for (const auto& d : discipline_parts) {
        r.addresses.push_back("Department of " + d);
      }
    } else {
      r.journal = "Journal of " + Capitalize(vocab[sampler.Below(vocab.size())]);
      r.addresses.push_back("Department of " +
                            Capitalize(vocab[sampler.Below(vocab.size())]));
    }

    out.assignments.push_back({r.id, out.classes[cls].class_id});
    out.corpus.Add(std::move(r));
  }
  return out;
}

void WriteSyntheticBaseline(const SyntheticBaseline& baseline,
                            const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error(Error::Code::kNotFound,
                  "cannot write " + (dir / name).string());
    }
    return f;
  };
  {
    auto f = open("corpus.jsonl");
    for (const auto& r : baseline.corpus.records()) f << RecordToJson(r) << '\n';
  }
  {
    auto f = open("classes.jsonl");
    for (const auto& c : baseline.classes) f << ClassDefToJson(c) << '\n';
  }
  {
    auto f = open("assignments.csv");
    f << "publication_id,class_id\n";
    for (const auto& a : baseline.assignments) {
      f << CsvEscape(a.publication_id) << ',' << CsvEscape(a.class_id) << '\n';
    }
  }
}

}  // namespace termlabel
