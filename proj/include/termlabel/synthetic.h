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

#ifndef TERMLABEL_SYNTHETIC_H_
#define TERMLABEL_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "termlabel/corpus.h"
#include "termlabel/hierarchy.h"

namespace termlabel {

struct SyntheticParams {
  int n_classes = 50;
  int depth = 3;
  int pubs_per_class = 100;  // direct assignments per class
  int vocab_size = 2000;     // background words
  // Chance that a publication carries the label of its class (and of each
  // ancestor).
  double plant_rate = 0.8;
  // Chance that a publication carries the label of an unrelated class.
  double background_rate = 0.01;
  // Fraction of classes whose label is ever planted; the rest never occur.
  double planted_fraction = 1.0;
  // Labels of classes at levels <= this go to journal/address fields; deeper
  // labels go to titles and keywords.
  int discipline_levels = 0;
  int noise_words = 6;  // background words per title
};

struct SyntheticBaseline {
  Corpus corpus;
  std::vector<ClassDef> classes;
  std::vector<Assignment> assignments;
};

// Deterministic for a given (seed, params). Sampling is done directly on
// mt19937_64 output rather than through the implementation-defined standard
// distributions.
SyntheticBaseline GenerateSyntheticBaseline(uint64_t seed,
                                            const SyntheticParams& params);

// Writes corpus.jsonl, classes.jsonl and assignments.csv into `dir`.
void WriteSyntheticBaseline(const SyntheticBaseline& baseline,
                            const std::filesystem::path& dir);

}  // namespace termlabel

#endif  // TERMLABEL_SYNTHETIC_H_
