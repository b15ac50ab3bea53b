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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "termlabel/error.h"
#include "testing/fixtures.h"

namespace termlabel {
namespace {

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SyntheticTest, SameSeedSameBytes) {
  SyntheticParams p;
  p.n_classes = 12;
  p.pubs_per_class = 5;
  auto tmp = std::filesystem::temp_directory_path() / "termlabel_synth_test";
  WriteSyntheticBaseline(GenerateSyntheticBaseline(42, p), tmp / "a");
  WriteSyntheticBaseline(GenerateSyntheticBaseline(42, p), tmp / "b");
  WriteSyntheticBaseline(GenerateSyntheticBaseline(43, p), tmp / "c");
  for (const char* f : {"corpus.jsonl", "classes.jsonl", "assignments.csv"}) {
    EXPECT_EQ(ReadFile(tmp / "a" / f), ReadFile(tmp / "b" / f)) << f;
  }
  EXPECT_NE(ReadFile(tmp / "a" / "corpus.jsonl"),
            ReadFile(tmp / "c" / "corpus.jsonl"));
  // Written files load back into the same records.
  auto loaded = IngestCorpus(tmp / "a" / "corpus.jsonl", CorpusFormat::kJsonl);
  EXPECT_EQ(loaded.corpus, GenerateSyntheticBaseline(42, p).corpus);
  EXPECT_EQ(ReadClassFile(tmp / "a" / "classes.jsonl").size(), 12u);
  EXPECT_EQ(ReadAssignmentFile(tmp / "a" / "assignments.csv").size(), 60u);
  std::filesystem::remove_all(tmp);
}

TEST(SyntheticTest, ShapeFollowsParameters) {
  SyntheticParams p;
  p.n_classes = 50;
  p.depth = 3;
  p.pubs_per_class = 4;
  auto base = GenerateSyntheticBaseline(1, p);
  EXPECT_EQ(base.classes.size(), 50u);
  EXPECT_EQ(base.corpus.size(), 200u);
  Hierarchy h = testing::MakeHierarchy(base.classes, base.assignments,
                                       base.corpus);
  EXPECT_EQ(h.max_level(), 3);
  std::map<int, int> per_level;
  for (const auto& n : h.nodes()) ++per_level[n.level];
  EXPECT_LT(per_level[1], per_level[2]);
  EXPECT_LT(per_level[2], per_level[3]);
  for (const auto& n : h.nodes()) {
    ASSERT_EQ(n.labels.size(), 1u);
    TermExtractor ex(ExtractionOptions{});
    EXPECT_TRUE(ex.IsSingleNounPhrase(n.raw_labels[0])) << n.raw_labels[0];
  }
}

TEST(SyntheticTest, DisciplineLabelsGoToJournalAndAddresses) {
  SyntheticParams p;
  p.n_classes = 10;
  p.depth = 2;
  p.pubs_per_class = 20;
  p.discipline_levels = 1;
  p.plant_rate = 1.0;
  p.background_rate = 0.0;
  auto base = GenerateSyntheticBaseline(5, p);
  Hierarchy h = testing::MakeHierarchy(base.classes, base.assignments,
                                       base.corpus);
  TermExtractor titles(ExtractionOptions{});
  TermExtractor venues(
      ExtractionOptions{.fields = {Field::kJournal, Field::kAddresses}});
  for (size_t c = 0; c < h.size(); ++c) {
    const auto& node = h.node(c);
    for (uint32_t m : node.members) {
      auto t = titles.Extract(base.corpus[m]);
      auto v = venues.Extract(base.corpus[m]);
      bool in_titles = std::binary_search(t.begin(), t.end(), node.labels[0]);
      bool in_venues = std::binary_search(v.begin(), v.end(), node.labels[0]);
      if (node.level == 1) {
        EXPECT_FALSE(in_titles);
        EXPECT_TRUE(in_venues);
      } else {
        EXPECT_TRUE(in_titles);
        EXPECT_FALSE(in_venues);
      }
    }
  }
}

TEST(SyntheticTest, InvalidParameters) {
  SyntheticParams p;
  p.plant_rate = 1.5;
  EXPECT_THROW(GenerateSyntheticBaseline(1, p), Error);
  p = {};
  p.depth = 0;
  EXPECT_THROW(GenerateSyntheticBaseline(1, p), Error);
  p = {};
  p.n_classes = 2;
  p.depth = 3;
  EXPECT_THROW(GenerateSyntheticBaseline(1, p), Error);
}

}  // namespace
}  // namespace termlabel
