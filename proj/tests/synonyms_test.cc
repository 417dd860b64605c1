// Copyright 2026 The clause-eval Authors.
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

#include "clause_eval/synonyms.h"

#include <gtest/gtest.h>

#include <random>

#include "clause_eval/defaults.h"
#include "support/oracle.h"

namespace clause_eval {
namespace {

TEST(SynonymLexiconTest, OneWayPairsOnlyGeneralize) {
  SynonymLexicon lex;
  lex.AddUnidirectional("man", "guy");
  lex.AddUnidirectional("boy", "guy");
  lex.AddBidirectional("ad", "advertisement");
  // Reaches(reference, generated).
  EXPECT_TRUE(lex.Reaches("man", "guy"));
  EXPECT_TRUE(lex.Reaches("boy", "guy"));
  EXPECT_FALSE(lex.Reaches("guy", "man"));
  EXPECT_FALSE(lex.Reaches("boy", "man"));
  EXPECT_TRUE(lex.Reaches("ad", "advertisement"));
  EXPECT_TRUE(lex.Reaches("advertisement", "ad"));
  EXPECT_TRUE(lex.Reaches("hand", "hand"));
}

TEST(SynonymLexiconTest, ClosureIsTransitive) {
  SynonymLexicon lex;
  lex.AddUnidirectional("lady", "woman");
  lex.AddUnidirectional("woman", "person");
  lex.AddBidirectional("pack", "package");
  lex.AddBidirectional("package", "packaging");
  EXPECT_TRUE(lex.Reaches("lady", "person"));
  EXPECT_FALSE(lex.Reaches("person", "lady"));
  EXPECT_TRUE(lex.Reaches("packaging", "pack"));
}

TEST(SynonymLexiconTest, RejectsSelfPairsAndNormalizes) {
  SynonymLexicon lex;
  EXPECT_THROW(lex.AddBidirectional("a", "a"), Error);
  EXPECT_THROW(lex.AddUnidirectional("Man", " man"), Error);
  lex.AddBidirectional("Sofa", "couch");
  EXPECT_TRUE(lex.Reaches("sofa", "couch"));
  EXPECT_EQ(lex.bidirectional().size(), 1u);
  EXPECT_EQ(lex.bidirectional().begin()->first, "couch");
}

TEST(SynonymLexiconTest, BidirectionalPairIsOrderInsensitive) {
  SynonymLexicon a, b;
  a.AddBidirectional("x", "y");
  b.AddBidirectional("y", "x");
  EXPECT_EQ(a, b);
}

// Property: reachability agrees with a dense Floyd-Warshall closure on
// random graphs.
TEST(SynonymLexiconTest, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937 rng(3);
  std::vector<std::string> words;
  for (char c = 'a'; c <= 'l'; ++c) words.push_back(std::string(1, c));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::string, std::string>> bi, uni;
    SynonymLexicon lex;
    for (int e = 0, n = static_cast<int>(rng() % 14); e < n; ++e) {
      const std::string &a = words[rng() % words.size()];
      const std::string &b = words[rng() % words.size()];
      if (a == b) continue;
      if (rng() % 3 == 0) {
        bi.emplace_back(a, b);
        lex.AddBidirectional(a, b);
      } else {
        uni.emplace_back(a, b);
        lex.AddUnidirectional(a, b);
      }
    }
    testing::ClosureOracle oracle(bi, uni);
    for (const std::string &x : words) {
      for (const std::string &y : words) {
        EXPECT_EQ(lex.Reaches(x, y), oracle.Reachable(x, y)) << x << "->" << y;
      }
    }
  }
}

TEST(SynonymLexiconTest, DefaultTableDoesNotLeakObjectsIntoBeverages) {
  const SynonymLexicon &lex = DefaultSynonyms();
  EXPECT_TRUE(lex.Reaches("can", "drink"));
  EXPECT_FALSE(lex.Reaches("drink", "can"));
  EXPECT_FALSE(lex.Reaches("can", "bottle"));
  EXPECT_TRUE(lex.Reaches("man", "person"));
}

}  // namespace
}  // namespace clause_eval
