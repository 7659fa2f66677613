/*
 * Copyright 2026 the wmgsynth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "wmgsynth/word.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "testutil.hpp"

using testutil::W;
using namespace wmg;

TEST(ParseWord, FirstOccurrenceAlphabet) {
  Word w = W("aacbbdabd");
  EXPECT_EQ(w.size(), 9u);
  EXPECT_EQ(w.alphabet, (std::vector<std::string>{"a", "c", "b", "d"}));
  EXPECT_EQ(W("abcbadabd").alphabet, (std::vector<std::string>{"a", "b", "c", "d"}));
}

TEST(ParseWord, SingleLetter) {
  Word w = W("a");
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(w.alphabet, (std::vector<std::string>{"a"}));
}

TEST(ParseWord, EmptyRejected) {
  try {
    W("");
    FAIL() << "expected EmptyWord";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "EmptyWord");
  }
}

TEST(ParseWord, IllegalCharacterCarriesPosition) {
  try {
    W("ab!c");
    FAIL() << "expected BadLabel";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "BadLabel");
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos);
  }
}

TEST(ParseWord, TokenMode) {
  Word w = parse_word("t1,t2,t1 t3", LabelMode::Tokens);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.alphabet, (std::vector<std::string>{"t1", "t2", "t3"}));
  EXPECT_EQ(w.text(), "t1 t2 t1 t3");
}

TEST(Parikh, Counts) {
  TVector v = parikh(W("abcabdabd"));
  EXPECT_EQ(v.count_of("a"), 3u);
  EXPECT_EQ(v.count_of("b"), 3u);
  EXPECT_EQ(v.count_of("c"), 1u);
  EXPECT_EQ(v.count_of("d"), 2u);

  EXPECT_EQ(parikh(W("a")).count_of("a"), 1u);
  TVector ab = parikh(W("abab"));
  EXPECT_EQ(ab.count_of("a"), 2u);
  EXPECT_EQ(ab.count_of("b"), 2u);
}

TEST(Parikh, Primeness) {
  EXPECT_TRUE(is_prime(parikh(W("abcabdabd"))));   // (3,3,1,2)
  EXPECT_FALSE(is_prime(parikh(W("abab"))));       // (2,2)
  EXPECT_TRUE(is_prime(parikh(W("a"))));           // (1)
}

TEST(Project, KeepsSubsequence) {
  EXPECT_EQ(project(W("aacbbdabd"), {"a", "b"}).text(), "aabbab");
  EXPECT_EQ(project(W("abc"), {"a", "b", "c"}).text(), "abc");
  EXPECT_EQ(project(W("abcbad"), {"a", "b"}).text(), "abba");
}

TEST(Project, RejectsBadSubsets) {
  EXPECT_THROW(project(W("ab"), {}), Error);
  try {
    project(W("ab"), {"z"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "BadProjection");
  }
}

TEST(Project, CountsArePreserved) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Word w = testutil::random_word(rng, 2 + rng() % 20, 1 + rng() % 4);
    std::set<std::string> keep;
    for (const auto& l : w.alphabet)
      if (keep.empty() || rng() % 2) keep.insert(l);
    Word p = project(w, keep);
    TVector before = parikh(w), after = parikh(p);
    for (const auto& l : keep) EXPECT_EQ(after.count_of(l), before.count_of(l));
    EXPECT_EQ(p.size(), [&] {
      std::size_t n = 0;
      for (std::size_t i = 0; i < w.size(); ++i) n += keep.count(w.label_at(i));
      return n;
    }());
  }
}

TEST(AdjacentPairs, WrapAroundIncluded) {
  Word w = W("ab");
  auto pairs = adjacent_pairs(w);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].a, 0);
  EXPECT_EQ(pairs[0].b, 1);
  EXPECT_EQ(pairs[0].pos, 0u);
  EXPECT_EQ(pairs[1].a, 1);
  EXPECT_EQ(pairs[1].b, 0);
  EXPECT_EQ(pairs[1].pos, 1u);
}

TEST(AdjacentPairs, KnownOccurrences) {
  Word w = W("aacbbdabd");
  auto pairs = adjacent_pairs(w);
  auto has = [&](const char* a, const char* b, std::size_t pos) {
    for (const auto& p : pairs)
      if (w.alphabet[p.a] == a && w.alphabet[p.b] == b && p.pos == pos) return true;
    return false;
  };
  EXPECT_TRUE(has("d", "a", 5));
  EXPECT_TRUE(has("a", "c", 1));
  EXPECT_TRUE(has("d", "a", 8));  // wrap-around
}

TEST(AdjacentPairs, NeverEqualLetters) {
  EXPECT_TRUE(adjacent_pairs(W("aaa")).empty());
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    Word w = testutil::random_word(rng, 2 + rng() % 15, 1 + rng() % 4);
    for (const auto& p : adjacent_pairs(w)) EXPECT_NE(p.a, p.b);
  }
}

TEST(InducedCircularLts, SpellsTheWord) {
  Word w = W("abcbad");
  CircularLts lts = induced_circular_lts(w);
  EXPECT_EQ(lts.n_states(), 6u);
  for (std::size_t i = 0; i < lts.n_states(); ++i) {
    EXPECT_EQ(lts.arc_label(i), w.seq[i]);
    EXPECT_EQ(lts.arc_target(i), (i + 1) % 6);
  }
  CircularLts self = induced_circular_lts(W("a"));
  EXPECT_EQ(self.n_states(), 1u);
  EXPECT_EQ(self.arc_target(0), 0u);
}

TEST(FactorPrimitive, KnownFactors) {
  auto [v1, l1] = factor_primitive(W("abab"));
  EXPECT_EQ(v1.text(), "ab");
  EXPECT_EQ(l1, 2u);

  auto [v2, l2] = factor_primitive(W("aabbab"));
  EXPECT_EQ(v2.text(), "aabbab");
  EXPECT_EQ(l2, 1u);

  auto [v3, l3] = factor_primitive(W("aaa"));
  EXPECT_EQ(v3.text(), "a");
  EXPECT_EQ(l3, 3u);
}

TEST(FactorPrimitive, RebuildsTheWord) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    Word base = testutil::random_word(rng, 1 + rng() % 6, 1 + rng() % 3);
    std::size_t reps = 1 + rng() % 4;
    std::string text;
    for (std::size_t r = 0; r < reps; ++r) text += base.text();
    Word w = W(text);
    auto [v, l] = factor_primitive(w);
    std::string rebuilt;
    for (std::size_t r = 0; r < l; ++r) rebuilt += v.text();
    EXPECT_EQ(rebuilt, w.text());
    TVector pw = parikh(w), pv = parikh(v);
    for (const auto& label : w.alphabet)
      EXPECT_EQ(pw.count_of(label), l * pv.count_of(label));
    // v itself is primitive
    EXPECT_EQ(factor_primitive(v).second, 1u);
  }
}
