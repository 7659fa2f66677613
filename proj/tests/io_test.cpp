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
#include "wmgsynth/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "testutil.hpp"
#include "wmgsynth/bench.hpp"
#include "wmgsynth/cyclic_synth.hpp"
#include "wmgsynth/weak_synth.hpp"

using testutil::W;
using namespace wmg;

TEST(NetText, RoundTripsFixtures) {
  for (const char* name : {"aacbbdabd_wmg.net", "aacbbeabd_wmg.net", "abcabdabd_wmg.net",
                           "abcbad_cf.net", "cabdaaab_cf.net", "bcafdeaaabcdaafdcaaa_cf.net"}) {
    System sys = load_net_file(testutil::fixture(name));
    EXPECT_EQ(parse_net_text(emit_net_text(sys)), sys) << name;
    EXPECT_EQ(net_from_json(net_to_json(sys)), sys) << name;
  }
}

TEST(NetText, RoundTripsSynthesisedNets) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 60; ++iter) {
    Word w = testutil::random_word(rng, 1 + rng() % 14, 1 + rng() % 4);
    SynthResult r = synthesize_cyclic_wmg(w);
    if (!std::holds_alternative<System>(r)) continue;
    const System& sys = std::get<System>(r);
    EXPECT_EQ(parse_net_text(emit_net_text(sys)), sys) << w.text();
    EXPECT_EQ(net_from_json(net_to_json(sys)), sys) << w.text();
  }
  TVector v = make_tvector({"t1", "t2", "t3"}, {2, 3, 5});
  System sys = weak_synthesize(v);
  EXPECT_EQ(parse_net_text(emit_net_text(sys)), sys);
}

TEST(NetText, ParseErrorsCarryTheLine) {
  auto expect_error = [](const std::string& text, const char* needle) {
    try {
      parse_net_text(text);
      FAIL() << "expected ParseError for: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "ParseError");
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_error("place p m0 0\n", "before transitions");
  expect_error("transitions a\nplace p in b:1 m0 0\n", "unknown transition");
  expect_error("transitions a\nplace p in a:0 m0 0\n", "positive");
  expect_error("transitions a\nplace p in a:1\n", "no m0");
  expect_error("transitions a\nbogus\n", "unknown directive");
  expect_error("transitions a a\n", "duplicate transition");
  expect_error("transitions a\nplace p m0 0\nplace p m0 0\n", "duplicate place");
}

TEST(NetText, CommentsAndBlanksIgnored) {
  System sys = parse_net_text(
      "# a tiny circuit\n"
      "transitions a b\n"
      "\n"
      "place p_ab in a:1 out b:1 m0 0   # forward\n"
      "place p_ba in b:1 out a:1 m0 1\n");
  EXPECT_EQ(sys.net.places.size(), 2u);
  EXPECT_EQ(sys.m0[1], 1u);
}

TEST(Dot, ReachabilityGraphsAreWellFormed) {
  System sys = load_net_file(testutil::fixture("abcbad_cf.net"));
  Lts lts = reachability_graph(sys);
  EXPECT_EQ(lts.states.size(), 6u);
  std::string dot = lts_to_dot(lts, sys);
  EXPECT_TRUE(testutil::dot::is_valid(dot)) << dot;

  System single;
  single.net.transitions = {"a"};
  EXPECT_TRUE(testutil::dot::is_valid(lts_to_dot(reachability_graph(single), single)));
}

TEST(Dot, CheckerRejectsBrokenInput) {
  EXPECT_FALSE(testutil::dot::is_valid("digraph { s0 -> }"));
  EXPECT_FALSE(testutil::dot::is_valid("graph { s0; }"));
  EXPECT_FALSE(testutil::dot::is_valid("digraph { s0 [label=\"x] }"));
}

TEST(Json, DiagnosticShapes) {
  CheckResult r = check_cyclic_wmg(W("abcbadabd"));
  ASSERT_FALSE(r.solvable());
  nlohmann::json j = diagnostic_to_json(*r.violation);
  EXPECT_EQ(j["kind"], "InequalityViolation");
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["pjq_a"], 1);
  EXPECT_EQ(j["pjq_b"], 0);

  CheckResult np = check_cyclic_wmg(W("aa"));
  nlohmann::json jn = diagnostic_to_json(*np.violation);
  EXPECT_EQ(jn["kind"], "NonPrimeParikh");
  EXPECT_EQ(jn["gcd"], 2);
}

TEST(Json, LtsMirrorsTheDotContent) {
  System sys = load_net_file(testutil::fixture("abcbad_cf.net"));
  Lts lts = reachability_graph(sys);
  nlohmann::json j = lts_to_json(lts, sys);
  EXPECT_EQ(j["states"].size(), 6u);
  EXPECT_EQ(j["arcs"].size(), 6u);
  EXPECT_EQ(j["initial"], 0);
}

TEST(Bench, SingleSizeHasNoExponent) {
  BenchReport r = bench_word_synth({64}, 7, 1);
  EXPECT_FALSE(r.exponent.has_value());
  EXPECT_EQ(r.seconds.size(), 1u);
  EXPECT_NE(render_report(r).find("n/a"), std::string::npos);
}

TEST(Bench, RejectsUnsortedSizes) {
  try {
    bench_word_synth({100, 50}, 1, 1);
    FAIL() << "expected BadSizes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "BadSizes");
  }
}
