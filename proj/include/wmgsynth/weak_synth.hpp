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
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wmgsynth/petri.hpp"
#include "wmgsynth/word.hpp"

namespace wmg {

/// Builds the complete weighted marked graph for a prime T-vector: for every
/// pair of labels t_i, t_j a binary circuit with weights reduced by their
/// pairwise gcd, marked so that the reachability graph is a single circle of
/// sum(v) states. Visiting transitions in the callers' label order, each
/// output place of t_i towards a smaller-index transition is filled to its
/// output weight, each input place from a smaller-index transition is left
/// one token short.
inline System weak_synthesize(const TVector& v) {
  if (v.labels.empty()) throw Error("EmptyAlphabet", "T-vector needs at least one label");
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.counts[i] == 0)
      throw Error("ZeroComponent", "count of '" + v.labels[i] + "' must be positive");
    g = std::gcd(g, v.counts[i]);
  }
  if (g != 1)
    throw Error("NonPrimeVector", "T-vector has common divisor " + std::to_string(g));

  System sys;
  sys.net.transitions = v.labels;
  const std::size_t m = v.size();

  auto add_place = [&](std::size_t i, std::size_t j, std::uint64_t m0) {
    // place from t_i to t_j
    const std::uint64_t gij = std::gcd(v.counts[i], v.counts[j]);
    Place p;
    p.id = "p_" + v.labels[i] + "_" + v.labels[j];
    p.pre[static_cast<int>(i)] = v.counts[j] / gij;
    p.post[static_cast<int>(j)] = v.counts[i] / gij;
    sys.net.places.push_back(std::move(p));
    sys.m0.push_back(m0);
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t gij = std::gcd(v.counts[i], v.counts[j]);
      const std::uint64_t w_into_j = v.counts[i] / gij;  // W(p_{i,j}, t_j)
      const std::uint64_t w_into_i = v.counts[j] / gij;  // W(p_{j,i}, t_i)
      add_place(i, j, w_into_j - 1);  // input of the later transition, one short
      add_place(j, i, w_into_i);      // output of the later transition, full
    }
  }
  return sys;
}

/// Deterministic simulation of a weak-synthesis net for sum(v) steps. Every
/// step must enable exactly one transition and the run must close back on the
/// initial marking; anything else is a SimulationDiverged defect, never
/// masked.
inline Word witness_word(const System& sys, const TVector& v) {
  std::uint64_t steps = 0;
  for (std::uint64_t c : v.counts) steps += c;
  Marking cur = sys.m0;
  std::vector<std::string> fired;
  for (std::uint64_t k = 0; k < steps; ++k) {
    std::vector<int> en = enabled_transitions(sys, cur);
    if (en.size() != 1)
      throw Error("SimulationDiverged", "step " + std::to_string(k) + " enables " +
                                            std::to_string(en.size()) + " transitions");
    fired.push_back(sys.net.transitions[static_cast<std::size_t>(en[0])]);
    cur = fire(sys, cur, en[0]);
  }
  if (cur != sys.m0)
    throw Error("SimulationDiverged", "run does not return to the initial marking");
  Word w = make_word(fired);
  const TVector got = parikh(w);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (got.count_of(v.labels[i]) != v.counts[i])
      throw Error("SimulationDiverged", "witness Parikh vector differs at '" + v.labels[i] + "'");
  return w;
}

}  // namespace wmg
