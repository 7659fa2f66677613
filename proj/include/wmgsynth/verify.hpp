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

#include <map>
#include <string>
#include <string_view>

#include "wmgsynth/cyclic_synth.hpp"
#include "wmgsynth/petri.hpp"
#include "wmgsynth/word.hpp"

namespace wmg {

enum class FailReason { WrongLabel, ExtraEnabled, Deadlock, EarlyRevisit, NotClosed };

inline std::string_view to_string(FailReason r) {
  switch (r) {
    case FailReason::WrongLabel: return "WrongLabel";
    case FailReason::ExtraEnabled: return "ExtraEnabled";
    case FailReason::Deadlock: return "Deadlock";
    case FailReason::EarlyRevisit: return "EarlyRevisit";
    case FailReason::NotClosed: return "NotClosed";
  }
  return "?";
}

struct VerifyResult {
  bool ok = true;
  std::size_t step = 0;
  FailReason reason = FailReason::WrongLabel;
  std::string detail;

  static VerifyResult fail(std::size_t step, FailReason reason, std::string detail) {
    return VerifyResult{false, step, reason, std::move(detail)};
  }
};

/// Checks by simulation that the reachability graph of the system is exactly
/// the circle spelling w: from the initial marking, every step enables
/// precisely the next letter of w and nothing else, the |w| visited markings
/// are pairwise distinct, and step |w| returns to the start. For
/// deterministic nets this is equivalent to graph isomorphism with the
/// induced circular transition system.
inline VerifyResult circular_rg(const System& sys, const Word& w) {
  const std::size_t n = w.size();
  std::map<Marking, std::size_t> visited;
  Marking cur = sys.m0;
  visited[cur] = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<int> en = enabled_transitions(sys, cur);
    if (en.empty()) return VerifyResult::fail(step, FailReason::Deadlock, "no transition enabled");
    if (en.size() > 1) {
      std::string labels;
      for (int t : en) {
        if (!labels.empty()) labels += ',';
        labels += sys.net.transitions[static_cast<std::size_t>(t)];
      }
      return VerifyResult::fail(step, FailReason::ExtraEnabled, labels);
    }
    const std::string& got = sys.net.transitions[static_cast<std::size_t>(en[0])];
    const std::string& want = w.label_at(step);
    if (got != want)
      return VerifyResult::fail(step, FailReason::WrongLabel,
                                "expected '" + want + "', enabled '" + got + "'");
    cur = fire(sys, cur, en[0]);
    if (step + 1 < n) {
      auto [it, inserted] = visited.emplace(cur, step + 1);
      if (!inserted)
        return VerifyResult::fail(step + 1, FailReason::EarlyRevisit,
                                  "marking of step " + std::to_string(it->second) + " revisited");
    }
  }
  if (cur != sys.m0)
    return VerifyResult::fail(n, FailReason::NotClosed, "run does not return to the initial marking");
  return VerifyResult{};
}

/// Choice-free synthesis for alphabets of up to three letters, where it
/// coincides with marked-graph synthesis. Larger alphabets are out of range
/// of this decision procedure.
inline SynthResult cf_solve_small(const Word& w) {
  if (w.alphabet.size() > 3)
    throw Error("AlphabetTooLarge",
                "alphabet has " + std::to_string(w.alphabet.size()) + " letters, supported up to 3");
  return synthesize_cyclic_wmg(w);
}

}  // namespace wmg
