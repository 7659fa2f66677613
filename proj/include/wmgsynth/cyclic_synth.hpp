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
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wmgsynth/petri.hpp"
#include "wmgsynth/word.hpp"

namespace wmg {

/// Machine-readable witness of cyclic unsolvability: either the Parikh vector
/// has a common divisor, or one adjacent pair (a,b) at position q admits a
/// state j whose circular segment counts violate m*P_jq(a) < n*(P_jq(b)+1).
struct Diagnostic {
  enum class Kind { NonPrimeParikh, InequalityViolation };

  Kind kind = Kind::NonPrimeParikh;
  std::uint64_t gcd = 0;  // NonPrimeParikh only

  std::string a, b;
  std::size_t q = 0;  // position of the adjacent ab occurrence
  std::size_t j = 0;  // witness position
  std::uint64_t pjq_a = 0, pjq_b = 0;
  std::uint64_t m = 0, n = 0;  // count(b)/g and count(a)/g

  static Diagnostic non_prime(std::uint64_t gcd) {
    Diagnostic d;
    d.kind = Kind::NonPrimeParikh;
    d.gcd = gcd;
    return d;
  }
};

struct CheckResult {
  std::optional<Diagnostic> violation;

  bool solvable() const { return !violation.has_value(); }
};

/// Result of a synthesis attempt: the solving system, or the diagnostic that
/// rules a solution out.
using SynthResult = std::variant<System, Diagnostic>;

namespace detail {

inline std::uint64_t parikh_gcd(const TVector& v) {
  std::uint64_t g = 0;
  for (std::uint64_t c : v.counts) g = std::gcd(g, c);
  return g;
}

/// Count of letter occurrences in the circular segment w_j .. w_{q-1} given a
/// prefix-count table (pref[i] = occurrences before position i).
inline std::uint64_t circular_segment_count(const std::vector<std::uint64_t>& pref, std::size_t j,
                                            std::size_t q) {
  const std::size_t n = pref.size() - 1;
  if (j == q) return 0;
  if (j < q) return pref[q] - pref[j];
  return pref[n] - pref[j] + pref[q];
}

inline std::string pair_place_id(const std::string& a, const std::string& b) {
  return "p_" + a + "_" + b;
}

struct PairOccurrences {
  int a;
  int b;
  std::vector<std::size_t> positions;  // ascending
};

/// Distinct ordered adjacent pairs with their occurrence positions, sorted by
/// alphabet index of a, then of b.
inline std::vector<PairOccurrences> grouped_adjacent_pairs(const Word& w) {
  std::map<std::pair<int, int>, std::vector<std::size_t>> occ;
  for (const AdjacentPair& p : adjacent_pairs(w)) occ[{p.a, p.b}].push_back(p.pos);
  std::vector<PairOccurrences> out;
  for (auto& [key, positions] : occ) out.push_back({key.first, key.second, std::move(positions)});
  return out;
}

}  // namespace detail

/// Decides cyclic solvability by a weighted marked graph: the Parikh vector
/// must be prime and, for every adjacent pair occurrence ..ab.. at position q
/// and every position j whose circular segment up to q still contains an a,
/// the strict bound m*P_jq(a) < n*(P_jq(b)+1) must hold (all arithmetic
/// exact, cross-multiplied). The first failure in scan order — pairs by
/// alphabet order, then j ascending, then occurrences circularly from j —
/// is reported.
inline CheckResult check_cyclic_wmg(const Word& w) {
  const TVector pv = parikh(w);
  const std::uint64_t g_all = detail::parikh_gcd(pv);
  if (g_all != 1) return CheckResult{Diagnostic::non_prime(g_all)};

  const std::size_t n = w.size();
  for (const auto& group : detail::grouped_adjacent_pairs(w)) {
    const std::uint64_t count_a = pv.counts[static_cast<std::size_t>(group.a)];
    const std::uint64_t count_b = pv.counts[static_cast<std::size_t>(group.b)];
    const std::uint64_t g = std::gcd(count_a, count_b);
    const std::uint64_t m = count_b / g;
    const std::uint64_t nn = count_a / g;

    std::vector<std::uint64_t> pref_a(n + 1, 0), pref_b(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      pref_a[i + 1] = pref_a[i] + (w.seq[i] == group.a ? 1 : 0);
      pref_b[i + 1] = pref_b[i] + (w.seq[i] == group.b ? 1 : 0);
    }

    for (std::size_t j = 0; j < n; ++j) {
      // occurrences in circular order starting at j
      std::size_t first = 0;
      while (first < group.positions.size() && group.positions[first] < j) ++first;
      for (std::size_t step = 0; step < group.positions.size(); ++step) {
        const std::size_t q = group.positions[(first + step) % group.positions.size()];
        const std::uint64_t pa = detail::circular_segment_count(pref_a, j, q);
        if (pa == 0) continue;  // the bound is waived when the segment has no a
        const std::uint64_t pb = detail::circular_segment_count(pref_b, j, q);
        if (m * pa >= nn * (pb + 1)) {
          Diagnostic d;
          d.kind = Diagnostic::Kind::InequalityViolation;
          d.a = w.alphabet[static_cast<std::size_t>(group.a)];
          d.b = w.alphabet[static_cast<std::size_t>(group.b)];
          d.q = q;
          d.j = j;
          d.pjq_a = pa;
          d.pjq_b = pb;
          d.m = m;
          d.n = nn;
          return CheckResult{d};
        }
      }
    }
  }
  return CheckResult{};
}

/// The canonical place family: one place per distinct ordered adjacent pair
/// (a,b), with W(a,p) = count(b), W(p,b) = count(a), and the least initial
/// marking that keeps the token trace of one full cycle non-negative.
/// Simulating the word on this net decides solvability for prime Parikh
/// vectors, so it doubles as an independent oracle for check_cyclic_wmg.
inline System canonical_adjacent_net(const Word& w) {
  const TVector pv = parikh(w);
  System sys;
  sys.net.transitions = w.alphabet;
  for (const auto& group : detail::grouped_adjacent_pairs(w)) {
    const std::uint64_t count_a = pv.counts[static_cast<std::size_t>(group.a)];
    const std::uint64_t count_b = pv.counts[static_cast<std::size_t>(group.b)];
    std::uint64_t tokens = count_a * count_b;
    std::uint64_t low = tokens;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w.seq[k] == group.a) tokens += count_b;
      if (w.seq[k] == group.b) tokens -= count_a;
      if (tokens < low) low = tokens;
    }
    Place p;
    p.id = detail::pair_place_id(w.alphabet[static_cast<std::size_t>(group.a)],
                                 w.alphabet[static_cast<std::size_t>(group.b)]);
    p.pre[group.a] = count_b;
    p.post[group.b] = count_a;
    sys.net.places.push_back(std::move(p));
    sys.m0.push_back(count_a * count_b - low);
  }
  return sys;
}

/// Synthesises a weighted marked graph whose reachability graph is the circle
/// spelling w, or returns the diagnostic produced by check_cyclic_wmg.
inline SynthResult synthesize_cyclic_wmg(const Word& w) {
  CheckResult check = check_cyclic_wmg(w);
  if (!check.solvable()) return *check.violation;
  return canonical_adjacent_net(w);
}

/// The separating place family: adjacency is symmetric here, so every
/// adjacent pair contributes places in both orientations, with reduced
/// weights m = count(b)/g, n = count(a)/g and initial marking n*count(b).
/// Along one cycle of a prime word the visited marking tuples are pairwise
/// distinct.
inline System build_adjacent_places(const Word& w) {
  const TVector pv = parikh(w);
  const std::uint64_t g_all = detail::parikh_gcd(pv);
  if (g_all != 1)
    throw Error("NonPrimeParikh", "Parikh vector has common divisor " + std::to_string(g_all));
  System sys;
  sys.net.transitions = w.alphabet;
  std::set<std::pair<int, int>> oriented;
  for (const AdjacentPair& p : adjacent_pairs(w)) {
    oriented.insert({std::min(p.a, p.b), std::max(p.a, p.b)});
  }
  auto add = [&](int a, int b) {
    const std::uint64_t count_a = pv.counts[static_cast<std::size_t>(a)];
    const std::uint64_t count_b = pv.counts[static_cast<std::size_t>(b)];
    const std::uint64_t g = std::gcd(count_a, count_b);
    Place p;
    p.id = detail::pair_place_id(w.alphabet[static_cast<std::size_t>(a)],
                                 w.alphabet[static_cast<std::size_t>(b)]);
    p.pre[a] = count_b / g;
    p.post[b] = count_a / g;
    sys.net.places.push_back(std::move(p));
    sys.m0.push_back((count_a / g) * count_b);
  };
  for (const auto& [x, y] : oriented) {
    add(x, y);
    add(y, x);
  }
  return sys;
}

/// Sufficient projection test: every binary projection onto an adjacent pair
/// must be a power v^l of a word with prime Parikh vector that is itself
/// cyclically solvable. Sufficient but not necessary.
inline bool check_by_projection(const Word& w) {
  const TVector pv = parikh(w);
  const std::uint64_t g_all = detail::parikh_gcd(pv);
  if (g_all != 1)
    throw Error("NonPrimeParikh", "Parikh vector has common divisor " + std::to_string(g_all));
  std::set<std::pair<int, int>> seen;
  for (const AdjacentPair& pair : adjacent_pairs(w)) {
    auto key = std::minmax(pair.a, pair.b);
    if (!seen.insert(key).second) continue;
    const Word u = project(w, {w.alphabet[static_cast<std::size_t>(pair.a)],
                               w.alphabet[static_cast<std::size_t>(pair.b)]});
    auto [v, l] = factor_primitive(u);
    (void)l;
    if (!is_prime(parikh(v))) return false;
    if (!check_cyclic_wmg(v).solvable()) return false;
  }
  return true;
}

/// Divides every place by its weight gcd (weights and marking alike).
inline System normalize_places(const System& sys) {
  System out = sys;
  for (const Place& p : sys.net.places) {
    const std::uint64_t g = place_gcd(p);
    if (g > 1) out = scale_place(out, p.id, 1, g);
  }
  return out;
}

}  // namespace wmg
