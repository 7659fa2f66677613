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
#include <cstdlib>
#include <deque>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmgsynth/error.hpp"

namespace wmg {

/// One place of a weighted P/T net, sparse weight maps keyed by transition
/// index. `pre` holds W(t,p) (arcs t -> p), `post` holds W(p,t) (arcs p -> t);
/// zero weights are simply absent.
struct Place {
  std::string id;
  std::map<int, std::uint64_t> pre;
  std::map<int, std::uint64_t> post;

  bool operator==(const Place& o) const {
    return id == o.id && pre == o.pre && post == o.post;
  }
};

struct PetriNet {
  std::vector<std::string> transitions;
  std::vector<Place> places;

  int transition_index(std::string_view name) const {
    for (std::size_t i = 0; i < transitions.size(); ++i)
      if (transitions[i] == name) return static_cast<int>(i);
    return -1;
  }

  int place_index(std::string_view id) const {
    for (std::size_t i = 0; i < places.size(); ++i)
      if (places[i].id == id) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const PetriNet& o) const {
    return transitions == o.transitions && places == o.places;
  }
};

/// Token counts aligned with PetriNet::places.
using Marking = std::vector<std::uint64_t>;

struct System {
  PetriNet net;
  Marking m0;

  bool operator==(const System& o) const { return net == o.net && m0 == o.m0; }
};

// ---------------------------------------------------------------------------
// construction helper

class NetBuilder {
 public:
  explicit NetBuilder(std::vector<std::string> transitions) {
    sys_.net.transitions = std::move(transitions);
    for (std::size_t i = 0; i < sys_.net.transitions.size(); ++i)
      for (std::size_t k = i + 1; k < sys_.net.transitions.size(); ++k)
        if (sys_.net.transitions[i] == sys_.net.transitions[k])
          throw Error("BadNet", "duplicate transition '" + sys_.net.transitions[i] + "'");
  }

  using WeightList = std::initializer_list<std::pair<const char*, std::uint64_t>>;

  NetBuilder& place(std::string id, WeightList in, WeightList out, std::uint64_t m0) {
    if (sys_.net.place_index(id) >= 0) throw Error("BadNet", "duplicate place '" + id + "'");
    Place p;
    p.id = std::move(id);
    for (const auto& [t, w] : in) p.pre[resolve(t)] = check_weight(w);
    for (const auto& [t, w] : out) p.post[resolve(t)] = check_weight(w);
    sys_.net.places.push_back(std::move(p));
    sys_.m0.push_back(m0);
    return *this;
  }

  System build() const { return sys_; }

 private:
  int resolve(std::string_view t) const {
    int i = sys_.net.transition_index(t);
    if (i < 0) throw Error("BadNet", "unknown transition '" + std::string(t) + "'");
    return i;
  }

  static std::uint64_t check_weight(std::uint64_t w) {
    if (w == 0) throw Error("BadNet", "arc weights must be positive");
    return w;
  }

  System sys_;
};

// ---------------------------------------------------------------------------
// structural classification

struct NetClass {
  bool is_wmg = false;
  bool is_cf = false;
  bool is_pure = false;
  bool is_plain = false;
};

inline NetClass classify(const PetriNet& net) {
  NetClass c{true, true, true, true};
  for (const Place& p : net.places) {
    if (p.post.size() > 1) c.is_cf = c.is_wmg = false;
    if (p.pre.size() > 1) c.is_wmg = false;
    for (const auto& [t, w] : p.pre) {
      if (w != 1) c.is_plain = false;
      if (p.post.count(t)) c.is_pure = false;
    }
    for (const auto& [t, w] : p.post)
      if (w != 1) c.is_plain = false;
  }
  return c;
}

/// gcd of all arc weights adjacent to the place.
inline std::uint64_t place_gcd(const Place& p) {
  std::uint64_t g = 0;
  for (const auto& [t, w] : p.pre) g = std::gcd(g, w);
  for (const auto& [t, w] : p.post) g = std::gcd(g, w);
  return g;
}

/// Incidence entries I(p,t) = W(t,p) - W(p,t) for one place.
inline std::vector<std::int64_t> incidence_row(const PetriNet& net, const Place& p) {
  std::vector<std::int64_t> row(net.transitions.size(), 0);
  for (const auto& [t, w] : p.pre) row[static_cast<std::size_t>(t)] += static_cast<std::int64_t>(w);
  for (const auto& [t, w] : p.post) row[static_cast<std::size_t>(t)] -= static_cast<std::int64_t>(w);
  return row;
}

// ---------------------------------------------------------------------------
// token game

inline bool enabled(const System& sys, const Marking& m, int t) {
  if (t < 0 || static_cast<std::size_t>(t) >= sys.net.transitions.size())
    throw Error("BadNet", "transition index out of range");
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
    auto it = sys.net.places[pi].post.find(t);
    if (it != sys.net.places[pi].post.end() && m[pi] < it->second) return false;
  }
  return true;
}

inline std::vector<int> enabled_transitions(const System& sys, const Marking& m) {
  std::vector<int> out;
  for (std::size_t t = 0; t < sys.net.transitions.size(); ++t)
    if (enabled(sys, m, static_cast<int>(t))) out.push_back(static_cast<int>(t));
  return out;
}

inline Marking fire(const System& sys, const Marking& m, int t) {
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
    auto it = sys.net.places[pi].post.find(t);
    if (it != sys.net.places[pi].post.end() && m[pi] < it->second)
      throw Error("NotEnabled", "transition '" + sys.net.transitions[static_cast<std::size_t>(t)] +
                                    "' blocked by place '" + sys.net.places[pi].id + "'");
  }
  Marking out = m;
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
    const Place& p = sys.net.places[pi];
    auto consume = p.post.find(t);
    if (consume != p.post.end()) out[pi] -= consume->second;
    auto produce = p.pre.find(t);
    if (produce != p.pre.end()) out[pi] += produce->second;
  }
  return out;
}

/// A place is enabled by a marking when it can feed every one of its output
/// transitions.
inline bool place_enabled(const Place& p, std::uint64_t tokens) {
  for (const auto& [t, w] : p.post)
    if (tokens < w) return false;
  return true;
}

// ---------------------------------------------------------------------------
// reachability

struct Lts {
  struct Arc {
    int from;
    int label;  // transition index
    int to;
  };

  std::vector<Marking> states;
  std::vector<Arc> arcs;
  int initial = 0;
};

inline std::size_t default_max_states() {
  if (const char* env = std::getenv("WMG_SYNTH_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return 100000;
}

/// Breadth-first marking exploration with deterministic state numbering:
/// states are numbered in discovery order, successors tried in transition
/// order. Throws StateBudgetExceeded when more than `max_states` markings
/// would be needed.
inline Lts reachability_graph(const System& sys, std::size_t max_states = default_max_states()) {
  if (max_states < 1) throw Error("StateBudgetExceeded", "state budget must be at least 1");
  Lts lts;
  std::map<Marking, int> index;
  std::deque<int> frontier;
  lts.states.push_back(sys.m0);
  index[sys.m0] = 0;
  frontier.push_back(0);
  while (!frontier.empty()) {
    int s = frontier.front();
    frontier.pop_front();
    for (std::size_t t = 0; t < sys.net.transitions.size(); ++t) {
      if (!enabled(sys, lts.states[static_cast<std::size_t>(s)], static_cast<int>(t))) continue;
      Marking next = fire(sys, lts.states[static_cast<std::size_t>(s)], static_cast<int>(t));
      auto it = index.find(next);
      int target;
      if (it == index.end()) {
        if (lts.states.size() >= max_states)
          throw Error("StateBudgetExceeded",
                      "reachability exceeds " + std::to_string(max_states) + " states");
        target = static_cast<int>(lts.states.size());
        lts.states.push_back(next);
        index.emplace(std::move(next), target);
        frontier.push_back(target);
      } else {
        target = it->second;
      }
      lts.arcs.push_back(Lts::Arc{s, static_cast<int>(t), target});
    }
  }
  return lts;
}

/// True iff the initial state is reachable from every state.
inline bool lts_is_reversible(const Lts& lts) {
  std::vector<std::vector<int>> rev(lts.states.size());
  for (const auto& a : lts.arcs) rev[static_cast<std::size_t>(a.to)].push_back(a.from);
  std::vector<char> seen(lts.states.size(), 0);
  std::deque<int> q{lts.initial};
  seen[static_cast<std::size_t>(lts.initial)] = 1;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int p : rev[static_cast<std::size_t>(s)])
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = 1;
        q.push_back(p);
      }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// scaling

/// Multiplies all weights and the marking of one place by num/den; every
/// product must stay integral.
inline System scale_place(const System& sys, std::string_view place_id, std::uint64_t num,
                          std::uint64_t den) {
  if (num < 1 || den < 1) throw Error("NonIntegerScaling", "scaling factor must be positive");
  int pi = sys.net.place_index(place_id);
  if (pi < 0) throw Error("BadNet", "unknown place '" + std::string(place_id) + "'");
  System out = sys;
  Place& p = out.net.places[static_cast<std::size_t>(pi)];
  auto rescale = [&](std::uint64_t v, const char* what) {
    std::uint64_t scaled = v * num;
    if (scaled % den != 0)
      throw Error("NonIntegerScaling", std::string(what) + " of '" + p.id + "' does not stay integral");
    return scaled / den;
  };
  for (auto& [t, w] : p.pre) w = rescale(w, "weight");
  for (auto& [t, w] : p.post) w = rescale(w, "weight");
  out.m0[static_cast<std::size_t>(pi)] = rescale(out.m0[static_cast<std::size_t>(pi)], "marking");
  return out;
}

// ---------------------------------------------------------------------------
// purification of choice-free systems

struct PurifyResult {
  System system;
  std::vector<std::string> dropped_places;
};

/// Rewrites every side-condition place of a reversible choice-free system
/// into a pure one with the same reachability graph. A place p with unique
/// output x, W(p,x) = k+h and W(x,p) = h > 0 becomes p' with W(p',x) = k,
/// no return arc and h fewer tokens; when k <= 0 the place carries no
/// behaviour and is dropped if that provably leaves the graph unchanged.
inline PurifyResult purify_cf(const System& sys, std::size_t max_states = default_max_states()) {
  if (!classify(sys.net).is_cf)
    throw Error("NotChoiceFree", "purification requires a choice-free system");
  Lts rg = reachability_graph(sys, max_states);
  if (!lts_is_reversible(rg))
    throw Error("NotReversible", "initial marking is not reachable from every marking");

  PurifyResult result{sys, {}};
  std::vector<std::size_t> drop;
  for (std::size_t pi = 0; pi < result.system.net.places.size(); ++pi) {
    Place& p = result.system.net.places[pi];
    if (p.post.empty()) continue;
    const int x = p.post.begin()->first;
    auto side = p.pre.find(x);
    if (side == p.pre.end()) continue;
    const std::uint64_t h = side->second;
    const std::uint64_t consumed = p.post.begin()->second;  // k + h
    if (consumed > h) {
      for (const Marking& m : rg.states)
        if (m[pi] < h)
          throw Error("NotReversible",
                      "place '" + p.id + "' drops below its return weight; cannot purify");
      p.pre.erase(x);
      p.post.begin()->second = consumed - h;
      result.system.m0[pi] -= h;
    } else {
      // The output consumes no more than the side condition returns; such a
      // place can only be inert in a reversible system.
      bool constant = true;
      for (const Marking& m : rg.states) constant = constant && m[pi] == sys.m0[pi];
      if (!constant || sys.m0[pi] < consumed)
        throw Error("NotReversible", "place '" + p.id + "' is not inert; cannot purify");
      drop.push_back(pi);
      result.dropped_places.push_back(p.id);
    }
  }
  for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
    result.system.net.places.erase(result.system.net.places.begin() + static_cast<std::ptrdiff_t>(*it));
    result.system.m0.erase(result.system.m0.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  return result;
}

// ---------------------------------------------------------------------------
// circuits and liveness

namespace detail {

/// Places and transitions of a circuit in cycle order: place order[i] feeds
/// transition torder[i], which feeds place order[i+1 mod k].
struct CircuitOrder {
  std::vector<std::size_t> places;
  std::vector<int> transitions;
};

inline CircuitOrder circuit_order(const PetriNet& net) {
  const std::size_t k = net.places.size();
  if (k == 0 || net.transitions.size() != k)
    throw Error("NotCircuit", "a circuit alternates as many places as transitions");
  std::vector<int> producer_of(k, -1);
  std::vector<int> place_fed_by(net.transitions.size(), -1);
  for (std::size_t pi = 0; pi < k; ++pi) {
    const Place& p = net.places[pi];
    if (p.pre.size() != 1 || p.post.size() != 1)
      throw Error("NotCircuit", "place '" + p.id + "' must have one input and one output");
    int t_in = p.pre.begin()->first;
    if (place_fed_by[static_cast<std::size_t>(t_in)] != -1)
      throw Error("NotCircuit", "transition feeds two places");
    place_fed_by[static_cast<std::size_t>(t_in)] = static_cast<int>(pi);
  }
  CircuitOrder order;
  std::vector<char> seen(k, 0);
  std::size_t cur = 0;
  for (std::size_t step = 0; step < k; ++step) {
    if (seen[cur]) throw Error("NotCircuit", "net is not a single cycle");
    seen[cur] = 1;
    order.places.push_back(cur);
    int t = net.places[cur].post.begin()->first;
    order.transitions.push_back(t);
    int next = place_fed_by[static_cast<std::size_t>(t)];
    if (next < 0) throw Error("NotCircuit", "transition '" +
                                  net.transitions[static_cast<std::size_t>(t)] + "' has no output place");
    cur = static_cast<std::size_t>(next);
  }
  if (cur != order.places.front()) throw Error("NotCircuit", "cycle does not close");
  for (char c : seen)
    if (!c) throw Error("NotCircuit", "net is not a single cycle");
  return order;
}

inline bool circuit_conservative(const PetriNet& net, const CircuitOrder& order) {
  // X * I = 0 has a positive solution iff the weight products around the
  // cycle balance.
  unsigned __int128 consumed = 1, produced = 1;
  for (std::size_t i = 0; i < order.places.size(); ++i) {
    const Place& p = net.places[order.places[i]];
    consumed *= p.post.begin()->second;
    produced *= p.pre.begin()->second;
  }
  return consumed == produced;
}

}  // namespace detail

/// Marking-based sufficient liveness condition for conservative circuits:
/// one place covers its full output weight and every other place is at most
/// gcd_p short of its own.
inline bool circuit_live_sufficient(const System& sys) {
  detail::CircuitOrder order = detail::circuit_order(sys.net);
  if (!detail::circuit_conservative(sys.net, order))
    throw Error("NotConservative", "circuit weight products do not balance");
  for (std::size_t anchor = 0; anchor < sys.net.places.size(); ++anchor) {
    bool ok = true;
    for (std::size_t pi = 0; pi < sys.net.places.size() && ok; ++pi) {
      const Place& p = sys.net.places[pi];
      const std::uint64_t need = p.post.begin()->second;
      if (pi == anchor) {
        ok = sys.m0[pi] >= need;
      } else {
        const std::uint64_t slack = place_gcd(p);
        ok = sys.m0[pi] + slack >= need;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Exact liveness of binary 1-conservative circuits under the useful-tokens
/// condition: live iff the token sum exceeds m + n - 2 gcd(m,n).
inline bool binary_circuit_live(const System& sys) {
  detail::CircuitOrder order;
  try {
    order = detail::circuit_order(sys.net);
  } catch (const Error& e) {
    throw Error("PreconditionViolated", e.what());
  }
  if (sys.net.transitions.size() != 2)
    throw Error("PreconditionViolated", "expected a binary circuit");
  for (std::size_t t = 0; t < sys.net.transitions.size(); ++t) {
    std::uint64_t in = 0, out = 0;
    for (const Place& p : sys.net.places) {
      auto c = p.post.find(static_cast<int>(t));
      if (c != p.post.end()) in += c->second;
      auto pr = p.pre.find(static_cast<int>(t));
      if (pr != p.pre.end()) out += pr->second;
    }
    if (in != out)
      throw Error("PreconditionViolated", "circuit is not 1-conservative at transition '" +
                                              sys.net.transitions[t] + "'");
  }
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi)
    if (sys.m0[pi] % place_gcd(sys.net.places[pi]) != 0)
      throw Error("PreconditionViolated",
                  "marking of '" + sys.net.places[pi].id + "' violates the useful-tokens condition");
  const Place& p = sys.net.places[0];
  const std::uint64_t m = p.pre.begin()->second;
  const std::uint64_t n = p.post.begin()->second;
  const std::uint64_t total = sys.m0[0] + sys.m0[1];
  return total > m + n - 2 * std::gcd(m, n);
}

/// Brute-force liveness over the full reachability graph: from every
/// reachable marking, every transition can fire again eventually.
inline bool is_live_exhaustive(const System& sys, std::size_t max_states = default_max_states()) {
  Lts rg = reachability_graph(sys, max_states);
  std::vector<std::vector<int>> rev(rg.states.size());
  for (const auto& a : rg.arcs) rev[static_cast<std::size_t>(a.to)].push_back(a.from);
  for (std::size_t t = 0; t < sys.net.transitions.size(); ++t) {
    std::vector<char> can(rg.states.size(), 0);
    std::deque<int> q;
    for (const auto& a : rg.arcs)
      if (a.label == static_cast<int>(t) && !can[static_cast<std::size_t>(a.from)]) {
        can[static_cast<std::size_t>(a.from)] = 1;
        q.push_back(a.from);
      }
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int prev : rev[static_cast<std::size_t>(s)])
        if (!can[static_cast<std::size_t>(prev)]) {
          can[static_cast<std::size_t>(prev)] = 1;
          q.push_back(prev);
        }
    }
    for (char c : can)
      if (!c) return false;
  }
  return true;
}

}  // namespace wmg
