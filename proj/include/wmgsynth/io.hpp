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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wmgsynth/cyclic_synth.hpp"
#include "wmgsynth/petri.hpp"
#include "wmgsynth/verify.hpp"

namespace wmg {

// ---------------------------------------------------------------------------
// net text format
//
//   # comment
//   transitions a b c d
//   place p_a_b in a:1 out b:1 m0 0
//
// `in t:w` is an arc t -> place with weight w, `out t:w` an arc place -> t.

inline System parse_net_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  System sys;
  bool have_transitions = false;
  auto fail = [&](const std::string& msg) -> void {
    throw Error("ParseError", "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "transitions") {
      if (have_transitions) fail("duplicate transitions line");
      if (tok.size() < 2) fail("transitions line needs at least one label");
      sys.net.transitions.assign(tok.begin() + 1, tok.end());
      for (std::size_t i = 0; i < sys.net.transitions.size(); ++i)
        for (std::size_t k = i + 1; k < sys.net.transitions.size(); ++k)
          if (sys.net.transitions[i] == sys.net.transitions[k])
            fail("duplicate transition '" + sys.net.transitions[i] + "'");
      have_transitions = true;
    } else if (tok[0] == "place") {
      if (!have_transitions) fail("place before transitions line");
      if (tok.size() < 2) fail("place line needs an id");
      Place p;
      p.id = tok[1];
      if (sys.net.place_index(p.id) >= 0) fail("duplicate place '" + p.id + "'");
      bool have_m0 = false;
      std::uint64_t m0 = 0;
      enum { None, In, Out } mode = None;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (tok[i] == "in") {
          mode = In;
        } else if (tok[i] == "out") {
          mode = Out;
        } else if (tok[i] == "m0") {
          if (i + 1 >= tok.size()) fail("m0 needs a value");
          try {
            m0 = std::stoull(tok[++i]);
          } catch (const std::exception&) {
            fail("bad m0 value '" + tok[i] + "'");
          }
          have_m0 = true;
          mode = None;
        } else {
          if (mode == None) fail("unexpected token '" + tok[i] + "'");
          auto colon = tok[i].find(':');
          if (colon == std::string::npos) fail("expected t:w, got '" + tok[i] + "'");
          const std::string tname = tok[i].substr(0, colon);
          std::uint64_t w = 0;
          try {
            w = std::stoull(tok[i].substr(colon + 1));
          } catch (const std::exception&) {
            fail("bad weight in '" + tok[i] + "'");
          }
          if (w == 0) fail("weights must be positive in '" + tok[i] + "'");
          int t = sys.net.transition_index(tname);
          if (t < 0) fail("unknown transition '" + tname + "'");
          auto& dst = mode == In ? p.pre : p.post;
          if (!dst.emplace(t, w).second) fail("duplicate arc for '" + tname + "'");
        }
      }
      if (!have_m0) fail("place '" + p.id + "' has no m0");
      sys.net.places.push_back(std::move(p));
      sys.m0.push_back(m0);
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  ++lineno;
  if (!have_transitions) fail("missing transitions line");
  return sys;
}

inline std::string emit_net_text(const System& sys) {
  std::ostringstream out;
  out << "transitions";
  for (const auto& t : sys.net.transitions) out << ' ' << t;
  out << '\n';
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
    const Place& p = sys.net.places[pi];
    out << "place " << p.id;
    if (!p.pre.empty()) {
      out << " in";
      for (const auto& [t, w] : p.pre)
        out << ' ' << sys.net.transitions[static_cast<std::size_t>(t)] << ':' << w;
    }
    if (!p.post.empty()) {
      out << " out";
      for (const auto& [t, w] : p.post)
        out << ' ' << sys.net.transitions[static_cast<std::size_t>(t)] << ':' << w;
    }
    out << " m0 " << sys.m0[pi] << '\n';
  }
  return out.str();
}

inline System net_from_json(const nlohmann::json& j);

/// Loads a net from a file in either the text format or its JSON mirror
/// (detected by a leading brace).
inline System load_net_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("ParseError", "'" + path + "' is not valid JSON");
    return net_from_json(j);
  }
  return parse_net_text(text);
}

// ---------------------------------------------------------------------------
// JSON mirrors

inline nlohmann::json net_to_json(const System& sys) {
  nlohmann::json j;
  j["transitions"] = sys.net.transitions;
  j["places"] = nlohmann::json::array();
  for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
    const Place& p = sys.net.places[pi];
    nlohmann::json jp;
    jp["id"] = p.id;
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [t, w] : p.pre) in[sys.net.transitions[static_cast<std::size_t>(t)]] = w;
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [t, w] : p.post) out[sys.net.transitions[static_cast<std::size_t>(t)]] = w;
    jp["in"] = in;
    jp["out"] = out;
    jp["m0"] = sys.m0[pi];
    j["places"].push_back(jp);
  }
  return j;
}

inline System net_from_json(const nlohmann::json& j) {
  System sys;
  try {
    sys.net.transitions = j.at("transitions").get<std::vector<std::string>>();
    for (const auto& jp : j.at("places")) {
      Place p;
      p.id = jp.at("id").get<std::string>();
      const nlohmann::json in = jp.value("in", nlohmann::json::object());
      for (const auto& [name, w] : in.items()) {
        int t = sys.net.transition_index(name);
        if (t < 0) throw Error("ParseError", "unknown transition '" + name + "'");
        p.pre[t] = w.get<std::uint64_t>();
      }
      const nlohmann::json out = jp.value("out", nlohmann::json::object());
      for (const auto& [name, w] : out.items()) {
        int t = sys.net.transition_index(name);
        if (t < 0) throw Error("ParseError", "unknown transition '" + name + "'");
        p.post[t] = w.get<std::uint64_t>();
      }
      sys.net.places.push_back(std::move(p));
      sys.m0.push_back(jp.at("m0").get<std::uint64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("bad net JSON: ") + e.what());
  }
  return sys;
}

inline nlohmann::json lts_to_json(const Lts& lts, const System& sys) {
  nlohmann::json j;
  j["initial"] = lts.initial;
  j["states"] = nlohmann::json::array();
  for (std::size_t s = 0; s < lts.states.size(); ++s) {
    nlohmann::json marking = nlohmann::json::object();
    for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi)
      marking[sys.net.places[pi].id] = lts.states[s][pi];
    j["states"].push_back({{"id", s}, {"marking", marking}});
  }
  j["arcs"] = nlohmann::json::array();
  for (const auto& a : lts.arcs)
    j["arcs"].push_back({{"from", a.from},
                         {"label", sys.net.transitions[static_cast<std::size_t>(a.label)]},
                         {"to", a.to}});
  return j;
}

inline std::string lts_to_dot(const Lts& lts, const System& sys) {
  std::ostringstream out;
  out << "digraph reachability {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (std::size_t s = 0; s < lts.states.size(); ++s) {
    out << "  s" << s << " [label=\"";
    for (std::size_t pi = 0; pi < sys.net.places.size(); ++pi) {
      if (pi > 0) out << ' ';
      out << sys.net.places[pi].id << '=' << lts.states[s][pi];
    }
    out << "\"];\n";
  }
  for (const auto& a : lts.arcs)
    out << "  s" << a.from << " -> s" << a.to << " [label=\""
        << sys.net.transitions[static_cast<std::size_t>(a.label)] << "\"];\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::json diagnostic_to_json(const Diagnostic& d) {
  nlohmann::json j;
  if (d.kind == Diagnostic::Kind::NonPrimeParikh) {
    j["kind"] = "NonPrimeParikh";
    j["gcd"] = d.gcd;
  } else {
    j["kind"] = "InequalityViolation";
    j["a"] = d.a;
    j["b"] = d.b;
    j["q"] = d.q;
    j["j"] = d.j;
    j["pjq_a"] = d.pjq_a;
    j["pjq_b"] = d.pjq_b;
    j["m"] = d.m;
    j["n"] = d.n;
  }
  return j;
}

inline nlohmann::json verify_result_to_json(const VerifyResult& r) {
  nlohmann::json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["step"] = r.step;
    j["reason"] = std::string(to_string(r.reason));
    j["detail"] = r.detail;
  }
  return j;
}

}  // namespace wmg
