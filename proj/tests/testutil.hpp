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

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "wmgsynth/petri.hpp"
#include "wmgsynth/word.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(WMGSYNTH_FIXTURE_DIR) + "/" + name;
}

inline wmg::Word W(const std::string& text) { return wmg::parse_word(text); }

// ---------------------------------------------------------------------------
// word generators

/// All label patterns of length n over at most max_letters letters, one
/// representative per renaming class (letter k may only appear after letters
/// 0..k-1 did). Support is full by construction.
inline std::vector<std::vector<int>> canonical_patterns(std::size_t n, int max_letters) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int used) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    const int limit = std::min(used + 1, max_letters);
    for (int next = 0; next < limit; ++next) {
      cur.push_back(next);
      self(self, std::max(used, next + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline wmg::Word pattern_to_word(const std::vector<int>& pattern) {
  static const char* names = "abcdefgh";
  std::vector<std::string> labels;
  for (int x : pattern) labels.emplace_back(1, names[x]);
  return wmg::make_word(labels);
}

/// Random word of the given length with full support over m letters.
inline wmg::Word random_word(std::mt19937_64& rng, std::size_t length, std::size_t m) {
  static const char* names = "abcdefgh";
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.emplace_back(1, names[i]);
  for (std::size_t i = m; i < length; ++i)
    labels.emplace_back(1, names[rng() % m]);
  std::shuffle(labels.begin(), labels.end(), rng);
  return wmg::make_word(labels);
}

inline wmg::Word random_prime_word(std::mt19937_64& rng, std::size_t length, std::size_t m) {
  for (;;) {
    wmg::Word w = random_word(rng, length, m);
    if (wmg::is_prime(wmg::parikh(w))) return w;
  }
}

// ---------------------------------------------------------------------------
// circuit generators

/// Random conservative circuit: a 1-conservative cycle of k transitions with
/// per-place scaling applied, plus a random marking.
inline wmg::System random_conservative_circuit(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("t" + std::to_string(i));
  std::vector<std::uint64_t> c(k), alpha(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = 1 + rng() % 4;
  for (std::size_t i = 0; i < k; ++i) alpha[i] = 1 + rng() % 3;
  wmg::NetBuilder b(names);
  for (std::size_t i = 0; i < k; ++i) {
    // place i is fed by transition i-1 and feeds transition i
    const std::size_t prev = (i + k - 1) % k;
    const std::string id = "p" + std::to_string(i);
    const std::uint64_t m0 = alpha[i] * (rng() % 4);
    b.place(id, {{names[prev].c_str(), alpha[i] * c[prev]}}, {{names[i].c_str(), alpha[i] * c[i]}},
            m0);
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// LTS helpers

inline bool same_arcs(const wmg::Lts& x, const wmg::Lts& y) {
  if (x.states.size() != y.states.size() || x.arcs.size() != y.arcs.size()) return false;
  for (std::size_t i = 0; i < x.arcs.size(); ++i) {
    if (x.arcs[i].from != y.arcs[i].from || x.arcs[i].label != y.arcs[i].label ||
        x.arcs[i].to != y.arcs[i].to)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// minimal DOT syntax checker

namespace dot {

struct Token {
  enum Kind { Id, Symbol, End } kind;
  std::string text;
};

inline std::vector<Token> lex(const std::string& s, bool& ok) {
  std::vector<Token> out;
  std::size_t i = 0;
  ok = true;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.'))
        id += s[i++];
      out.push_back({Token::Id, id});
    } else if (ch == '"') {
      std::string id;
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\') ++i;
        if (i < s.size()) id += s[i++];
      }
      if (i >= s.size()) {
        ok = false;
        return out;
      }
      ++i;
      out.push_back({Token::Id, id});
    } else if (ch == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Symbol, "->"});
      i += 2;
    } else if (std::string("{}[]=;,").find(ch) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, ch)});
      ++i;
    } else {
      ok = false;
      return out;
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

/// Accepts: digraph [id] { stmt* } with stmt := id '=' id | node | edge-chain,
/// node/edge optionally carrying [id = id, ...] attribute blocks.
inline bool is_valid(const std::string& text) {
  bool ok = false;
  std::vector<Token> toks = lex(text, ok);
  if (!ok) return false;
  std::size_t pos = 0;
  auto peek = [&]() -> const Token& { return toks[pos]; };
  auto eat_symbol = [&](const char* sym) {
    if (toks[pos].kind == Token::Symbol && toks[pos].text == sym) {
      ++pos;
      return true;
    }
    return false;
  };
  auto eat_id = [&]() {
    if (toks[pos].kind == Token::Id) {
      ++pos;
      return true;
    }
    return false;
  };
  auto attrs = [&]() -> bool {
    if (!eat_symbol("[")) return true;  // attributes are optional
    while (peek().kind == Token::Id) {
      if (!eat_id()) return false;
      if (!eat_symbol("=")) return false;
      if (!eat_id()) return false;
      if (!eat_symbol(",") && !eat_symbol(";")) {
        // single attribute or last in list
      }
    }
    return eat_symbol("]");
  };
  if (peek().kind != Token::Id || peek().text != "digraph") return false;
  ++pos;
  if (peek().kind == Token::Id) ++pos;  // graph name
  if (!eat_symbol("{")) return false;
  while (!(peek().kind == Token::Symbol && peek().text == "}")) {
    if (!eat_id()) return false;
    if (eat_symbol("=")) {
      if (!eat_id()) return false;
    } else {
      while (eat_symbol("->"))
        if (!eat_id()) return false;
      if (!attrs()) return false;
    }
    eat_symbol(";");
    if (peek().kind == Token::End) return false;
  }
  ++pos;
  return peek().kind == Token::End;
}

}  // namespace dot

}  // namespace testutil
