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

#include <cctype>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmgsynth/error.hpp"

namespace wmg {

/// A finite non-empty label sequence. The alphabet lists the distinct labels
/// in order of first occurrence, and every alphabet entry occurs in the
/// sequence, so the alphabet always equals the support.
struct Word {
  std::vector<std::string> alphabet;
  std::vector<int> seq;  // indices into alphabet

  std::size_t size() const { return seq.size(); }
  int letter(std::size_t i) const { return seq[i]; }
  const std::string& label_at(std::size_t i) const { return alphabet[static_cast<std::size_t>(seq[i])]; }

  /// Sequence rendered with single-character labels joined, multi-character
  /// labels space-separated.
  std::string text() const {
    bool single = true;
    for (const auto& l : alphabet) single = single && l.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!single && i > 0) out += ' ';
      out += label_at(i);
    }
    return out;
  }
};

/// Label-indexed positive counts. The labels are ordered and distinct; every
/// count is strictly positive.
struct TVector {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;

  std::size_t size() const { return labels.size(); }

  std::uint64_t count_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return counts[i];
    return 0;
  }
};

/// Circle of |w| states whose arcs spell the generating word from state 0.
struct CircularLts {
  std::vector<std::string> alphabet;
  std::vector<int> seq;

  std::size_t n_states() const { return seq.size(); }
  int arc_label(std::size_t i) const { return seq[i]; }
  std::size_t arc_target(std::size_t i) const { return (i + 1) % seq.size(); }
};

enum class LabelMode { SingleChar, Tokens };

inline bool valid_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// Builds a word from an explicit label sequence; the alphabet is derived in
/// first-occurrence order.
inline Word make_word(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error("EmptyWord", "word must contain at least one label");
  Word w;
  for (std::size_t pos = 0; pos < labels.size(); ++pos) {
    const std::string& l = labels[pos];
    if (l.empty()) throw Error("BadLabel", "empty label at position " + std::to_string(pos));
    for (char c : l)
      if (!valid_label_char(c))
        throw Error("BadLabel", "illegal character '" + std::string(1, c) + "' at position " +
                                    std::to_string(pos));
    int idx = -1;
    for (std::size_t k = 0; k < w.alphabet.size(); ++k)
      if (w.alphabet[k] == l) { idx = static_cast<int>(k); break; }
    if (idx < 0) {
      idx = static_cast<int>(w.alphabet.size());
      w.alphabet.push_back(l);
    }
    w.seq.push_back(idx);
  }
  return w;
}

/// Parses a word. In single-character mode every character is a label; in
/// token mode labels are comma- or whitespace-separated.
inline Word parse_word(std::string_view text, LabelMode mode = LabelMode::SingleChar) {
  std::vector<std::string> labels;
  if (mode == LabelMode::SingleChar) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!valid_label_char(c))
        throw Error("BadLabel",
                    "illegal character '" + std::string(1, c) + "' at position " + std::to_string(i));
      labels.emplace_back(1, c);
    }
  } else {
    std::string cur;
    std::size_t token_pos = 0;
    auto flush = [&]() {
      if (!cur.empty()) {
        labels.push_back(cur);
        cur.clear();
        ++token_pos;
      }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (valid_label_char(c)) {
        cur += c;
      } else {
        throw Error("BadLabel", "illegal character '" + std::string(1, c) + "' in token " +
                                    std::to_string(token_pos));
      }
    }
    flush();
  }
  if (labels.empty()) throw Error("EmptyWord", "word must contain at least one label");
  return make_word(labels);
}

/// Validates and assembles a T-vector: distinct labels, strictly positive counts.
inline TVector make_tvector(std::vector<std::string> labels, std::vector<std::uint64_t> counts) {
  if (labels.empty()) throw Error("EmptyAlphabet", "T-vector needs at least one label");
  if (labels.size() != counts.size())
    throw Error("BadLabel", "label/count arity mismatch");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t k = i + 1; k < labels.size(); ++k)
      if (labels[i] == labels[k]) throw Error("BadLabel", "duplicate label '" + labels[i] + "'");
    if (counts[i] == 0)
      throw Error("ZeroComponent", "count of '" + labels[i] + "' must be positive");
  }
  return TVector{std::move(labels), std::move(counts)};
}

inline TVector parikh(const Word& w) {
  std::vector<std::uint64_t> counts(w.alphabet.size(), 0);
  for (int x : w.seq) counts[static_cast<std::size_t>(x)]++;
  return TVector{w.alphabet, counts};
}

/// True iff the gcd of all counts is one.
inline bool is_prime(const TVector& v) {
  std::uint64_t g = 0;
  for (std::uint64_t c : v.counts) g = std::gcd(g, c);
  return g == 1;
}

/// Keeps exactly the letters of `keep`, preserving order.
inline Word project(const Word& w, const std::set<std::string>& keep) {
  if (keep.empty()) throw Error("BadProjection", "projection set must be non-empty");
  for (const auto& l : keep) {
    bool found = false;
    for (const auto& a : w.alphabet) found = found || a == l;
    if (!found) throw Error("BadProjection", "label '" + l + "' is not in the alphabet");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (keep.count(w.label_at(i))) out.push_back(w.label_at(i));
  return make_word(out);
}

struct AdjacentPair {
  int a;            // alphabet index of the first letter
  int b;            // alphabet index of the immediate successor
  std::size_t pos;  // position of the first letter; the wrap-around pair has pos n-1
};

/// All circularly adjacent occurrences (w_i, w_{i+1 mod n}) with distinct letters.
inline std::vector<AdjacentPair> adjacent_pairs(const Word& w) {
  std::vector<AdjacentPair> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    int a = w.seq[i];
    int b = w.seq[(i + 1) % n];
    if (a != b) out.push_back(AdjacentPair{a, b, i});
  }
  return out;
}

inline CircularLts induced_circular_lts(const Word& w) {
  return CircularLts{w.alphabet, w.seq};
}

/// Shortest v and maximal l with w = v^l; (w, 1) when w is primitive.
inline std::pair<Word, std::size_t> factor_primitive(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w.seq[i] == w.seq[i - d];
    if (ok) {
      std::vector<std::string> head;
      for (std::size_t i = 0; i < d; ++i) head.push_back(w.label_at(i));
      return {make_word(head), n / d};
    }
  }
  return {w, 1};  // unreachable: d = n always matches
}

}  // namespace wmg
