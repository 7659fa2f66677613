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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmgsynth/cyclic_synth.hpp"
#include "wmgsynth/weak_synth.hpp"
#include "wmgsynth/word.hpp"

namespace wmg {

struct BenchReport {
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::vector<double> seconds;
  std::optional<double> exponent;  // least-squares slope on the log-log points
};

/// Random prime T-vector with `parts` positive components summing to `total`.
inline TVector random_prime_vector_with_sum(std::size_t parts, std::uint64_t total,
                                            std::mt19937_64& rng) {
  if (parts < 1 || total < parts) throw Error("BadSizes", "total must cover all components");
  std::vector<std::uint64_t> counts(parts, 1);
  std::uint64_t rest = total - parts;
  std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
  for (std::uint64_t k = 0; k < rest; ++k) counts[pick(rng)]++;
  std::uint64_t g = 0;
  for (std::uint64_t c : counts) g = std::gcd(g, c);
  if (g != 1 && parts >= 2) {
    // shift tokens so one component becomes 1; any vector containing 1 is prime
    counts[0] += counts[1] - 1;
    counts[1] = 1;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parts; ++i) labels.push_back("t" + std::to_string(i + 1));
  return make_tvector(labels, counts);
}

/// Cyclically solvable word of the requested length, produced by simulating a
/// randomly drawn weak-synthesis net.
inline Word random_solvable_word(std::size_t length, std::size_t letters, std::mt19937_64& rng) {
  TVector v = random_prime_vector_with_sum(letters, length, rng);
  System sys = weak_synthesize(v);
  return witness_word(sys, v);
}

inline std::optional<double> fit_exponent(const std::vector<std::size_t>& sizes,
                                          const std::vector<double>& seconds) {
  if (sizes.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(static_cast<double>(sizes[i]));
    const double y = std::log(seconds[i] > 0 ? seconds[i] : 1e-9);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace detail {

template <typename Fn>
inline double time_best_of(Fn&& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

inline void check_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw Error("BadSizes", "need at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw Error("BadSizes", "sizes must be strictly ascending");
}

}  // namespace detail

/// Times synthesize_cyclic_wmg on random solvable words of growing length.
inline BenchReport bench_word_synth(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                    int reps = 3) {
  detail::check_sizes(sizes);
  BenchReport report{"word-synth", seed, sizes, {}, std::nullopt};
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    const std::size_t letters = std::min<std::size_t>(4, n);
    Word w = random_solvable_word(n, letters, rng);
    (void)synthesize_cyclic_wmg(w);  // warm up before timing
    volatile std::size_t sink = 0;
    report.seconds.push_back(detail::time_best_of(
        [&] {
          SynthResult r = synthesize_cyclic_wmg(w);
          sink = sink + std::get<System>(r).net.places.size();
        },
        reps));
  }
  report.exponent = fit_exponent(report.sizes, report.seconds);
  return report;
}

/// Times weak_synthesize on random prime vectors of growing arity.
inline BenchReport bench_weak_synth(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                    int reps = 5) {
  detail::check_sizes(sizes);
  BenchReport report{"weak-synth", seed, sizes, {}, std::nullopt};
  std::mt19937_64 rng(seed);
  for (std::size_t m : sizes) {
    std::uniform_int_distribution<std::uint64_t> comp(1, 9);
    std::vector<std::uint64_t> counts(m);
    for (auto& c : counts) c = comp(rng);
    counts[m - 1] = 1;  // keep the vector prime
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("t" + std::to_string(i + 1));
    TVector v = make_tvector(labels, counts);
    (void)weak_synthesize(v);  // warm up the allocator before timing
    // repeat inside the timed region so every size does comparable total work
    const int inner = std::max<int>(1, static_cast<int>(131072.0 / (static_cast<double>(m) *
                                                                    static_cast<double>(m))));
    volatile std::size_t sink = 0;
    report.seconds.push_back(detail::time_best_of(
                                 [&] {
                                   for (int k = 0; k < inner; ++k)
                                     sink = sink + weak_synthesize(v).net.places.size();
                                 },
                                 reps) /
                             inner);
  }
  report.exponent = fit_exponent(report.sizes, report.seconds);
  return report;
}

inline std::string render_report(const BenchReport& r) {
  std::ostringstream out;
  out << "mode: " << r.mode << "\nseed: " << r.seed << "\n";
  for (std::size_t i = 0; i < r.sizes.size(); ++i)
    out << "  size " << r.sizes[i] << ": " << r.seconds[i] << " s\n";
  if (r.exponent)
    out << "fitted exponent: " << *r.exponent << "\n";
  else
    out << "fitted exponent: n/a (need at least two sizes)\n";
  return out.str();
}

inline nlohmann::json report_to_json(const BenchReport& r) {
  nlohmann::json j;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["sizes"] = r.sizes;
  j["seconds"] = r.seconds;
  if (r.exponent)
    j["exponent"] = *r.exponent;
  else
    j["exponent"] = nullptr;
  return j;
}

}  // namespace wmg
