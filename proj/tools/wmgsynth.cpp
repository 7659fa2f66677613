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
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wmgsynth/bench.hpp"
#include "wmgsynth/cyclic_synth.hpp"
#include "wmgsynth/io.hpp"
#include "wmgsynth/verify.hpp"
#include "wmgsynth/weak_synth.hpp"
#include "wmgsynth/word.hpp"

namespace {

// exit codes: 0 success, 1 negative verdict, 2 usage or I/O error

wmg::Word parse_word_auto(const std::string& text) {
  const bool tokens = text.find(',') != std::string::npos || text.find(' ') != std::string::npos;
  return wmg::parse_word(text, tokens ? wmg::LabelMode::Tokens : wmg::LabelMode::SingleChar);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int run_check_one(const wmg::Word& w) {
  wmg::CheckResult r = wmg::check_cyclic_wmg(w);
  if (r.solvable()) {
    std::cout << "SOLVABLE\n";
    return 0;
  }
  std::cout << wmg::diagnostic_to_json(*r.violation).dump() << "\n";
  return 1;
}

int run_check(const std::string& word_arg) {
  if (!word_arg.empty()) return run_check_one(parse_word_auto(word_arg));
  int rc = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    rc = std::max(rc, run_check_one(parse_word_auto(line)));
  }
  return rc;
}

int run_synth(const std::string& word_arg, const std::string& format, bool normalize) {
  wmg::SynthResult r = wmg::synthesize_cyclic_wmg(parse_word_auto(word_arg));
  if (std::holds_alternative<wmg::Diagnostic>(r)) {
    std::cout << wmg::diagnostic_to_json(std::get<wmg::Diagnostic>(r)).dump() << "\n";
    return 1;
  }
  wmg::System sys = std::get<wmg::System>(r);
  if (normalize) sys = wmg::normalize_places(sys);
  if (format == "json")
    std::cout << wmg::net_to_json(sys).dump(2) << "\n";
  else
    std::cout << wmg::emit_net_text(sys);
  return 0;
}

int run_weak_synth(const std::string& vector_arg, const std::string& labels_arg, bool emit_word,
                   const std::string& format) {
  std::vector<std::uint64_t> counts;
  for (const std::string& part : split_commas(vector_arg)) {
    try {
      counts.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw wmg::Error("ParseError", "bad vector component '" + part + "'");
    }
  }
  std::vector<std::string> labels;
  if (!labels_arg.empty()) {
    labels = split_commas(labels_arg);
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i) labels.push_back("t" + std::to_string(i + 1));
  }
  wmg::TVector v = wmg::make_tvector(labels, counts);
  wmg::System sys = wmg::weak_synthesize(v);
  if (format == "json") {
    nlohmann::json j;
    j["net"] = wmg::net_to_json(sys);
    if (emit_word) {
      wmg::Word w = wmg::witness_word(sys, v);
      j["word"] = nlohmann::json::array();
      for (std::size_t i = 0; i < w.size(); ++i) j["word"].push_back(w.label_at(i));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << wmg::emit_net_text(sys);
    if (emit_word) std::cout << "word " << wmg::witness_word(sys, v).text() << "\n";
  }
  return 0;
}

int run_verify(const std::string& net_path, const std::string& word_arg) {
  wmg::System sys = wmg::load_net_file(net_path);
  wmg::VerifyResult r = wmg::circular_rg(sys, parse_word_auto(word_arg));
  if (r.ok) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << wmg::verify_result_to_json(r).dump() << "\n";
  return 1;
}

int run_rg(const std::string& net_path, const std::string& format, std::size_t max_states) {
  wmg::System sys = wmg::load_net_file(net_path);
  wmg::Lts lts = wmg::reachability_graph(sys, max_states);
  if (format == "json")
    std::cout << wmg::lts_to_json(lts, sys).dump(2) << "\n";
  else
    std::cout << wmg::lts_to_dot(lts, sys);
  return 0;
}

int run_bench(const std::string& mode, const std::string& sizes_arg, std::uint64_t seed,
              const std::string& format) {
  std::vector<std::size_t> sizes;
  for (const std::string& part : split_commas(sizes_arg)) {
    try {
      sizes.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw wmg::Error("ParseError", "bad size '" + part + "'");
    }
  }
  wmg::BenchReport report = mode == "word-synth" ? wmg::bench_word_synth(sizes, seed)
                                                 : wmg::bench_weak_synth(sizes, seed);
  if (format == "json")
    std::cout << wmg::report_to_json(report).dump(2) << "\n";
  else
    std::cout << wmg::render_report(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthesis and verification of weighted marked graphs with circular reachability"};
  app.require_subcommand(1);

  std::string word_arg, net_path, vector_arg, labels_arg, sizes_arg;
  std::string format = "text";
  std::string bench_mode;
  bool normalize = false, emit_word = false;
  std::size_t max_states = wmg::default_max_states();
  std::uint64_t seed = 42;

  CLI::App* check = app.add_subcommand("check", "decide cyclic solvability of a word");
  check->add_option("word", word_arg, "word to check; reads stdin lines when omitted");

  CLI::App* synth = app.add_subcommand("synth", "synthesise a net cyclically solving a word");
  synth->add_option("word", word_arg)->required();
  synth->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  synth->add_flag("--normalize", normalize, "divide each place by its weight gcd");

  CLI::App* weak = app.add_subcommand("weak-synth", "synthesise from a prime count vector");
  weak->add_option("vector", vector_arg, "comma-separated counts, e.g. 2,3,2,4")->required();
  weak->add_option("--labels", labels_arg, "comma-separated labels (default t1,t2,...)");
  weak->add_flag("--emit-word", emit_word, "also print a word the net realises");
  weak->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "check a net against a word's circle");
  verify->add_option("--net", net_path, "net file")->required();
  verify->add_option("--word", word_arg)->required();

  CLI::App* rg = app.add_subcommand("rg", "emit the reachability graph");
  rg->add_option("--net", net_path, "net file")->required();
  rg->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  rg->add_option("--max-states", max_states, "state budget");

  CLI::App* bench = app.add_subcommand("bench", "time synthesis on growing instances");
  bench->add_option("--mode", bench_mode)->required()->check(CLI::IsMember({"word-synth", "weak-synth"}));
  bench->add_option("--sizes", sizes_arg, "comma-separated ascending sizes")->required();
  bench->add_option("--seed", seed);
  bench->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
    if (check->parsed()) return run_check(word_arg);
    if (synth->parsed()) return run_synth(word_arg, format, normalize);
    if (weak->parsed()) return run_weak_synth(vector_arg, labels_arg, emit_word, format);
    if (verify->parsed()) return run_verify(net_path, word_arg);
    if (rg->parsed()) return run_rg(net_path, format == "text" ? "dot" : format, max_states);
    if (bench->parsed()) return run_bench(bench_mode, sizes_arg, seed, format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wmg::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
