// Copyright 2026 The edom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run. One PASS/FAIL line per criterion; exit status 1 if any fail.
//
//   acceptance [--skip-stretch] [--jobs N]
//
// --skip-stretch leaves out the full 10-vertex hunt (SKIP line instead).

#include <ext/stdio_filebuf.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "edom/harness.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;

namespace {

// Pinned expectations. Every criterion is exact.
constexpr int kExtremalOrder = 10;
constexpr int kExtremalCount = 2;
constexpr int kExtremalGammaInf = 3;
constexpr int kExtremalTheta = 4;
constexpr int kMaxDemandThetaBound = 3;
constexpr int kFuzzSteps = 1000;
constexpr long kCodecRecords = 100'000;
constexpr std::uint64_t kSeed = 20260101;

struct Finding {
  bool pass = false;
  std::string detail;
};

/// A graph6 stream from a corpus file or from a geng pipe.
class Source {
 public:
  static Source file(const std::string& path) {
    Source s;
    s.file_ = std::make_unique<std::ifstream>(path);
    if (!*s.file_) throw Error("cannot open " + path);
    s.in_ = s.file_.get();
    return s;
  }

  static Source geng(const std::string& args) {
    Source s;
    const std::string cmd = std::string(EDOM_GENG_PATH) + " -q " + args;
    s.pipe_ = ::popen(cmd.c_str(), "r");
    if (!s.pipe_) throw Error("cannot run " + cmd);
    s.buf_ = std::make_unique<__gnu_cxx::stdio_filebuf<char>>(s.pipe_, std::ios::in);
    s.pipe_in_ = std::make_unique<std::istream>(s.buf_.get());
    s.in_ = s.pipe_in_.get();
    return s;
  }

  Source(Source&& o) noexcept
      : file_(std::move(o.file_)),
        pipe_(std::exchange(o.pipe_, nullptr)),
        buf_(std::move(o.buf_)),
        pipe_in_(std::move(o.pipe_in_)),
        in_(std::exchange(o.in_, nullptr)) {}
  ~Source() { close(); }

  std::istream& stream() { return *in_; }

  /// Exit status of the generator; 0 for files.
  int close() {
    if (!pipe_) return 0;
    pipe_in_.reset();
    buf_.reset();
    const int status = ::pclose(pipe_);
    pipe_ = nullptr;
    return status;
  }

 private:
  Source() = default;

  std::unique_ptr<std::ifstream> file_;
  FILE* pipe_ = nullptr;
  std::unique_ptr<__gnu_cxx::stdio_filebuf<char>> buf_;
  std::unique_ptr<std::istream> pipe_in_;
  std::istream* in_ = nullptr;
};

/// Every graph on at most eight vertices: the stored n <= 7 corpus, then geng.
template <class F>
long for_each_graph_le8(F&& f) {
  long count = 0;
  for (const std::string& line : corpus::lines("all_le7")) {
    f(parse_graph6(line), line);
    ++count;
  }
  Source eight = Source::geng("8");
  for (std::string line; std::getline(eight.stream(), line);) {
    f(parse_graph6(line), line);
    ++count;
  }
  if (eight.close() != 0) throw Error("geng 8 failed");
  return count;
}

std::string describe(const std::string& g6, const ClassificationRecord& r) {
  std::ostringstream out;
  out << g6 << " (gamma " << r.gamma << ", alpha " << r.alpha << ", gamma_inf " << r.gamma_inf << ", theta " << r.theta
      << ")";
  return out.str();
}

Finding chain_connected_le8() {
  long n = 0;
  long bad = 0;
  std::string first;
  for (const std::string& line : corpus::lines("connected_le8")) {
    const ClassificationRecord r = classify(parse_graph6(line), {}, line);
    ++n;
    const bool ok = !r.poisoned && r.gamma <= r.alpha && r.alpha <= r.gamma_inf && r.gamma_inf <= r.theta;
    if (!ok && bad++ == 0) first = describe(line, r) + " " + r.error;
  }
  return {bad == 0 && n > 0, std::to_string(n) + " connected graphs, " + std::to_string(bad) + " violations" +
                                 (first.empty() ? "" : "; first " + first)};
}

Finding small_theta_max_demand() {
  long matched = 0;
  long bad = 0;
  std::string first;
  const long total = for_each_graph_le8([&](const Graph& g, const std::string& g6) {
    if (clique_cover_number(g).value > kMaxDemandThetaBound) return;
    ++matched;
    const ClassificationRecord r = classify(g, {}, g6);
    if ((r.poisoned || !r.maximum_demand) && bad++ == 0) first = describe(g6, r);
  });
  return {bad == 0 && matched > 0, std::to_string(matched) + " of " + std::to_string(total) +
                                       " graphs have theta <= 3, " + std::to_string(bad) + " exceptions" +
                                       (first.empty() ? "" : "; first " + first)};
}

Finding all_max_demand_le8() {
  long bad = 0;
  std::string first;
  const long total = for_each_graph_le8([&](const Graph& g, const std::string& g6) {
    const ClassificationRecord r = classify(g, {}, g6);
    if ((r.poisoned || !r.maximum_demand) && bad++ == 0) first = describe(g6, r);
  });
  return {bad == 0, std::to_string(total) + " graphs, " + std::to_string(bad) + " exceptions" +
                        (first.empty() ? "" : "; first " + first)};
}

Finding all_max_demand_connected_9(int jobs) {
  Source in = Source::file(corpus::path("connected_9"));
  std::ostringstream out;
  auto check = [](const Graph& g, const std::string& g6) {
    Outcome o;
    const ClassificationRecord r = classify(g, {}, g6);
    o.delta.emitted = 1;
    if (r.poisoned || !r.maximum_demand) {
      o.delta.counterexamples = 1;
      o.output = g6;
    }
    return o;
  };
  const StreamResult r = run_stream("acceptance-scan-9", in.stream(), out, {.jobs = jobs, .log = &std::cerr}, check);
  const bool ok = r.complete && r.tally.malformed == 0 && r.tally.counterexamples == 0 && r.tally.emitted > 0;
  return {ok, std::to_string(r.tally.emitted) + " connected graphs, " + std::to_string(r.tally.counterexamples) +
                  " exceptions"};
}

Finding planar_hunt_le9(int jobs) {
  Source in = Source::file(corpus::path("planar_connected_le9"));
  std::ostringstream out;
  const StreamResult r = run_stream("acceptance-planar-9", in.stream(), out, {.jobs = jobs, .log = &std::cerr},
                                    hunt_fn(HuntMode::planar_gamma_theta, false));
  const bool ok = r.complete && r.tally.malformed == 0 && r.tally.emitted == 0 && r.tally.records > 0;
  std::ostringstream d;
  d << r.tally.records << " planar connected graphs, " << r.tally.prefiltered << " settled by alpha = theta, "
    << r.tally.family_checks << " family checks, " << r.tally.emitted << " hits";
  return {ok, d.str()};
}

Finding extremal_order_10(int jobs) {
  Source in = Source::geng("-c " + std::to_string(kExtremalOrder));
  std::ostringstream out;
  const StreamResult r = run_stream("acceptance-extremal", in.stream(), out,
                                    {.jobs = jobs, .batch = 4096, .log = &std::cerr},
                                    hunt_fn(HuntMode::max_demand, false));
  const int status = in.close();
  std::vector<Json> hits;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) hits.push_back(Json::parse(line));
  bool ok = status == 0 && r.complete && r.tally.malformed == 0 && r.tally.poisoned == 0 &&
            static_cast<int>(hits.size()) == kExtremalCount && r.tally.counterexamples == kExtremalCount;
  std::ostringstream d;
  d << r.tally.records << " connected graphs, " << r.tally.prefiltered << " settled by alpha = theta, "
    << r.tally.family_checks << " family checks, " << hits.size() << " hits";
  for (const Json& h : hits) {
    ok = ok && h["gamma_inf"] == kExtremalGammaInf && h["theta"] == kExtremalTheta;
    d << "; " << h["graph6"].get<std::string>() << " gamma_inf " << h["gamma_inf"] << " theta " << h["theta"];
  }
  return {ok, d.str()};
}

Finding oracle_equivalence_le6() {
  long pairs = 0;
  long core = 0;
  long bad = 0;
  std::string first;
  for (const std::string& line : corpus::lines("all_le6")) {
    const Graph g = parse_graph6(line);
    const int alpha = oracle::alpha(g);
    const int theta = oracle::theta(g);
    for (int k = 1; k <= g.order(); ++k) {
      const SafeFamily f = safe_family(g, k);
      std::set<oracle::Mask> mine;
      for (VertexSet c : f.configs()) mine.insert(c.bits());
      ++pairs;
      if (k >= alpha && k <= theta) ++core;
      if (mine != oracle::eternal_sets(g, k) && bad++ == 0) first = line + " k=" + std::to_string(k);
    }
  }
  return {bad == 0 && core > 0, std::to_string(pairs) + " (graph, k) pairs, " + std::to_string(core) +
                                    " with alpha <= k <= theta, " + std::to_string(bad) +
                                     " disagreements" + (first.empty() ? "" : "; first " + first)};
}

Finding certificate_soundness_le7() {
  long graphs = 0;
  long certs = 0;
  long bad = 0;
  std::string first;
  for (const std::string& line : corpus::lines("all_le7")) {
    const Graph g = parse_graph6(line);
    ++graphs;
    std::vector<GammaLessThetaCertificate> all = lemma10_scan(g);
    const Lemma9Search s = lemma9_witness(g);
    if (s.certificate) all.push_back(*s.certificate);
    if (all.empty()) continue;
    const bool gap = oracle::gamma(g) < oracle::theta(g);
    for (const auto& c : all) {
      ++certs;
      const std::string why = certificate_violation(g, c);
      if ((!why.empty() || !gap) && bad++ == 0) {
        first = line + " " + to_string(c.kind) + (why.empty() ? " without gamma < theta" : ": " + why);
      }
    }
  }
  return {bad == 0 && certs > 0, std::to_string(certs) + " certificates on " + std::to_string(graphs) + " graphs, " +
                                     std::to_string(bad) + " unsound" + (first.empty() ? "" : "; first " + first)};
}

Finding duality_le6() {
  std::mt19937_64 rng(kSeed);
  long losing = 0;
  long eternal = 0;
  long bad = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    if (bad++ == 0) first = why;
  };
  for (const std::string& line : corpus::lines("all_le6")) {
    const Graph g = parse_graph6(line);
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
      const SafeFamily f = safe_family(g, k);
      for (VertexSet d : f.candidates()) {
        if (!is_dominating(g, d)) continue;
        if (!f.contains(d)) {
          ++losing;
          const WinningAttack w = find_winning_attack(g, d, f);
          if (w.status != AttackStatus::found || evaluate_strategy(g, d, w.sequence).verdict != Verdict::winning) {
            fail(line + " " + d.to_string() + " has no winning attack");
          }
          continue;
        }
        ++eternal;
        VertexSet c = d;
        for (int step = 0; step < kFuzzSteps; ++step) {
          // Half the attacks land on unguarded vertices, where the defender must move.
          const VertexSet open = g.vertices() - c;
          Vertex v = static_cast<Vertex>(rng() % n);
          if (!open.empty() && rng() % 2 == 0) {
            const auto choices = open.to_vector();
            v = choices[rng() % choices.size()];
          }
          const DefenderMove m = defender_move(f, c, v);
          const bool legal = m.next.contains(v) && (c.contains(v) ? m.next == c : c.contains(m.guard) &&
                                                                                     g.has_edge(m.guard, v) &&
                                                                                     m.next == c.without(m.guard).with(v));
          if (!legal || !is_dominating(g, m.next) || !f.contains(m.next)) {
            fail(line + " " + d.to_string() + " defeated at step " + std::to_string(step));
            break;
          }
          c = m.next;
        }
      }
    }
  }
  return {bad == 0 && losing > 0 && eternal > 0,
          std::to_string(losing) + " non-eternal sets all lost, " + std::to_string(eternal) + " eternal sets survived " +
              std::to_string(kFuzzSteps) + " attacks each, " + std::to_string(bad) + " failures" +
              (first.empty() ? "" : "; first " + first)};
}

Finding codec_round_trip() {
  std::ifstream in(corpus::path("connected_9"));
  long n = 0;
  long bad = 0;
  std::string first;
  for (std::string line; n < kCodecRecords && std::getline(in, line); ++n) {
    const std::string back = encode_graph6(parse_graph6(line));
    if (back != line && bad++ == 0) first = line + " -> " + back;
  }
  return {bad == 0 && n == kCodecRecords,
          std::to_string(n) + " records, " + std::to_string(bad) + " mismatches" + (first.empty() ? "" : "; first " + first)};
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = true;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-stretch") == 0) {
      stretch = false;
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::max(1, std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--skip-stretch] [--jobs N]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Finding()>>> criteria = {
      {"chain gamma <= alpha <= gamma_inf <= theta, connected n <= 8", chain_connected_le8},
      {"theta <= 3 implies maximum-demand, all graphs n <= 8", small_theta_max_demand},
      {"maximum-demand, all graphs n <= 8", all_max_demand_le8},
      {"maximum-demand, connected n = 9 (long run)", [&] { return all_max_demand_connected_9(jobs); }},
      {"planar gamma = gamma_inf implies gamma_inf = theta, planar n <= 9", [&] { return planar_hunt_le9(jobs); }},
      {"exactly two 10-vertex graphs with gamma_inf = 3 < theta = 4", [&] { return extremal_order_10(jobs); }},
      {"safe family equals game-tree oracle, n <= 6, 1 <= k <= n", oracle_equivalence_le6},
      {"gamma < theta certificates sound, n <= 7", certificate_soundness_le7},
      {"attack/defense duality, n <= 6", duality_le6},
      {"graph6 round trip, 100000 records", codec_round_trip},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!stretch && name.starts_with("exactly two")) {
      std::cout << "SKIP " << name << std::endl;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Finding v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << " [" << std::fixed
              << std::setprecision(1) << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
