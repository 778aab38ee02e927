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

// Corpus processing: classification records, filtered scans, counterexample
// hunts and obstruction reports over graph6 streams, written as JSONL.

#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "edom/graph6.hpp"
#include "edom/serialize.hpp"

namespace edom {

struct Timings {
  double gamma = 0;
  double alpha = 0;
  double gamma_inf = 0;
  double theta = 0;
  double planar = 0;
};

struct ClassificationRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int gamma = 0;
  int alpha = 0;
  int gamma_inf = 0;
  int theta = 0;
  bool planar = false;
  /// γ^∞ = θ.
  bool maximum_demand = false;
  /// γ = γ^∞ implies γ^∞ = θ.
  bool gamma_theta_ok = true;
  /// A solver threw or the invariant chain failed; `error` says which.
  bool poisoned = false;
  std::string error;
  Timings timings;
  std::optional<Json> certificates;
};

struct ClassifyOptions {
  bool certificates = false;
  long cap_mcp = kDefaultMcpCap;
};

namespace detail {

template <class F>
auto timed(double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace detail

/// All four invariants plus planarity. Never throws: failures poison the record.
inline ClassificationRecord classify(const Graph& g, const ClassifyOptions& opt = {}, std::string graph6 = {}) {
  ClassificationRecord r;
  r.n = g.order();
  r.m = g.size();
  try {
    r.graph6 = graph6.empty() ? encode_graph6(g) : std::move(graph6);
    auto gm = detail::timed(r.timings.gamma, [&] { return domination_number(g); });
    auto al = detail::timed(r.timings.alpha, [&] { return independence_number(g); });
    auto th = detail::timed(r.timings.theta, [&] { return clique_cover_number(g); });
    auto ed = detail::timed(r.timings.gamma_inf, [&] { return eternal_domination_number(g); });
    r.planar = detail::timed(r.timings.planar, [&] { return is_planar(g); });
    r.gamma = gm.value;
    r.alpha = al.value;
    r.theta = th.value;
    r.gamma_inf = ed.value;
    r.maximum_demand = r.gamma_inf == r.theta;
    r.gamma_theta_ok = r.gamma != r.gamma_inf || r.maximum_demand;
    if (!(r.gamma <= r.alpha && r.alpha <= r.gamma_inf && r.gamma_inf <= r.theta)) {
      r.poisoned = true;
      r.error = "invariant chain gamma <= alpha <= gamma_inf <= theta violated";
    }
    if (opt.certificates) {
      Json c{{"dominating_set", gm.witness},
             {"independent_set", al.witness},
             {"clique_partition", th.witness},
             {"safe_family", family_json(ed.certificate)}};
      if (r.gamma < r.theta) {
        Json gt = Json::array();
        const Lemma9Search s = lemma9_witness(g, kDefaultLemma9Budget, opt.cap_mcp);
        if (s.certificate) gt.push_back(certificate_json(*s.certificate));
        for (const auto& cert : lemma10_scan(g)) gt.push_back(certificate_json(cert));
        c["gamma_less_theta"] = gt;
      }
      r.certificates = std::move(c);
    }
  } catch (const std::exception& e) {
    r.poisoned = true;
    r.error = e.what();
  }
  return r;
}

inline Json record_json(const ClassificationRecord& r, bool timings = true) {
  Json j{{"schema_version", kSchemaVersion},
         {"kind", "classification"},
         {"graph6", r.graph6},
         {"n", r.n},
         {"m", r.m},
         {"gamma", r.gamma},
         {"alpha", r.alpha},
         {"gamma_inf", r.gamma_inf},
         {"theta", r.theta},
         {"planar", r.planar},
         {"maximum_demand", r.maximum_demand},
         {"gamma_theta_ok", r.gamma_theta_ok},
         {"poisoned", r.poisoned}};
  if (r.poisoned) j["error"] = r.error;
  if (timings) {
    j["timings_ms"] = {{"gamma", r.timings.gamma},
                       {"alpha", r.timings.alpha},
                       {"gamma_inf", r.timings.gamma_inf},
                       {"theta", r.timings.theta},
                       {"planar", r.timings.planar}};
  }
  if (r.certificates) j["certificates"] = *r.certificates;
  return j;
}

/// Conjunction of record filters: "planar", "theta<=K", "n<=K".
struct Filter {
  bool planar = false;
  std::optional<int> max_theta;
  std::optional<int> max_n;

  static Filter parse(const std::vector<std::string>& specs) {
    Filter f;
    for (const std::string& s : specs) {
      auto bound = [&](std::string_view prefix) -> std::optional<int> {
        if (!s.starts_with(prefix)) return std::nullopt;
        try {
          std::size_t used = 0;
          const int k = std::stoi(s.substr(prefix.size()), &used);
          if (used == s.size() - prefix.size() && k >= 0) return k;
        } catch (const std::exception&) {
        }
        throw Error("bad filter bound: " + s);
      };
      if (s == "planar") {
        f.planar = true;
      } else if (auto k = bound("theta<=")) {
        f.max_theta = f.max_theta ? std::min(*f.max_theta, *k) : *k;
      } else if (auto k = bound("n<=")) {
        f.max_n = f.max_n ? std::min(*f.max_n, *k) : *k;
      } else {
        throw Error("unknown filter: " + s);
      }
    }
    return f;
  }

  bool accepts(const Graph& g) const {
    if (max_n && g.order() > *max_n) return false;
    if (planar && !is_planar(g)) return false;
    if (max_theta && clique_cover_number(g).value > *max_theta) return false;
    return true;
  }

  std::string describe() const {
    std::string out;
    if (planar) out += "planar;";
    if (max_theta) out += "theta<=" + std::to_string(*max_theta) + ";";
    if (max_n) out += "n<=" + std::to_string(*max_n) + ";";
    return out;
  }
};

struct Tally {
  long records = 0;
  long malformed = 0;
  long filtered = 0;
  long prefiltered = 0;
  long family_checks = 0;
  long emitted = 0;
  long poisoned = 0;
  long counterexamples = 0;

  Tally& operator+=(const Tally& o) {
    records += o.records;
    malformed += o.malformed;
    filtered += o.filtered;
    prefiltered += o.prefiltered;
    family_checks += o.family_checks;
    emitted += o.emitted;
    poisoned += o.poisoned;
    counterexamples += o.counterexamples;
    return *this;
  }
  bool operator==(const Tally&) const = default;
};

inline Json tally_json(const Tally& t) {
  return {{"records", t.records},         {"malformed", t.malformed},
          {"filtered", t.filtered},       {"prefiltered", t.prefiltered},
          {"family_checks", t.family_checks}, {"emitted", t.emitted},
          {"poisoned", t.poisoned},       {"counterexamples", t.counterexamples}};
}

inline Tally tally_from_json(const Json& j) {
  Tally t;
  t.records = j.at("records");
  t.malformed = j.at("malformed");
  t.filtered = j.at("filtered");
  t.prefiltered = j.at("prefiltered");
  t.family_checks = j.at("family_checks");
  t.emitted = j.at("emitted");
  t.poisoned = j.at("poisoned");
  t.counterexamples = j.at("counterexamples");
  return t;
}

/// Resumable cursor. `task` fingerprints the verb and its options so a
/// checkpoint is never applied to a different run.
struct Checkpoint {
  std::string task;
  long input_lines = 0;
  std::uintmax_t output_bytes = 0;
  Tally tally;
};

inline void save_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  const Json j{{"schema_version", kSchemaVersion},
               {"task", c.task},
               {"input_lines", c.input_lines},
               {"output_bytes", c.output_bytes},
               {"tally", tally_json(c.tally)}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const Json j = Json::parse(in);
  if (j.at("schema_version") != kSchemaVersion) throw Error("checkpoint schema mismatch");
  return Checkpoint{j.at("task"), j.at("input_lines"), j.at("output_bytes"), tally_from_json(j.at("tally"))};
}

/// Result of processing one input record.
struct Outcome {
  std::string error;
  std::string output;
  Tally delta;
};

using RecordFn = std::function<Outcome(const Graph&, const std::string& graph6)>;

struct StreamOptions {
  int jobs = 1;
  std::size_t batch = 256;
  bool strict = false;
  /// Stop after this many input lines (resume picks up from there).
  std::optional<long> limit;
  std::optional<std::filesystem::path> checkpoint;
  std::ostream* log = &std::cerr;
};

struct StreamResult {
  Tally tally;
  long input_lines = 0;
  bool aborted = false;
  bool complete = false;
};

namespace detail {

inline Outcome run_record(const RecordFn& fn, std::string_view line) {
  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const Graph6Error& e) {
    Outcome o;
    o.error = e.what();
    o.delta.malformed = 1;
    return o;
  }
  std::string text(line);
  while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.pop_back();
  if (text.starts_with(kGraph6Header)) text.erase(0, kGraph6Header.size());
  Outcome o = fn(g, text);
  o.delta.records += 1;
  return o;
}

}  // namespace detail

/// Drives `fn` over a graph6 stream. Lines are processed in rounds of
/// jobs * batch; workers take contiguous slices and output is written in input
/// order, so results do not depend on `jobs`. A checkpoint, when configured,
/// is rewritten atomically after every round.
inline StreamResult run_stream(const std::string& task, std::istream& in, std::ostream& out, const StreamOptions& opt,
                               const RecordFn& fn, const std::optional<Checkpoint>& resume = std::nullopt) {
  StreamResult res;
  std::uintmax_t bytes = 0;
  if (resume) {
    if (resume->task != task) throw Error("checkpoint belongs to a different task: " + resume->task);
    res.tally = resume->tally;
    bytes = resume->output_bytes;
    std::string skip;
    while (res.input_lines < resume->input_lines && std::getline(in, skip)) ++res.input_lines;
  }
  const int jobs = std::max(1, opt.jobs);
  const std::size_t round = static_cast<std::size_t>(jobs) * std::max<std::size_t>(1, opt.batch);
  std::vector<std::pair<long, std::string>> lines;
  std::vector<Outcome> outcomes;
  bool eof = false;
  while (!eof && !res.aborted) {
    lines.clear();
    long consumed = res.input_lines;
    std::string line;
    while (lines.size() < round) {
      if (opt.limit && consumed >= *opt.limit) {
        eof = true;
        break;
      }
      if (!std::getline(in, line)) {
        eof = true;
        res.complete = true;
        break;
      }
      ++consumed;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      lines.emplace_back(consumed, line);
    }
    outcomes.assign(lines.size(), {});
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) outcomes[i] = detail::run_record(fn, lines[i].second);
    };
    if (jobs == 1 || lines.size() < 2) {
      work(0, lines.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t per = (lines.size() + jobs - 1) / jobs;
      for (std::size_t lo = 0; lo < lines.size(); lo += per) pool.emplace_back(work, lo, std::min(lines.size(), lo + per));
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const Outcome& o = outcomes[i];
      if (!o.error.empty()) {
        *opt.log << "line " << lines[i].first << ": " << o.error << '\n';
        if (opt.strict) {
          res.tally.malformed += 1;
          res.input_lines = lines[i].first - 1;
          res.aborted = true;
          res.complete = false;
          break;
        }
      }
      if (!o.output.empty()) {
        out << o.output << '\n';
        bytes += o.output.size() + 1;
      }
      res.tally += o.delta;
    }
    if (!res.aborted) res.input_lines = consumed;
    out.flush();
    if (opt.checkpoint) save_checkpoint(*opt.checkpoint, {task, res.input_lines, bytes, res.tally});
  }
  return res;
}

/// One ClassificationRecord line per graph passing `filter`.
inline RecordFn scan_fn(const Filter& filter, const ClassifyOptions& copt = {}, bool timings = true) {
  return [=](const Graph& g, const std::string& g6) {
    Outcome o;
    if (!filter.accepts(g)) {
      o.delta.filtered = 1;
      return o;
    }
    const ClassificationRecord r = classify(g, copt, g6);
    o.output = record_json(r, timings).dump();
    o.delta.emitted = 1;
    o.delta.poisoned = r.poisoned;
    o.delta.counterexamples = !r.gamma_theta_ok;
    return o;
  };
}

enum class HuntMode { planar_gamma_theta, max_demand };

inline const char* to_string(HuntMode m) {
  return m == HuntMode::planar_gamma_theta ? "planar-gamma-theta" : "max-demand";
}

inline HuntMode parse_hunt_mode(const std::string& s) {
  if (s == "planar-gamma-theta") return HuntMode::planar_gamma_theta;
  if (s == "max-demand") return HuntMode::max_demand;
  throw Error("unknown hunt mode: " + s);
}

/// planar-gamma-theta: planar graphs with γ = γ^∞ < θ.
/// max-demand: graphs with γ^∞ < θ.
/// θ is computed first, then α; when α = θ the graph is skipped (γ^∞ is
/// squeezed between them). Otherwise a single safe-family computation
/// decides: at k = γ for the planar mode, at k = θ - 1 for max-demand.
/// Every hit is reclassified from scratch with certificates before it is
/// emitted; a hit that does not survive the replay is emitted as poisoned.
inline RecordFn hunt_fn(HuntMode mode, bool timings = true) {
  return [=](const Graph& g, const std::string& g6) {
    Outcome o;
    if (mode == HuntMode::planar_gamma_theta && !is_planar(g)) {
      o.delta.filtered = 1;
      return o;
    }
    const int theta = clique_cover_number(g).value;
    const int alpha = independence_number(g).value;
    if (alpha == theta) {
      o.delta.prefiltered = 1;
      return o;
    }
    o.delta.family_checks = 1;
    const int k = mode == HuntMode::planar_gamma_theta ? domination_number(g).value : theta - 1;
    if (!has_safe_family(g, k)) return o;
    ClassificationRecord r = classify(g, {.certificates = true}, g6);
    const bool confirmed = mode == HuntMode::planar_gamma_theta ? r.planar && !r.gamma_theta_ok : !r.maximum_demand;
    if (!confirmed && !r.poisoned) {
      r.poisoned = true;
      r.error = "hit did not survive reclassification";
    }
    o.output = record_json(r, timings).dump();
    o.delta.emitted = 1;
    o.delta.poisoned = r.poisoned;
    o.delta.counterexamples = confirmed;
    return o;
  };
}

/// One obstruction report line per graph.
inline RecordFn obstruct_fn(const ObstructionOptions& opt = {}) {
  return [=](const Graph& g, const std::string& g6) {
    Outcome o;
    Json j{{"schema_version", kSchemaVersion}, {"graph6", g6}};
    try {
      const Json report = report_json(obstruction_report(g, opt));
      for (auto& [key, value] : report.items()) j[key] = value;
    } catch (const std::exception& e) {
      j["kind"] = "obstruction";
      j["poisoned"] = true;
      j["error"] = e.what();
      o.delta.poisoned = 1;
    }
    o.output = j.dump();
    o.delta.emitted = 1;
    return o;
  };
}

}  // namespace edom
