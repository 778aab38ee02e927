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

// edom: command-line front end.
//
//   edom invariants <g6|->
//   edom classify|scan|hunt|obstruct [FILE|-] [stream flags]
//   edom strategy eval <g6> --guards 0,2 --attacks 1,3,1
//   edom game serve --port 8080
//
// Exit status: 0 clean, 1 counterexamples found, 2 input error in strict mode
// (or a usage error), 3 any other failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "edom/harness.hpp"
#include "edom/server.hpp"

using namespace edom;

namespace {

struct StreamArgs {
  std::string input = "-";
  std::string out;
  std::string checkpoint;
  std::vector<std::string> filters;
  std::string mode = "max-demand";
  int jobs = 1;
  std::size_t batch = 256;
  long limit = -1;
  long cap_mcp = kDefaultMcpCap;
  bool strict = false;
  bool no_timings = false;
  bool certificates = false;
  bool full_lemma13 = false;
};

void add_stream_flags(CLI::App* cmd, StreamArgs& a) {
  cmd->add_option("input", a.input, "graph6 file, or - for stdin");
  cmd->add_option("--out,-o", a.out, "JSONL output file (default stdout)");
  cmd->add_option("--checkpoint", a.checkpoint, "resumable checkpoint file");
  cmd->add_option("--jobs,-j", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--batch", a.batch, "records per worker per round")->check(CLI::PositiveNumber);
  cmd->add_option("--limit", a.limit, "stop after this many input lines");
  cmd->add_option("--cap-mcp", a.cap_mcp, "cap on minimum clique partitions per graph")->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", a.strict, "abort on the first malformed record");
  cmd->add_flag("--no-timings", a.no_timings, "omit timing fields");
}

std::string task_name(const std::string& verb, const StreamArgs& a) {
  Json j{{"verb", verb}, {"input", a.input}, {"cap_mcp", a.cap_mcp}, {"timings", !a.no_timings}};
  if (verb == "scan" || verb == "classify") j["filter"] = Filter::parse(a.filters).describe();
  if (verb == "classify") j["certificates"] = a.certificates;
  if (verb == "hunt") j["mode"] = a.mode;
  if (verb == "obstruct") j["full_lemma13"] = a.full_lemma13;
  return j.dump();
}

int run_stream_verb(const std::string& verb, const StreamArgs& a) {
  RecordFn fn;
  const bool timings = !a.no_timings;
  if (verb == "classify" || verb == "scan") {
    fn = scan_fn(Filter::parse(a.filters), {.certificates = a.certificates, .cap_mcp = a.cap_mcp}, timings);
  } else if (verb == "hunt") {
    fn = hunt_fn(parse_hunt_mode(a.mode), timings);
  } else {
    fn = obstruct_fn({.full_lemma13 = a.full_lemma13, .cap_mcp = a.cap_mcp});
  }
  const std::string task = task_name(verb, a);

  StreamOptions opt;
  opt.jobs = a.jobs;
  opt.batch = a.batch;
  opt.strict = a.strict;
  if (a.limit >= 0) opt.limit = a.limit;
  std::optional<Checkpoint> resume;
  if (!a.checkpoint.empty()) {
    opt.checkpoint = a.checkpoint;
    resume = load_checkpoint(a.checkpoint);
    if (resume && resume->task != task) throw Error("checkpoint " + a.checkpoint + " belongs to a different run");
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (a.input != "-") {
    file.open(a.input);
    if (!file) throw Error("cannot open " + a.input);
    in = &file;
  }
  std::ofstream sink;
  std::ostream* out = &std::cout;
  if (!a.out.empty()) {
    if (resume) {
      if (!std::filesystem::exists(a.out)) throw Error("checkpoint given but " + a.out + " is missing");
      std::filesystem::resize_file(a.out, resume->output_bytes);
      sink.open(a.out, std::ios::app);
    } else {
      sink.open(a.out, std::ios::trunc);
    }
    if (!sink) throw Error("cannot write " + a.out);
    out = &sink;
  }

  const StreamResult r = run_stream(task, *in, *out, opt, fn, resume);
  Json summary{{"kind", "summary"}, {"verb", verb}, {"input_lines", r.input_lines}, {"complete", r.complete}};
  const Json counts = tally_json(r.tally);
  for (auto& [key, value] : counts.items()) summary[key] = value;
  std::cerr << summary.dump() << '\n';
  if (r.aborted) return 2;
  return r.tally.counterexamples > 0 ? 1 : 0;
}

std::vector<std::string> read_graph_args(const std::string& arg) {
  std::vector<std::string> lines;
  if (arg != "-") return {arg};
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line != kGraph6Header) lines.push_back(line);
  }
  return lines;
}

int run_invariants(const std::string& arg) {
  for (const std::string& g6 : read_graph_args(arg)) {
    const Graph g = parse_graph6(g6);
    const InvariantBundle b = invariants(g);
    const EternalResult e = eternal_domination_number(g);
    const Json j{{"graph6", g6},
                 {"n", g.order()},
                 {"m", g.size()},
                 {"gamma", b.gamma.value},
                 {"alpha", b.alpha.value},
                 {"gamma_inf", e.value},
                 {"theta", b.theta.value},
                 {"dominating_set", b.gamma.witness},
                 {"independent_set", b.alpha.witness},
                 {"clique_partition", b.theta.witness}};
    std::cout << j.dump() << '\n';
  }
  return 0;
}

VertexSet parse_vertex_list(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex out of range: " + std::to_string(v));
    s = s.with(static_cast<Vertex>(v));
  }
  return s;
}

int run_strategy_eval(const std::string& g6, const std::vector<int>& guards, const std::vector<int>& attacks) {
  const Graph g = parse_graph6(g6);
  const VertexSet d = parse_vertex_list(guards);
  AttackSequence seq(attacks.begin(), attacks.end());
  Json j{{"graph6", g6}, {"guards", d}};
  if (seq.empty()) {
    const WinningAttack w = find_winning_attack(g, d);
    j["status"] = to_string(w.status);
    if (w.status == AttackStatus::not_dominating || w.status == AttackStatus::found) j["attacks"] = w.sequence;
    if (w.status == AttackStatus::not_dominating) {
      std::cout << j.dump() << '\n';
      return 0;
    }
    seq = w.sequence;
  } else {
    j["attacks"] = seq;
  }
  const StrategyOutcome o = evaluate_strategy(g, d, seq);
  j["verdict"] = to_string(o.verdict);
  j["trace"] = o.trace;
  j["surviving"] = o.surviving;
  std::cout << j.dump() << '\n';
  return 0;
}

int run_serve(const std::string& address, int port, const GameLimits& limits) {
  GameService service(limits);
  GameServer server(service, address, static_cast<unsigned short>(port));
  server.stop_on_signals();
  std::cerr << "listening on " << address << ":" << server.port() << '\n';
  server.run();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eternal domination toolkit"};
  app.require_subcommand(1);

  std::string graph_arg;
  auto* inv = app.add_subcommand("invariants", "gamma, alpha, gamma_inf and theta with witnesses");
  inv->add_option("graph", graph_arg, "graph6 string, or - for one per stdin line")->required();

  StreamArgs sargs;
  auto* classify = app.add_subcommand("classify", "one classification record with certificates per graph");
  add_stream_flags(classify, sargs);
  classify->add_option("--filter", sargs.filters, "planar | theta<=K | n<=K (repeatable)");
  auto* scan = app.add_subcommand("scan", "classification records for graphs passing the filters");
  add_stream_flags(scan, sargs);
  scan->add_option("--filter", sargs.filters, "planar | theta<=K | n<=K (repeatable)");
  scan->add_flag("--certificates", sargs.certificates, "attach certificates");
  auto* hunt = app.add_subcommand("hunt", "search for graphs breaking a conjectured equality");
  add_stream_flags(hunt, sargs);
  hunt->add_option("--mode", sargs.mode, "planar-gamma-theta | max-demand")
      ->check(CLI::IsMember({"planar-gamma-theta", "max-demand"}));
  auto* obstruct = app.add_subcommand("obstruct", "structural obstruction report per graph");
  add_stream_flags(obstruct, sargs);
  obstruct->add_flag("--full-lemma13", sargs.full_lemma13, "check every independent set, not just |I| <= 2");

  std::string strategy_graph;
  std::vector<int> guards;
  std::vector<int> attacks;
  auto* strategy = app.add_subcommand("strategy", "attacker strategies");
  strategy->require_subcommand(1);
  auto* eval = strategy->add_subcommand("eval", "score a fixed attack sequence, or find one when none is given");
  eval->add_option("graph", strategy_graph, "graph6 string")->required();
  eval->add_option("--guards", guards, "starting guard vertices")->delimiter(',')->required();
  eval->add_option("--attacks", attacks, "attack sequence")->delimiter(',');

  std::string address = "127.0.0.1";
  int port = 8080;
  GameLimits limits;
  long ttl = limits.ttl.count();
  auto* game = app.add_subcommand("game", "interactive game server");
  game->require_subcommand(1);
  auto* serve = game->add_subcommand("serve", "serve the REST and WebSocket API");
  serve->add_option("--address", address, "bind address");
  serve->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--max-order", limits.max_order, "largest graph accepted")->check(CLI::Range(1, kMaxVertices));
  serve->add_option("--max-guards", limits.max_guards, "most guards accepted")->check(CLI::PositiveNumber);
  serve->add_option("--ttl", ttl, "idle session lifetime in seconds")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*inv) return run_invariants(graph_arg);
    if (*classify) sargs.certificates = true;
    for (auto [cmd, verb] : {std::pair{classify, "classify"}, {scan, "scan"}, {hunt, "hunt"}, {obstruct, "obstruct"}}) {
      if (*cmd) return run_stream_verb(verb, sargs);
    }
    if (*eval) return run_strategy_eval(strategy_graph, guards, attacks);
    if (*serve) {
      limits.ttl = std::chrono::seconds(ttl);
      return run_serve(address, port, limits);
    }
  } catch (const Graph6Error& e) {
    std::cerr << "edom: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "edom: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
