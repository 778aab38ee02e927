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

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "edom/families.hpp"
#include "edom/harness.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("edom_harness_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("classification of small named graphs") {
  auto k1 = classify(fam::complete(1));
  CHECK(k1.gamma == 1);
  CHECK(k1.alpha == 1);
  CHECK(k1.gamma_inf == 1);
  CHECK(k1.theta == 1);
  CHECK(k1.maximum_demand);
  CHECK(k1.graph6 == "@");

  auto c5 = classify(fam::cycle(5));
  CHECK(std::tuple(c5.gamma, c5.alpha, c5.gamma_inf, c5.theta) == std::tuple(2, 2, 3, 3));
  CHECK(c5.maximum_demand);
  CHECK(c5.planar);

  auto c6 = classify(fam::cycle(6));
  CHECK(std::tuple(c6.gamma, c6.alpha, c6.gamma_inf, c6.theta) ==
        std::tuple(oracle::gamma(fam::cycle(6)), oracle::alpha(fam::cycle(6)),
                   oracle::eternal_domination_number(fam::cycle(6)), oracle::theta(fam::cycle(6))));
  CHECK(c6.gamma == 2);
  CHECK(c6.gamma_inf == 3);
  CHECK(c6.gamma_theta_ok);
  CHECK_FALSE(c6.poisoned);

  auto j = record_json(c5);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["kind"] == "classification");
  CHECK(j.contains("timings_ms"));
  CHECK_FALSE(record_json(c5, false).contains("timings_ms"));
  CHECK_FALSE(j.contains("error"));
}

TEST_CASE("classification matches brute force on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    auto r = classify(g);
    REQUIRE_FALSE(r.poisoned);
    REQUIRE(r.gamma == oracle::gamma(g));
    REQUIRE(r.alpha == oracle::alpha(g));
    REQUIRE(r.theta == oracle::theta(g));
    REQUIRE(r.gamma_inf == oracle::eternal_domination_number(g));
    REQUIRE(r.maximum_demand == (r.gamma_inf == r.theta));
    REQUIRE((!r.maximum_demand || r.gamma_theta_ok));
  }
}

TEST_CASE("attached certificates check out independently") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    auto r = classify(g, {.certificates = true});
    REQUIRE(r.certificates);
    const Json& c = *r.certificates;
    REQUIRE(family_certificate_violation(g, c["safe_family"]).empty());
    REQUIRE(c["safe_family"]["k"] == r.gamma_inf);
    REQUIRE(is_dominating(g, c["dominating_set"].get<VertexSet>()));
    REQUIRE(c["clique_partition"].get<CliquePartition>().is_valid_for(g));
    if (c.contains("gamma_less_theta")) {
      REQUIRE(r.gamma < r.theta);
      for (const Json& cert : c["gamma_less_theta"]) {
        auto back = certificate_from_json(cert);
        REQUIRE(certificate_json(back) == cert);
        REQUIRE(certificate_violation(g, back).empty());
      }
    }
  }
}

TEST_CASE("tampered family certificates are rejected") {
  Graph c5 = fam::cycle(5);
  Json cert = family_json(safe_family(c5, 3));
  REQUIRE(family_certificate_violation(c5, cert).empty());

  Json wrong_move = cert;
  for (auto& row : wrong_move["moves"]) {
    for (auto& u : row) {
      if (u != -1) {
        u = (u.get<int>() + 2) % 5;
        break;
      }
    }
  }
  CHECK_FALSE(family_certificate_violation(c5, wrong_move).empty());

  // Remove the configuration the first recorded move leads to.
  Json dropped = cert;
  const VertexSet from = cert["configs"][0].get<VertexSet>();
  Vertex v = 0;
  while (from.contains(v)) ++v;
  const VertexSet to = from.without(cert["moves"][0][v].get<int>()).with(v);
  for (std::size_t i = 0; i < dropped["configs"].size(); ++i) {
    if (dropped["configs"][i].get<VertexSet>() == to) {
      dropped["configs"].erase(dropped["configs"].begin() + i);
      dropped["moves"].erase(dropped["moves"].begin() + i);
      break;
    }
  }
  REQUIRE(dropped["configs"].size() + 1 == cert["configs"].size());
  CHECK_FALSE(family_certificate_violation(c5, dropped).empty());

  Json not_dominating = family_json(safe_family(fam::path(4), 2));
  CHECK(family_certificate_violation(fam::path(4), not_dominating).empty());
  not_dominating["configs"][0] = Json::array({0, 1});
  CHECK_FALSE(family_certificate_violation(fam::path(4), not_dominating).empty());
  CHECK_FALSE(family_certificate_violation(c5, Json::object()).empty());
}

TEST_CASE("filters") {
  auto f = Filter::parse({"planar", "theta<=3", "n<=6"});
  CHECK(f.planar);
  CHECK(*f.max_theta == 3);
  CHECK(*f.max_n == 6);
  CHECK(f.accepts(fam::cycle(5)));
  CHECK_FALSE(f.accepts(fam::cycle(7)));
  CHECK_FALSE(f.accepts(fam::complete(5).order() <= 6 ? fam::complete(5) : Graph(0)));
  CHECK_FALSE(Filter::parse({"theta<=2"}).accepts(fam::cycle(5)));
  CHECK(Filter::parse({}).accepts(fam::petersen()));
  CHECK_THROWS_AS(Filter::parse({"theta<3"}), Error);
  CHECK_THROWS_AS(Filter::parse({"n<=x"}), Error);
  CHECK_THROWS_AS(Filter::parse({"n<=-1"}), Error);
}

TEST_CASE("scan output does not depend on the worker count") {
  const std::string input = slurp(corpus::path("all_le6"));
  auto run = [&](int jobs, bool timings) {
    std::istringstream in(input);
    std::ostringstream out;
    StreamOptions opt;
    opt.jobs = jobs;
    opt.batch = 7;
    auto res = run_stream("scan", in, out, opt, scan_fn({}, {}, timings));
    REQUIRE(res.complete);
    REQUIRE(res.tally.records == 208);
    REQUIRE(res.tally.emitted == 208);
    return out.str();
  };
  const std::string one = run(1, false);
  CHECK(one == run(3, false));
  CHECK(one == run(1, false));

  auto strip = [](std::string text) {
    std::string out;
    for (Json j : parse_lines(text)) {
      j.erase("timings_ms");
      out += j.dump() + "\n";
    }
    return out;
  };
  CHECK(strip(run(2, true)) == one);

  auto lines = parse_lines(one);
  REQUIRE(lines.size() == 208);
  for (std::size_t i = 0; i < lines.size(); ++i) CHECK(lines[i]["graph6"] == corpus::lines("all_le6")[i]);
}

TEST_CASE("checkpoint resume reproduces the uninterrupted run") {
  const std::string input = slurp(corpus::path("all_le6"));
  const auto cp = temp_path("scan.ckpt");
  std::filesystem::remove(cp);
  StreamOptions opt;
  opt.batch = 10;
  opt.checkpoint = cp;

  std::ostringstream full;
  {
    std::istringstream in(input);
    StreamOptions plain = opt;
    plain.checkpoint.reset();
    run_stream("scan|", in, full, plain, scan_fn({}, {}, false));
  }

  std::string partial;
  {
    std::istringstream in(input);
    std::ostringstream out;
    StreamOptions first = opt;
    first.limit = 75;
    auto res = run_stream("scan|", in, out, first, scan_fn({}, {}, false));
    CHECK_FALSE(res.complete);
    CHECK(res.input_lines == 75);
    partial = out.str();
  }
  auto saved = load_checkpoint(cp);
  REQUIRE(saved);
  CHECK(saved->input_lines == 75);
  CHECK(saved->output_bytes == partial.size());
  CHECK(saved->tally.records == 75);

  // Output written after the last checkpoint is discarded on resume.
  partial += "{\"half\":";
  partial.resize(saved->output_bytes);
  std::istringstream in(input);
  std::ostringstream rest;
  auto res = run_stream("scan|", in, rest, opt, scan_fn({}, {}, false), saved);
  CHECK(res.complete);
  CHECK(res.tally.records == 208);
  CHECK(partial + rest.str() == full.str());

  CHECK_THROWS_AS(run_stream("hunt|", in, rest, opt, scan_fn({}), saved), Error);
  std::filesystem::remove(cp);
}

TEST_CASE("malformed records are logged and skipped unless strict") {
  const std::string input = "Bw\n\nC~\n?bad\nD??\n";
  std::istringstream in(input);
  std::ostringstream out, log;
  StreamOptions opt;
  opt.log = &log;
  auto res = run_stream("scan", in, out, opt, scan_fn({}));
  CHECK(res.complete);
  CHECK(res.tally.records == 3);
  CHECK(res.tally.malformed == 1);
  CHECK(parse_lines(out.str()).size() == 3);
  CHECK(log.str().starts_with("line 4: "));
  CHECK(log.str().find("byte") != std::string::npos);

  std::istringstream again(input);
  std::ostringstream out2, log2;
  opt.strict = true;
  opt.log = &log2;
  auto strict = run_stream("scan", again, out2, opt, scan_fn({}));
  CHECK(strict.aborted);
  CHECK(strict.input_lines == 3);
  CHECK(parse_lines(out2.str()).size() == 2);
}

TEST_CASE("max-demand hunt finds nothing below ten vertices") {
  std::ifstream in(corpus::path("connected_le8"));
  std::ostringstream out;
  auto res = run_stream("hunt", in, out, {}, hunt_fn(HuntMode::max_demand));
  CHECK(res.tally.records == 12113);
  CHECK(res.tally.counterexamples == 0);
  CHECK(out.str().empty());
  CHECK(res.tally.prefiltered + res.tally.family_checks == res.tally.records);
  CHECK(res.tally.prefiltered > 0);
}

TEST_CASE("the alpha = theta prefilter never hides a non-maximum-demand graph") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    if (oracle::alpha(g) == oracle::theta(g)) REQUIRE(oracle::eternal_domination_number(g) == oracle::theta(g));
  }
}

TEST_CASE("max-demand hunt on the recorded ten-vertex graphs") {
  std::ifstream in(std::string(EDOM_TEST_DATA_DIR) + "/extremal10.g6");
  std::ostringstream out;
  auto res = run_stream("hunt", in, out, {}, hunt_fn(HuntMode::max_demand, false));
  CHECK(res.tally.counterexamples == 2);
  CHECK(res.tally.poisoned == 0);
  for (const Json& j : parse_lines(out.str())) {
    CHECK(j["n"] == 10);
    CHECK(j["gamma_inf"] == 3);
    CHECK(j["theta"] == 4);
    CHECK(j["maximum_demand"] == false);
    const Graph g = parse_graph6(j["graph6"].get<std::string>());
    CHECK(family_certificate_violation(g, j["certificates"]["safe_family"]).empty());
    CHECK(j["certificates"]["safe_family"]["k"] == 3);
  }
}

TEST_CASE("planar hunt is empty on planar graphs n <= 8") {
  std::ifstream in(corpus::path("connected_le8"));
  std::ostringstream out;
  auto res = run_stream("hunt", in, out, {}, hunt_fn(HuntMode::planar_gamma_theta));
  CHECK(res.tally.counterexamples == 0);
  CHECK(res.tally.filtered > 0);
  CHECK(res.tally.filtered + res.tally.prefiltered + res.tally.family_checks == res.tally.records);
}

TEST_CASE("obstruction stream over n <= 7") {
  std::ifstream in(corpus::path("all_le7"));
  std::ostringstream out;
  StreamOptions opt;
  opt.jobs = 2;
  auto res = run_stream("obstruct", in, out, opt, obstruct_fn());
  CHECK(res.tally.emitted == 1252);
  for (const Json& j : parse_lines(out.str())) {
    REQUIRE(j["kind"] == "obstruction");
    REQUIRE(j["obstructed"] == true);
  }
  std::istringstream bowtie(encode_graph6(fam::bowtie()) + "\n");
  std::ostringstream one;
  run_stream("obstruct", bowtie, one, {}, obstruct_fn());
  CHECK(Json::parse(one.str())["cutvertex"] == 0);
}
