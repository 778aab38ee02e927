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

#include <random>

#include "edom/families.hpp"
#include "edom/game.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

Json create_body(const Graph& g, const std::string& mode, std::optional<VertexSet> guards, int k = 0) {
  Json body{{"graph6", encode_graph6(g)}, {"mode", mode}};
  if (guards) {
    body["guards"] = *guards;
  } else {
    body["k"] = k;
  }
  return body;
}

HttpReply post(GameService& s, const std::string& target, const Json& body) { return s.handle("POST", target, body.dump()); }

std::string create(GameService& s, const Graph& g, const std::string& mode, std::optional<VertexSet> guards, int k = 0) {
  HttpReply r = post(s, "/sessions", create_body(g, mode, guards, k));
  REQUIRE(r.status == 201);
  return r.body["id"];
}

HttpReply attack(GameService& s, const std::string& id, Vertex v) {
  return post(s, "/sessions/" + id + "/attack", {{"vertex", v}});
}

HttpReply defend(GameService& s, const std::string& id, Vertex u) {
  return post(s, "/sessions/" + id + "/defend", {{"guard", u}});
}

Json get(GameService& s, const std::string& id) {
  HttpReply r = s.handle("GET", "/sessions/" + id, "");
  REQUIRE(r.status == 200);
  return r.body;
}

/// Replays the summary's history move by move.
bool history_consistent(const Graph& g, const Json& summary) {
  VertexSet c = summary["start"].get<VertexSet>();
  for (const Json& m : summary["history"]) {
    const Vertex v = m["attack"];
    if (!m["guard"].is_null()) {
      const Vertex u = m["guard"];
      if (!c.contains(u) || (u != v && !g.has_edge(u, v))) return false;
      c = c.without(u).with(v);
    }
    if (c != m["config"].get<VertexSet>()) return false;
  }
  return c == summary["config"].get<VertexSet>();
}

}  // namespace

TEST_CASE("creating sessions") {
  GameService s;
  auto k3 = post(s, "/sessions", create_body(fam::complete(3), "human-attacker", std::nullopt, 1));
  REQUIRE(k3.status == 201);
  CHECK(k3.body["eternal_start"] == true);
  CHECK(k3.body["status"] == "ongoing");
  CHECK(k3.body["k"] == 1);

  auto c5 = post(s, "/sessions", create_body(fam::cycle(5), "human-attacker", VertexSet{0, 2}));
  REQUIRE(c5.status == 201);
  CHECK(c5.body["eternal_start"] == false);
  CHECK(oracle::eternal_sets(fam::cycle(5), 2).empty());

  auto bad = post(s, "/sessions", {{"graph6", "D?"}, {"k", 1}});
  CHECK(bad.status == 400);
  CHECK(bad.body["offset"] == 2);

  auto undominated = post(s, "/sessions", create_body(fam::path(4), "human-attacker", VertexSet{0}));
  CHECK(undominated.status == 422);
  CHECK(undominated.body["undominated"] == 2);
  CHECK(std::string(undominated.body["error"]).find("vertex 2") != std::string::npos);

  CHECK(post(s, "/sessions", create_body(fam::cycle(17), "human-attacker", std::nullopt, 6)).status == 422);
  CHECK(post(s, "/sessions", create_body(fam::empty(10), "human-attacker", std::nullopt, 10)).status == 422);
  CHECK(post(s, "/sessions", create_body(fam::cycle(5), "human-attacker", std::nullopt, 0)).status == 422);
  CHECK(post(s, "/sessions", create_body(fam::cycle(5), "human-attacker", std::nullopt, 1)).status == 422);
  CHECK(post(s, "/sessions", create_body(fam::cycle(5), "spectator", std::nullopt, 3)).status == 400);
  CHECK(s.handle("POST", "/sessions", "{oops").status == 400);
  CHECK(s.handle("GET", "/sessions/none", "").status == 404);
  CHECK(s.handle("GET", "/elsewhere", "").status == 404);
  CHECK(s.handle("DELETE", "/sessions", "").status == 405);
  CHECK(s.session_count() == 2);
}

TEST_CASE("engine defender answers attacks") {
  GameService s(GameLimits{}, 1);
  const std::string id = create(s, fam::cycle(5), "human-attacker", VertexSet{0, 1, 3});
  auto stay = attack(s, id, 1);
  REQUIRE(stay.status == 200);
  CHECK(stay.body["guard"] == 1);
  CHECK(stay.body["config"] == Json::array({0, 1, 3}));
  CHECK(stay.body["status"] == "ongoing");

  auto moved = attack(s, id, 2);
  REQUIRE(moved.status == 200);
  const Vertex u = moved.body["guard"];
  CHECK(fam::cycle(5).has_edge(u, 2));
  CHECK(attack(s, id, 5).status == 400);
  CHECK(defend(s, id, 0).status == 409);
  CHECK(post(s, "/sessions/" + id + "/attack", {{"vertex", "two"}}).status == 400);
  CHECK(history_consistent(fam::cycle(5), get(s, id)));
}

TEST_CASE("scripted winning attacks defeat the engine defender on n <= 6") {
  GameService s;
  int games = 0;
  for (const Graph& g : corpus::graphs("all_le6")) {
    for (int k = 1; k <= g.order(); ++k) {
      const SafeFamily f = safe_family(g, k);
      for (VertexSet d : f.candidates()) {
        if (f.contains(d)) continue;
        const WinningAttack w = find_winning_attack(g, d, f);
        REQUIRE(w.status == AttackStatus::found);
        const std::string id = create(s, g, "human-attacker", d);
        std::string status;
        for (Vertex v : w.sequence) {
          auto r = attack(s, id, v);
          REQUIRE(r.status == 200);
          status = r.body["status"];
          if (status != "ongoing") break;
        }
        REQUIRE(status == "defender-defeated");
        auto after = attack(s, id, 0);
        REQUIRE(after.status == 409);
        const Json summary = get(s, id);
        REQUIRE(summary["status"] == "defender-defeated");
        REQUIRE(history_consistent(g, summary));
        ++games;
      }
    }
  }
  CHECK(games == 897);
}

TEST_CASE("engine defender from a safe configuration survives fuzzed attacks") {
  std::mt19937_64 rng(2026);
  auto graphs = corpus::graphs("connected_le8");
  GameService s;
  long steps = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph& g = graphs[rng() % graphs.size()];
    const int k = eternal_domination_number(g).value;
    const std::string id = create(s, g, "human-attacker", std::nullopt, k);
    REQUIRE(get(s, id)["eternal_start"] == true);
    for (int i = 0; i < 200; ++i, ++steps) {
      auto r = attack(s, id, static_cast<Vertex>(rng() % g.order()));
      REQUIRE(r.status == 200);
      REQUIRE(r.body["status"] == "ongoing");
      REQUIRE(is_dominating(g, r.body["config"].get<VertexSet>()));
    }
    const Json summary = get(s, id);
    REQUIRE(summary["in_safe_family"] == true);
    REQUIRE(history_consistent(g, summary));
  }
  CHECK(steps == 10'000);
}

TEST_CASE("engine attacker wins within the elimination round from every non-eternal start on n <= 6") {
  // Exhaustive over defender replies: the attacker's choice is fixed by the
  // elimination trace, so the tree only branches on the defender.
  int starts = 0;
  for (const Graph& g : corpus::graphs("all_le6")) {
    for (int k = 1; k <= g.order(); ++k) {
      const SafeFamily f = safe_family(g, k);
      for (VertexSet d : f.candidates()) {
        if (f.contains(d)) continue;
        const int bound = f.death_round(d);
        auto longest = [&](auto&& self, VertexSet c) -> int {
          const Vertex v = *f.eliminating_attack(c);
          REQUIRE_FALSE(c.contains(v));
          int worst = 1;
          for (Vertex u : c & g.neighbors(v)) {
            const VertexSet next = c.without(u).with(v);
            if (!is_dominating(g, next)) continue;
            REQUIRE_FALSE(f.contains(next));
            worst = std::max(worst, 1 + self(self, next));
          }
          return worst;
        };
        REQUIRE(longest(longest, d) <= bound);
        ++starts;
      }
    }
  }
  CHECK(starts == 897);

  // The same through the service with a random defender.
  std::mt19937_64 rng(5);
  GameService s;
  for (const Graph& g : corpus::graphs("all_le6")) {
    const int k = eternal_domination_number(g).value - 1;
    if (k < 1) continue;
    const SafeFamily f = safe_family(g, k);
    if (f.candidates().empty()) continue;
    const std::string id = create(s, g, "human-defender", std::nullopt, k);
    Json state = get(s, id);
    const int bound = f.death_round(state["start"].get<VertexSet>());
    int moves = 0;
    while (state["status"] == "ongoing") {
      const Vertex v = state["pending_attack"];
      const VertexSet c = state["config"].get<VertexSet>();
      const auto guards = (c & g.neighbors(v)).to_vector();
      REQUIRE_FALSE(guards.empty());
      REQUIRE(defend(s, id, guards[rng() % guards.size()]).status == 200);
      state = get(s, id);
      ++moves;
    }
    REQUIRE(state["status"] == "defender-defeated");
    REQUIRE(moves <= bound);
    REQUIRE(history_consistent(g, state));
  }
}

TEST_CASE("human defender moves") {
  GameService s;
  const Graph c5 = fam::cycle(5);
  const std::string id = create(s, c5, "human-defender", VertexSet{0, 2});
  Json state = get(s, id);
  REQUIRE(state["status"] == "ongoing");
  const Vertex v = state["pending_attack"];
  const VertexSet c = state["config"].get<VertexSet>();
  REQUIRE_FALSE(c.contains(v));
  for (Vertex u = 0; u < 5; ++u) {
    if (c.contains(u) && c5.has_edge(u, v)) continue;
    CHECK(defend(s, id, u).status == 409);
  }
  CHECK(defend(s, id, 7).status == 400);
  CHECK(get(s, id)["config"] == state["config"]);
  CHECK(get(s, id)["history"].empty());
  CHECK(attack(s, id, 0).status == 409);

  // Any legal move is accepted; the game ends once the guards stop dominating.
  int rounds = 0;
  while (state["status"] == "ongoing") {
    const Vertex a = state["pending_attack"];
    const Vertex u = (state["config"].get<VertexSet>() & c5.neighbors(a)).to_vector().front();
    REQUIRE(defend(s, id, u).status == 200);
    state = get(s, id);
    ++rounds;
  }
  CHECK(state["status"] == "defender-defeated");
  CHECK_FALSE(is_dominating(c5, state["config"].get<VertexSet>()));
  CHECK(state["history"].size() == static_cast<std::size_t>(rounds));
  CHECK(defend(s, id, 0).status == 409);

  // Starting inside the safe family the engine concedes at once.
  const std::string safe = create(s, c5, "human-defender", std::nullopt, 3);
  CHECK(get(s, safe)["status"] == "attacker-gave-up");
}

TEST_CASE("hints are legal and deterministic") {
  GameService s;
  const Graph c6 = fam::cycle(6);
  const std::string a = create(s, c6, "human-attacker", VertexSet{0, 3});
  Json h = s.handle("GET", "/sessions/" + a + "/hint", "").body;
  REQUIRE(h["available"] == true);
  CHECK(h == s.handle("GET", "/sessions/" + a + "/hint", "").body);
  CHECK(evaluate_strategy(c6, {0, 3}, h["sequence"].get<AttackSequence>()).verdict == Verdict::winning);

  const std::string e = create(s, c6, "human-attacker", std::nullopt, 3);
  Json none = s.handle("GET", "/sessions/" + e + "/hint", "").body;
  CHECK(none["available"] == false);
  CHECK(none["reason"] == "no winning attack known");

  for (const Graph& g : corpus::graphs("all_le6")) {
    if (g.order() < 2) continue;
    const int k = std::max(1, domination_number(g).value);
    const std::string d = create(s, g, "human-defender", std::nullopt, k);
    for (int step = 0; step < 20; ++step) {
      Json state = get(s, d);
      if (state["status"] != "ongoing") break;
      Json hint = s.handle("GET", "/sessions/" + d + "/hint", "").body;
      if (hint["available"] == false) break;
      REQUIRE(hint["attack"] == state["pending_attack"]);
      REQUIRE(defend(s, d, hint["guard"]).status == 200);
    }
    REQUIRE(history_consistent(g, get(s, d)));
  }
}

TEST_CASE("events reach subscribers") {
  GameService s;
  const std::string id = create(s, fam::cycle(5), "human-attacker", std::nullopt, 3);
  std::vector<Json> seen;
  auto token = s.subscribe(id, [&](const Json& e) { seen.push_back(e); });
  REQUIRE(token);
  REQUIRE(seen.size() == 1);
  CHECK(seen[0]["type"] == "snapshot");
  attack(s, id, 1);
  attack(s, id, 2);
  REQUIRE(seen.size() == 3);
  CHECK(seen[2]["type"] == "attack");
  CHECK(seen[2]["session"]["config"] == get(s, id)["config"]);
  s.unsubscribe(id, *token);
  attack(s, id, 4);
  CHECK(seen.size() == 3);
  CHECK_FALSE(s.subscribe("missing", [](const Json&) {}));
}

TEST_CASE("idle sessions expire") {
  GameService s(GameLimits{.ttl = std::chrono::seconds(10)});
  create(s, fam::cycle(5), "human-attacker", std::nullopt, 3);
  s.evict_expired(std::chrono::steady_clock::now() + std::chrono::seconds(5));
  CHECK(s.session_count() == 1);
  s.evict_expired(std::chrono::steady_clock::now() + std::chrono::seconds(11));
  CHECK(s.session_count() == 0);
}
