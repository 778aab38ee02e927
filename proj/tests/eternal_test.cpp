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
#include <set>

#include "edom/eternal.hpp"
#include "edom/families.hpp"
#include "edom/invariants.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

std::set<oracle::Mask> as_masks(const std::vector<VertexSet>& sets) {
  std::set<oracle::Mask> out;
  for (VertexSet s : sets) out.insert(s.bits());
  return out;
}

// The six-vertex ladder with rails u1-u2-u3, u4-u5-u6 and rungs u1u4, u2u5,
// u3u6; vertex u_i has index i - 1.
Graph ladder_h() { return fam::ladder(3); }

}  // namespace

TEST_CASE("safe families on named graphs") {
  for (int n = 1; n <= 6; ++n) {
    SafeFamily f = safe_family(fam::complete(n), 1);
    REQUIRE(f.size() == static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) CHECK(f.contains({v}));
  }
  CHECK(safe_family(fam::cycle(5), 2).empty());
  CHECK(safe_family(fam::path(3), 1).empty());
  CHECK_FALSE(safe_family(fam::path(3), 2).empty());
  CHECK(safe_family(Graph(0), 0).size() == 1);
  CHECK(safe_family(fam::path(3), 0).empty());
  CHECK_THROWS_AS(safe_family(fam::path(3), 4), Error);
}

TEST_CASE("eternal domination number on named graphs") {
  for (int n = 1; n <= 6; ++n) CHECK(eternal_domination_number(fam::complete(n)).value == 1);
  CHECK(eternal_domination_number(fam::cycle(5)).value == 3);
  CHECK(eternal_domination_number(fam::cycle(6)).value == 3);
  CHECK(eternal_domination_number(Graph(0)).value == 0);

  const Graph pet = fam::petersen();
  const int want = oracle::eternal_domination_number(pet);
  CHECK(want >= 4);
  CHECK(want <= 5);
  CHECK(eternal_domination_number(pet).value == want);
}

TEST_CASE("membership of specific sets") {
  for (const Graph& g : {fam::cycle(6), fam::ladder(3), fam::bowtie(), fam::petersen()}) {
    CliquePartition p = clique_cover_number(g).witness;
    VertexSet reps;
    for (VertexSet c : p) reps.insert(c.highest());
    CHECK(is_eternal_dominating(g, reps));
  }
  for_each_subset_of_size(fam::cycle(5).vertices(), 2, [](VertexSet s) { CHECK_FALSE(is_eternal_dominating(fam::cycle(5), s)); });
  CHECK_FALSE(is_eternal_dominating(fam::path(4), {0, 1}));
}

TEST_CASE("fixed attack sequences") {
  const Graph c5 = fam::cycle(5);
  auto stay = evaluate_strategy(c5, {0, 2}, {0, 2, 0});
  CHECK(stay.verdict == Verdict::losing);
  CHECK(stay.surviving == std::vector<VertexSet>{{0, 2}});

  auto one = evaluate_strategy(c5, {0, 2}, {3});
  CHECK(one.verdict == Verdict::losing);
  CHECK(one.surviving == std::vector<VertexSet>{{0, 3}});

  auto attack = find_winning_attack(c5, {0, 2});
  REQUIRE(attack.status == AttackStatus::found);
  CHECK(attack.sequence.size() <= 2);
  auto replay = evaluate_strategy(c5, {0, 2}, attack.sequence);
  CHECK(replay.verdict == Verdict::winning);
  CHECK(replay.surviving.empty());
  CHECK(replay.trace.back() == 0);

  CHECK_THROWS_AS(evaluate_strategy(c5, {0}, {1}), Error);
  CHECK_THROWS_AS(evaluate_strategy(c5, {0, 2}, {5}), Error);

  for (Vertex v = 0; v < 4; ++v) CHECK(find_winning_attack(fam::complete(4), {v}).status == AttackStatus::eternal);

  auto p3 = find_winning_attack(fam::path(3), {1});
  REQUIRE(p3.status == AttackStatus::found);
  CHECK(p3.sequence.size() == 1);
  CHECK(p3.sequence[0] != 1);

  auto nd = find_winning_attack(fam::path(4), {0});
  CHECK(nd.status == AttackStatus::not_dominating);
  REQUIRE(nd.sequence.size() == 1);
  CHECK(nd.sequence[0] >= 2);
}

TEST_CASE("ladder example for theta independence and strategies") {
  const Graph h = ladder_h();
  REQUIRE(h.size() == 7);
  const CliquePartition rungs({{0, 3}, {1, 4}, {2, 5}});
  const CliquePartition other({{0, 1}, {3, 4}, {2, 5}});
  REQUIRE(clique_cover_number(h).value == 3);
  auto mcps = enumerate_mcp(h);
  REQUIRE(mcps.complete);
  CHECK(std::find(mcps.partitions.begin(), mcps.partitions.end(), rungs) != mcps.partitions.end());
  CHECK(std::find(mcps.partitions.begin(), mcps.partitions.end(), other) != mcps.partitions.end());

  CHECK(h.is_independent({0, 2, 4}));
  CHECK_FALSE(h.is_independent({0, 1, 2}));
  CHECK(is_theta_independent_in({0, 1, 2}, rungs));
  CHECK_FALSE(is_theta_independent_in({0, 2, 3}, rungs));
  CHECK(is_theta_independent_in({0, 2, 3}, other));
  CHECK(is_theta_independent(h, {0, 2, 3}).decision == Decision::yes);
  CHECK(is_theta_independent(h, {0, 1, 3}).decision == Decision::no);
  for (const auto& p : mcps.partitions) CHECK((p.contains_member({0, 1}) || p.contains_member({0, 3})));

  const VertexSet d{1, 4};
  REQUIRE(is_dominating(h, d));
  CHECK(evaluate_strategy(h, d, {0, 2}).verdict == Verdict::winning);
  CHECK_FALSE(is_eternal_dominating(h, d));
  // Attacking u1 forces u2 onto u1, after which u3 is undominated, so the
  // longer sequence is winning as well.
  CHECK(evaluate_strategy(h, d, {0}).verdict == Verdict::winning);
  CHECK(evaluate_strategy(h, d, {0, 1, 2}).verdict == Verdict::winning);
}

TEST_CASE("minimum eternal dominating sets") {
  CHECK(meds_family(fam::complete(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
  for (const Graph& g : {fam::path(3), fam::cycle(5)}) {
    auto meds = meds_family(g);
    const int k = eternal_domination_number(g).value;
    REQUIRE_FALSE(meds.empty());
    std::set<oracle::Mask> want;
    for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
      if (is_eternal_dominating(g, s)) want.insert(s.bits());
    });
    CHECK(as_masks(meds) == want);
    for (VertexSet s : meds) CHECK(is_dominating(g, s));
  }
}

TEST_CASE("defender moves") {
  SafeFamily k3 = safe_family(fam::complete(3), 1);
  auto stay = defender_move(k3, {0}, 0);
  CHECK(stay.guard == 0);
  CHECK(stay.next == VertexSet{0});
  auto move = defender_move(k3, {0}, 1);
  CHECK(move.guard == 0);
  CHECK(move.next == VertexSet{1});
  CHECK_THROWS_AS(defender_move(k3, {0, 1}, 2), Error);
  CHECK_THROWS_AS(defender_move(k3, {0}, 3), Error);

  std::mt19937_64 rng(29);
  auto graphs = corpus::graphs("connected_le8");
  int draws = 0;
  while (draws < 1000) {
    const Graph& g = graphs[rng() % graphs.size()];
    auto et = eternal_domination_number(g);
    const SafeFamily& f = et.certificate;
    VertexSet config = f.configs()[rng() % f.size()];
    const Vertex v = static_cast<Vertex>(rng() % g.order());
    auto m = defender_move(f, config, v);
    REQUIRE(f.contains(m.next));
    REQUIRE(m.next == config.without(m.guard).with(v));
    REQUIRE(g.closed_neighbors(m.guard).contains(v));
    ++draws;
  }
}

TEST_CASE("safe families agree with retrograde analysis on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    for (int k = 1; k <= g.order(); ++k) {
      SafeFamily f = safe_family(g, k);
      REQUIRE(as_masks(f.configs()) == oracle::eternal_sets(g, k));
      REQUIRE(has_safe_family(g, k) == !f.empty());
    }
    REQUIRE(eternal_domination_number(g).value == oracle::eternal_domination_number(g));
  }
}

TEST_CASE("safe family closure and certificates") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    const int theta = clique_cover_number(g).value;
    for (int k = 1; k <= theta; ++k) {
      SafeFamily f = safe_family(g, k);
      for (VertexSet d : f.configs()) {
        REQUIRE(is_dominating(g, d));
        for (Vertex v : g.vertices() - d) {
          auto m = defender_move(f, d, v);
          REQUIRE(g.has_edge(m.guard, v));
          REQUIRE(f.contains(m.next));
        }
      }
      // Eliminated candidates carry an attack that beats every response with
      // a candidate from an earlier round or a non-dominating set.
      for (VertexSet d : f.candidates()) {
        const int r = f.death_round(d);
        if (r == 0) continue;
        auto v = f.eliminating_attack(d);
        REQUIRE(v);
        REQUIRE_FALSE(d.contains(*v));
        for (Vertex u : d & g.neighbors(*v)) {
          const int next = f.death_round(d.without(u).with(*v));
          REQUIRE(next != 0);
          REQUIRE(next < r);
        }
      }
    }
    REQUIRE_FALSE(safe_family(g, theta).empty());
  }
}

TEST_CASE("invariant chain with the eternal domination number") {
  for (const Graph& g : corpus::graphs("connected_le8")) {
    auto b = invariants(g);
    const int ginf = eternal_domination_number(g).value;
    REQUIRE(b.alpha.value <= ginf);
    REQUIRE(ginf <= b.theta.value);
  }
}

TEST_CASE("eternal domination number is monotone under induced subgraphs") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    const int ginf = eternal_domination_number(g).value;
    for (Vertex v = 0; v < g.order(); ++v) {
      REQUIRE(eternal_domination_number(remove_vertices(g, {v}).graph).value <= ginf);
    }
  }
}

TEST_CASE("some minimum eternal dominating set covers each large induced subgraph") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    const auto meds = meds_family(g);
    for (oracle::Mask keep = 1; keep <= oracle::all(g.order()); ++keep) {
      if (oracle::popcount(keep) < g.order() - 2) continue;
      const VertexSet h = VertexSet::from_bits(keep);
      const int need = eternal_domination_number(induced(g, h).graph).value;
      bool found = false;
      for (VertexSet d : meds) found = found || (d & h).size() >= need;
      REQUIRE(found);
    }
  }
}

TEST_CASE("deleting a member of a minimum partition never raises the eternal number") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    const int ginf = eternal_domination_number(g).value;
    for (const auto& p : enumerate_mcp(g).partitions) {
      for (VertexSet w : p) REQUIRE(eternal_domination_number(remove_vertices(g, w).graph).value <= ginf);
    }
  }
}

TEST_CASE("winning sequences exist for every non-eternal dominating set on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    for (int k = 1; k <= g.order(); ++k) {
      SafeFamily f = safe_family(g, k);
      for (VertexSet d : f.candidates()) {
        auto attack = find_winning_attack(g, d, f);
        if (f.contains(d)) {
          REQUIRE(attack.status == AttackStatus::eternal);
          continue;
        }
        REQUIRE(attack.status == AttackStatus::found);
        REQUIRE(static_cast<int>(attack.sequence.size()) <= f.rounds() + 1);
        REQUIRE(evaluate_strategy(g, d, attack.sequence).verdict == Verdict::winning);
        REQUIRE(oracle::survive(g, d.bits(), attack.sequence).empty());
      }
    }
  }
}

TEST_CASE("best response prefers the family and otherwise delays elimination") {
  const Graph c5 = fam::cycle(5);
  SafeFamily f = safe_family(c5, 2);
  auto r = best_response(c5, f, {0, 2}, 3);
  REQUIRE(r);
  CHECK(r->next == VertexSet{0, 3});
  CHECK_FALSE(best_response(fam::path(3), safe_family(fam::path(3), 1), {1}, 0));
}
