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
#include "edom/invariants.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

std::vector<std::vector<oracle::Mask>> as_masks(const std::vector<CliquePartition>& parts) {
  std::vector<std::vector<oracle::Mask>> out;
  for (const auto& p : parts) {
    std::vector<oracle::Mask> m;
    for (VertexSet c : p) m.push_back(c.bits());
    std::sort(m.begin(), m.end());
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("domination on named graphs") {
  Graph c5 = fam::cycle(5);
  CHECK(is_dominating(c5, {0, 2}));
  CHECK_FALSE(is_dominating(c5, {0}));
  CHECK(is_dominating(c5, c5.vertices()));
  CHECK_FALSE(is_dominating(c5, {}));
  CHECK(is_dominating(Graph(0), {}));

  auto star = domination_number(fam::star(3));
  CHECK(star.value == 1);
  CHECK(star.witness == VertexSet{0});
  CHECK(domination_number(fam::cycle(6)).value == 2);
  CHECK(domination_number(fam::petersen()).value == 3);
  CHECK(domination_number(Graph(0)).value == 0);

  CHECK(all_min_dominating_sets(fam::complete(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(all_min_dominating_sets(fam::path(3)) == std::vector<VertexSet>{{1}});
  // C4 = 0-1-2-3-0: every pair dominates, the diagonals included.
  CHECK(all_min_dominating_sets(fam::cycle(4)).size() == 6);
}

TEST_CASE("independence and clique cover on named graphs") {
  for (int n = 1; n <= 7; ++n) CHECK(independence_number(fam::complete(n)).value == 1);
  CHECK(independence_number(fam::cycle(5)).value == 2);
  CHECK(independence_number(fam::petersen()).value == 4);
  CHECK(independence_number(Graph(0)).value == 0);

  for (int n = 1; n <= 7; ++n) CHECK(clique_cover_number(fam::complete(n)).value == 1);
  CHECK(clique_cover_number(fam::cycle(5)).value == 3);
  auto c6 = clique_cover_number(fam::cycle(6));
  CHECK(c6.value == 3);
  CHECK(c6.witness.is_valid_for(fam::cycle(6)));
  CHECK(clique_cover_number(fam::petersen()).value == 5);
  CHECK(clique_cover_number(Graph(0)).value == 0);
}

TEST_CASE("minimum clique partition enumeration on named graphs") {
  auto k3 = enumerate_mcp(fam::complete(3));
  CHECK(k3.complete);
  REQUIRE(k3.partitions.size() == 1);
  CHECK(k3.partitions[0].cliques() == std::vector<VertexSet>{{0, 1, 2}});

  auto c6 = enumerate_mcp(fam::cycle(6));
  CHECK(c6.partitions.size() == 2);
  auto p4 = enumerate_mcp(fam::path(4));
  REQUIRE(p4.partitions.size() == 1);
  CHECK(p4.partitions[0] == CliquePartition({{0, 1}, {2, 3}}));

  auto capped = enumerate_mcp(fam::cycle(6), 1);
  CHECK_FALSE(capped.complete);
  CHECK(capped.partitions.size() == 1);
  auto exact = enumerate_mcp(fam::cycle(6), 2);
  CHECK(exact.complete);
  CHECK_THROWS_AS(enumerate_mcp(fam::cycle(6), 0), Error);
}

TEST_CASE("theta independence on named graphs") {
  Graph p3 = fam::path(3);
  CHECK(is_theta_independent(p3, {0, 2}).decision == Decision::yes);
  CHECK(is_theta_independent(p3, {1}).decision == Decision::yes);
  // P3 has two minimum partitions; ({0},{1,2}) separates 0 and 1.
  auto ab = is_theta_independent(p3, {0, 1});
  CHECK(ab.decision == Decision::yes);
  REQUIRE(ab.witness);
  CHECK(*ab.witness == CliquePartition({{0}, {1, 2}}));
  CHECK(is_theta_independent(fam::complete(2), {0, 1}).decision == Decision::no);

  CliquePartition p({{0, 1}, {2, 3}});
  CHECK_FALSE(is_theta_independent_in({0, 1}, p));
  CHECK(is_theta_independent_in({0, 2}, p));

  // With cap 1 the second minimum partition of C6 is never examined.
  auto capped = is_theta_independent(fam::cycle(6), {0, 1, 2}, 1);
  CHECK(capped.decision == Decision::unknown);
  CHECK(is_theta_independent(fam::cycle(6), {0, 1, 2}, 10).decision == Decision::no);
}

TEST_CASE("solvers agree with brute force on all graphs n <= 7") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    auto b = invariants(g);
    REQUIRE(b.gamma.value == oracle::gamma(g));
    REQUIRE(b.gamma.witness.size() == b.gamma.value);
    REQUIRE(is_dominating(g, b.gamma.witness));
    REQUIRE(b.alpha.value == oracle::alpha(g));
    REQUIRE(g.is_independent(b.alpha.witness));
    REQUIRE(b.alpha.witness.size() == b.alpha.value);
    REQUIRE(b.theta.value == oracle::theta(g));
    REQUIRE(b.theta.witness.is_valid_for(g));
    REQUIRE(b.theta.witness.size() == b.theta.value);
  }
}

TEST_CASE("minimum dominating sets match the subset filter on n <= 7") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    std::vector<oracle::Mask> got;
    for (VertexSet s : all_min_dominating_sets(g)) got.push_back(s.bits());
    auto want = oracle::min_dominating_sets(g);
    std::sort(got.begin(), got.end());
    REQUIRE(got == want);
    // When gamma equals theta every vertex lies in some minimum dominating set.
    if (domination_number(g).value == clique_cover_number(g).value) {
      VertexSet covered;
      for (VertexSet s : all_min_dominating_sets(g)) covered |= s;
      REQUIRE(covered == g.vertices());
    }
  }
}

TEST_CASE("minimum clique partitions match set-partition brute force on n <= 7") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    auto got = enumerate_mcp(g);
    REQUIRE(got.complete);
    const int theta = clique_cover_number(g).value;
    for (const auto& p : got.partitions) {
      REQUIRE(p.is_valid_for(g));
      REQUIRE(p.size() == theta);
    }
    auto masks = as_masks(got.partitions);
    REQUIRE(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
    REQUIRE(masks == oracle::min_clique_partitions(g));
  }
}

TEST_CASE("theta independence matches brute force on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    for (oracle::Mask s = 1; s <= oracle::all(g.order()); ++s) {
      auto got = is_theta_independent(g, VertexSet::from_bits(s));
      REQUIRE(got.decision == (oracle::theta_independent(g, s) ? Decision::yes : Decision::no));
      if (got.decision == Decision::yes) {
        REQUIRE(got.witness);
        REQUIRE(got.witness->is_valid_for(g));
        REQUIRE(got.witness->size() == clique_cover_number(g).value);
        REQUIRE(is_theta_independent_in(VertexSet::from_bits(s), *got.witness));
      }
    }
  }
}

TEST_CASE("members of minimum partitions are maximal when gamma equals theta") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    auto b = invariants(g);
    if (b.gamma.value != b.theta.value) continue;
    for (const auto& p : enumerate_mcp(g).partitions) {
      for (VertexSet c : p) {
        for (Vertex v : g.vertices() - c) REQUIRE_FALSE(g.is_clique(c.with(v)));
      }
    }
  }
}

TEST_CASE("invariant chain on connected graphs n <= 8") {
  for (const Graph& g : corpus::graphs("connected_le8")) {
    auto b = invariants(g);
    REQUIRE(b.gamma.value <= b.alpha.value);
    REQUIRE(b.alpha.value <= b.theta.value);
  }
}

TEST_CASE("solvers are exact on random graphs up to 12 vertices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 9 + trial % 4;
    std::bernoulli_distribution coin(0.2 + 0.1 * (trial % 5));
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (coin(rng)) g.add_edge(i, j);
    REQUIRE(domination_number(g).value == oracle::gamma(g));
    REQUIRE(independence_number(g).value == oracle::alpha(g));
    if (n <= 10) REQUIRE(clique_cover_number(g).value == oracle::theta(g));
  }
}
