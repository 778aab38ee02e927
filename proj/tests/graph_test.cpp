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

#include <numeric>
#include <random>
#include <set>

#include "edom/families.hpp"
#include "edom/graph.hpp"
#include "edom/graph6.hpp"
#include "edom/planarity.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("vertex set algebra") {
  VertexSet a{0, 2, 5};
  VertexSet b{2, 3};
  CHECK((a | b) == VertexSet{0, 2, 3, 5});
  CHECK((a & b) == VertexSet{2});
  CHECK((a - b) == VertexSet{0, 5});
  CHECK(a.size() == 3);
  CHECK(a.lowest() == 0);
  CHECK(a.highest() == 5);
  CHECK(a.to_string() == "{0,2,5}");
  CHECK(VertexSet::full(64).size() == 64);
  CHECK(VertexSet::full(0).empty());
  CHECK_THROWS_AS(VertexSet::from_vector({64}), Error);

  std::vector<VertexSet> seen;
  for_each_subset_of_size(VertexSet{1, 3, 4, 6}, 2, [&](VertexSet s) { seen.push_back(s); });
  CHECK(seen.size() == 6);
  CHECK(std::set<VertexSet>(seen.begin(), seen.end()).size() == 6);
  for (VertexSet s : seen) CHECK(s.is_subset_of(VertexSet{1, 3, 4, 6}));

  int count = 0;
  for_each_subset_of_size(VertexSet::full(64), 63, [&](VertexSet) { ++count; });
  CHECK(count == 64);
  count = 0;
  for_each_subset_of_size(VertexSet::full(10), 0, [&](VertexSet s) {
    CHECK(s.empty());
    ++count;
  });
  CHECK(count == 1);
}

TEST_CASE("graph6 decoding of fixed records") {
  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(2)) == "A?");
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
  CHECK(encode_graph6(fam::complete(4)) == "C~");
  CHECK(parse_graph6("C~") == fam::complete(4));
}

TEST_CASE("graph6 rejects malformed records with offsets") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("?") == 0);      // n = 0
  CHECK(offset_of("A_x") == 2);    // trailing garbage
  CHECK(offset_of("C") == 1);      // edge region missing
  CHECK(offset_of("A`") == 1);     // padding bit set
  CHECK(offset_of("A\x20") == 1);  // byte below 63
  CHECK(offset_of("~~??????") == 0);
  CHECK(offset_of("~??A") == 0);  // four-byte header for n < 63
  CHECK(offset_of("~?@@") == 0);  // n = 65
  CHECK(offset_of(">>graph6<<A_x") == 12);
}

TEST_CASE("graph6 round trip on random labelled graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 12;
    Graph g = random_graph(rng, n, 0.4);
    REQUIRE(parse_graph6(encode_graph6(g)) == g);
  }
  for (int n : {62, 63, 64}) {
    Graph g = random_graph(rng, n, 0.3);
    REQUIRE(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round trip on generated corpus") {
  for (const auto& line : corpus::lines("connected_le8")) {
    Graph g = parse_graph6(line);
    REQUIRE(g.well_formed());
    REQUIRE(encode_graph6(g) == line);
  }
}

TEST_CASE("neighborhoods") {
  Graph p3 = fam::path(3);
  CHECK(neighborhood(p3, {0}, 1, true) == VertexSet{0, 1});
  CHECK(neighborhood(p3, {0}, 2, false) == VertexSet{2});
  Graph c5 = fam::cycle(5);
  CHECK(neighborhood(c5, {0}, 2, true) == c5.vertices());
  CHECK_THROWS_AS(neighborhood(p3, {}, 1, true), Error);
  CHECK_THROWS_AS(neighborhood(p3, {3}, 1, true), Error);
  CHECK_THROWS_AS(neighborhood(p3, {0}, -1, true), Error);

  // Open form at k = 1 is the union of open neighbourhoods (may meet U).
  CHECK(neighborhood(p3, {0, 1}, 1, false) == VertexSet{0, 1, 2});
  CHECK(neighborhood(p3, {0, 1}, 1, false, NeighborhoodReading::set_distance) == VertexSet{2});
}

TEST_CASE("neighborhoods agree with BFS distances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    Graph g = random_graph(rng, n, 0.3);
    const Vertex v = static_cast<Vertex>(rng() % n);
    auto dist = oracle::distances(g, v);
    for (int k = 0; k <= 4; ++k) {
      VertexSet closed, exact;
      for (int u = 0; u < n; ++u) {
        if (dist[u] >= 0 && dist[u] <= k) closed.insert(u);
        if (dist[u] == k) exact.insert(u);
      }
      REQUIRE(neighborhood(g, {v}, k, true) == closed);
      if (k >= 1) REQUIRE(neighborhood(g, {v}, k, false) == exact);
      if (k >= 1) REQUIRE(neighborhood(g, {v}, k, true).is_subset_of(neighborhood(g, {v}, k + 1, true)));
    }
  }
}

TEST_CASE("residual and induced subgraphs") {
  CHECK(residual(fam::star(3), {0}).graph.order() == 0);
  auto c5 = residual(fam::cycle(5), {0});
  CHECK(c5.graph == fam::complete(2));
  CHECK(c5.map.to_parent_set(c5.graph.vertices()) == VertexSet{2, 3});
  CHECK(residual(fam::cycle(6), {0, 3}).graph.order() == 0);
  CHECK_THROWS_AS(residual(fam::cycle(6), {}), Error);

  Graph k4 = fam::complete(4);
  CHECK(induced(k4, k4.vertices()).graph == k4);
  CHECK(induced(k4, k4.vertices()).map == VertexMap::identity(4));
  CHECK(induced(k4, {0, 2, 3}).graph == fam::complete(3));
  auto part = induced(fam::cycle(5), {0, 1, 3});
  CHECK(part.graph.size() == 1);
  CHECK(part.graph.has_edge(0, 1));
  CHECK(part.graph.degree(2) == 0);
}

TEST_CASE("induced and residual chains on the n <= 8 corpus") {
  std::mt19937_64 rng(3);
  for (const Graph& g : corpus::graphs("connected_le8")) {
    const VertexSet u = VertexSet::from_bits(rng() & g.vertices().bits());
    if (u.empty()) continue;
    auto r = residual(g, u);
    REQUIRE(r.graph.well_formed());
    REQUIRE(r.map.to_parent_set(r.graph.vertices()) == g.vertices() - neighborhood(g, u, 1, true));
    for (auto [a, b] : r.graph.edges()) REQUIRE(g.has_edge(r.map(a), r.map(b)));
    if (r.graph.order() > 1) {
      auto rr = induced(r.graph, VertexSet::from_bits(rng() & r.graph.vertices().bits()));
      REQUIRE(rr.graph.well_formed());
      const VertexMap composed = rr.map.then(r.map);
      for (auto [a, b] : rr.graph.edges()) REQUIRE(g.has_edge(composed(a), composed(b)));
    }
  }
}

TEST_CASE("separating edges and cutvertices") {
  Graph p4 = fam::path(4);
  CHECK(is_separating_edge(p4, 1, 2));
  CHECK_FALSE(is_separating_edge(p4, 0, 1));
  for (auto [a, b] : fam::cycle(5).edges()) CHECK_FALSE(is_separating_edge(fam::cycle(5), a, b));
  CHECK_FALSE(is_separating_edge(fam::bowtie(), 1, 2));
  CHECK(is_separating_edge(fam::bowtie(), 0, 1));
  CHECK_THROWS_AS(is_separating_edge(p4, 0, 2), Error);
  CHECK_FALSE(is_separating_edge(fam::complete(3), 0, 1));

  CHECK(cutvertices(fam::path(3)) == VertexSet{1});
  CHECK(cutvertices(fam::cycle(4)).empty());
  CHECK(cutvertices(fam::bowtie()) == VertexSet{0});
}

TEST_CASE("cutvertices and separating edges match deletion oracles") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    const oracle::Mask v_all = oracle::all(g.order());
    const int base = oracle::component_count(g, v_all);
    VertexSet expected;
    for (int v = 0; v < g.order(); ++v) {
      if (oracle::component_count(g, v_all & ~oracle::bit(v)) > base) expected.insert(v);
    }
    REQUIRE(cutvertices(g) == expected);
    for (auto [a, b] : g.edges()) {
      const oracle::Mask rest = v_all & ~oracle::bit(a) & ~oracle::bit(b);
      const bool want = oracle::popcount(rest) > 1 && oracle::component_count(g, rest) > 1;
      REQUIRE(is_separating_edge(g, a, b) == want);
    }
  }
}

TEST_CASE("identify vertices") {
  Graph p3 = identify_vertices(fam::complete(2), 1, fam::complete(2), 0);
  CHECK(p3 == fam::path(3));
  Graph bow = identify_vertices(fam::complete(3), 0, fam::complete(3), 0);
  CHECK(bow.order() == 5);
  CHECK(bow.size() == 6);
  CHECK(bow == fam::bowtie());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph a = random_graph(rng, 2 + trial % 4, 0.6);
    Graph b = random_graph(rng, 2 + trial % 5, 0.6);
    if (!is_connected(a) || !is_connected(b)) continue;
    const Vertex va = static_cast<Vertex>(rng() % a.order());
    const Vertex vb = static_cast<Vertex>(rng() % b.order());
    Graph c = identify_vertices(a, va, b, vb);
    REQUIRE(c.order() == a.order() + b.order() - 1);
    REQUIRE(c.size() == a.size() + b.size());
    REQUIRE(cutvertices(c).contains(va));
  }
}

TEST_CASE("planarity on named graphs") {
  CHECK_FALSE(is_planar(fam::complete(5)));
  CHECK_FALSE(is_planar(fam::complete_bipartite(3, 3)));
  CHECK_FALSE(is_planar(fam::petersen()));
  CHECK(is_planar(fam::octahedron()));
  CHECK(is_planar(fam::complete(4)));
  CHECK(is_planar(fam::ladder(5)));
  for (const Graph& g : corpus::graphs("all_le6", 4)) CHECK(is_planar(g));
}

TEST_CASE("planarity agrees with the reference tester") {
  long planar = 0, nonplanar = 0;
  for (const Graph& g : corpus::graphs("planar_connected_le9")) {
    REQUIRE(is_planar(g));
    ++planar;
  }
  for (const Graph& g : corpus::graphs("nonplanar_connected_le9")) {
    REQUIRE_FALSE(is_planar(g));
    if (g.order() >= 3) REQUIRE((g.size() > 3 * g.order() - 6 || !is_planar(g)));
    ++nonplanar;
  }
  CHECK(planar + nonplanar == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117 + 261080);
}

TEST_CASE("planted Kuratowski subdivisions are rejected") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const bool k5 = trial % 2 == 0;
    Graph base = k5 ? fam::complete(5) : fam::complete_bipartite(3, 3);
    // Subdivide random edges, then add random extra edges and isolated padding.
    const int extra_vertices = static_cast<int>(rng() % 6);
    Graph g(base.order() + extra_vertices + 3);
    auto edges = base.edges();
    int next = base.order();
    for (auto [a, b] : edges) {
      if (next < g.order() && rng() % 2 == 0) {
        g.add_edge(a, next);
        g.add_edge(next, b);
        ++next;
      } else {
        g.add_edge(a, b);
      }
    }
    for (int e = 0; e < 3; ++e) {
      const Vertex a = static_cast<Vertex>(rng() % g.order());
      const Vertex b = static_cast<Vertex>(rng() % g.order());
      if (a != b) g.add_edge(a, b);
    }
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    REQUIRE_FALSE(is_planar(h));
  }
}

TEST_CASE("planarity is invariant under relabelling") {
  std::mt19937_64 rng(17);
  for (const Graph& g : corpus::graphs("connected_le8", 8)) {
    if (g.order() < 7) continue;
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    REQUIRE(is_planar(h) == is_planar(g));
  }
}
