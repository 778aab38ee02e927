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
#include "edom/lemma_lab.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace edom;
namespace fam = edom::families;

namespace {

using oracle::bit;
using oracle::Mask;

Mask open_nbhd(const Graph& g, Mask s) {
  Mask out = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if ((s & bit(y)) && oracle::adjacent(g, x, y)) out |= bit(x);
  return out;
}

/// Some (P, W, J) with P minimum, W in P, J meeting each member at most once,
/// J disjoint from W and every vertex of W adjacent to J.
bool lemma9_exists(const Graph& g) {
  const Mask all = oracle::all(g.order());
  for (auto& p : oracle::min_clique_partitions(g)) {
    for (Mask w : p) {
      for (Mask j = 1; j <= all; ++j) {
        if (j & w) continue;
        bool spread = true;
        for (Mask c : p) spread = spread && oracle::popcount(c & j) <= 1;
        if (spread && (w & ~open_nbhd(g, j)) == 0) return true;
      }
    }
  }
  return false;
}

/// Induced subgraph on `keep`, vertices renumbered in increasing order.
Graph restrict(const Graph& g, Mask keep, std::vector<int>& to_parent) {
  to_parent.clear();
  for (int v = 0; v < g.order(); ++v)
    if (keep & bit(v)) to_parent.push_back(v);
  Graph h(static_cast<int>(to_parent.size()));
  for (std::size_t a = 0; a < to_parent.size(); ++a)
    for (std::size_t b = a + 1; b < to_parent.size(); ++b)
      if (oracle::adjacent(g, to_parent[a], to_parent[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

Mask closed_nbhd(const Graph& g, Mask s) { return s | open_nbhd(g, s); }

/// Smallest violating S for the corollary, by plain enumeration; -1 if none.
int corollary1_min_size(const Graph& g, int v, int u, int max_size) {
  const Mask target = closed_nbhd(g, bit(v)) & ~closed_nbhd(g, bit(u));
  const Mask keep = oracle::all(g.order()) & ~closed_nbhd(g, bit(v) | bit(u));
  std::vector<int> map;
  Graph h = restrict(g, keep, map);
  int best = -1;
  for (Mask s = 1; s <= oracle::all(h.order()) && h.order() > 0; ++s) {
    const int size = oracle::popcount(s);
    if (size > max_size || (best != -1 && size >= best)) continue;
    Mask parent = 0;
    for (int i = 0; i < h.order(); ++i)
      if (s & bit(i)) parent |= bit(map[i]);
    if ((target & ~open_nbhd(g, parent)) != 0) continue;
    if (oracle::theta_independent(h, s)) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("extending a theta-independent set") {
  Graph two = fam::disjoint_union(fam::complete(3), fam::complete(3));
  CliquePartition p({{0, 1, 2}, {3, 4, 5}});
  VertexSet out = lemma8_extend(two, p, {1});
  CHECK(out.size() == 2);
  CHECK(out.contains(1));
  CHECK(is_dominating(two, out));

  try {
    lemma8_extend(two, p, {});
    FAIL("empty J accepted");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "nonempty");
  }
  try {
    lemma8_extend(two, p, {0, 1});
    FAIL("J inside one clique accepted");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "theta_independent");
  }
  try {
    lemma8_extend(two, CliquePartition({{0, 1}, {2}, {3, 4, 5}}), {0});
    FAIL("non-minimum partition accepted");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "minimum_partition");
  }
  // C6 has gamma 2 and theta 3, so the extension has nothing to promise.
  REQUIRE(oracle::gamma(fam::cycle(6)) == 2);
  try {
    lemma8_extend(fam::cycle(6), CliquePartition({{0, 1}, {2, 3}, {4, 5}}), {0, 2, 4});
    FAIL("gamma < theta accepted");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "gamma_equals_theta");
  }
}

TEST_CASE("extensions are minimum dominating sets on n <= 7") {
  int checked = 0;
  for (const Graph& g : corpus::graphs("all_le7")) {
    if (g.order() == 0 || oracle::gamma(g) != oracle::theta(g)) continue;
    const auto mds = oracle::min_dominating_sets(g);
    for (const auto& p : enumerate_mcp(g).partitions) {
      for (oracle::Mask j = 1; j <= oracle::all(g.order()); ++j) {
        const VertexSet js = VertexSet::from_bits(j);
        if (!is_theta_independent_in(js, p)) continue;
        const VertexSet out = lemma8_extend(g, p, js);
        REQUIRE(js.is_subset_of(out));
        REQUIRE(std::binary_search(mds.begin(), mds.end(), out.bits()));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("certificate search on a star") {
  Graph s = fam::star(4);
  REQUIRE(oracle::theta(s) == 4);
  REQUIRE(lemma9_exists(s));
  auto r = lemma9_witness(s);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.certificate);
  CHECK(certificate_violation(s, *r.certificate).empty());
  CHECK(r.certificate->w.size() == 1);
  CHECK(r.certificate->j == VertexSet{0});

  GammaLessThetaCertificate bad = *r.certificate;
  bad.j = {};
  CHECK_FALSE(certificate_violation(s, bad).empty());
  bad = *r.certificate;
  bad.w = bad.j;
  CHECK_FALSE(certificate_violation(s, bad).empty());
}

TEST_CASE("certificate search reports an exhausted budget") {
  auto r = lemma9_witness(fam::path(3), 0);
  CHECK(r.status == SearchStatus::incomplete);
  CHECK_FALSE(r.certificate);
  CHECK(lemma9_witness(fam::complete(4)).status == SearchStatus::none);
}

TEST_CASE("certificates are sound and the search is complete on n <= 7") {
  int fired = 0;
  for (const Graph& g : corpus::graphs("all_le7")) {
    const bool less = oracle::gamma(g) < oracle::theta(g);
    auto r = lemma9_witness(g);
    REQUIRE(r.status != SearchStatus::incomplete);
    REQUIRE((r.status == SearchStatus::found) == lemma9_exists(g));
    if (r.certificate) {
      REQUIRE(certificate_violation(g, *r.certificate).empty());
      REQUIRE(less);
      ++fired;
    }
    for (const auto& c : lemma10_scan(g)) {
      INFO(to_string(c.kind) << " at v=" << c.v);
      REQUIRE(certificate_violation(g, c).empty());
      REQUIRE(less);
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("local conditions on small examples") {
  CHECK(lemma10_scan(fam::cycle(4)).empty());

  // Spider: centre 0 with legs 0-1, 0-2 and 0-3-4.
  Graph spider = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  auto found = lemma10_scan(spider);
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().kind == CertificateKind::lemma10a);
  CHECK(found.front().v == 0);
  CHECK(found.front().witnesses == VertexSet{1, 2});

  // C6: (b) fires everywhere, (c) nowhere.
  auto c6 = lemma10_scan(fam::cycle(6));
  CHECK(c6.size() == 6);
  for (const auto& c : c6) CHECK(c.kind == CertificateKind::lemma10b);
}

TEST_CASE("each local condition matches its definition on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    std::set<std::pair<int, int>> got;
    for (const auto& c : lemma10_scan(g)) got.insert({static_cast<int>(c.kind), c.v});
    const bool planar = is_planar(g);
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> nb;
      for (int x = 0; x < g.order(); ++x)
        if (oracle::adjacent(g, v, x)) nb.push_back(x);
      auto deg = [&](int x) {
        int d = 0;
        for (int y = 0; y < g.order(); ++y) d += oracle::adjacent(g, x, y);
        return d;
      };
      int pendants = 0;
      for (int x : nb) pendants += deg(x) == 1;
      bool two = nb.size() == 2 && !oracle::adjacent(g, nb[0], nb[1]);
      bool b = false, c = false, d = false;
      if (two) {
        const Mask n1 = open_nbhd(g, bit(nb[0])), n2 = open_nbhd(g, bit(nb[1]));
        b = (n1 & ~n2) != 0 && (n2 & ~n1) != 0;
        const Mask common = n1 & n2 & ~bit(v);
        for (int x = 0; x < g.order(); ++x)
          for (int y = x + 1; y < g.order(); ++y)
            if ((common & bit(x)) && (common & bit(y)) && !oracle::adjacent(g, x, y)) c = true;
        d = planar && deg(nb[0]) >= 4 && deg(nb[1]) >= 4;
      }
      bool e = nb.size() >= 3 && pendants == 0;
      for (int x : nb)
        for (int y : nb) e = e && !oracle::adjacent(g, x, y);
      REQUIRE(got.count({static_cast<int>(CertificateKind::lemma10a), v}) == (pendants >= 2));
      REQUIRE(got.count({static_cast<int>(CertificateKind::lemma10b), v}) == b);
      REQUIRE(got.count({static_cast<int>(CertificateKind::lemma10c), v}) == c);
      REQUIRE(got.count({static_cast<int>(CertificateKind::lemma10d), v}) == d);
      REQUIRE(got.count({static_cast<int>(CertificateKind::lemma10e), v}) == e);
    }
  }
}

TEST_CASE("smallest planar graph with a degree-four pair around a degree-two vertex") {
  std::optional<Graph> first;
  for (const Graph& g : corpus::graphs("planar_connected_le9")) {
    for (const auto& c : lemma10_scan(g)) {
      if (c.kind == CertificateKind::lemma10d) {
        first = g;
        break;
      }
    }
    if (first) break;
  }
  REQUIRE(first);
  // K_{2,4} with v one of the four: five vertices leave u1 and u2 short.
  CHECK(first->order() == 6);
  CHECK(oracle::gamma(*first) < oracle::theta(*first));
}

TEST_CASE("corollary search on small examples") {
  Graph c6 = fam::cycle(6);
  auto r = corollary1_violation(c6, 0, 1);
  // N1[0] \ N1[1] = {5}; G_{0,1} is the edge 3-4 and vertex 4 dominates 5.
  CHECK(r.target == VertexSet{5});
  CHECK(r.status == Corollary1Status::found);
  CHECK(r.s == VertexSet{4});
  CHECK(corollary1_min_size(c6, 0, 1, 3) == 1);

  // In K2 the target is empty.
  auto k2 = corollary1_violation(fam::complete(2), 0, 1);
  CHECK(k2.status == Corollary1Status::vacuous);

  // P3 with v a leaf and u the centre: G_{v,u} is empty.
  auto p3 = corollary1_violation(fam::path(3), 1, 0);
  CHECK(p3.target == VertexSet{2});
  CHECK(p3.status == Corollary1Status::none);

  CHECK_THROWS_AS(corollary1_violation(c6, 0, 2), HypothesisError);
  CHECK_THROWS_AS(corollary1_violation(fam::complete(4), 0, 1), HypothesisError);
}

TEST_CASE("corollary search matches brute force on n <= 7") {
  for (const Graph& g : corpus::graphs("all_le7")) {
    for (auto [a, b] : g.edges()) {
      if ((g.neighbors(a) & g.neighbors(b)).size() > 1) continue;
      for (auto [v, u] : {Edge{a, b}, Edge{b, a}}) {
        auto r = corollary1_violation(g, v, u);
        const int want = corollary1_min_size(g, v, u, kCorollary1MaxSize);
        if (r.target.empty()) {
          REQUIRE(r.status == Corollary1Status::vacuous);
          continue;
        }
        REQUIRE(r.status != Corollary1Status::unknown);
        REQUIRE((r.status == Corollary1Status::found) == (want != -1));
        if (want != -1) REQUIRE(r.s.size() == want);
      }
    }
  }
}

TEST_CASE("obstruction report on named graphs") {
  auto bowtie = obstruction_report(fam::bowtie());
  REQUIRE(bowtie.cutvertex);
  CHECK(*bowtie.cutvertex == 0);
  CHECK(bowtie.obstructed());

  auto p4 = obstruction_report(fam::path(4));
  REQUIRE(p4.lemma12_containment);
  CHECK(*p4.lemma12_containment == Edge{0, 1});
  CHECK(p4.min_degree == 1);
  CHECK(p4.min_degree_obstruction());

  auto c5 = obstruction_report(fam::cycle(5));
  CHECK(c5.min_degree == 2);
  CHECK(c5.min_degree_obstruction());
  CHECK_FALSE(c5.separating_edge_checked);

  auto oct = obstruction_report(fam::octahedron());
  CHECK(oct.min_degree == 4);
  CHECK(oct.planar);
  CHECK(oct.theta == 2);
  CHECK(oct.gamma_inf == 2);
  CHECK_FALSE(oct.lemma12_containment);
  CHECK_FALSE(oct.cutvertex);
  CHECK_FALSE(oct.candidate);
  CHECK(oct.obstructed());

  CHECK(obstruction_report(fam::petersen()) == obstruction_report(fam::petersen()));
}

TEST_CASE("obstruction entries match direct recomputation on n <= 6") {
  for (const Graph& g : corpus::graphs("all_le6")) {
    const auto r = obstruction_report(g);
    const auto full = obstruction_report(g, {.full_lemma13 = true});
    REQUIRE(r == obstruction_report(g));
    REQUIRE(full.lemma13_full_depth);
    const int gm = oracle::gamma(g);
    REQUIRE(r.gamma == gm);
    REQUIRE(r.gamma_inf == oracle::eternal_domination_number(g));

    std::vector<Lemma13Failure> want13;
    for (Mask i = 1; i <= oracle::all(g.order()); ++i) {
      if (!oracle::independent(g, i)) continue;
      std::vector<int> map;
      Graph h = restrict(g, oracle::all(g.order()) & ~closed_nbhd(g, i), map);
      const int expected = gm - oracle::popcount(i);
      const int hg = oracle::gamma(h), ht = oracle::theta(h);
      if (hg != expected || ht != expected) {
        if (oracle::popcount(i) <= 2) REQUIRE(std::count(r.lemma13_failures.begin(), r.lemma13_failures.end(),
                                                         Lemma13Failure{VertexSet::from_bits(i), expected, hg, ht}) == 1);
        REQUIRE(std::count(full.lemma13_failures.begin(), full.lemma13_failures.end(),
                           Lemma13Failure{VertexSet::from_bits(i), expected, hg, ht}) == 1);
      }
    }
    for (const auto& f : full.lemma13_failures) {
      REQUIRE(oracle::independent(g, f.i.bits()));
      if (f.i.size() <= 2) REQUIRE(std::count(r.lemma13_failures.begin(), r.lemma13_failures.end(), f) == 1);
    }

    bool containment = false;
    for (auto [a, b] : g.edges()) {
      const Mask na = closed_nbhd(g, bit(a)), nb = closed_nbhd(g, bit(b));
      containment = containment || (na & ~nb) == 0 || (nb & ~na) == 0;
    }
    REQUIRE(r.lemma12_containment.has_value() == containment);
    for (const auto& v : r.corollary1_violations) {
      REQUIRE(corollary1_min_size(g, v.v, v.u, kCorollary1MaxSize) != -1);
    }
  }
}

TEST_CASE("every graph on at most seven vertices is obstructed") {
  int structural = 0;
  for (const Graph& g : corpus::graphs("all_le7")) {
    const auto r = obstruction_report(g);
    REQUIRE(r.obstructed());
    REQUIRE_FALSE(r.candidate);
    ObstructionReport only = r;
    only.candidate = true;
    structural += only.obstructed();
  }
  CHECK(structural > 1000);
}

TEST_CASE("planar graphs on at most eight vertices are maximum-demand") {
  int planar = 0;
  for (const Graph& g : corpus::graphs("connected_le8")) {
    if (!is_planar(g)) continue;
    ++planar;
    REQUIRE(is_maximum_demand(g));
  }
  CHECK(planar > 5000);
}

TEST_CASE("gluing maximum-demand graphs at a vertex") {
  auto bowtie = lemma4_compose_check(fam::complete(3), 0, fam::complete(3), 0);
  CHECK(bowtie.applicable);
  CHECK(bowtie.maximum_demand);
  CHECK(bowtie.composed.order() == 5);

  auto stars = lemma4_compose_check(fam::star(2), 0, fam::star(2), 0);
  // K_{1,2} minus its centre is two isolated vertices, which is fine; the
  // star itself has gamma^inf = theta = 2.
  if (stars.applicable) CHECK(stars.maximum_demand);

  std::mt19937_64 rng(41);
  int applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n1 = 1 + trial % 5;
    const int n2 = 1 + (trial / 5) % 5;
    std::bernoulli_distribution coin(0.3 + 0.1 * (trial % 4));
    auto random_graph = [&](int n) {
      Graph g(n);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (coin(rng)) g.add_edge(i, j);
      return g;
    };
    Graph g1 = random_graph(n1), g2 = random_graph(n2);
    auto r = lemma4_compose_check(g1, static_cast<int>(rng() % n1), g2, static_cast<int>(rng() % n2));
    REQUIRE(r.composed.order() == n1 + n2 - 1);
    if (!r.applicable) continue;
    ++applicable;
    REQUIRE(r.maximum_demand);
    REQUIRE(oracle::eternal_domination_number(r.composed) == oracle::theta(r.composed));
  }
  CHECK(applicable > 50);
}
