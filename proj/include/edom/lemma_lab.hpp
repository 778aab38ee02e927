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

// Checkable certificates for γ(G) < θ(G), and the necessary conditions a
// smallest planar graph with γ = γ^∞ < θ would have to satisfy.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edom/eternal.hpp"
#include "edom/invariants.hpp"
#include "edom/planarity.hpp"

namespace edom {

/// A named hypothesis of a lemma does not hold for the given input.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Extends a θ-independent J to a dominating set with one vertex in every
/// member of P. When γ(G) = θ(G) the result is a minimum dominating set.
inline VertexSet lemma8_extend(const Graph& g, const CliquePartition& p, VertexSet j) {
  g.check_set(j);
  if (j.empty()) throw HypothesisError("nonempty", "J must be nonempty");
  if (const std::string why = p.violation(g); !why.empty()) throw HypothesisError("partition", why);
  const int theta = clique_cover_number(g).value;
  if (p.size() != theta) throw HypothesisError("minimum_partition", "partition is not minimum");
  if (domination_number(g).value != theta) throw HypothesisError("gamma_equals_theta", "gamma(G) < theta(G)");
  if (!is_theta_independent_in(j, p)) {
    throw HypothesisError("theta_independent", "J meets a member of the partition twice");
  }
  VertexSet out = j;
  for (VertexSet c : p) {
    if (!c.intersects(j)) out.insert(c.lowest());
  }
  return out;
}

enum class CertificateKind { lemma9, lemma10a, lemma10b, lemma10c, lemma10d, lemma10e };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::lemma9:
      return "lemma9";
    case CertificateKind::lemma10a:
      return "lemma10a";
    case CertificateKind::lemma10b:
      return "lemma10b";
    case CertificateKind::lemma10c:
      return "lemma10c";
    case CertificateKind::lemma10d:
      return "lemma10d";
    case CertificateKind::lemma10e:
      return "lemma10e";
  }
  return "?";
}

/// Evidence that γ(G) < θ(G).
///
/// lemma9: `partition` is a minimum clique partition, `w` one of its members,
/// and `j` a set meeting every member at most once, disjoint from `w`, with
/// every vertex of `w` adjacent to `j`.
///
/// lemma10*: `v` with neighbourhood `neighbors`; `witnesses` holds the two
/// pendant vertices (a), the private neighbours u'1, u'2 (b), or the
/// nonadjacent common neighbours x, y (c). Empty for (d) and (e).
struct GammaLessThetaCertificate {
  CertificateKind kind = CertificateKind::lemma9;
  CliquePartition partition;
  VertexSet j;
  VertexSet w;
  Vertex v = -1;
  VertexSet neighbors;
  VertexSet witnesses;

  bool operator==(const GammaLessThetaCertificate&) const = default;
};

namespace detail {

inline bool pendant(const Graph& g, Vertex x) { return g.degree(x) == 1; }

/// N(v) = {u1, u2} with u1u2 not an edge.
inline bool two_nonadjacent_neighbors(const Graph& g, Vertex v) {
  if (g.degree(v) != 2) return false;
  const VertexSet nb = g.neighbors(v);
  return !g.has_edge(nb.lowest(), nb.highest());
}

}  // namespace detail

/// Empty when every hypothesis recorded in the certificate holds in `g`,
/// otherwise a description of the first one that fails.
inline std::string certificate_violation(const Graph& g, const GammaLessThetaCertificate& c) {
  const int n = g.order();
  if (c.kind == CertificateKind::lemma9) {
    if (const std::string why = c.partition.violation(g); !why.empty()) return why;
    if (c.partition.size() != clique_cover_number(g).value) return "partition is not minimum";
    if (!c.partition.contains_member(c.w)) return "W is not a member of the partition";
    if (!c.j.fits(n) || c.j.empty()) return "J is empty or out of range";
    if (!is_theta_independent_in(c.j, c.partition)) return "J is not theta-independent in the partition";
    if (c.j.intersects(c.w)) return "J meets W";
    if (!c.w.is_subset_of(g.open_neighbors(c.j))) return "J does not dominate W";
    return {};
  }
  if (c.v < 0 || c.v >= n) return "vertex out of range";
  const Vertex v = c.v;
  if (c.neighbors != g.neighbors(v)) return "recorded neighbourhood differs";
  switch (c.kind) {
    case CertificateKind::lemma10a: {
      if (c.witnesses.size() != 2 || !c.witnesses.is_subset_of(g.neighbors(v))) return "witnesses are not two neighbours";
      for (Vertex x : c.witnesses) {
        if (!detail::pendant(g, x)) return "witness is not pendant";
      }
      return {};
    }
    case CertificateKind::lemma10b:
    case CertificateKind::lemma10c:
    case CertificateKind::lemma10d: {
      if (!detail::two_nonadjacent_neighbors(g, v)) return "v does not have exactly two nonadjacent neighbours";
      const Vertex u1 = g.neighbors(v).lowest();
      const Vertex u2 = g.neighbors(v).highest();
      if (c.kind == CertificateKind::lemma10b) {
        if (c.witnesses.size() != 2) return "expected two witnesses";
        const VertexSet only1 = g.neighbors(u1) - g.neighbors(u2);
        const VertexSet only2 = g.neighbors(u2) - g.neighbors(u1);
        const Vertex a = c.witnesses.lowest();
        const Vertex b = c.witnesses.highest();
        if ((only1.contains(a) && only2.contains(b)) || (only1.contains(b) && only2.contains(a))) return {};
        return "witnesses are not private neighbours of u1 and u2";
      }
      if (c.kind == CertificateKind::lemma10c) {
        const VertexSet common = (g.neighbors(u1) & g.neighbors(u2)).without(v);
        if (c.witnesses.size() != 2 || !c.witnesses.is_subset_of(common)) return "witnesses are not common neighbours";
        if (!g.is_independent(c.witnesses)) return "witnesses are adjacent";
        return {};
      }
      if (std::min(g.degree(u1), g.degree(u2)) < 4) return "a neighbour of v has degree below 4";
      if (!is_planar(g)) return "graph is not planar";
      return {};
    }
    case CertificateKind::lemma10e: {
      const VertexSet nb = g.neighbors(v);
      if (nb.size() < 3) return "v has fewer than three neighbours";
      for (Vertex x : nb) {
        if (detail::pendant(g, x)) return "a neighbour of v is pendant";
      }
      if (!g.is_independent(nb)) return "neighbourhood of v is not independent";
      return {};
    }
    default:
      return "unknown kind";
  }
}

/// Every (v, condition) pair of the lemma-10 family that holds in `g`.
/// Condition (d) is only reported for planar graphs.
inline std::vector<GammaLessThetaCertificate> lemma10_scan(const Graph& g) {
  std::vector<GammaLessThetaCertificate> out;
  const bool planar = is_planar(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nb = g.neighbors(v);
    auto make = [&](CertificateKind kind, VertexSet witnesses) {
      GammaLessThetaCertificate c;
      c.kind = kind;
      c.v = v;
      c.neighbors = nb;
      c.witnesses = witnesses;
      out.push_back(c);
    };
    VertexSet pendants;
    for (Vertex x : nb) {
      if (detail::pendant(g, x)) pendants.insert(x);
    }
    if (pendants.size() >= 2) {
      const Vertex first = pendants.lowest();
      make(CertificateKind::lemma10a, {first, pendants.without(first).lowest()});
    }
    if (detail::two_nonadjacent_neighbors(g, v)) {
      const Vertex u1 = nb.lowest();
      const Vertex u2 = nb.highest();
      const VertexSet only1 = g.neighbors(u1) - g.neighbors(u2);
      const VertexSet only2 = g.neighbors(u2) - g.neighbors(u1);
      if (!only1.empty() && !only2.empty()) make(CertificateKind::lemma10b, {only1.lowest(), only2.lowest()});
      const VertexSet common = (g.neighbors(u1) & g.neighbors(u2)).without(v);
      bool found_c = false;
      for (Vertex x : common) {
        if (found_c) break;
        const VertexSet rest = common - g.closed_neighbors(x);
        for (Vertex y : rest) {
          if (y > x) {
            make(CertificateKind::lemma10c, {x, y});
            found_c = true;
            break;
          }
        }
      }
      if (planar && std::min(g.degree(u1), g.degree(u2)) >= 4) make(CertificateKind::lemma10d, {});
    }
    if (nb.size() >= 3 && g.is_independent(nb)) {
      bool any_pendant = false;
      for (Vertex x : nb) any_pendant = any_pendant || detail::pendant(g, x);
      if (!any_pendant) make(CertificateKind::lemma10e, {});
    }
  }
  return out;
}

enum class SearchStatus { found, none, incomplete };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::incomplete:
      return "incomplete";
  }
  return "?";
}

struct Lemma9Search {
  SearchStatus status = SearchStatus::none;
  std::optional<GammaLessThetaCertificate> certificate;
};

inline constexpr long kDefaultLemma9Budget = 1'000'000;

/// Looks for a lemma-9 certificate over the minimum clique partitions of G.
/// For each partition and member W, J is built by covering the vertices of W
/// one at a time with neighbours drawn from distinct other members. "none"
/// means the search was exhaustive; it says nothing about γ versus θ.
inline Lemma9Search lemma9_witness(const Graph& g, long budget = kDefaultLemma9Budget, long cap = kDefaultMcpCap) {
  Lemma9Search out;
  if (g.order() == 0) return out;
  long steps = 0;
  bool exhausted_budget = false;

  auto try_partition = [&](const CliquePartition& p) -> bool {
    std::vector<int> member_of(g.order(), -1);
    for (int i = 0; i < p.size(); ++i) {
      for (Vertex x : p.cliques()[i]) member_of[x] = i;
    }
    for (int wi = 0; wi < p.size(); ++wi) {
      const VertexSet w = p.cliques()[wi];
      // used: members already holding a vertex of J.
      auto cover = [&](auto&& self, VertexSet j, VertexSet open, std::uint64_t used) -> bool {
        if (++steps > budget) {
          exhausted_budget = true;
          return false;
        }
        if (open.empty()) {
          GammaLessThetaCertificate c;
          c.kind = CertificateKind::lemma9;
          c.partition = p;
          c.j = j;
          c.w = w;
          out.certificate = c;
          return true;
        }
        const Vertex target = open.lowest();
        for (Vertex x : g.neighbors(target) - w) {
          const int m = member_of[x];
          if (used >> m & 1) continue;
          if (self(self, j.with(x), open - g.neighbors(x), used | (std::uint64_t{1} << m))) return true;
          if (exhausted_budget) return false;
        }
        return false;
      };
      if (cover(cover, VertexSet{}, w, std::uint64_t{1} << wi)) return true;
      if (exhausted_budget) return false;
    }
    return false;
  };

  bool found = false;
  const bool complete = for_each_mcp(g, cap, [&](const CliquePartition& p) {
    found = try_partition(p);
    return !found && !exhausted_budget;
  });
  if (found) {
    out.status = SearchStatus::found;
  } else if (!complete || exhausted_budget) {
    out.status = SearchStatus::incomplete;
  }
  return out;
}

enum class Corollary1Status { found, vacuous, none, unknown };

inline const char* to_string(Corollary1Status s) {
  switch (s) {
    case Corollary1Status::found:
      return "found";
    case Corollary1Status::vacuous:
      return "vacuous";
    case Corollary1Status::none:
      return "none";
    case Corollary1Status::unknown:
      return "unknown";
  }
  return "?";
}

struct Corollary1Result {
  Corollary1Status status = Corollary1Status::none;
  /// The violating set, in the vertex numbering of G (when found).
  VertexSet s;
  /// N_1[v] minus N_1[u].
  VertexSet target;
};

inline constexpr int kCorollary1MaxSize = 3;

/// Searches for S inside G_{v,u}, θ-independent there, with every vertex of
/// N_1[v] \ N_1[u] adjacent to S. Sets of size 1 are tried first.
inline Corollary1Result corollary1_violation(const Graph& g, Vertex v, Vertex u, long cap = kDefaultMcpCap,
                                             int max_size = kCorollary1MaxSize) {
  g.check_vertex(v);
  g.check_vertex(u);
  if (!g.has_edge(v, u)) throw HypothesisError("edge", "vu is not an edge");
  if ((g.neighbors(v) & g.neighbors(u)).size() > 1) {
    throw HypothesisError("common_neighbors", "v and u have more than one common neighbour");
  }
  Corollary1Result out;
  out.target = g.closed_neighbors(v) - g.closed_neighbors(u);
  if (out.target.empty()) {
    out.status = Corollary1Status::vacuous;
    return out;
  }
  const Subgraph rest = residual(g, {v, u});
  const VertexSet pool = rest.map.to_parent_set(rest.graph.vertices());
  bool unknown = false;
  for (int size = 1; size <= max_size; ++size) {
    bool found = false;
    for_each_subset_of_size(pool, size, [&](VertexSet s) {
      if (!out.target.is_subset_of(g.open_neighbors(s))) return true;
      const ThetaIndependence ti = is_theta_independent(rest.graph, rest.map.to_child_set(s), cap);
      if (ti.decision == Decision::yes) {
        out.s = s;
        found = true;
        return false;
      }
      if (ti.decision == Decision::unknown) unknown = true;
      return true;
    });
    if (found) {
      out.status = Corollary1Status::found;
      return out;
    }
  }
  out.status = unknown ? Corollary1Status::unknown : Corollary1Status::none;
  return out;
}

struct Lemma13Failure {
  VertexSet i;
  int expected = 0;
  int gamma = 0;
  int theta = 0;
  bool operator==(const Lemma13Failure&) const = default;
};

struct Lemma14Failure {
  Edge edge;
  char part = 'a';
  int expected = 0;
  int gamma = 0;
  int theta = 0;
  bool operator==(const Lemma14Failure&) const = default;
};

struct Corollary1Violation {
  Vertex v = -1;
  Vertex u = -1;
  VertexSet s;
  bool operator==(const Corollary1Violation&) const = default;
};

struct ObstructionOptions {
  /// Check every nonempty independent I instead of |I| <= 2.
  bool full_lemma13 = false;
  long cap_mcp = kDefaultMcpCap;
};

/// Every necessary condition for a smallest planar graph with
/// γ = γ^∞ < θ, evaluated on an arbitrary graph. A graph with no recorded
/// obstruction is not ruled out by these checks.
struct ObstructionReport {
  int gamma = 0;
  int gamma_inf = 0;
  int theta = 0;
  bool planar = false;
  /// planar and γ = γ^∞ < θ.
  bool candidate = false;
  int min_degree = 0;
  std::optional<Edge> lemma12_containment;
  std::optional<Vertex> cutvertex;
  /// Only evaluated when δ(G) = 5.
  bool separating_edge_checked = false;
  std::optional<Edge> separating_edge;
  bool lemma13_full_depth = false;
  std::vector<Lemma13Failure> lemma13_failures;
  std::vector<Lemma14Failure> lemma14_failures;
  std::vector<Corollary1Violation> corollary1_violations;
  int corollary1_unknown = 0;

  bool min_degree_obstruction() const { return min_degree < 4; }
  bool obstructed() const {
    return !candidate || min_degree_obstruction() || lemma12_containment || cutvertex || separating_edge ||
           !lemma13_failures.empty() || !lemma14_failures.empty() || !corollary1_violations.empty();
  }
  bool operator==(const ObstructionReport&) const = default;
};

inline ObstructionReport obstruction_report(const Graph& g, const ObstructionOptions& opt = {}) {
  ObstructionReport r;
  const int n = g.order();
  r.gamma = domination_number(g).value;
  r.theta = clique_cover_number(g).value;
  r.gamma_inf = eternal_domination_number(g).value;
  r.planar = is_planar(g);
  r.candidate = r.planar && r.gamma == r.gamma_inf && r.gamma_inf < r.theta;
  r.min_degree = g.min_degree();

  for (auto [a, b] : g.edges()) {
    if (r.lemma12_containment) break;
    if (g.closed_neighbors(a).is_subset_of(g.closed_neighbors(b))) {
      r.lemma12_containment = Edge{a, b};
    } else if (g.closed_neighbors(b).is_subset_of(g.closed_neighbors(a))) {
      r.lemma12_containment = Edge{b, a};
    }
  }

  const VertexSet cuts = cutvertices(g);
  if (!cuts.empty()) r.cutvertex = cuts.lowest();

  if (n > 0 && r.min_degree == 5) {
    r.separating_edge_checked = true;
    for (auto [a, b] : g.edges()) {
      if (is_separating_edge(g, a, b)) {
        r.separating_edge = Edge{a, b};
        break;
      }
    }
  }

  auto gamma_theta = [](const Graph& h) {
    return std::pair{domination_number(h).value, clique_cover_number(h).value};
  };

  r.lemma13_full_depth = opt.full_lemma13;
  const int max_i = opt.full_lemma13 ? n : 2;
  for (int size = 1; size <= std::min(max_i, n); ++size) {
    for_each_subset_of_size(g.vertices(), size, [&](VertexSet i) {
      if (!g.is_independent(i)) return;
      auto [gm, th] = gamma_theta(residual(g, i).graph);
      const int expected = r.gamma - size;
      if (gm != expected || th != expected) r.lemma13_failures.push_back({i, expected, gm, th});
    });
  }

  for (auto [a, b] : g.edges()) {
    const VertexSet q = g.closed_neighbors(a) & g.closed_neighbors(b);
    bool eq3 = false;
    {
      auto [gm, th] = gamma_theta(residual(g, {a, b}).graph);
      eq3 = gm == r.gamma - 2 && th == r.gamma - 2;
      if (g.is_clique(q) && q.size() >= 2 && q.size() <= 4 && !eq3) {
        r.lemma14_failures.push_back({Edge{a, b}, 'a', r.gamma - 2, gm, th});
      }
    }
    if (q.size() >= 4 && !eq3) {
      auto [gm, th] = gamma_theta(remove_vertices(g, q).graph);
      if (gm != r.gamma - 1 || th != r.gamma - 1) {
        r.lemma14_failures.push_back({Edge{a, b}, 'b', r.gamma - 1, gm, th});
      }
    }
  }

  for (auto [a, b] : g.edges()) {
    if ((g.neighbors(a) & g.neighbors(b)).size() > 1) continue;
    for (auto [v, u] : {Edge{a, b}, Edge{b, a}}) {
      const Corollary1Result c = corollary1_violation(g, v, u, opt.cap_mcp);
      if (c.status == Corollary1Status::found) r.corollary1_violations.push_back({v, u, c.s});
      if (c.status == Corollary1Status::unknown) ++r.corollary1_unknown;
    }
  }
  return r;
}

/// γ^∞(G) = θ(G).
inline bool is_maximum_demand(const Graph& g) {
  return eternal_domination_number(g).value == clique_cover_number(g).value;
}

struct Lemma4Check {
  /// G1, G2, G1 - v1 and G2 - v2 are all maximum-demand.
  bool applicable = false;
  /// The composed graph is maximum-demand (meaningful when applicable).
  bool maximum_demand = false;
  Graph composed;
};

inline Lemma4Check lemma4_compose_check(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  Lemma4Check out;
  out.composed = identify_vertices(g1, v1, g2, v2);
  out.applicable = is_maximum_demand(g1) && is_maximum_demand(g2) &&
                   is_maximum_demand(remove_vertices(g1, {v1}).graph) &&
                   is_maximum_demand(remove_vertices(g2, {v2}).graph);
  if (out.applicable) out.maximum_demand = is_maximum_demand(out.composed);
  return out;
}

}  // namespace edom
