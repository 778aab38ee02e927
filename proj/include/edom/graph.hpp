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

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "edom/vertex_set.hpp"

namespace edom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices {0, ..., n-1}, n <= 64.
///
/// Row i of the adjacency table is the open neighbourhood of i. The table is
/// kept symmetric and irreflexive by construction; there is no way to add a
/// loop or a one-sided arc. n = 0 is a legal value (the empty graph produced
/// by residual constructions).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw Error("graph order " + std::to_string(n) + " outside supported range [0, 64]");
    }
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::full(n_); }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const { return adj_[a].contains(b); }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Union of closed neighbourhoods, N_1[S].
  VertexSet closed_neighbors(VertexSet s) const {
    VertexSet out = s;
    for (Vertex v : s) out |= adj_[v];
    return out;
  }
  /// Union of open neighbourhoods (may intersect S).
  VertexSet open_neighbors(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out |= adj_[v];
    return out;
  }

  void add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw Error("loop at vertex " + std::to_string(a) + " in a simple graph");
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
  void remove_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    adj_[a].erase(b);
    adj_[b].erase(a);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b : adj_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_clique(VertexSet s) const {
    for (Vertex v : s) {
      if (!(s.without(v)).is_subset_of(adj_[v])) return false;
    }
    return true;
  }
  bool is_independent(VertexSet s) const {
    for (Vertex v : s) {
      if (adj_[v].intersects(s)) return false;
    }
    return true;
  }

  Graph complement() const {
    Graph c(n_);
    const VertexSet all = vertices();
    for (Vertex v = 0; v < n_; ++v) c.adj_[v] = (all - adj_[v]).without(v);
    return c;
  }

  /// Symmetry, irreflexivity and no bits at or above n.
  bool well_formed() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (!adj_[v].fits(n_) || adj_[v].contains(v)) return false;
      for (Vertex u : adj_[v]) {
        if (!adj_[u].contains(v)) return false;
      }
    }
    for (int v = n_; v < kMaxVertices; ++v) {
      if (!adj_[v].empty()) return false;
    }
    return true;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw Error("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
    }
  }
  void check_set(VertexSet s) const {
    if (!s.fits(n_)) throw Error("vertex set " + s.to_string() + " exceeds graph order " + std::to_string(n_));
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Child-index -> parent-index table produced by induced-subgraph style
/// constructions. Composition follows the construction chain.
struct VertexMap {
  std::vector<Vertex> to_parent;

  static VertexMap identity(int n) {
    VertexMap m;
    m.to_parent.resize(n);
    for (int i = 0; i < n; ++i) m.to_parent[i] = i;
    return m;
  }

  int size() const { return static_cast<int>(to_parent.size()); }
  Vertex operator()(Vertex child) const { return to_parent.at(child); }

  VertexSet to_parent_set(VertexSet child) const {
    VertexSet out;
    for (Vertex v : child) out.insert(to_parent.at(v));
    return out;
  }
  /// Inverse image of a parent set (parent vertices outside the map are dropped).
  VertexSet to_child_set(VertexSet parent) const {
    VertexSet out;
    for (int i = 0; i < size(); ++i) {
      if (parent.contains(to_parent[i])) out.insert(i);
    }
    return out;
  }
  /// Map from `this`'s children through `parent_map` to the grandparent.
  VertexMap then(const VertexMap& parent_map) const {
    VertexMap m;
    m.to_parent.reserve(to_parent.size());
    for (Vertex v : to_parent) m.to_parent.push_back(parent_map(v));
    return m;
  }
  bool operator==(const VertexMap&) const = default;
};

struct Subgraph {
  Graph graph;
  VertexMap map;
};

/// G[W], keeping the relative order of the kept vertices.
inline Subgraph induced(const Graph& g, VertexSet keep) {
  g.check_set(keep);
  Subgraph out{Graph(keep.size()), {}};
  out.map.to_parent = keep.to_vector();
  std::array<int, kMaxVertices> child{};
  for (int i = 0; i < out.map.size(); ++i) child[out.map.to_parent[i]] = i;
  for (int i = 0; i < out.map.size(); ++i) {
    for (Vertex u : g.neighbors(out.map.to_parent[i]) & keep) {
      if (child[u] > i) out.graph.add_edge(i, child[u]);
    }
  }
  return out;
}

/// G \ W.
inline Subgraph remove_vertices(const Graph& g, VertexSet drop) {
  g.check_set(drop);
  return induced(g, g.vertices() - drop);
}

/// G_U = G[V \ N_1[U]]. The result may be the empty graph.
inline Subgraph residual(const Graph& g, VertexSet u) {
  if (u.empty()) throw Error("residual: U must be nonempty");
  g.check_set(u);
  return induced(g, g.vertices() - g.closed_neighbors(u));
}

/// How the open form N_k(U) is read for a set U.
enum class NeighborhoodReading {
  /// Union over u in U of the vertices at distance exactly k from u. This is
  /// the literal vertex-wise definition; the result can meet U.
  vertexwise_union,
  /// Vertices whose distance to the set U is exactly k; disjoint from U for k >= 1.
  set_distance,
};

namespace detail {
/// Vertices at distance <= k from the set `from`.
inline VertexSet ball(const Graph& g, VertexSet from, int k) {
  VertexSet reached = from;
  for (int step = 0; step < k; ++step) {
    VertexSet next = g.closed_neighbors(reached);
    if (next == reached) break;
    reached = next;
  }
  return reached;
}
}  // namespace detail

/// N_k[U] when `closed`, otherwise N_k(U) under `reading`. k = 0 gives U (closed) or {} (open).
inline VertexSet neighborhood(const Graph& g, VertexSet u, int k, bool closed,
                              NeighborhoodReading reading = NeighborhoodReading::vertexwise_union) {
  if (u.empty()) throw Error("neighborhood: U must be nonempty");
  if (k < 0) throw Error("neighborhood: radius must be >= 0");
  g.check_set(u);
  if (closed) return detail::ball(g, u, k);
  if (k == 0) return {};
  if (reading == NeighborhoodReading::set_distance) {
    return detail::ball(g, u, k) - detail::ball(g, u, k - 1);
  }
  VertexSet out;
  for (Vertex x : u) {
    const VertexSet single = VertexSet::single(x);
    out |= detail::ball(g, single, k) - detail::ball(g, single, k - 1);
  }
  return out;
}

/// Connected components of G[within], each as a vertex set, ordered by lowest vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    while (true) {
      VertexSet next = (g.closed_neighbors(comp)) & within;
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// Connectivity of G[within]; the empty set counts as connected.
inline bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  VertexSet comp = VertexSet::single(within.lowest());
  while (true) {
    VertexSet next = g.closed_neighbors(comp) & within;
    if (next == comp) return comp == within;
    comp = next;
  }
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// True iff G[V \ {a,b}] is disconnected. Requires ab to be an edge.
inline bool is_separating_edge(const Graph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (!g.has_edge(a, b)) {
    throw Error("is_separating_edge: " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
  }
  const VertexSet rest = g.vertices().without(a).without(b);
  if (rest.size() <= 1) return false;
  return !is_connected(g, rest);
}

/// Articulation points via DFS low-link.
inline VertexSet cutvertices(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::array<int, kMaxVertices> parent{};
  std::array<VertexSet, kMaxVertices> pending{};
  disc.fill(-1);
  VertexSet cut;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    parent[root] = -1;
    pending[root] = g.neighbors(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      if (!pending[v].empty()) {
        const Vertex w = pending[v].lowest();
        pending[v].erase(w);
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          pending[w] = g.neighbors(w);
          stack.push_back(w);
          if (v == root) ++root_children;
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) cut.insert(p);
      }
    }
    if (root_children >= 2) cut.insert(root);
  }
  return cut;
}

/// Disjoint union of G1 and G2 with v1 and v2 merged into one vertex.
///
/// G1 keeps its indices (the merged vertex is v1); the vertices of G2 other
/// than v2 follow in their original order.
inline Graph identify_vertices(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  const int n = g1.order() + g2.order() - 1;
  if (n > kMaxVertices) throw Error("identify_vertices: result exceeds 64 vertices");
  Graph out(n);
  for (auto [a, b] : g1.edges()) out.add_edge(a, b);
  auto place = [&](Vertex x) {
    if (x == v2) return v1;
    return g1.order() + (x < v2 ? x : x - 1);
  };
  for (auto [a, b] : g2.edges()) out.add_edge(place(a), place(b));
  return out;
}

}  // namespace edom
