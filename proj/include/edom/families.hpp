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

// Named graph families.

#pragma once

#include "edom/graph.hpp"

namespace edom::families {

inline Graph complete(int n) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

inline Graph empty(int n) { return Graph(n); }

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw Error("cycle: n must be >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{1,leaves}; vertex 0 is the centre.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

/// Two triangles sharing vertex 0.
inline Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

/// P2 x P_len: rails 0..len-1 and len..2len-1 with rungs i -- i+len.
inline Graph ladder(int len) {
  Graph g(2 * len);
  for (int i = 0; i + 1 < len; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(len + i, len + i + 1);
  }
  for (int i = 0; i < len; ++i) g.add_edge(i, len + i);
  return g;
}

/// K_{2,2,2}.
inline Graph octahedron() {
  Graph g = complete(6);
  for (int i = 0; i < 3; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

/// Disjoint union; g2's vertices are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.order() + g2.order());
  for (auto [a, b] : g1.edges()) g.add_edge(a, b);
  for (auto [a, b] : g2.edges()) g.add_edge(g1.order() + a, g1.order() + b);
  return g;
}

}  // namespace edom::families
