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

#include "edom/graph.hpp"

namespace edom {

struct IndependenceResult {
  int value = 0;
  VertexSet witness;
};

namespace detail {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  IndependenceResult run() {
    best_ = greedy(g_.vertices());
    search(g_.vertices(), VertexSet{});
    return {best_.size(), best_};
  }

 private:
  VertexSet greedy(VertexSet open) const {
    VertexSet taken;
    while (!open.empty()) {
      Vertex pick = open.lowest();
      int pick_degree = kMaxVertices + 1;
      for (Vertex v : open) {
        const int d = (g_.neighbors(v) & open).size();
        if (d < pick_degree) {
          pick_degree = d;
          pick = v;
        }
      }
      taken.insert(pick);
      open -= g_.closed_neighbors(pick);
    }
    return taken;
  }

  void search(VertexSet open, VertexSet taken) {
    // Take vertices of degree <= 1 in G[open] unconditionally; some maximum
    // independent set contains each of them.
    bool reduced = true;
    while (reduced && !open.empty()) {
      reduced = false;
      for (Vertex v : open) {
        if ((g_.neighbors(v) & open).size() <= 1) {
          taken.insert(v);
          open -= g_.closed_neighbors(v);
          reduced = true;
          break;
        }
      }
    }
    if (open.empty()) {
      if (taken.size() > best_.size()) best_ = taken;
      return;
    }
    if (taken.size() + open.size() <= best_.size()) return;

    Vertex pivot = open.lowest();
    int pivot_degree = -1;
    for (Vertex v : open) {
      const int d = (g_.neighbors(v) & open).size();
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    search(open - g_.closed_neighbors(pivot), taken.with(pivot));
    search(open.without(pivot), taken);
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace detail

/// α(G) with one maximum independent set.
inline IndependenceResult independence_number(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::IndependentSetSearch(g).run();
}

}  // namespace edom
