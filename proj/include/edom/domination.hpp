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
#include <vector>

#include "edom/graph.hpp"

namespace edom {

/// N_1[D] = V. The empty set dominates only the empty graph.
inline bool is_dominating(const Graph& g, VertexSet d) {
  g.check_set(d);
  return g.closed_neighbors(d) == g.vertices();
}

/// Vertices not dominated by `d`.
inline VertexSet undominated(const Graph& g, VertexSet d) { return g.vertices() - g.closed_neighbors(d); }

struct DominationResult {
  int value = 0;
  VertexSet witness;
};

namespace detail {

/// Depth-limited search for dominating sets: repeatedly pick the undominated
/// vertex with the fewest dominators and branch on who dominates it.
class DominatingSearch {
 public:
  explicit DominatingSearch(const Graph& g) : g_(g) {
    for (Vertex v = 0; v < g.order(); ++v) closed_[v] = g.closed_neighbors(v);
  }

  /// Some dominating set with at most `budget` vertices, or nothing.
  bool find(int budget, VertexSet& out) {
    prune_dominated_ = true;
    found_ = false;
    sink_ = nullptr;
    search(g_.vertices(), VertexSet{}, budget);
    if (found_) out = best_;
    return found_;
  }

  /// Every dominating set reached by the branching with exactly `size` vertices.
  /// Complete when `size` is the domination number.
  void collect(int size, std::vector<VertexSet>& out) {
    prune_dominated_ = false;
    found_ = false;
    sink_ = &out;
    exact_size_ = size;
    search(g_.vertices(), VertexSet{}, size);
  }

 private:
  bool search(VertexSet open, VertexSet chosen, int budget) {
    if (open.empty()) {
      if (sink_ == nullptr) {
        found_ = true;
        best_ = chosen;
        return true;
      }
      if (chosen.size() == exact_size_) sink_->push_back(chosen);
      return false;
    }
    if (budget == 0) return false;

    // Coverage bound: no vertex can dominate more than max_cover open vertices.
    int max_cover = 0;
    Vertex target = -1;
    int target_options = kMaxVertices + 1;
    const VertexSet candidates = g_.closed_neighbors(open);
    for (Vertex c : candidates) max_cover = std::max(max_cover, (closed_[c] & open).size());
    if (open.size() > budget * max_cover) return false;
    for (Vertex w : open) {
      const int options = closed_[w].size();
      if (options < target_options) {
        target_options = options;
        target = w;
      }
    }

    const VertexSet branch = closed_[target];
    for (Vertex x : branch) {
      if (prune_dominated_ && dominated_choice(x, branch, open)) continue;
      if (search(open - closed_[x], chosen.with(x), budget - 1)) return true;
    }
    return false;
  }

  // x is redundant when another option y covers a superset of x's open
  // neighbourhood (ties broken towards the smaller index).
  bool dominated_choice(Vertex x, VertexSet options, VertexSet open) const {
    const VertexSet cx = closed_[x] & open;
    for (Vertex y : options) {
      if (y == x) continue;
      const VertexSet cy = closed_[y] & open;
      if (cx.is_subset_of(cy) && (cx != cy || y < x)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::array<VertexSet, kMaxVertices> closed_{};
  bool prune_dominated_ = true;
  bool found_ = false;
  VertexSet best_;
  std::vector<VertexSet>* sink_ = nullptr;
  int exact_size_ = 0;
};

}  // namespace detail

/// γ(G) with one minimum dominating set. γ of the empty graph is 0.
inline DominationResult domination_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  detail::DominatingSearch search(g);
  const int lower = (n + g.max_degree()) / (g.max_degree() + 1);
  for (int k = std::max(1, lower); k <= n; ++k) {
    VertexSet witness;
    if (search.find(k, witness)) return {witness.size(), witness};
  }
  throw Error("domination_number: search failed to terminate");  // V always dominates
}

/// All minimum dominating sets, sorted by bit pattern.
inline std::vector<VertexSet> all_min_dominating_sets(const Graph& g) {
  if (g.order() == 0) return {VertexSet{}};
  const int gamma = domination_number(g).value;
  std::vector<VertexSet> out;
  detail::DominatingSearch(g).collect(gamma, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace edom
