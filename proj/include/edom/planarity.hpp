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

// Left-right planarity criterion (Brandes' formulation of de Fraysseix and
// Rosenstiehl). Only the decision is computed; no embedding is produced.

#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

namespace detail {

class LrPlanarity {
 public:
  explicit LrPlanarity(const Graph& g)
      : g_(g),
        n_(g.order()),
        lowpt_(n_ * n_, 0),
        lowpt2_(n_ * n_, 0),
        nesting_(n_ * n_, 0),
        ref_(n_ * n_, kNone),
        lowpt_edge_(n_ * n_, kNone),
        stack_bottom_(n_ * n_, kNone),
        oriented_(n_ * n_, false) {
    height_.fill(-1);
    parent_edge_.fill(kNone);
  }

  bool run() {
    const int n = g_.order();
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](Vertex a, Vertex b) { return nesting_[edge(v, a)] < nesting_[edge(v, b)]; });
    }
    for (Vertex r : roots) {
      if (!test(r)) return false;
    }
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    int id = kNone;
    void swap_sides() { std::swap(left, right); }
  };

  // Oriented edge from -> to, encoded as from * n + to.
  int edge(Vertex from, Vertex to) const { return from * n_ + to; }
  Vertex head(int e) const { return e % n_; }
  Vertex tail(int e) const { return e / n_; }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }
  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }
  void set_ref(int e, int target) {
    if (e != kNone) ref_[e] = target;
  }
  int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  void orient(Vertex v) {
    const int e = parent_edge_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (oriented_[edge(v, w)] || oriented_[edge(w, v)]) continue;
      const int vw = edge(v, w);
      oriented_[vw] = true;
      out_[v].push_back(w);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == -1) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_[vw] += 1;  // chordal
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const int e = parent_edge_[v];
    for (Vertex w : out_[v]) {
      const int ei = edge(v, w);
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        p.id = next_id_++;
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (w == out_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    p.id = next_id_++;
    // Merge the return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap_sides();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (top_id() != stack_bottom_[ei]);
    // Merge conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap_sides();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = tail(e);
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && head(p.left.high) == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      while (p.right.high != kNone && head(p.right.high) == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<int> stack_bottom_;
  std::vector<char> oriented_;
  std::array<int, kMaxVertices> height_;
  std::array<int, kMaxVertices> parent_edge_;
  std::array<std::vector<Vertex>, kMaxVertices> out_;
  std::vector<ConflictPair> stack_;
  int next_id_ = 0;
};

}  // namespace detail

/// Planarity decision. Graphs with m > 3n - 6 (n >= 3) are rejected before
/// the DFS phases run.
inline bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  detail::LrPlanarity state(g);
  return state.run();
}

}  // namespace edom
