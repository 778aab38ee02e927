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

// Clique partitions: the clique covering number θ, enumeration of minimum
// clique partitions, and θ-independence decisions on top of them.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

/// A partition of V(G) into cliques. Members are kept in canonical order
/// (ascending lowest vertex) so that equality is order-insensitive.
class CliquePartition {
 public:
  CliquePartition() = default;
  explicit CliquePartition(std::vector<VertexSet> cliques) : cliques_(std::move(cliques)) { canonicalize(); }

  const std::vector<VertexSet>& cliques() const { return cliques_; }
  int size() const { return static_cast<int>(cliques_.size()); }
  auto begin() const { return cliques_.begin(); }
  auto end() const { return cliques_.end(); }

  /// Member containing v, if any.
  std::optional<VertexSet> member_of(Vertex v) const {
    for (VertexSet c : cliques_) {
      if (c.contains(v)) return c;
    }
    return std::nullopt;
  }
  bool contains_member(VertexSet c) const { return std::find(cliques_.begin(), cliques_.end(), c) != cliques_.end(); }

  /// Empty string when the partition is valid for `g`, else the first violation.
  std::string violation(const Graph& g) const {
    VertexSet seen;
    for (VertexSet c : cliques_) {
      if (c.empty()) return "empty member";
      if (!c.fits(g.order())) return "member " + c.to_string() + " outside the graph";
      if (seen.intersects(c)) return "members overlap at " + (seen & c).to_string();
      if (!g.is_clique(c)) return "member " + c.to_string() + " is not a clique";
      seen |= c;
    }
    if (seen != g.vertices()) return "vertices " + (g.vertices() - seen).to_string() + " uncovered";
    return {};
  }
  bool is_valid_for(const Graph& g) const { return violation(g).empty(); }

  bool operator==(const CliquePartition&) const = default;
  auto operator<=>(const CliquePartition&) const = default;

 private:
  void canonicalize() {
    std::sort(cliques_.begin(), cliques_.end(),
              [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest() || (a.lowest() == b.lowest() && a < b); });
  }
  std::vector<VertexSet> cliques_;
};

struct CliqueCoverResult {
  int value = 0;
  CliquePartition witness;
};

namespace detail {

/// Greedy independent set size in G[open]; every clique partition of G[open]
/// needs at least this many members.
inline int independent_lower_bound(const Graph& g, VertexSet open) {
  int count = 0;
  while (!open.empty()) {
    Vertex pick = open.lowest();
    int pick_degree = kMaxVertices + 1;
    for (Vertex v : open) {
      const int d = (g.neighbors(v) & open).size();
      if (d < pick_degree) {
        pick_degree = d;
        pick = v;
      }
    }
    ++count;
    open -= g.closed_neighbors(pick);
  }
  return count;
}

/// Calls fn(clique) for every maximal clique of G[within] that contains v.
template <typename Fn>
void for_each_maximal_clique_through(const Graph& g, Vertex v, VertexSet within, Fn&& fn) {
  // Bron-Kerbosch with pivoting, seeded with R = {v}.
  struct Frame {
    static void expand(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Fn& fn) {
      if (p.empty()) {
        if (x.empty()) fn(r);
        return;
      }
      Vertex pivot = (p | x).lowest();
      int best = -1;
      for (Vertex u : p | x) {
        const int c = (g.neighbors(u) & p).size();
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
      for (Vertex u : p - g.neighbors(pivot)) {
        expand(g, r.with(u), p & g.neighbors(u), x & g.neighbors(u), fn);
        p.erase(u);
        x.insert(u);
      }
    }
  };
  Frame::expand(g, VertexSet::single(v), g.neighbors(v) & within, VertexSet{}, fn);
}

class CliqueCoverSearch {
 public:
  explicit CliqueCoverSearch(const Graph& g) : g_(g) {}

  CliqueCoverResult run() {
    greedy_upper_bound();
    std::vector<VertexSet> path;
    search(g_.vertices(), path);
    return {static_cast<int>(best_.size()), CliquePartition(best_)};
  }

 private:
  void greedy_upper_bound() {
    VertexSet open = g_.vertices();
    best_.clear();
    while (!open.empty()) {
      const Vertex v = open.lowest();
      VertexSet clique = VertexSet::single(v);
      VertexSet candidates = g_.neighbors(v) & open;
      while (!candidates.empty()) {
        const Vertex u = candidates.lowest();
        clique.insert(u);
        candidates &= g_.neighbors(u);
      }
      best_.push_back(clique);
      open -= clique;
    }
  }

  // Some optimal partition of G[open] uses a clique that is maximal in
  // G[open] for any fixed vertex, so only maximal cliques are branched on.
  void search(VertexSet open, std::vector<VertexSet>& path) {
    if (open.empty()) {
      if (path.size() < best_.size()) best_ = path;
      return;
    }
    if (path.size() + static_cast<std::size_t>(independent_lower_bound(g_, open)) >= best_.size()) return;

    Vertex v = open.lowest();
    int v_degree = kMaxVertices + 1;
    for (Vertex u : open) {
      const int d = (g_.neighbors(u) & open).size();
      if (d < v_degree) {
        v_degree = d;
        v = u;
      }
    }
    std::vector<VertexSet> options;
    for_each_maximal_clique_through(g_, v, open, [&](VertexSet c) { options.push_back(c); });
    std::sort(options.begin(), options.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    for (VertexSet c : options) {
      path.push_back(c);
      search(open - c, path);
      path.pop_back();
      if (path.size() + 1 >= best_.size()) return;
    }
  }

  const Graph& g_;
  std::vector<VertexSet> best_;
};

}  // namespace detail

/// θ(G) with one minimum clique partition. θ of the empty graph is 0.
inline CliqueCoverResult clique_cover_number(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::CliqueCoverSearch(g).run();
}

/// Default cap on minimum clique partitions examined per graph.
inline constexpr long kDefaultMcpCap = 10'000;

struct McpEnumeration {
  std::vector<CliquePartition> partitions;
  /// False when the cap stopped the enumeration before it was exhausted.
  bool complete = true;
};

/// Streams distinct minimum clique partitions to `visit` (which returns false
/// to stop early). At most `cap` partitions are delivered; the return value
/// says whether the enumeration was exhausted. An early stop requested by the
/// visitor also reports false.
///
/// Each partition is produced once: the member containing the smallest
/// uncovered vertex is chosen first, so member order is fixed.
template <typename Visit>
bool for_each_mcp(const Graph& g, long cap, Visit&& visit, int theta = -1) {
  if (cap < 1) throw Error("enumerate_mcp: cap must be >= 1");
  if (g.order() == 0) {
    visit(CliquePartition{});
    return true;
  }
  if (theta < 0) theta = clique_cover_number(g).value;
  long delivered = 0;
  bool stopped = false;
  std::vector<VertexSet> path;

  std::function<void(VertexSet)> rec = [&](VertexSet open) {
    if (stopped) return;
    if (open.empty()) {
      if (delivered == cap) {
        stopped = true;  // a further partition exists beyond the cap
        return;
      }
      ++delivered;
      if (!visit(CliquePartition(path))) stopped = true;
      return;
    }
    if (static_cast<int>(path.size()) + detail::independent_lower_bound(g, open) > theta) return;
    const Vertex v = open.lowest();
    const VertexSet pool = g.neighbors(v) & open;
    // Every clique {v} ∪ S with S ⊆ pool.
    std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet clique, VertexSet candidates) {
      if (stopped) return;
      path.push_back(clique);
      rec(open - clique);
      path.pop_back();
      for (Vertex u : candidates) {
        candidates.erase(u);
        grow(clique.with(u), candidates & g.neighbors(u));
        if (stopped) return;
      }
    };
    grow(VertexSet::single(v), pool);
  };
  rec(g.vertices());
  return !stopped;
}

inline McpEnumeration enumerate_mcp(const Graph& g, long cap = kDefaultMcpCap) {
  McpEnumeration out;
  out.complete = for_each_mcp(g, cap, [&](const CliquePartition& p) {
    out.partitions.push_back(p);
    return true;
  });
  return out;
}

/// Every member of P holds at most one vertex of S.
inline bool is_theta_independent_in(VertexSet s, const CliquePartition& p) {
  for (VertexSet c : p) {
    if ((c & s).size() > 1) return false;
  }
  return true;
}

enum class Decision { yes, no, unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::unknown:
      return "unknown";
  }
  return "?";
}

struct ThetaIndependence {
  Decision decision = Decision::unknown;
  /// A minimum clique partition in which S is θ-independent (when yes).
  std::optional<CliquePartition> witness;
};

/// Whether S is θ-independent in some minimum clique partition of G.
/// "unknown" means the cap was reached before a witness or exhaustion.
inline ThetaIndependence is_theta_independent(const Graph& g, VertexSet s, long cap = kDefaultMcpCap) {
  g.check_set(s);
  if (g.is_independent(s)) return {Decision::yes, clique_cover_number(g).witness};
  ThetaIndependence out;
  bool found = false;
  const bool complete = for_each_mcp(g, cap, [&](const CliquePartition& p) {
    if (is_theta_independent_in(s, p)) {
      out.witness = p;
      found = true;
      return false;
    }
    return true;
  });
  if (found) {
    out.decision = Decision::yes;
  } else {
    out.decision = complete ? Decision::no : Decision::unknown;
  }
  return out;
}

}  // namespace edom
