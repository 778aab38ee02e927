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

// Brute-force reference implementations. Deliberately naive: plain loops over
// all subsets or set partitions, sharing nothing with the solvers under test
// beyond the Graph container.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "edom/graph.hpp"

namespace oracle {

using edom::Graph;
using edom::VertexSet;
using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask all(int n) { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

inline bool adjacent(const Graph& g, int a, int b) { return g.has_edge(a, b); }

inline bool dominates(const Graph& g, Mask d) {
  for (int v = 0; v < g.order(); ++v) {
    if (d & bit(v)) continue;
    bool hit = false;
    for (int u = 0; u < g.order(); ++u) {
      if ((d & bit(u)) && adjacent(g, u, v)) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

inline bool clique(const Graph& g, Mask s) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if ((s & bit(a)) && (s & bit(b)) && !adjacent(g, a, b)) return false;
  return true;
}

inline bool independent(const Graph& g, Mask s) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if ((s & bit(a)) && (s & bit(b)) && adjacent(g, a, b)) return false;
  return true;
}

inline std::vector<Mask> min_dominating_sets(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    std::vector<Mask> out;
    for (Mask s = 0; s <= all(n); ++s) {
      if (popcount(s) == k && dominates(g, s)) out.push_back(s);
    }
    if (!out.empty()) return out;
  }
  return {};
}

inline int gamma(const Graph& g) { return popcount(min_dominating_sets(g).front()); }

inline int alpha(const Graph& g) {
  int best = 0;
  for (Mask s = 0; s <= all(g.order()); ++s) {
    if (independent(g, s)) best = std::max(best, popcount(s));
  }
  return best;
}

/// Every partition of {0..n-1} into cliques, via restricted growth strings.
inline std::vector<std::vector<Mask>> clique_partitions(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Mask>> out;
  std::vector<int> block(n, 0);
  auto emit = [&] {
    int blocks = 0;
    for (int b : block) blocks = std::max(blocks, b + 1);
    std::vector<Mask> parts(blocks, 0);
    for (int v = 0; v < n; ++v) parts[block[v]] |= bit(v);
    for (Mask p : parts) {
      if (!clique(g, p)) return;
    }
    std::sort(parts.begin(), parts.end());
    out.push_back(parts);
  };
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      emit();
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return {{}};
  block[0] = 0;
  rec(rec, 1, 1);
  return out;
}

inline std::vector<std::vector<Mask>> min_clique_partitions(const Graph& g) {
  auto all_parts = clique_partitions(g);
  std::size_t best = g.order() + 1;
  for (auto& p : all_parts) best = std::min(best, p.size());
  std::vector<std::vector<Mask>> out;
  for (auto& p : all_parts) {
    if (p.size() == best) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int theta(const Graph& g) { return g.order() == 0 ? 0 : static_cast<int>(min_clique_partitions(g).front().size()); }

inline bool theta_independent(const Graph& g, Mask s) {
  for (auto& p : min_clique_partitions(g)) {
    bool ok = true;
    for (Mask c : p) {
      if (popcount(c & s) > 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

/// BFS distances from v; -1 when unreachable.
inline std::vector<int> distances(const Graph& g, int v) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < g.order(); ++y) {
      if (dist[y] < 0 && adjacent(g, x, y)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

inline int component_count(const Graph& g, Mask within) {
  int count = 0;
  Mask seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!(within & bit(v)) || (seen & bit(v))) continue;
    ++count;
    std::vector<int> stack{v};
    seen |= bit(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < g.order(); ++y) {
        if ((within & bit(y)) && !(seen & bit(y)) && adjacent(g, x, y)) {
          seen |= bit(y);
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

/// Eternal domination (one guard moves) by retrograde analysis over explicit
/// attacker/defender positions. Returns every k-set from which the defender
/// survives forever. Independent of the synchronous-round solver: positions
/// are labelled lost one at a time through successor counters.
inline std::set<Mask> eternal_sets(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Mask> configs;
  for (Mask s = 0; s <= all(n); ++s) {
    if (popcount(s) == k) configs.push_back(s);
  }
  std::map<Mask, int> id;
  for (std::size_t i = 0; i < configs.size(); ++i) id[configs[i]] = static_cast<int>(i);

  // Defender position (config i, attacked v): remaining options not yet lost.
  std::map<std::pair<int, int>, int> options;
  std::map<int, std::vector<std::pair<int, int>>> preds;  // config -> defender positions leading to it
  std::vector<bool> lost(configs.size(), false);
  std::deque<int> queue;

  for (std::size_t i = 0; i < configs.size(); ++i) {
    Mask d = configs[i];
    if (!dominates(g, d)) {
      lost[i] = true;
      queue.push_back(static_cast<int>(i));
    }
    for (int v = 0; v < n; ++v) {
      if (d & bit(v)) continue;
      int count = 0;
      for (int u = 0; u < n; ++u) {
        if ((d & bit(u)) && adjacent(g, u, v)) {
          Mask next = (d & ~bit(u)) | bit(v);
          preds[id[next]].push_back({static_cast<int>(i), v});
          ++count;
        }
      }
      options[{static_cast<int>(i), v}] = count;
      if (count == 0 && !lost[i]) {
        lost[i] = true;
        queue.push_back(static_cast<int>(i));
      }
    }
  }
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (auto [i, v] : preds[j]) {
      if (lost[i]) continue;
      if (--options[{i, v}] == 0) {
        lost[i] = true;
        queue.push_back(i);
      }
    }
  }
  std::set<Mask> out;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (!lost[i]) out.insert(configs[i]);
  }
  return out;
}

inline int eternal_domination_number(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k) {
    if (!eternal_sets(g, k).empty()) return k;
  }
  return 0;
}

/// Set of configurations reachable by the defender while staying dominating.
inline std::set<Mask> survive(const Graph& g, Mask d, const std::vector<int>& attacks) {
  std::set<Mask> cur;
  if (dominates(g, d)) cur.insert(d);
  for (int v : attacks) {
    std::set<Mask> next;
    for (Mask c : cur) {
      if (c & bit(v)) {
        next.insert(c);
        continue;
      }
      for (int u = 0; u < g.order(); ++u) {
        if (!(c & bit(u))) continue;
        if (u != v && !adjacent(g, u, v)) continue;
        Mask e = (c & ~bit(u)) | bit(v);
        if (dominates(g, e)) next.insert(e);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace oracle
