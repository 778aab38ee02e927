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

// Eternal domination, one-guard-moves model.
//
// A configuration is a set of k guarded vertices. The attacker names a vertex
// v; if v is guarded nothing moves, otherwise one guard u adjacent to v moves
// to v. The defender loses as soon as the configuration stops dominating.
// The safe family at k is the greatest set of dominating k-sets closed under
// defending every attack; it is computed by synchronous elimination rounds.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "edom/clique_cover.hpp"
#include "edom/domination.hpp"
#include "edom/independence.hpp"

namespace edom {

namespace detail {

/// Index of k-sets over a graph of order n: a dense table for small n and a
/// hash map otherwise.
class ConfigIndex {
 public:
  static constexpr int kDenseLimit = 20;

  explicit ConfigIndex(int n = 0) : dense_(n <= kDenseLimit) {
    if (dense_) table_.assign(std::size_t{1} << n, -1);
  }
  void add(VertexSet s, int id) {
    if (dense_) {
      table_[s.bits()] = id;
    } else {
      map_.emplace(s.bits(), id);
    }
  }
  int find(VertexSet s) const {
    if (dense_) return table_[s.bits()];
    auto it = map_.find(s.bits());
    return it == map_.end() ? -1 : it->second;
  }

 private:
  bool dense_;
  std::vector<std::int32_t> table_;
  std::unordered_map<std::uint64_t, std::int32_t> map_;
};

}  // namespace detail

/// Greatest-fixpoint certificate of the game at guard count k.
///
/// Every dominating k-set is a candidate. Candidates removed in elimination
/// round r >= 1 lose against an attacker who needs at most r attacks; the
/// survivors form the family. For each survivor D and attacked vertex v not
/// in D the table stores the smallest guard u with (D - u) + v in the family.
class SafeFamily {
 public:
  SafeFamily() = default;

  int order() const { return n_; }
  int k() const { return k_; }
  bool empty() const { return configs_.empty(); }
  std::size_t size() const { return configs_.size(); }

  /// Surviving configurations, ascending by bit pattern.
  const std::vector<VertexSet>& configs() const { return configs_; }
  /// All dominating k-sets, ascending by bit pattern.
  const std::vector<VertexSet>& candidates() const { return candidates_; }
  bool contains(VertexSet d) const {
    const int i = index_.find(d);
    return i >= 0 && death_[i] == 0;
  }
  bool is_candidate(VertexSet d) const { return d.fits(n_) && d.size() == k_ && index_.find(d) >= 0; }

  /// Number of rounds that eliminated at least one candidate.
  int rounds() const { return rounds_; }
  /// 0 for members, r >= 1 for candidates eliminated in round r, -1 for sets
  /// that are not dominating k-sets.
  int death_round(VertexSet d) const {
    if (!d.fits(n_) || d.size() != k_) return -1;
    const int i = index_.find(d);
    return i < 0 ? -1 : death_[i];
  }
  /// Candidates eliminated in each round (round r at position r - 1).
  std::vector<std::vector<VertexSet>> elimination_trace() const {
    std::vector<std::vector<VertexSet>> out(rounds_);
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (death_[i] > 0) out[death_[i] - 1].push_back(candidates_[i]);
    }
    return out;
  }
  /// For an eliminated candidate: an attack after which every defence reaches
  /// a non-dominating set or a candidate eliminated in an earlier round.
  std::optional<Vertex> eliminating_attack(VertexSet d) const {
    const int i = d.fits(n_) ? index_.find(d) : -1;
    if (i < 0 || death_[i] == 0) return std::nullopt;
    return attack_[i];
  }
  /// Stored witness guard for a member config and an unguarded attack.
  Vertex witness_guard(VertexSet d, Vertex v) const {
    const int i = index_.find(d);
    const int pos = member_pos_[i];
    return moves_[static_cast<std::size_t>(pos) * n_ + v];
  }

 private:
  friend SafeFamily safe_family(const Graph& g, int k);
  friend bool has_safe_family(const Graph& g, int k);

  int n_ = 0;
  int k_ = 0;
  int rounds_ = 0;
  std::vector<VertexSet> candidates_;
  std::vector<int> death_;
  std::vector<Vertex> attack_;
  std::vector<int> member_pos_;
  std::vector<VertexSet> configs_;
  std::vector<std::int8_t> moves_;
  detail::ConfigIndex index_;
};

namespace detail {

struct EliminationState {
  std::vector<VertexSet> candidates;
  std::vector<int> death;
  std::vector<Vertex> attack;
  ConfigIndex index;
  int rounds = 0;
};

inline EliminationState eliminate(const Graph& g, int k, bool stop_when_empty_known = false) {
  const int n = g.order();
  EliminationState st;
  st.index = ConfigIndex(n);
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    if (g.closed_neighbors(s) == g.vertices()) {
      st.index.add(s, static_cast<int>(st.candidates.size()));
      st.candidates.push_back(s);
    }
  });
  const std::size_t count = st.candidates.size();
  st.death.assign(count, 0);
  st.attack.assign(count, -1);
  std::vector<int> alive(count);
  for (std::size_t i = 0; i < count; ++i) alive[i] = static_cast<int>(i);
  std::vector<std::pair<int, Vertex>> dying;

  while (!alive.empty()) {
    dying.clear();
    const int round = st.rounds + 1;
    for (int i : alive) {
      const VertexSet d = st.candidates[i];
      for (Vertex v : g.vertices() - d) {
        bool defended = false;
        for (Vertex u : d & g.neighbors(v)) {
          const int j = st.index.find(d.without(u).with(v));
          if (j >= 0 && st.death[j] == 0) {
            defended = true;
            break;
          }
        }
        if (!defended) {
          dying.emplace_back(i, v);
          break;
        }
      }
    }
    if (dying.empty()) break;
    for (auto [i, v] : dying) {
      st.death[i] = round;
      st.attack[i] = v;
    }
    st.rounds = round;
    std::erase_if(alive, [&](int i) { return st.death[i] != 0; });
    if (stop_when_empty_known && alive.empty()) break;
  }
  return st;
}

}  // namespace detail

/// The safe family at guard count k (0 <= k <= n).
inline SafeFamily safe_family(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) throw Error("safe_family: guard count outside [0, n]");
  detail::EliminationState st = detail::eliminate(g, k);
  SafeFamily f;
  f.n_ = n;
  f.k_ = k;
  f.rounds_ = st.rounds;
  f.member_pos_.assign(st.candidates.size(), -1);
  for (std::size_t i = 0; i < st.candidates.size(); ++i) {
    if (st.death[i] == 0) {
      f.member_pos_[i] = static_cast<int>(f.configs_.size());
      f.configs_.push_back(st.candidates[i]);
    }
  }
  f.moves_.assign(f.configs_.size() * static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < f.configs_.size(); ++p) {
    const VertexSet d = f.configs_[p];
    for (Vertex v : g.vertices() - d) {
      for (Vertex u : d & g.neighbors(v)) {
        const int j = st.index.find(d.without(u).with(v));
        if (j >= 0 && st.death[j] == 0) {
          f.moves_[p * n + v] = static_cast<std::int8_t>(u);
          break;
        }
      }
    }
  }
  f.candidates_ = std::move(st.candidates);
  f.death_ = std::move(st.death);
  f.attack_ = std::move(st.attack);
  f.index_ = std::move(st.index);
  return f;
}

/// Whether the safe family at k is nonempty, without building move tables.
inline bool has_safe_family(const Graph& g, int k) {
  if (k < 0 || k > g.order()) throw Error("has_safe_family: guard count outside [0, n]");
  const detail::EliminationState st = detail::eliminate(g, k, true);
  return std::find(st.death.begin(), st.death.end(), 0) != st.death.end();
}

struct EternalResult {
  int value = 0;
  SafeFamily certificate;
};

/// γ^∞(G) with the safe family at the optimum. The search runs upward from
/// α(G); the family at θ(G) is never empty.
inline EternalResult eternal_domination_number(const Graph& g) {
  if (g.order() == 0) return {0, safe_family(g, 0)};
  const int alpha = independence_number(g).value;
  const int theta = clique_cover_number(g).value;
  for (int k = alpha; k <= theta; ++k) {
    SafeFamily f = safe_family(g, k);
    if (!f.empty()) return {k, std::move(f)};
  }
  throw Error("eternal_domination_number: empty family at theta");
}

/// D is dominating and lies in the safe family at |D|.
inline bool is_eternal_dominating(const Graph& g, VertexSet d) {
  g.check_set(d);
  if (!is_dominating(g, d)) return false;
  return safe_family(g, d.size()).contains(d);
}

/// Minimum eternal dominating sets.
inline std::vector<VertexSet> meds_family(const Graph& g) { return eternal_domination_number(g).certificate.configs(); }

using AttackSequence = std::vector<Vertex>;

enum class Verdict { losing, winning };

inline const char* to_string(Verdict v) { return v == Verdict::losing ? "losing" : "winning"; }

/// Result of replaying a fixed attack sequence against every defender.
/// `losing` means some defender survives (the attacker's strategy loses).
struct StrategyOutcome {
  Verdict verdict = Verdict::losing;
  std::vector<VertexSet> surviving;
  /// Number of reachable dominating configurations after each attack.
  std::vector<std::size_t> trace;
};

namespace detail {

inline std::vector<VertexSet> defend_all(const Graph& g, const std::vector<VertexSet>& from, Vertex v) {
  std::vector<VertexSet> next;
  for (VertexSet c : from) {
    if (c.contains(v)) {
      next.push_back(c);
      continue;
    }
    for (Vertex u : c & g.neighbors(v)) {
      const VertexSet e = c.without(u).with(v);
      if (g.closed_neighbors(e) == g.vertices()) next.push_back(e);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

}  // namespace detail

inline StrategyOutcome evaluate_strategy(const Graph& g, VertexSet d, const AttackSequence& attacks) {
  g.check_set(d);
  if (!is_dominating(g, d)) {
    throw Error("evaluate_strategy: starting set " + d.to_string() + " is not dominating");
  }
  for (Vertex v : attacks) g.check_vertex(v);
  StrategyOutcome out;
  out.surviving = {d};
  for (Vertex v : attacks) {
    out.surviving = detail::defend_all(g, out.surviving, v);
    out.trace.push_back(out.surviving.size());
  }
  out.verdict = out.surviving.empty() ? Verdict::winning : Verdict::losing;
  return out;
}

enum class AttackStatus {
  /// `sequence` is winning against every defender.
  found,
  /// D is eternal; no winning sequence exists.
  eternal,
  /// D is not dominating; `sequence` attacks an undominated vertex.
  not_dominating,
  /// The search budget ran out before a winning sequence was found.
  unknown,
};

inline const char* to_string(AttackStatus s) {
  switch (s) {
    case AttackStatus::found:
      return "found";
    case AttackStatus::eternal:
      return "eternal";
    case AttackStatus::not_dominating:
      return "not_dominating";
    case AttackStatus::unknown:
      return "unknown";
  }
  return "?";
}

struct WinningAttack {
  AttackStatus status = AttackStatus::unknown;
  AttackSequence sequence;
};

inline constexpr std::size_t kDefaultAttackSearchBudget = 200'000;

/// A fixed attack sequence that defeats every defender starting from D.
///
/// Breadth-first search over sets of reachable configurations gives a
/// shortest sequence; when the budget is exhausted a greedy policy guided by
/// the elimination rounds is tried instead.
inline WinningAttack find_winning_attack(const Graph& g, VertexSet d, const SafeFamily& family,
                                         std::size_t budget = kDefaultAttackSearchBudget) {
  g.check_set(d);
  if (!is_dominating(g, d)) {
    return {AttackStatus::not_dominating, {undominated(g, d).lowest()}};
  }
  if (family.k() != d.size() || family.order() != g.order()) {
    throw Error("find_winning_attack: family does not match the configuration");
  }
  if (family.contains(d)) return {AttackStatus::eternal, {}};

  using State = std::vector<VertexSet>;
  struct StateHash {
    std::size_t operator()(const State& s) const {
      std::size_t h = s.size();
      for (VertexSet x : s) h = h * 1000003u ^ std::hash<VertexSet>{}(x);
      return h;
    }
  };
  struct Node {
    State state;
    int parent;
    Vertex attack;
  };
  std::vector<Node> nodes{{State{d}, -1, -1}};
  std::unordered_set<State, StateHash> seen{State{d}};
  auto unwind = [&](int at, Vertex last) {
    AttackSequence seq{last};
    for (int i = at; nodes[i].parent >= 0; i = nodes[i].parent) seq.push_back(nodes[i].attack);
    std::reverse(seq.begin(), seq.end());
    return seq;
  };
  for (std::size_t head = 0; head < nodes.size() && nodes.size() < budget; ++head) {
    for (Vertex v : g.vertices()) {
      State next = detail::defend_all(g, nodes[head].state, v);
      if (next.empty()) return {AttackStatus::found, unwind(static_cast<int>(head), v)};
      if (next == nodes[head].state) continue;
      if (seen.insert(next).second) nodes.push_back({std::move(next), static_cast<int>(head), v});
    }
  }

  // Greedy fallback: pick the attack whose worst-case successor was
  // eliminated earliest, counting members as never eliminated.
  auto rank = [&](VertexSet c) {
    const int r = family.death_round(c);
    return r == 0 ? family.rounds() + 1 : r;
  };
  State cur{d};
  AttackSequence seq;
  const int limit = 4 * (family.rounds() + 1) * std::max(1, g.order());
  for (int step = 0; step < limit; ++step) {
    Vertex best = -1;
    std::pair<int, std::size_t> best_key{family.rounds() + 2, 0};
    State best_next;
    for (Vertex v : g.vertices()) {
      State next = detail::defend_all(g, cur, v);
      int worst = 0;
      for (VertexSet c : next) worst = std::max(worst, rank(c));
      const std::pair<int, std::size_t> key{worst, next.size()};
      if (next != cur && key < best_key) {
        best_key = key;
        best = v;
        best_next = std::move(next);
      }
    }
    if (best < 0) break;
    seq.push_back(best);
    cur = std::move(best_next);
    if (cur.empty()) return {AttackStatus::found, seq};
  }
  return {AttackStatus::unknown, {}};
}

inline WinningAttack find_winning_attack(const Graph& g, VertexSet d) {
  g.check_set(d);
  if (!is_dominating(g, d)) return {AttackStatus::not_dominating, {undominated(g, d).lowest()}};
  return find_winning_attack(g, d, safe_family(g, d.size()));
}

struct DefenderMove {
  Vertex guard = -1;
  VertexSet next;
};

/// The stored witness response. Attacks on guarded vertices are answered by
/// staying put. Throws when `config` is not a member of the family.
inline DefenderMove defender_move(const SafeFamily& f, VertexSet config, Vertex attack) {
  if (attack < 0 || attack >= f.order()) throw Error("defender_move: attacked vertex out of range");
  if (!f.contains(config)) {
    throw Error("defender_move: configuration " + config.to_string() + " is not in the safe family");
  }
  if (config.contains(attack)) return {attack, config};
  const Vertex u = f.witness_guard(config, attack);
  return {u, config.without(u).with(attack)};
}

/// Best response for any configuration: a move into the family when one
/// exists, otherwise the dominating successor eliminated latest (ties to the
/// smallest guard). Nothing when every response leaves a vertex undominated.
inline std::optional<DefenderMove> best_response(const Graph& g, const SafeFamily& f, VertexSet config,
                                                 Vertex attack) {
  g.check_vertex(attack);
  if (config.contains(attack)) return DefenderMove{attack, config};
  std::optional<DefenderMove> best;
  int best_rank = -1;
  for (Vertex u : config & g.neighbors(attack)) {
    const VertexSet next = config.without(u).with(attack);
    const int r = f.death_round(next);
    if (r < 0) continue;
    const int rank = r == 0 ? f.rounds() + 1 : r;
    if (rank > best_rank) {
      best_rank = rank;
      best = DefenderMove{u, next};
    }
  }
  return best;
}

}  // namespace edom
