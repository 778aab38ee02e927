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

// Interactive eternal-domination sessions, independent of any transport.
// GameService::handle maps REST requests to JSON replies; the network layer
// only moves bytes.

#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "edom/graph6.hpp"
#include "edom/serialize.hpp"

namespace edom {

enum class GameMode { human_attacker, human_defender };
enum class GameStatus { ongoing, defender_defeated, attacker_gave_up };

inline const char* to_string(GameMode m) { return m == GameMode::human_attacker ? "human-attacker" : "human-defender"; }

inline const char* to_string(GameStatus s) {
  switch (s) {
    case GameStatus::ongoing:
      return "ongoing";
    case GameStatus::defender_defeated:
      return "defender-defeated";
    case GameStatus::attacker_gave_up:
      return "attacker-gave-up";
  }
  return "?";
}

/// A rejected request. `status` is the HTTP status to report.
class GameError : public Error {
 public:
  GameError(int status, const std::string& what, Json detail = Json::object())
      : Error(what), status_(status), detail_(std::move(detail)) {}
  int status() const { return status_; }
  const Json& detail() const { return detail_; }

 private:
  int status_;
  Json detail_;
};

struct GameMove {
  Vertex attack = -1;
  /// Guard sent to the attacked vertex; -1 when no legal defence existed.
  Vertex guard = -1;
  VertexSet config;
};

struct GameLimits {
  int max_order = 16;
  int max_guards = 8;
  std::chrono::seconds ttl{3600};
};

class GameSession {
 public:
  GameSession(std::string id, Graph g, std::string graph6, GameMode mode, VertexSet start)
      : id_(std::move(id)),
        graph_(std::move(g)),
        graph6_(std::move(graph6)),
        mode_(mode),
        start_(start),
        config_(start),
        family_(safe_family(graph_, start.size())) {
    eternal_start_ = family_.contains(start);
    if (mode_ == GameMode::human_defender) next_engine_attack();
  }

  const std::string& id() const { return id_; }
  const Graph& graph() const { return graph_; }
  GameMode mode() const { return mode_; }
  GameStatus status() const { return status_; }
  VertexSet config() const { return config_; }
  VertexSet start() const { return start_; }
  const SafeFamily& family() const { return family_; }
  const std::vector<GameMove>& history() const { return history_; }
  std::optional<Vertex> pending_attack() const { return pending_; }

  /// Human attacks `v`; the engine defends.
  GameMove attack(Vertex v) {
    require_mode(GameMode::human_attacker);
    require_ongoing();
    check_vertex(v);
    GameMove m{v, -1, config_};
    if (config_.contains(v)) {
      m.guard = v;
    } else if (family_.contains(config_)) {
      const DefenderMove d = defender_move(family_, config_, v);
      m.guard = d.guard;
      m.config = d.next;
    } else if (auto d = best_response(graph_, family_, config_, v)) {
      m.guard = d->guard;
      m.config = d->next;
    } else {
      status_ = GameStatus::defender_defeated;
    }
    config_ = m.config;
    history_.push_back(m);
    return m;
  }

  /// Human answers the pending attack with guard `u`; the engine attacks again.
  GameMove defend(Vertex u) {
    require_mode(GameMode::human_defender);
    require_ongoing();
    check_vertex(u);
    const Vertex v = *pending_;
    if (!config_.contains(u)) throw GameError(409, "vertex " + std::to_string(u) + " holds no guard");
    if (u != v && !graph_.has_edge(u, v)) {
      throw GameError(409, "guard at " + std::to_string(u) + " is not adjacent to the attacked vertex " + std::to_string(v));
    }
    GameMove m{v, u, config_.without(u).with(v)};
    config_ = m.config;
    history_.push_back(m);
    pending_.reset();
    if (!is_dominating(graph_, config_)) {
      status_ = GameStatus::defender_defeated;
    } else {
      next_engine_attack();
    }
    return m;
  }

  /// Advice for the human side at the current state.
  Json hint() const {
    if (status_ != GameStatus::ongoing) return {{"side", side()}, {"available", false}, {"reason", "game over"}};
    if (mode_ == GameMode::human_attacker) {
      const WinningAttack w = find_winning_attack(graph_, config_, family_);
      if (w.status != AttackStatus::found) {
        return {{"side", "attacker"},
                {"available", false},
                {"status", to_string(w.status)},
                {"reason", "no winning attack known"}};
      }
      return {{"side", "attacker"}, {"available", true}, {"vertex", w.sequence.front()}, {"sequence", w.sequence}};
    }
    const Vertex v = *pending_;
    std::optional<DefenderMove> d;
    if (family_.contains(config_)) {
      d = defender_move(family_, config_, v);
    } else {
      d = best_response(graph_, family_, config_, v);
    }
    if (!d) return {{"side", "defender"}, {"available", false}, {"reason", "every defence leaves a vertex undominated"}};
    return {{"side", "defender"}, {"available", true}, {"guard", d->guard}, {"attack", v}, {"next", d->next}};
  }

  Json summary() const {
    Json edges = Json::array();
    for (Edge e : graph_.edges()) edges.push_back(edge_json(e));
    Json hist = Json::array();
    for (const GameMove& m : history_) {
      hist.push_back({{"attack", m.attack}, {"guard", m.guard < 0 ? Json(nullptr) : Json(m.guard)}, {"config", m.config}});
    }
    return {{"id", id_},
            {"graph6", graph6_},
            {"n", graph_.order()},
            {"edges", edges},
            {"mode", to_string(mode_)},
            {"k", family_.k()},
            {"start", start_},
            {"config", config_},
            {"status", to_string(status_)},
            {"eternal_start", eternal_start_},
            {"in_safe_family", family_.contains(config_)},
            {"family_size", family_.size()},
            {"rounds", family_.rounds()},
            {"pending_attack", pending_ ? Json(*pending_) : Json(nullptr)},
            {"history", hist}};
  }

  std::mutex& mutex() { return mutex_; }
  std::chrono::steady_clock::time_point last_used() const { return last_used_; }
  void touch() { last_used_ = std::chrono::steady_clock::now(); }

 private:
  const char* side() const { return mode_ == GameMode::human_attacker ? "attacker" : "defender"; }

  void require_mode(GameMode m) const {
    if (mode_ != m) throw GameError(409, std::string("session is ") + to_string(mode_));
  }
  void require_ongoing() const {
    if (status_ != GameStatus::ongoing) throw GameError(409, std::string("session closed: ") + to_string(status_));
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= graph_.order()) throw GameError(400, "vertex " + std::to_string(v) + " out of range");
  }

  /// Engine attacker: concede inside the safe family, otherwise play the
  /// attack that eliminated the current configuration.
  void next_engine_attack() {
    if (family_.contains(config_)) {
      status_ = GameStatus::attacker_gave_up;
      return;
    }
    pending_ = family_.eliminating_attack(config_);
    if (!pending_) throw Error("engine attacker: configuration has no eliminating attack");
  }

  std::string id_;
  Graph graph_;
  std::string graph6_;
  GameMode mode_;
  VertexSet start_;
  VertexSet config_;
  SafeFamily family_;
  bool eternal_start_ = false;
  GameStatus status_ = GameStatus::ongoing;
  std::vector<GameMove> history_;
  std::optional<Vertex> pending_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point last_used_ = std::chrono::steady_clock::now();
};

/// Replays a session's history from its start configuration and returns the
/// final configuration, or nothing if some recorded move is illegal.
inline std::optional<VertexSet> replay(const Graph& g, VertexSet start, const std::vector<GameMove>& history) {
  VertexSet c = start;
  for (const GameMove& m : history) {
    if (m.guard < 0) {
      if (m.config != c) return std::nullopt;
      continue;
    }
    if (!c.contains(m.guard) || (m.guard != m.attack && !g.has_edge(m.guard, m.attack))) return std::nullopt;
    c = c.without(m.guard).with(m.attack);
    if (c != m.config) return std::nullopt;
  }
  return c;
}

struct HttpReply {
  int status = 200;
  Json body;
};

/// Session store plus REST routing.
///
///   POST /sessions                {graph6, mode, k | guards}
///   GET  /sessions/{id}
///   POST /sessions/{id}/attack    {vertex}
///   POST /sessions/{id}/defend    {guard}
///   GET  /sessions/{id}/hint
///
/// Every state change is published to the session's subscribers as
/// {"type": ..., "session": summary, ...}.
class GameService {
 public:
  using Listener = std::function<void(const Json&)>;

  explicit GameService(GameLimits limits = {}, std::uint64_t seed = std::random_device{}())
      : limits_(limits), rng_(seed) {}

  HttpReply handle(const std::string& method, const std::string& target, const std::string& body) {
    try {
      evict_expired();
      const std::vector<std::string> parts = split_path(target);
      if (parts.empty() || parts[0] != "sessions") throw GameError(404, "no such resource");
      if (parts.size() == 1) {
        if (method != "POST") throw GameError(405, "method not allowed");
        return {201, create(parse_body(body))};
      }
      auto s = find(parts[1]);
      std::lock_guard lock(s->mutex());
      s->touch();
      if (parts.size() == 2) {
        if (method != "GET") throw GameError(405, "method not allowed");
        return {200, s->summary()};
      }
      if (parts.size() == 3 && parts[2] == "hint") {
        if (method != "GET") throw GameError(405, "method not allowed");
        return {200, s->hint()};
      }
      if (parts.size() == 3 && (parts[2] == "attack" || parts[2] == "defend")) {
        if (method != "POST") throw GameError(405, "method not allowed");
        const Json req = parse_body(body);
        const bool attack = parts[2] == "attack";
        const char* field = attack ? "vertex" : "guard";
        if (!req.contains(field) || !req[field].is_number_integer()) {
          throw GameError(400, std::string("body needs an integer \"") + field + "\"");
        }
        const GameMove m = attack ? s->attack(req[field].get<int>()) : s->defend(req[field].get<int>());
        Json reply{{"attack", m.attack},
                   {"guard", m.guard < 0 ? Json(nullptr) : Json(m.guard)},
                   {"config", m.config},
                   {"status", to_string(s->status())},
                   {"next_attack", s->pending_attack() ? Json(*s->pending_attack()) : Json(nullptr)}};
        publish(*s, {{"type", parts[2]}, {"move", reply}, {"session", s->summary()}});
        return {200, reply};
      }
      throw GameError(404, "no such resource");
    } catch (const GameError& e) {
      Json body{{"error", e.what()}};
      for (auto& [key, value] : e.detail().items()) body[key] = value;
      return {e.status(), body};
    } catch (const std::exception& e) {
      return {500, {{"error", e.what()}}};
    }
  }

  /// Registers `fn` for a session's events; returns a token for unsubscribe.
  /// The current summary is delivered immediately as a "snapshot" event.
  std::optional<long> subscribe(const std::string& id, Listener fn) {
    std::shared_ptr<GameSession> s;
    {
      std::lock_guard lock(mutex_);
      auto it = sessions_.find(id);
      if (it == sessions_.end()) return std::nullopt;
      s = it->second;
    }
    std::lock_guard lock(s->mutex());
    const long token = ++next_token_;
    {
      std::lock_guard l(listeners_mutex_);
      listeners_[id][token] = fn;
    }
    fn({{"type", "snapshot"}, {"session", s->summary()}});
    return token;
  }

  void unsubscribe(const std::string& id, long token) {
    std::lock_guard l(listeners_mutex_);
    auto it = listeners_.find(id);
    if (it == listeners_.end()) return;
    it->second.erase(token);
    if (it->second.empty()) listeners_.erase(it);
  }

  bool has_session(const std::string& id) {
    std::lock_guard lock(mutex_);
    return sessions_.contains(id);
  }

  std::size_t session_count() {
    std::lock_guard lock(mutex_);
    return sessions_.size();
  }

  /// Drops sessions idle for longer than the TTL.
  void evict_expired(std::chrono::steady_clock::time_point now = std::chrono::steady_clock::now()) {
    std::lock_guard lock(mutex_);
    for (auto it = sessions_.begin(); it != sessions_.end();) {
      if (now - it->second->last_used() > limits_.ttl) {
        it = sessions_.erase(it);
      } else {
        ++it;
      }
    }
  }

 private:
  static std::vector<std::string> split_path(const std::string& target) {
    std::string path = target.substr(0, target.find('?'));
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i < path.size()) {
      std::size_t j = path.find('/', i);
      if (j == std::string::npos) j = path.size();
      if (j > i) parts.push_back(path.substr(i, j - i));
      i = j + 1;
    }
    return parts;
  }

  static Json parse_body(const std::string& body) {
    try {
      Json j = Json::parse(body.empty() ? "{}" : body);
      if (!j.is_object()) throw GameError(400, "body must be a JSON object");
      return j;
    } catch (const Json::parse_error& e) {
      throw GameError(400, std::string("malformed JSON: ") + e.what());
    }
  }

  std::shared_ptr<GameSession> find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw GameError(404, "no session " + id);
    return it->second;
  }

  Json create(const Json& req) {
    if (!req.contains("graph6") || !req["graph6"].is_string()) throw GameError(400, "body needs a \"graph6\" string");
    const std::string text = req["graph6"].get<std::string>();
    Graph g;
    try {
      g = parse_graph6(text);
    } catch (const Graph6Error& e) {
      throw GameError(400, e.what(), {{"offset", e.offset()}});
    }
    GameMode mode = GameMode::human_attacker;
    const std::string m = req.value("mode", std::string("human-attacker"));
    if (m == "human-defender") {
      mode = GameMode::human_defender;
    } else if (m != "human-attacker") {
      throw GameError(400, "mode must be human-attacker or human-defender");
    }
    if (g.order() > limits_.max_order) {
      throw GameError(422, "graph too large for interactive play (n > " + std::to_string(limits_.max_order) + ")");
    }
    VertexSet start;
    if (req.contains("guards")) {
      try {
        start = req["guards"].get<VertexSet>();
      } catch (const std::exception& e) {
        throw GameError(400, std::string("bad guards: ") + e.what());
      }
      if (!start.fits(g.order())) throw GameError(400, "guard vertex out of range");
      const VertexSet missing = undominated(g, start);
      if (!missing.empty()) {
        throw GameError(422, "guards do not dominate vertex " + std::to_string(missing.lowest()),
                        {{"undominated", missing.lowest()}});
      }
      if (start.size() > limits_.max_guards) throw GameError(422, "too many guards for interactive play");
    } else {
      if (!req.contains("k") || !req["k"].is_number_integer()) throw GameError(400, "body needs \"k\" or \"guards\"");
      const int k = req["k"].get<int>();
      if (k < 1 || k > g.order()) throw GameError(422, "k must lie in [1, n]");
      if (k > limits_.max_guards) throw GameError(422, "too many guards for interactive play");
      start = default_start(g, k, mode);
    }
    auto s = std::make_shared<GameSession>(new_id(), g, encode_graph6(g), mode, start);
    {
      std::lock_guard lock(mutex_);
      sessions_[s->id()] = s;
    }
    std::lock_guard lock(s->mutex());
    return s->summary();
  }

  /// With only k given: a family member when the engine defends, a
  /// non-eternal dominating set when the engine attacks (when one exists).
  static VertexSet default_start(const Graph& g, int k, GameMode mode) {
    const SafeFamily f = safe_family(g, k);
    if (f.candidates().empty()) throw GameError(422, "no dominating set of size " + std::to_string(k));
    if (mode == GameMode::human_attacker) return f.empty() ? f.candidates().front() : f.configs().front();
    for (VertexSet d : f.candidates()) {
      if (!f.contains(d)) return d;
    }
    return f.candidates().front();
  }

  std::string new_id() {
    std::lock_guard lock(mutex_);
    static const char* hex = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 2; ++i) {
      std::uint64_t x = rng_();
      for (int j = 0; j < 16; ++j, x >>= 4) id.push_back(hex[x & 15]);
    }
    return id;
  }

  void publish(const GameSession& s, const Json& event) {
    std::vector<Listener> fns;
    {
      std::lock_guard l(listeners_mutex_);
      auto it = listeners_.find(s.id());
      if (it == listeners_.end()) return;
      for (auto& [token, fn] : it->second) fns.push_back(fn);
    }
    for (auto& fn : fns) fn(event);
  }

  GameLimits limits_;
  std::mt19937_64 rng_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<GameSession>> sessions_;
  std::mutex listeners_mutex_;
  std::map<std::string, std::map<long, Listener>> listeners_;
  long next_token_ = 0;
};

}  // namespace edom
