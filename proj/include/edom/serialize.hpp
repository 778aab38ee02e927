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

// JSON forms of vertex sets, partitions, safe families, certificates and
// obstruction reports. Vertex indices are 0-based everywhere.

#pragma once

#include <json.hpp>
#include <set>
#include <string>

#include "edom/eternal.hpp"
#include "edom/lemma_lab.hpp"

namespace edom {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline void to_json(Json& j, const VertexSet& s) { j = s.to_vector(); }

inline void from_json(const Json& j, VertexSet& s) {
  s = {};
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw Error("vertex index out of range: " + std::to_string(x));
    s.insert(x);
  }
}

inline void to_json(Json& j, const CliquePartition& p) { j = p.cliques(); }

inline void from_json(const Json& j, CliquePartition& p) { p = CliquePartition(j.get<std::vector<VertexSet>>()); }

inline Json edge_json(Edge e) { return Json::array({e.first, e.second}); }

/// {"kind":"safe_family","n","k","configs":[...],"moves":[...]} where
/// moves[i][v] is the guard sent to v from configs[i], or -1 when v is
/// already guarded.
inline Json family_json(const SafeFamily& f) {
  Json moves = Json::array();
  for (VertexSet d : f.configs()) {
    Json row = Json::array();
    for (Vertex v = 0; v < f.order(); ++v) row.push_back(d.contains(v) ? -1 : f.witness_guard(d, v));
    moves.push_back(std::move(row));
  }
  return {{"kind", "safe_family"}, {"n", f.order()}, {"k", f.k()}, {"configs", f.configs()}, {"moves", moves}};
}

/// Checks a safe-family certificate against `g` without any solver: every
/// configuration is a dominating k-set and every recorded move leads along an
/// edge into the family. Empty when valid.
inline std::string family_certificate_violation(const Graph& g, const Json& c) {
  try {
    if (c.at("kind") != "safe_family") return "kind is not safe_family";
    const int n = c.at("n").get<int>();
    const int k = c.at("k").get<int>();
    if (n != g.order()) return "order mismatch";
    const auto configs = c.at("configs").get<std::vector<VertexSet>>();
    const Json& moves = c.at("moves");
    if (moves.size() != configs.size()) return "one move row per configuration expected";
    const std::set<VertexSet> family(configs.begin(), configs.end());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const VertexSet d = configs[i];
      const std::string at = "configuration " + d.to_string() + ": ";
      if (!d.fits(n) || d.size() != k) return at + "not a " + std::to_string(k) + "-set";
      if (!is_dominating(g, d)) return at + "not dominating";
      if (moves[i].size() != static_cast<std::size_t>(n)) return at + "move row has wrong length";
      for (Vertex v = 0; v < n; ++v) {
        const int u = moves[i][v].get<int>();
        if (d.contains(v)) {
          if (u != -1) return at + "guarded vertex has a move";
          continue;
        }
        if (u < 0 || u >= n || !d.contains(u) || !g.has_edge(u, v)) return at + "illegal move to " + std::to_string(v);
        if (!family.contains(d.without(u).with(v))) return at + "move to " + std::to_string(v) + " leaves the family";
      }
    }
    return {};
  } catch (const std::exception& e) {
    return std::string("malformed certificate: ") + e.what();
  }
}

inline Json certificate_json(const GammaLessThetaCertificate& c) {
  Json j{{"kind", to_string(c.kind)}};
  if (c.kind == CertificateKind::lemma9) {
    j["partition"] = c.partition;
    j["J"] = c.j;
    j["W"] = c.w;
  } else {
    j["v"] = c.v;
    j["neighbors"] = c.neighbors;
    j["witnesses"] = c.witnesses;
  }
  return j;
}

inline GammaLessThetaCertificate certificate_from_json(const Json& j) {
  static const std::pair<const char*, CertificateKind> kinds[] = {
      {"lemma9", CertificateKind::lemma9},     {"lemma10a", CertificateKind::lemma10a},
      {"lemma10b", CertificateKind::lemma10b}, {"lemma10c", CertificateKind::lemma10c},
      {"lemma10d", CertificateKind::lemma10d}, {"lemma10e", CertificateKind::lemma10e}};
  GammaLessThetaCertificate c;
  const std::string kind = j.at("kind").get<std::string>();
  bool known = false;
  for (auto [name, k] : kinds) {
    if (kind == name) {
      c.kind = k;
      known = true;
    }
  }
  if (!known) throw Error("unknown certificate kind: " + kind);
  if (c.kind == CertificateKind::lemma9) {
    c.partition = j.at("partition").get<CliquePartition>();
    c.j = j.at("J").get<VertexSet>();
    c.w = j.at("W").get<VertexSet>();
  } else {
    c.v = j.at("v").get<int>();
    c.neighbors = j.at("neighbors").get<VertexSet>();
    c.witnesses = j.at("witnesses").get<VertexSet>();
  }
  return c;
}

inline Json report_json(const ObstructionReport& r) {
  auto opt_edge = [](const std::optional<Edge>& e) { return e ? edge_json(*e) : Json(nullptr); };
  Json l13 = Json::array();
  for (const auto& f : r.lemma13_failures) {
    l13.push_back({{"I", f.i}, {"expected", f.expected}, {"gamma", f.gamma}, {"theta", f.theta}});
  }
  Json l14 = Json::array();
  for (const auto& f : r.lemma14_failures) {
    l14.push_back({{"edge", edge_json(f.edge)},
                   {"part", std::string(1, f.part)},
                   {"expected", f.expected},
                   {"gamma", f.gamma},
                   {"theta", f.theta}});
  }
  Json c1 = Json::array();
  for (const auto& f : r.corollary1_violations) c1.push_back({{"v", f.v}, {"u", f.u}, {"S", f.s}});
  return {{"kind", "obstruction"},
          {"gamma", r.gamma},
          {"gamma_inf", r.gamma_inf},
          {"theta", r.theta},
          {"planar", r.planar},
          {"candidate", r.candidate},
          {"min_degree", r.min_degree},
          {"min_degree_obstruction", r.min_degree_obstruction()},
          {"lemma12_containment", opt_edge(r.lemma12_containment)},
          {"cutvertex", r.cutvertex ? Json(*r.cutvertex) : Json(nullptr)},
          {"separating_edge_checked", r.separating_edge_checked},
          {"separating_edge", opt_edge(r.separating_edge)},
          {"lemma13_full_depth", r.lemma13_full_depth},
          {"lemma13_failures", l13},
          {"lemma14_failures", l14},
          {"corollary1_violations", c1},
          {"corollary1_unknown", r.corollary1_unknown},
          {"obstructed", r.obstructed()}};
}

}  // namespace edom
