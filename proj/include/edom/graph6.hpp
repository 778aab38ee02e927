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

// graph6 codec (nauty formats.txt). Only the single-word tier is supported:
// records with more than 64 vertices are rejected with a width error.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "edom/graph.hpp"

namespace edom {

/// Malformed graph6 record. `offset` is the 0-based byte position of the
/// first offending byte within the line given to parse_graph6 (header included).
class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {
constexpr int kG6Bias = 63;
constexpr int kG6Max = 126;
}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= line.size()) throw Graph6Error("graph6: truncated record", i);
    const int c = static_cast<unsigned char>(line[i]);
    if (c < detail::kG6Bias || c > detail::kG6Max) throw Graph6Error("graph6: byte outside [63,126]", i);
    return c - detail::kG6Bias;
  };

  if (pos >= line.size()) throw Graph6Error("graph6: empty record", pos);
  long n = 0;
  const std::size_t header_start = pos;
  if (static_cast<unsigned char>(line[pos]) == detail::kG6Max) {
    // Four-byte form. The eight-byte form (126 126 ...) encodes n > 258047.
    if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == detail::kG6Max) {
      throw Graph6Error("graph6: order exceeds supported width (64)", header_start);
    }
    n = (long{byte_at(pos + 1)} << 12) | (long{byte_at(pos + 2)} << 6) | long{byte_at(pos + 3)};
    if (n < 63) throw Graph6Error("graph6: non-canonical length header", header_start);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n == 0) throw Graph6Error("graph6: order must be at least 1", header_start);
  if (n > kMaxVertices) throw Graph6Error("graph6: order exceeds supported width (64)", header_start);

  const long bits = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = line.size() - pos;
  if (have < want) throw Graph6Error("graph6: edge-bit region too short", line.size());
  if (have > want) throw Graph6Error("graph6: trailing garbage", pos + want);

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte_at(at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (want > 0) {
    const std::size_t last = pos + want - 1;
    const int pad = static_cast<int>(want * 6 - bits);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits", last);
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw Error("graph6: cannot encode a graph with no vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else {
    out.push_back(static_cast<char>(detail::kG6Max));
    out.push_back(static_cast<char>(((n >> 12) & 63) + detail::kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + detail::kG6Bias));
    out.push_back(static_cast<char>((n & 63) + detail::kG6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kG6Bias));
  return out;
}

}  // namespace edom
