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

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "edom/graph6.hpp"

#ifndef EDOM_CORPUS_DIR
#error "EDOM_CORPUS_DIR must point at the generated corpus directory"
#endif

namespace corpus {

inline std::string path(const std::string& name) { return std::string(EDOM_CORPUS_DIR) + "/" + name + ".g6"; }

inline std::vector<std::string> lines(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing corpus " + path(name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline std::vector<edom::Graph> graphs(const std::string& name, int max_n = 64) {
  std::vector<edom::Graph> out;
  for (const auto& line : lines(name)) {
    edom::Graph g = edom::parse_graph6(line);
    if (g.order() <= max_n) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace corpus
