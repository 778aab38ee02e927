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

#include "edom/clique_cover.hpp"
#include "edom/domination.hpp"
#include "edom/independence.hpp"

namespace edom {

struct InvariantBundle {
  DominationResult gamma;
  IndependenceResult alpha;
  CliqueCoverResult theta;
};

inline InvariantBundle invariants(const Graph& g) {
  InvariantBundle b{domination_number(g), independence_number(g), clique_cover_number(g)};
  if (!(b.gamma.value <= b.alpha.value && b.alpha.value <= b.theta.value)) {
    throw Error("invariants: gamma <= alpha <= theta violated");
  }
  return b;
}

}  // namespace edom
