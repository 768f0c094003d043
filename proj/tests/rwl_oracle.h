// Copyright 2026 The tempowl Authors
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

// Naive relational 1-WL used as a test oracle. It keeps an explicit
// equivalence matrix and compares in-neighbour multisets pair by pair, with
// no hashing or interning, until the matrix stops changing.

#ifndef TEMPOWL_TESTS_RWL_ORACLE_H_
#define TEMPOWL_TESTS_RWL_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tempowl/knowledge_graph.h"
#include "tempowl/refinement.h"

namespace tempowl::testing {

using Equivalence = std::vector<std::vector<bool>>;

// The multisets {{(class(u), r)}} over in-edges of x and y are equal under
// `eq`. eq is an equivalence, so greedy matching is exact.
inline bool SameInMultiset(const KnowledgeGraph& kg, const Equivalence& eq,
                           std::uint32_t x, std::uint32_t y) {
  std::vector<KgEdge> a, b;
  for (const KgEdge& e : kg.edges()) {
    if (e.target == x) a.push_back(e);
    if (e.target == y) b.push_back(e);
  }
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const KgEdge& ea : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size() && !matched; ++k) {
      if (!used[k] && b[k].relation == ea.relation &&
          eq[ea.source][b[k].source]) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// Returns eq_0, eq_1, ... up to and including the first repeated layer.
inline std::vector<Equivalence> OracleLayers(const KnowledgeGraph& kg) {
  const std::size_t n = kg.num_nodes();
  Equivalence eq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      eq[x][y] = kg.colours()[x] == kg.colours()[y];
    }
  }
  std::vector<Equivalence> layers{eq};
  for (;;) {
    Equivalence next(n, std::vector<bool>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        next[x][y] = layers.back()[x][y] && SameInMultiset(kg, layers.back(), x, y);
      }
    }
    const bool fixpoint = next == layers.back();
    layers.push_back(std::move(next));
    if (fixpoint) break;
  }
  return layers;
}

// True when the engine's partition equals the oracle's at every layer
// 0..max(engine layers, oracle layers).
inline bool MatchesOracle(const KnowledgeGraph& kg, const Colouring& colouring,
                          std::size_t* bad_layer = nullptr) {
  const auto layers = OracleLayers(kg);
  const std::size_t depth = std::max(layers.size(), colouring.num_layers()) + 1;
  for (std::size_t l = 0; l < depth; ++l) {
    const Equivalence& eq = layers[std::min(l, layers.size() - 1)];
    for (std::uint32_t x = 0; x < kg.num_nodes(); ++x) {
      for (std::uint32_t y = 0; y < kg.num_nodes(); ++y) {
        if ((colouring.ColourAt(l, x) == colouring.ColourAt(l, y)) !=
            eq[x][y]) {
          if (bad_layer != nullptr) *bad_layer = l;
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tempowl::testing

#endif  // TEMPOWL_TESTS_RWL_ORACLE_H_
