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

#ifndef TEMPOWL_DISTINGUISH_H_
#define TEMPOWL_DISTINGUISH_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tempowl/knowledge_graph.h"
#include "tempowl/refinement.h"
#include "tempowl/temporal_graph.h"

namespace tempowl {

// Global models read a neighbour's embedding at the neighbour's own time t';
// local models read it at the current time t.
enum class Mode { kGlobal, kLocal };

std::string_view ModeName(Mode mode);
Encoding EncodingFor(Mode mode);

struct Verdict {
  bool distinguishable = false;
  std::optional<std::size_t> first_layer;
  Mode mode = Mode::kGlobal;
};

enum class PairClass { kBoth, kGlobalOnly, kLocalOnly, kNeither };

std::string_view PairClassName(PairClass c);
PairClass Combine(bool global_distinguishes, bool local_distinguishes);

// Refinement of the disjoint union of two encoded temporal graphs, with a
// lookup from (graph, node, time index) to the union's node index. All
// cross-graph questions are answered from one shared colouring.
class JointRefinement {
 public:
  JointRefinement(const TemporalGraph& first, const TemporalGraph& second,
                  Encoding encoding,
                  std::optional<std::size_t> max_layers = std::nullopt);

  const KnowledgeGraph& graph() const { return union_.graph; }
  const Colouring& colouring() const { return colouring_; }

  // side 0 = first graph, 1 = second. Indices are TemporalGraph node/time
  // indices.
  std::uint32_t UnionIndex(int side, std::size_t node,
                           std::size_t time_index) const;

  std::optional<std::size_t> FirstSeparatingLayer(std::size_t node1,
                                                  std::size_t time1,
                                                  std::size_t node2,
                                                  std::size_t time2) const;

 private:
  DisjointUnionResult union_;
  Colouring colouring_;
  std::array<std::vector<std::uint32_t>, 2> lookup_;  // [side][v * n + i]
  std::array<std::size_t, 2> num_times_{};
};

// Whether some model of the given kind separates (node1 in first) from
// (node2 in second). first_layer is the least separating layer; with the
// default bound refinement runs to stabilisation. Throws kUnknownNode.
Verdict Distinguish(const TemporalGraph& first, const TimestampedNode& node1,
                    const TemporalGraph& second, const TimestampedNode& node2,
                    Mode mode,
                    std::optional<std::size_t> max_layers = std::nullopt);

inline Verdict DistinguishableGlobal(
    const TemporalGraph& first, const TimestampedNode& node1,
    const TemporalGraph& second, const TimestampedNode& node2,
    std::optional<std::size_t> max_layers = std::nullopt) {
  return Distinguish(first, node1, second, node2, Mode::kGlobal, max_layers);
}

inline Verdict DistinguishableLocal(
    const TemporalGraph& first, const TimestampedNode& node1,
    const TemporalGraph& second, const TimestampedNode& node2,
    std::optional<std::size_t> max_layers = std::nullopt) {
  return Distinguish(first, node1, second, node2, Mode::kLocal, max_layers);
}

PairClass ClassifyPair(const TemporalGraph& first, const TimestampedNode& node1,
                       const TemporalGraph& second,
                       const TimestampedNode& node2);

// Every timestamped node of `first` against every one of `second`. Rows and
// columns run over (node index, time index) in node-major order.
struct ClassMatrix {
  std::vector<TimestampedNode> rows;
  std::vector<TimestampedNode> columns;
  // Row-major, rows.size() * columns.size() entries each.
  std::vector<PairClass> classes;
  std::vector<std::optional<std::uint32_t>> global_first_layer;
  std::vector<std::optional<std::uint32_t>> local_first_layer;
  // Indexed by PairClass.
  std::array<std::size_t, 4> counts{};

  PairClass at(std::size_t row, std::size_t column) const {
    return classes[row * columns.size() + column];
  }
};

ClassMatrix ClassifyAll(const TemporalGraph& first,
                        const TemporalGraph& second);

}  // namespace tempowl

#endif  // TEMPOWL_DISTINGUISH_H_
