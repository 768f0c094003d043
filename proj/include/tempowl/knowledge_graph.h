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

#ifndef TEMPOWL_KNOWLEDGE_GRAPH_H_
#define TEMPOWL_KNOWLEDGE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tempowl/temporal_graph.h"

namespace tempowl {

// Relation labels are exact time differences t_j - t_i >= 0.
using Relation = std::int64_t;

// A knowledge-graph node: a timestamped node tagged with the graph it came
// from (0 unless the graph is a disjoint union).
struct KgNode {
  int origin = 0;
  TimestampedNode tnode;

  friend auto operator<=>(const KgNode&, const KgNode&) = default;
};

struct KgEdge {
  Relation relation = 0;
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  friend auto operator<=>(const KgEdge&, const KgEdge&) = default;
};

// Directed multi-relational node-coloured graph (V, E, R, c). Nodes are kept
// sorted by (origin, node id, time index); that order is the deterministic
// sweep used by refinement. Edges are a set, stored sorted by
// (target, relation, source) so incoming edges of a node are one range.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  // Sorts nodes and edges, drops duplicate triples. Throws kInvalidArgument
  // on a negative relation, out-of-range endpoint or colour/node mismatch.
  KnowledgeGraph(std::vector<KgNode> nodes, std::vector<Colour> colours,
                 std::vector<KgEdge> edges);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<KgNode>& nodes() const { return nodes_; }
  const KgNode& node(std::uint32_t i) const { return nodes_[i]; }
  const std::vector<Colour>& colours() const { return colours_; }
  const std::vector<KgEdge>& edges() const { return edges_; }
  // Sorted labels actually used by some edge.
  const std::vector<Relation>& relations() const { return relations_; }

  std::span<const KgEdge> InEdges(std::uint32_t target) const;
  // N_r(v) = { u | (r, u, v) in E }, ascending.
  std::vector<std::uint32_t> InNeighbourhood(std::uint32_t node,
                                             Relation r) const;
  bool HasEdge(Relation r, std::uint32_t source, std::uint32_t target) const;

  std::optional<std::uint32_t> Find(const KgNode& node) const;
  // Throws kUnknownNode.
  std::uint32_t IndexOf(const KgNode& node) const;

 private:
  std::vector<KgNode> nodes_;
  std::vector<Colour> colours_;
  std::vector<KgEdge> edges_;
  std::vector<Relation> relations_;
  std::vector<std::uint32_t> in_offsets_;
};

enum class Encoding { kGlobal, kLocal };

// For i <= j and {u,v} in E_i: (t_j - t_i, (v,t_i), (u,t_j)), both
// orientations of the undirected edge.
KnowledgeGraph GlobalEncoding(const TemporalGraph& tg, int origin = 0);
// For i <= j and {u,v} in E_i: (t_j - t_i, (v,t_j), (u,t_j)), both
// orientations. Every edge stays inside one time point.
KnowledgeGraph LocalEncoding(const TemporalGraph& tg, int origin = 0);
KnowledgeGraph Encode(const TemporalGraph& tg, Encoding encoding,
                      int origin = 0);

struct DisjointUnionResult {
  KnowledgeGraph graph;
  // Node index in the union for each node index of the first/second input.
  std::vector<std::uint32_t> first_to_union;
  std::vector<std::uint32_t> second_to_union;
};

// Origins of the second graph are shifted past those of the first. Relation
// labels merge by value.
DisjointUnionResult DisjointUnion(const KnowledgeGraph& first,
                                  const KnowledgeGraph& second);

// N(v, t_i): all (u, j) with {u,v} in E_j and t_j <= t_i, as (node index,
// time index) pairs sorted ascending. Throws kUnknownNode.
std::vector<std::pair<std::size_t, std::size_t>> TemporalNeighbourhood(
    const TemporalGraph& tg, const TimestampedNode& at);
std::vector<std::pair<std::size_t, std::size_t>> TemporalNeighbourhood(
    const TemporalGraph& tg, std::size_t node, std::size_t time_index);

}  // namespace tempowl

#endif  // TEMPOWL_KNOWLEDGE_GRAPH_H_
