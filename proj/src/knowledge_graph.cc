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

#include "tempowl/knowledge_graph.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace tempowl {
namespace {

bool EdgeOrder(const KgEdge& a, const KgEdge& b) {
  return std::tie(a.target, a.relation, a.source) <
         std::tie(b.target, b.relation, b.source);
}

// KG nodes of one temporal graph, sorted by (node id, time index). Returns
// the node list and, for each (node index, time index), its KG position.
struct NodeLayout {
  std::vector<KgNode> nodes;
  std::vector<Colour> colours;
  std::vector<std::uint32_t> position;  // [v * n + i]

  std::uint32_t at(std::size_t v, std::size_t i, std::size_t n) const {
    return position[v * n + i];
  }
};

NodeLayout LayoutNodes(const TemporalGraph& tg, int origin) {
  const std::size_t n = tg.num_snapshots();
  std::vector<std::size_t> by_name(tg.num_nodes());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(), [&](std::size_t a, std::size_t b) {
    return tg.node_id(a) < tg.node_id(b);
  });
  NodeLayout layout;
  layout.position.resize(tg.num_timestamped_nodes());
  for (std::size_t v : by_name) {
    for (std::size_t i = 0; i < n; ++i) {
      layout.position[v * n + i] =
          static_cast<std::uint32_t>(layout.nodes.size());
      layout.nodes.push_back({origin, {tg.node_id(v), i}});
      layout.colours.push_back(tg.colour(i, v));
    }
  }
  return layout;
}

KnowledgeGraph BuildEncoding(const TemporalGraph& tg, Encoding encoding,
                             int origin) {
  NodeLayout layout = LayoutNodes(tg, origin);
  const std::size_t n = tg.num_snapshots();
  const auto& times = tg.times();
  std::vector<KgEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (const IndexEdge& e : tg.edges(i)) {
      for (std::size_t j = i; j < n; ++j) {
        const Relation r = times[j] - times[i];
        for (auto [v, u] : {std::pair(e.first, e.second),
                            std::pair(e.second, e.first)}) {
          const std::size_t source_time = encoding == Encoding::kGlobal ? i : j;
          edges.push_back({r, layout.at(v, source_time, n), layout.at(u, j, n)});
        }
      }
    }
  }
  return KnowledgeGraph(std::move(layout.nodes), std::move(layout.colours),
                        std::move(edges));
}

}  // namespace

KnowledgeGraph::KnowledgeGraph(std::vector<KgNode> nodes,
                               std::vector<Colour> colours,
                               std::vector<KgEdge> edges) {
  if (colours.size() != nodes.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "knowledge graph needs one colour per node");
  }
  const std::size_t count = nodes.size();
  // Bring nodes into canonical order and remap edge endpoints.
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return nodes[a] < nodes[b];
  });
  std::vector<std::uint32_t> rank(count);
  nodes_.reserve(count);
  colours_.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    rank[order[k]] = k;
    nodes_.push_back(std::move(nodes[order[k]]));
    colours_.push_back(std::move(colours[order[k]]));
  }
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate knowledge-graph node");
  }
  for (KgEdge& e : edges) {
    if (e.relation < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative relation label " + std::to_string(e.relation));
    }
    if (e.source >= count || e.target >= count) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    e.source = rank[e.source];
    e.target = rank[e.target];
  }
  std::sort(edges.begin(), edges.end(), EdgeOrder);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (const KgEdge& e : edges_) relations_.push_back(e.relation);
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()),
                   relations_.end());

  in_offsets_.assign(count + 1, 0);
  for (const KgEdge& e : edges_) ++in_offsets_[e.target + 1];
  for (std::size_t v = 0; v < count; ++v) in_offsets_[v + 1] += in_offsets_[v];
}

std::span<const KgEdge> KnowledgeGraph::InEdges(std::uint32_t target) const {
  return std::span<const KgEdge>(edges_).subspan(
      in_offsets_[target], in_offsets_[target + 1] - in_offsets_[target]);
}

std::vector<std::uint32_t> KnowledgeGraph::InNeighbourhood(std::uint32_t node,
                                                           Relation r) const {
  if (node >= nodes_.size()) {
    throw Error(ErrorCode::kUnknownNode, "knowledge-graph node out of range");
  }
  std::vector<std::uint32_t> out;
  for (const KgEdge& e : InEdges(node)) {
    if (e.relation == r) out.push_back(e.source);
  }
  return out;
}

bool KnowledgeGraph::HasEdge(Relation r, std::uint32_t source,
                             std::uint32_t target) const {
  if (target >= nodes_.size()) return false;
  auto in = InEdges(target);
  return std::binary_search(in.begin(), in.end(), KgEdge{r, source, target},
                            EdgeOrder);
}

std::optional<std::uint32_t> KnowledgeGraph::Find(const KgNode& node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::uint32_t KnowledgeGraph::IndexOf(const KgNode& node) const {
  auto idx = Find(node);
  if (!idx) {
    throw Error(ErrorCode::kUnknownNode,
                "no knowledge-graph node (" + node.tnode.node + ", " +
                    std::to_string(node.tnode.time_index) + ") in origin " +
                    std::to_string(node.origin));
  }
  return *idx;
}

KnowledgeGraph GlobalEncoding(const TemporalGraph& tg, int origin) {
  return BuildEncoding(tg, Encoding::kGlobal, origin);
}

KnowledgeGraph LocalEncoding(const TemporalGraph& tg, int origin) {
  return BuildEncoding(tg, Encoding::kLocal, origin);
}

KnowledgeGraph Encode(const TemporalGraph& tg, Encoding encoding, int origin) {
  return BuildEncoding(tg, encoding, origin);
}

DisjointUnionResult DisjointUnion(const KnowledgeGraph& first,
                                  const KnowledgeGraph& second) {
  int shift = 0;
  for (const KgNode& n : first.nodes()) shift = std::max(shift, n.origin + 1);

  std::vector<KgNode> nodes = first.nodes();
  std::vector<Colour> colours = first.colours();
  std::vector<KgEdge> edges = first.edges();
  const auto offset = static_cast<std::uint32_t>(first.num_nodes());
  for (KgNode n : second.nodes()) {
    n.origin += shift;
    nodes.push_back(std::move(n));
  }
  colours.insert(colours.end(), second.colours().begin(),
                 second.colours().end());
  for (KgEdge e : second.edges()) {
    e.source += offset;
    e.target += offset;
    edges.push_back(e);
  }
  DisjointUnionResult result;
  result.graph = KnowledgeGraph(std::move(nodes), std::move(colours),
                                std::move(edges));
  // Both inputs are already in canonical order and every origin of the
  // second sorts after the first, so concatenation preserves positions.
  result.first_to_union.resize(first.num_nodes());
  std::iota(result.first_to_union.begin(), result.first_to_union.end(), 0);
  result.second_to_union.resize(second.num_nodes());
  std::iota(result.second_to_union.begin(), result.second_to_union.end(),
            offset);
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> TemporalNeighbourhood(
    const TemporalGraph& tg, const TimestampedNode& at) {
  auto [v, i] = tg.Resolve(at);
  return TemporalNeighbourhood(tg, v, i);
}

std::vector<std::pair<std::size_t, std::size_t>> TemporalNeighbourhood(
    const TemporalGraph& tg, std::size_t node, std::size_t time_index) {
  if (node >= tg.num_nodes() || time_index >= tg.num_snapshots()) {
    throw Error(ErrorCode::kUnknownNode, "timestamped node out of range");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j <= time_index; ++j) {
    for (std::uint32_t u : tg.neighbours(j, node)) out.emplace_back(u, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tempowl
