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

#include "tempowl/isomorphism.h"

#include <string>

#include "labelled_iso.h"

namespace tempowl {
namespace {

void CheckBound(const TemporalGraph& first, const TemporalGraph& second,
                const IsoOptions& options) {
  const std::size_t n = std::max(first.num_nodes(), second.num_nodes());
  if (n > options.node_bound) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::to_string(n) + " nodes exceeds the isomorphism bound of " +
                    std::to_string(options.node_bound));
  }
}

internal::LabelledGraph SnapshotGraph(const TemporalGraph& tg,
                                      std::size_t snapshot) {
  internal::LabelledGraph g(tg.num_nodes());
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    const Colour& c = tg.colour(snapshot, v);
    g.node_keys[v] = std::to_string(c.size()) + ':' + c;
  }
  for (const IndexEdge& e : tg.edges(snapshot)) g.AddLabel(e.first, e.second, 0);
  return g;
}

// Relation i = E_i; node key = the node's colour sequence.
internal::LabelledGraph LayeredGraph(const TemporalGraph& tg) {
  internal::LabelledGraph g(tg.num_nodes());
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    std::string key;
    for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
      const Colour& c = tg.colour(i, v);
      key += std::to_string(c.size());
      key += ':';
      key += c;
    }
    g.node_keys[v] = std::move(key);
  }
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    for (const IndexEdge& e : tg.edges(i)) {
      g.AddLabel(e.first, e.second, static_cast<std::uint32_t>(i));
    }
  }
  return g;
}

// Anchor as (node1, node2, time index), or nullopt when the time indices
// differ and no witness can relate the two nodes.
struct ResolvedAnchor {
  std::size_t node1;
  std::size_t node2;
  std::size_t time_index;
};

std::optional<ResolvedAnchor> Resolve(const TemporalGraph& first,
                                      const TemporalGraph& second,
                                      const IsoAnchor& anchor) {
  const auto [v, i] = first.Resolve(anchor.first);
  const auto [u, j] = second.Resolve(anchor.second);
  if (i != j) return std::nullopt;
  return ResolvedAnchor{v, u, i};
}

// Individualises the anchored pair so every isomorphism found maps one to
// the other. Keys are length-prefixed, so the suffix cannot collide.
void Pin(internal::LabelledGraph& a, internal::LabelledGraph& b,
         const ResolvedAnchor& anchor) {
  a.node_keys[anchor.node1] += "*";
  b.node_keys[anchor.node2] += "*";
}

}  // namespace

std::string_view IsoKindName(IsoKind kind) {
  return kind == IsoKind::kPointwise ? "pointwise" : "timewise";
}

std::optional<IsoWitness> PointwiseIso(const TemporalGraph& first,
                                       const TemporalGraph& second,
                                       const IsoOptions& options) {
  CheckBound(first, second, options);
  if (first.times() != second.times()) return std::nullopt;
  if (first.num_nodes() != second.num_nodes()) return std::nullopt;
  std::optional<ResolvedAnchor> anchor;
  if (options.anchor) {
    anchor = Resolve(first, second, *options.anchor);
    if (!anchor) return std::nullopt;
  }
  IsoWitness witness{IsoKind::kPointwise, {}};
  for (std::size_t i = 0; i < first.num_snapshots(); ++i) {
    auto a = SnapshotGraph(first, i);
    auto b = SnapshotGraph(second, i);
    if (anchor && anchor->time_index == i) Pin(a, b, *anchor);
    auto map = internal::FindIsomorphism(a, b);
    if (!map) return std::nullopt;
    witness.maps.push_back(std::move(*map));
  }
  return witness;
}

std::optional<IsoWitness> TimewiseIso(const TemporalGraph& first,
                                      const TemporalGraph& second,
                                      const IsoOptions& options) {
  CheckBound(first, second, options);
  if (first.num_snapshots() != second.num_snapshots()) return std::nullopt;
  if (first.num_nodes() != second.num_nodes()) return std::nullopt;
  for (std::size_t i = 1; i < first.num_snapshots(); ++i) {
    if (first.times()[i] - first.times()[i - 1] !=
        second.times()[i] - second.times()[i - 1]) {
      return std::nullopt;
    }
  }
  auto a = LayeredGraph(first);
  auto b = LayeredGraph(second);
  if (options.anchor) {
    const auto anchor = Resolve(first, second, *options.anchor);
    if (!anchor) return std::nullopt;
    Pin(a, b, *anchor);
  }
  auto map = internal::FindIsomorphism(a, b);
  if (!map) return std::nullopt;
  return IsoWitness{IsoKind::kTimewise, {std::move(*map)}};
}

bool VerifyWitness(const TemporalGraph& first, const TemporalGraph& second,
                   const IsoWitness& witness,
                   const std::optional<IsoAnchor>& anchor) {
  const std::size_t n = first.num_snapshots();
  if (second.num_snapshots() != n) return false;
  if (first.num_nodes() != second.num_nodes()) return false;
  if (witness.kind == IsoKind::kPointwise) {
    if (first.times() != second.times()) return false;
    if (witness.maps.size() != n) return false;
  } else {
    for (std::size_t i = 1; i < n; ++i) {
      if (first.times()[i] - first.times()[i - 1] !=
          second.times()[i] - second.times()[i - 1]) {
        return false;
      }
    }
    if (witness.maps.size() != 1) return false;
  }
  const std::size_t nodes = first.num_nodes();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = witness.kind == IsoKind::kPointwise ? witness.maps[i]
                                                        : witness.maps[0];
    if (f.size() != nodes) return false;
    std::vector<bool> hit(nodes, false);
    for (std::size_t v = 0; v < nodes; ++v) {
      if (f[v] >= nodes || hit[f[v]]) return false;
      hit[f[v]] = true;
      if (first.colour(i, v) != second.colour(i, f[v])) return false;
    }
    for (std::size_t u = 0; u < nodes; ++u) {
      for (std::size_t v = u + 1; v < nodes; ++v) {
        if (first.HasEdge(i, u, v) != second.HasEdge(i, f[u], f[v])) {
          return false;
        }
      }
    }
  }
  if (anchor) {
    const auto v = first.node_index(anchor->first.node);
    const auto u = second.node_index(anchor->second.node);
    const std::size_t i = anchor->first.time_index;
    if (!v || !u || i != anchor->second.time_index || i >= n) return false;
    const auto& f = witness.kind == IsoKind::kPointwise ? witness.maps[i]
                                                        : witness.maps[0];
    if (f[*v] != *u) return false;
  }
  return true;
}

}  // namespace tempowl
