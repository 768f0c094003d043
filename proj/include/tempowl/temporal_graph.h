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

#ifndef TEMPOWL_TEMPORAL_GRAPH_H_
#define TEMPOWL_TEMPORAL_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempowl/error.h"

namespace tempowl {

// Integer micro-units. Only differences matter to the encodings, and they
// must be exact because they become relation labels.
using Timestamp = std::int64_t;

// Opaque colour token, compared for equality only. Feature vectors are
// expected in some canonical string form.
using Colour = std::string;

// A (node, time point) pair. The time is held as an index into the graph's
// time list so that shifting along the time axis is index arithmetic.
struct TimestampedNode {
  std::string node;
  std::size_t time_index = 0;

  friend auto operator<=>(const TimestampedNode&,
                          const TimestampedNode&) = default;
};

// Unvalidated, name-addressed form. This is what the JSON reader produces
// and what Validate() inspects.
struct SnapshotSpec {
  std::map<std::string, Colour> colours;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct TemporalGraphSpec {
  std::vector<std::string> node_ids;
  std::vector<Timestamp> times;
  std::vector<SnapshotSpec> snapshots;
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

// Reports the first violated invariant, with its location, or nullopt.
std::optional<ValidationIssue> Validate(const TemporalGraphSpec& spec);

// Undirected edge over node indices, always stored with first < second.
struct IndexEdge {
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
};

// A finite sequence of node-coloured undirected snapshots over one fixed node
// set, with strictly increasing timestamps. Immutable once built; every
// factory validates.
class TemporalGraph {
 public:
  static TemporalGraph FromSpec(const TemporalGraphSpec& spec);

  // colours[snapshot][node]; edges[snapshot] in any order and orientation.
  static TemporalGraph FromIndexed(std::vector<std::string> node_ids,
                                   std::vector<Timestamp> times,
                                   std::vector<std::vector<Colour>> colours,
                                   std::vector<std::vector<IndexEdge>> edges);

  TemporalGraphSpec ToSpec() const;

  std::size_t num_nodes() const { return node_ids_.size(); }
  std::size_t num_snapshots() const { return times_.size(); }
  std::size_t num_timestamped_nodes() const {
    return num_nodes() * num_snapshots();
  }

  const std::vector<std::string>& node_ids() const { return node_ids_; }
  const std::vector<Timestamp>& times() const { return times_; }
  const std::string& node_id(std::size_t node) const {
    return node_ids_[node];
  }
  const Colour& colour(std::size_t snapshot, std::size_t node) const {
    return colours_[snapshot][node];
  }
  const std::vector<Colour>& colours(std::size_t snapshot) const {
    return colours_[snapshot];
  }
  // Sorted, first < second.
  std::span<const IndexEdge> edges(std::size_t snapshot) const {
    return edges_[snapshot];
  }
  std::size_t num_edges() const;

  // Neighbours of `node` in snapshot `snapshot`, ascending.
  std::span<const std::uint32_t> neighbours(std::size_t snapshot,
                                            std::size_t node) const;
  bool HasEdge(std::size_t snapshot, std::size_t u, std::size_t v) const;

  std::optional<std::size_t> node_index(std::string_view id) const;
  std::optional<std::size_t> time_index(Timestamp t) const;

  // Throws kUnknownNode.
  std::size_t NodeIndexOrThrow(std::string_view id) const;
  // Resolves a timestamped node to (node index, time index); throws
  // kUnknownNode when either part is out of range.
  std::pair<std::size_t, std::size_t> Resolve(const TimestampedNode& n) const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.node_ids_ == b.node_ids_ && a.times_ == b.times_ &&
           a.colours_ == b.colours_ && a.edges_ == b.edges_;
  }

 private:
  TemporalGraph() = default;
  void BuildIndexes();

  std::vector<std::string> node_ids_;
  std::vector<Timestamp> times_;
  std::vector<std::vector<Colour>> colours_;
  std::vector<std::vector<IndexEdge>> edges_;

  std::unordered_map<std::string, std::size_t> index_of_;
  // adjacency_[snapshot] is CSR: offsets_ (num_nodes + 1) into targets_.
  std::vector<std::vector<std::uint32_t>> adjacency_offsets_;
  std::vector<std::vector<std::uint32_t>> adjacency_targets_;
};

bool IsColourPersistent(const TemporalGraph& tg);

// Static edge-labelled multigraph: one colour per node, edges labelled by
// the timestamps at which they exist.
struct AggregatedEdge {
  std::uint32_t first = 0;   // node index, first < second
  std::uint32_t second = 0;
  Timestamp time = 0;

  friend auto operator<=>(const AggregatedEdge&,
                          const AggregatedEdge&) = default;
};

struct AggregatedGraph {
  std::vector<std::string> node_ids;
  std::vector<Colour> colours;
  // Sorted by (time, first, second).
  std::vector<AggregatedEdge> edges;

  friend bool operator==(const AggregatedGraph&,
                         const AggregatedGraph&) = default;
};

// Throws kNotColourPersistent.
AggregatedGraph ToAggregated(const TemporalGraph& tg);

// Snapshot times are the sorted distinct edge labels, unless `times` is given
// (it must contain every label; extra entries become edgeless snapshots).
// Throws kEmptyEdgeSet when no times can be derived.
TemporalGraph FromAggregated(
    const AggregatedGraph& agg,
    const std::optional<std::vector<Timestamp>>& times = std::nullopt);

struct EventRecord {
  std::string u;
  std::string v;
  Timestamp t = 0;
};

// Groups events by distinct timestamp. Nodes appear in first-seen order and
// carry `default_colour` everywhere, so the output is colour-persistent.
// Repeated events collapse to one edge. Throws kEmptyEdgeSet on no events
// and kSelfLoop on a u == v record.
TemporalGraph FromEvents(std::span<const EventRecord> events,
                         const Colour& default_colour);

// Same graph with every timestamp moved by `delta`.
TemporalGraph TimeShifted(const TemporalGraph& tg, Timestamp delta);

}  // namespace tempowl

#endif  // TEMPOWL_TEMPORAL_GRAPH_H_
