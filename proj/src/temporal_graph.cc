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

#include "tempowl/temporal_graph.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tempowl {
namespace {

std::string SnapshotLocation(std::size_t i) {
  return "snapshot " + std::to_string(i);
}

}  // namespace

std::optional<ValidationIssue> Validate(const TemporalGraphSpec& spec) {
  if (spec.times.empty()) {
    return ValidationIssue{ErrorCode::kEmptyTimes, "times must be nonempty"};
  }
  for (std::size_t i = 1; i < spec.times.size(); ++i) {
    if (spec.times[i] <= spec.times[i - 1]) {
      std::ostringstream os;
      os << "times[" << i << "] = " << spec.times[i]
         << " does not exceed times[" << i - 1 << "] = " << spec.times[i - 1];
      return ValidationIssue{ErrorCode::kNonIncreasingTimes, os.str()};
    }
  }
  if (spec.snapshots.size() != spec.times.size()) {
    return ValidationIssue{
        ErrorCode::kSnapshotCountMismatch,
        std::to_string(spec.snapshots.size()) + " snapshots for " +
            std::to_string(spec.times.size()) + " times"};
  }
  std::unordered_set<std::string_view> known;
  for (const std::string& id : spec.node_ids) {
    if (!known.insert(id).second) {
      return ValidationIssue{ErrorCode::kDuplicateNode,
                             "node '" + id + "' listed twice"};
    }
  }
  for (std::size_t i = 0; i < spec.snapshots.size(); ++i) {
    const SnapshotSpec& snap = spec.snapshots[i];
    for (const auto& [node, colour] : snap.colours) {
      if (!known.contains(node)) {
        return ValidationIssue{ErrorCode::kUnknownNode,
                               SnapshotLocation(i) + ": colour for unknown node '" +
                                   node + "'"};
      }
    }
    for (const std::string& id : spec.node_ids) {
      if (!snap.colours.contains(id)) {
        return ValidationIssue{ErrorCode::kMissingColour,
                               SnapshotLocation(i) + ": node '" + id +
                                   "' has no colour"};
      }
    }
    std::set<std::pair<std::string_view, std::string_view>> seen;
    for (std::size_t e = 0; e < snap.edges.size(); ++e) {
      const auto& [u, v] = snap.edges[e];
      const std::string where =
          SnapshotLocation(i) + ", edge " + std::to_string(e);
      if (!known.contains(u) || !known.contains(v)) {
        return ValidationIssue{ErrorCode::kUnknownNode,
                               where + ": unknown endpoint in {" + u + "," +
                                   v + "}"};
      }
      if (u == v) {
        return ValidationIssue{ErrorCode::kSelfLoop,
                               where + ": self-loop on '" + u + "'"};
      }
      auto key = u < v ? std::pair<std::string_view, std::string_view>(u, v)
                       : std::pair<std::string_view, std::string_view>(v, u);
      if (!seen.insert(key).second) {
        return ValidationIssue{ErrorCode::kDuplicateEdge,
                               where + ": duplicate edge {" + u + "," + v +
                                   "}"};
      }
    }
  }
  return std::nullopt;
}

TemporalGraph TemporalGraph::FromSpec(const TemporalGraphSpec& spec) {
  if (auto issue = Validate(spec)) {
    throw Error(issue->code, issue->message);
  }
  TemporalGraph tg;
  tg.node_ids_ = spec.node_ids;
  tg.times_ = spec.times;
  for (std::size_t i = 0; i < spec.node_ids.size(); ++i) {
    tg.index_of_.emplace(spec.node_ids[i], i);
  }
  tg.colours_.resize(spec.snapshots.size());
  tg.edges_.resize(spec.snapshots.size());
  for (std::size_t i = 0; i < spec.snapshots.size(); ++i) {
    const SnapshotSpec& snap = spec.snapshots[i];
    tg.colours_[i].reserve(spec.node_ids.size());
    for (const std::string& id : spec.node_ids) {
      tg.colours_[i].push_back(snap.colours.at(id));
    }
    for (const auto& [u, v] : snap.edges) {
      auto a = static_cast<std::uint32_t>(tg.index_of_.at(u));
      auto b = static_cast<std::uint32_t>(tg.index_of_.at(v));
      tg.edges_[i].push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(tg.edges_[i].begin(), tg.edges_[i].end());
  }
  tg.BuildIndexes();
  return tg;
}

TemporalGraph TemporalGraph::FromIndexed(
    std::vector<std::string> node_ids, std::vector<Timestamp> times,
    std::vector<std::vector<Colour>> colours,
    std::vector<std::vector<IndexEdge>> edges) {
  if (times.empty()) {
    throw Error(ErrorCode::kEmptyTimes, "times must be nonempty");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw Error(ErrorCode::kNonIncreasingTimes,
                  "times[" + std::to_string(i) + "] is not increasing");
    }
  }
  if (colours.size() != times.size() || edges.size() != times.size()) {
    throw Error(ErrorCode::kSnapshotCountMismatch,
                "colour/edge tables do not match the time list");
  }
  TemporalGraph tg;
  tg.node_ids_ = std::move(node_ids);
  tg.times_ = std::move(times);
  for (std::size_t i = 0; i < tg.node_ids_.size(); ++i) {
    if (!tg.index_of_.emplace(tg.node_ids_[i], i).second) {
      throw Error(ErrorCode::kDuplicateNode,
                  "node '" + tg.node_ids_[i] + "' listed twice");
    }
  }
  const auto n = static_cast<std::uint32_t>(tg.node_ids_.size());
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (colours[i].size() != n) {
      throw Error(ErrorCode::kMissingColour,
                  SnapshotLocation(i) + ": colour table has wrong length");
    }
    for (IndexEdge& e : edges[i]) {
      if (e.first >= n || e.second >= n) {
        throw Error(ErrorCode::kUnknownNode,
                    SnapshotLocation(i) + ": edge endpoint out of range");
      }
      if (e.first == e.second) {
        throw Error(ErrorCode::kSelfLoop,
                    SnapshotLocation(i) + ": self-loop on '" +
                        tg.node_ids_[e.first] + "'");
      }
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges[i].begin(), edges[i].end());
    if (std::adjacent_find(edges[i].begin(), edges[i].end()) !=
        edges[i].end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  SnapshotLocation(i) + ": duplicate edge");
    }
  }
  tg.colours_ = std::move(colours);
  tg.edges_ = std::move(edges);
  tg.BuildIndexes();
  return tg;
}

void TemporalGraph::BuildIndexes() {
  if (index_of_.empty()) {
    for (std::size_t i = 0; i < node_ids_.size(); ++i) {
      index_of_.emplace(node_ids_[i], i);
    }
  }
  const std::size_t n = node_ids_.size();
  adjacency_offsets_.assign(times_.size(), {});
  adjacency_targets_.assign(times_.size(), {});
  for (std::size_t i = 0; i < times_.size(); ++i) {
    std::vector<std::uint32_t>& offsets = adjacency_offsets_[i];
    std::vector<std::uint32_t>& targets = adjacency_targets_[i];
    offsets.assign(n + 1, 0);
    for (const IndexEdge& e : edges_[i]) {
      ++offsets[e.first + 1];
      ++offsets[e.second + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    targets.resize(offsets[n]);
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const IndexEdge& e : edges_[i]) {
      targets[cursor[e.first]++] = e.second;
      targets[cursor[e.second]++] = e.first;
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
    }
  }
}

TemporalGraphSpec TemporalGraph::ToSpec() const {
  TemporalGraphSpec spec;
  spec.node_ids = node_ids_;
  spec.times = times_;
  spec.snapshots.resize(times_.size());
  for (std::size_t i = 0; i < times_.size(); ++i) {
    for (std::size_t v = 0; v < node_ids_.size(); ++v) {
      spec.snapshots[i].colours.emplace(node_ids_[v], colours_[i][v]);
    }
    for (const IndexEdge& e : edges_[i]) {
      spec.snapshots[i].edges.emplace_back(node_ids_[e.first],
                                           node_ids_[e.second]);
    }
  }
  return spec;
}

std::size_t TemporalGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return total;
}

std::span<const std::uint32_t> TemporalGraph::neighbours(
    std::size_t snapshot, std::size_t node) const {
  const auto& offsets = adjacency_offsets_[snapshot];
  const auto& targets = adjacency_targets_[snapshot];
  return std::span<const std::uint32_t>(targets).subspan(
      offsets[node], offsets[node + 1] - offsets[node]);
}

bool TemporalGraph::HasEdge(std::size_t snapshot, std::size_t u,
                            std::size_t v) const {
  auto nbrs = neighbours(snapshot, u);
  return std::binary_search(nbrs.begin(), nbrs.end(),
                            static_cast<std::uint32_t>(v));
}

std::optional<std::size_t> TemporalGraph::node_index(std::string_view id) const {
  auto it = index_of_.find(std::string(id));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TemporalGraph::time_index(Timestamp t) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it == times_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - times_.begin());
}

std::size_t TemporalGraph::NodeIndexOrThrow(std::string_view id) const {
  auto idx = node_index(id);
  if (!idx) {
    throw Error(ErrorCode::kUnknownNode,
                "unknown node '" + std::string(id) + "'");
  }
  return *idx;
}

std::pair<std::size_t, std::size_t> TemporalGraph::Resolve(
    const TimestampedNode& n) const {
  const std::size_t v = NodeIndexOrThrow(n.node);
  if (n.time_index >= times_.size()) {
    throw Error(ErrorCode::kUnknownNode,
                "time index " + std::to_string(n.time_index) +
                    " out of range for '" + n.node + "'");
  }
  return {v, n.time_index};
}

bool IsColourPersistent(const TemporalGraph& tg) {
  for (std::size_t i = 1; i < tg.num_snapshots(); ++i) {
    if (tg.colours(i) != tg.colours(0)) return false;
  }
  return true;
}

AggregatedGraph ToAggregated(const TemporalGraph& tg) {
  if (!IsColourPersistent(tg)) {
    throw Error(ErrorCode::kNotColourPersistent,
                "aggregated form needs a colour-persistent graph");
  }
  AggregatedGraph agg;
  agg.node_ids = tg.node_ids();
  agg.colours = tg.colours(0);
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    for (const IndexEdge& e : tg.edges(i)) {
      agg.edges.push_back({e.first, e.second, tg.times()[i]});
    }
  }
  std::sort(agg.edges.begin(), agg.edges.end(),
            [](const AggregatedEdge& a, const AggregatedEdge& b) {
              return std::tie(a.time, a.first, a.second) <
                     std::tie(b.time, b.first, b.second);
            });
  return agg;
}

TemporalGraph FromAggregated(const AggregatedGraph& agg,
                             const std::optional<std::vector<Timestamp>>& times) {
  if (agg.colours.size() != agg.node_ids.size()) {
    throw Error(ErrorCode::kMissingColour,
                "aggregated graph needs one colour per node");
  }
  std::vector<Timestamp> axis;
  if (times) {
    axis = *times;
  } else {
    for (const AggregatedEdge& e : agg.edges) axis.push_back(e.time);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  if (axis.empty()) {
    throw Error(ErrorCode::kEmptyEdgeSet,
                "no edges to derive snapshot times from; pass explicit times");
  }
  std::vector<std::vector<IndexEdge>> edges(axis.size());
  for (const AggregatedEdge& e : agg.edges) {
    auto it = std::lower_bound(axis.begin(), axis.end(), e.time);
    if (it == axis.end() || *it != e.time) {
      throw Error(ErrorCode::kUnknownTime,
                  "edge label " + std::to_string(e.time) +
                      " is not among the explicit times");
    }
    edges[static_cast<std::size_t>(it - axis.begin())].push_back(
        {e.first, e.second});
  }
  std::vector<std::vector<Colour>> colours(axis.size(), agg.colours);
  return TemporalGraph::FromIndexed(agg.node_ids, std::move(axis),
                                    std::move(colours), std::move(edges));
}

TemporalGraph FromEvents(std::span<const EventRecord> events,
                         const Colour& default_colour) {
  if (events.empty()) {
    throw Error(ErrorCode::kEmptyEdgeSet, "no events");
  }
  std::vector<std::string> node_ids;
  std::unordered_map<std::string, std::uint32_t> index_of;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] =
        index_of.emplace(id, static_cast<std::uint32_t>(node_ids.size()));
    if (inserted) node_ids.push_back(id);
    return it->second;
  };
  std::vector<Timestamp> axis;
  for (const EventRecord& ev : events) axis.push_back(ev.t);
  std::sort(axis.begin(), axis.end());
  axis.erase(std::unique(axis.begin(), axis.end()), axis.end());

  std::vector<std::set<IndexEdge>> edge_sets(axis.size());
  for (std::size_t k = 0; k < events.size(); ++k) {
    const EventRecord& ev = events[k];
    if (ev.u == ev.v) {
      throw Error(ErrorCode::kSelfLoop, "event " + std::to_string(k) +
                                            ": self-loop on '" + ev.u + "'");
    }
    const std::uint32_t a = intern(ev.u);
    const std::uint32_t b = intern(ev.v);
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(axis.begin(), axis.end(), ev.t) - axis.begin());
    edge_sets[slot].insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::vector<IndexEdge>> edges;
  edges.reserve(axis.size());
  for (auto& s : edge_sets) edges.emplace_back(s.begin(), s.end());
  std::vector<std::vector<Colour>> colours(
      axis.size(), std::vector<Colour>(node_ids.size(), default_colour));
  return TemporalGraph::FromIndexed(std::move(node_ids), std::move(axis),
                                    std::move(colours), std::move(edges));
}

TemporalGraph TimeShifted(const TemporalGraph& tg, Timestamp delta) {
  std::vector<Timestamp> times = tg.times();
  for (Timestamp& t : times) t += delta;
  std::vector<std::vector<Colour>> colours;
  std::vector<std::vector<IndexEdge>> edges;
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    colours.push_back(tg.colours(i));
    edges.emplace_back(tg.edges(i).begin(), tg.edges(i).end());
  }
  return TemporalGraph::FromIndexed(tg.node_ids(), std::move(times),
                                    std::move(colours), std::move(edges));
}

}  // namespace tempowl
