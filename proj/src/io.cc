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

#include "tempowl/io.h"

#include <charconv>
#include <limits>
#include <set>

#include "json.hpp"

namespace tempowl {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void ParseFail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

template <typename Int>
bool ParseInt(std::string_view s, Int& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string IndexAddress(const std::string& node, std::size_t time_index) {
  return node + "#" + std::to_string(time_index);
}

Json OptionalLayer(const std::optional<std::size_t>& layer) {
  return layer ? Json(*layer) : Json(nullptr);
}

Json VerdictJson(const Verdict& v) {
  Json j;
  j["distinguishable"] = v.distinguishable;
  j["first_layer"] = OptionalLayer(v.first_layer);
  j["mode"] = std::string(ModeName(v.mode));
  return j;
}

Json BigIntJson(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

}  // namespace

TemporalGraphSpec SpecFromJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    ParseFail(std::string("invalid JSON: ") + e.what());
  }
  TemporalGraphSpec spec;
  try {
    if (!doc.is_object()) ParseFail("temporal graph must be a JSON object");
    for (const char* key : {"nodes", "times", "snapshots"}) {
      if (!doc.contains(key) || !doc[key].is_array()) {
        ParseFail(std::string("missing array field '") + key + "'");
      }
    }
    for (const Json& id : doc["nodes"]) {
      if (!id.is_string()) ParseFail("node ids must be strings");
      spec.node_ids.push_back(id.get<std::string>());
    }
    for (const Json& t : doc["times"]) {
      if (!t.is_number_integer()) ParseFail("times must be integers");
      spec.times.push_back(t.get<Timestamp>());
    }
    std::size_t index = 0;
    for (const Json& s : doc["snapshots"]) {
      const std::string where = "snapshots[" + std::to_string(index++) + "]";
      if (!s.is_object()) ParseFail(where + " must be an object");
      SnapshotSpec snap;
      if (s.contains("colours")) {
        if (!s["colours"].is_object()) {
          ParseFail(where + ".colours must be an object");
        }
        for (const auto& [node, colour] : s["colours"].items()) {
          snap.colours[node] =
              colour.is_string() ? colour.get<std::string>() : colour.dump();
        }
      }
      if (s.contains("edges")) {
        if (!s["edges"].is_array()) ParseFail(where + ".edges must be an array");
        for (const Json& e : s["edges"]) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
              !e[1].is_string()) {
            ParseFail(where + ": edges must be pairs of node ids");
          }
          snap.edges.emplace_back(e[0].get<std::string>(),
                                  e[1].get<std::string>());
        }
      }
      spec.snapshots.push_back(std::move(snap));
    }
  } catch (const Json::exception& e) {
    ParseFail(std::string("malformed temporal graph: ") + e.what());
  }
  return spec;
}

TemporalGraph TemporalGraphFromJson(std::string_view text) {
  return TemporalGraph::FromSpec(SpecFromJson(text));
}

std::string TemporalGraphToJson(const TemporalGraph& tg) {
  Json doc;
  doc["nodes"] = tg.node_ids();
  doc["times"] = tg.times();
  Json snaps = Json::array();
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    Json s;
    Json colours = Json::object();
    for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
      colours[tg.node_id(v)] = tg.colour(i, v);
    }
    s["colours"] = std::move(colours);
    Json edges = Json::array();
    for (const IndexEdge& e : tg.edges(i)) {
      edges.push_back({tg.node_id(e.first), tg.node_id(e.second)});
    }
    s["edges"] = std::move(edges);
    snaps.push_back(std::move(s));
  }
  doc["snapshots"] = std::move(snaps);
  return doc.dump();
}

std::vector<EventRecord> ParseEventsCsv(std::string_view text) {
  std::vector<EventRecord> events;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    for (std::size_t start = 0;;) {
      const auto comma = line.find(',', start);
      fields.push_back(Trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::string where = "line " + std::to_string(line_no);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "u" || fields[1] != "v" ||
          fields[2] != "t") {
        ParseFail(where + ": expected header 'u,v,t'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) ParseFail(where + ": expected 3 fields");
    EventRecord r{std::string(fields[0]), std::string(fields[1]), 0};
    if (r.u.empty() || r.v.empty()) ParseFail(where + ": empty node id");
    if (!ParseInt(fields[2], r.t)) ParseFail(where + ": t is not an integer");
    events.push_back(std::move(r));
  }
  if (!header_seen) ParseFail("missing header 'u,v,t'");
  return events;
}

EventStats ComputeEventStats(const std::vector<EventRecord>& events) {
  std::set<std::string> nodes;
  std::set<Timestamp> steps;
  for (const EventRecord& e : events) {
    nodes.insert(e.u);
    nodes.insert(e.v);
    steps.insert(e.t);
  }
  return {nodes.size(), events.size(), steps.size()};
}

std::string EventStatsToJson(const EventStats& stats) {
  Json j;
  j["nodes"] = stats.nodes;
  j["edges"] = stats.edges;
  j["steps"] = stats.steps;
  return j.dump();
}

TimestampedNode ParseNodeAddress(const TemporalGraph& tg,
                                 std::string_view address) {
  const auto pos = address.find_last_of("@#");
  if (pos == std::string_view::npos || pos == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "node address '" + std::string(address) +
                    "' must look like node@time or node#index");
  }
  const std::string node(address.substr(0, pos));
  tg.NodeIndexOrThrow(node);
  const std::string_view rest = address.substr(pos + 1);
  if (address[pos] == '@') {
    Timestamp t = 0;
    if (!ParseInt(rest, t)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad timestamp in '" + std::string(address) + "'");
    }
    const auto i = tg.time_index(t);
    if (!i) {
      throw Error(ErrorCode::kUnknownTime,
                  std::to_string(t) + " is not a time point of the graph");
    }
    return {node, *i};
  }
  std::size_t i = 0;
  if (!ParseInt(rest, i)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad time index in '" + std::string(address) + "'");
  }
  if (i >= tg.num_snapshots()) {
    throw Error(ErrorCode::kUnknownTime,
                "time index " + std::to_string(i) + " out of range");
  }
  return {node, i};
}

std::string FormatNodeAddress(const TemporalGraph& tg, std::size_t node,
                              std::size_t time_index) {
  return tg.node_id(node) + "@" + std::to_string(tg.times()[time_index]);
}

std::string KnowledgeGraphToJson(const KnowledgeGraph& kg) {
  auto node_json = [&](std::uint32_t x) {
    const KgNode& n = kg.node(x);
    Json j = Json::array({n.tnode.node, n.tnode.time_index});
    if (n.origin != 0) j.push_back(n.origin);
    return j;
  };
  Json doc;
  Json nodes = Json::array();
  Json colours = Json::object();
  for (std::uint32_t x = 0; x < kg.num_nodes(); ++x) {
    nodes.push_back(node_json(x));
    const KgNode& n = kg.node(x);
    std::string key = IndexAddress(n.tnode.node, n.tnode.time_index);
    if (n.origin != 0) key += "/" + std::to_string(n.origin);
    colours[key] = kg.colours()[x];
  }
  doc["nodes"] = std::move(nodes);
  doc["colours"] = std::move(colours);
  doc["relations"] = kg.relations();
  Json edges = Json::array();
  for (const KgEdge& e : kg.edges()) {
    edges.push_back({e.relation, node_json(e.source), node_json(e.target)});
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string ColouringToJson(const KnowledgeGraph& kg,
                            const Colouring& colouring) {
  Json doc;
  doc["stable_at"] = OptionalLayer(colouring.stable_at());
  Json layers = Json::array();
  for (std::size_t l = 0; l < colouring.num_layers(); ++l) {
    Json classes = Json::array();
    for (const auto& cls : colouring.PartitionAt(l)) {
      Json members = Json::array();
      for (std::uint32_t x : cls) {
        const KgNode& n = kg.node(x);
        members.push_back(IndexAddress(n.tnode.node, n.tnode.time_index));
      }
      classes.push_back(std::move(members));
    }
    Json layer;
    layer["layer"] = l;
    layer["classes"] = std::move(classes);
    layers.push_back(std::move(layer));
  }
  doc["layers"] = std::move(layers);
  return doc.dump();
}

std::string VerdictToJson(const Verdict& verdict) {
  return VerdictJson(verdict).dump();
}

std::string VerdictPairToJson(const Verdict& global, const Verdict& local) {
  Json doc;
  doc["class"] = std::string(
      PairClassName(Combine(global.distinguishable, local.distinguishable)));
  doc["global"] = VerdictJson(global);
  doc["local"] = VerdictJson(local);
  return doc.dump();
}

std::string ClassMatrixToCsv(const ClassMatrix& m, const TemporalGraph& first,
                             const TemporalGraph& second) {
  auto label = [](const TemporalGraph& tg, const TimestampedNode& n) {
    return FormatNodeAddress(tg, tg.NodeIndexOrThrow(n.node), n.time_index);
  };
  std::string out = "node";
  for (const auto& c : m.columns) out += "," + label(second, c);
  out += '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out += label(first, m.rows[r]);
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      out += ',';
      out += PairClassName(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string IsoResultToJson(IsoKind kind, const std::optional<IsoWitness>& w,
                            const TemporalGraph& first,
                            const TemporalGraph& second) {
  Json doc;
  doc["isomorphic"] = w.has_value();
  doc["kind"] = std::string(IsoKindName(kind));
  if (w) {
    Json maps = Json::array();
    for (const auto& f : w->maps) {
      Json m = Json::object();
      for (std::size_t v = 0; v < f.size(); ++v) {
        m[first.node_id(v)] = second.node_id(f[v]);
      }
      maps.push_back(std::move(m));
    }
    doc["maps"] = std::move(maps);
  }
  return doc.dump();
}

std::string EmbeddingsToJson(const EmbeddingState& state,
                             const TemporalGraph& tg,
                             const ModelConfig& config) {
  Json doc;
  doc["mode"] = std::string(ModeName(config.mode));
  doc["variant"] = std::string(VariantName(config.variant));
  doc["seed"] = config.seed;
  doc["layers"] = config.layers;
  doc["width"] = config.variant == Variant::kHashInjective ? 1 : config.width;
  Json layers = Json::array();
  for (std::size_t l = 0; l < state.num_layers(); ++l) {
    Json values = Json::object();
    for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
      for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
        Json vec = Json::array();
        for (const BigInt& x : state.At(l, v, i)) vec.push_back(BigIntJson(x));
        values[FormatNodeAddress(tg, v, i)] = std::move(vec);
      }
    }
    Json layer;
    layer["layer"] = l;
    layer["embeddings"] = std::move(values);
    layers.push_back(std::move(layer));
  }
  doc["embeddings"] = std::move(layers);
  return doc.dump();
}

std::string FuzzReportToJson(const FuzzReport& report) {
  Json doc;
  doc["property"] = std::string(PropertyName(report.property));
  doc["trials"] = report.trials;
  doc["seed"] = report.base_seed;
  doc["violations"] = report.violations;
  doc["min_failing_seed"] = report.min_failing_seed
                                ? Json(*report.min_failing_seed)
                                : Json(nullptr);
  if (report.min_failing_seed) doc["detail"] = report.failure_detail;
  Json counters = Json::object();
  for (const auto& [name, count] : report.counters) counters[name] = count;
  doc["counters"] = std::move(counters);
  doc["seconds"] = report.seconds;
  return doc.dump();
}

}  // namespace tempowl
