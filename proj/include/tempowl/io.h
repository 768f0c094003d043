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

#ifndef TEMPOWL_IO_H_
#define TEMPOWL_IO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tempowl/distinguish.h"
#include "tempowl/isomorphism.h"
#include "tempowl/knowledge_graph.h"
#include "tempowl/properties.h"
#include "tempowl/refinement.h"
#include "tempowl/simulator.h"
#include "tempowl/temporal_graph.h"

namespace tempowl {

// Temporal graph JSON:
//   {"nodes":["a","b"],"times":[1,2],
//    "snapshots":[{"colours":{"a":"blue","b":"green"},"edges":[["a","b"]]},
//                 ...]}
// Non-string colour values are kept in their canonical JSON text form.
// Malformed documents throw kParseError; the result is not validated.
TemporalGraphSpec SpecFromJson(std::string_view text);
TemporalGraph TemporalGraphFromJson(std::string_view text);
std::string TemporalGraphToJson(const TemporalGraph& tg);

// CSV with header u,v,t; one undirected edge event per row.
std::vector<EventRecord> ParseEventsCsv(std::string_view text);

struct EventStats {
  std::size_t nodes = 0;  // distinct endpoints
  std::size_t edges = 0;  // event rows
  std::size_t steps = 0;  // distinct timestamps
};
EventStats ComputeEventStats(const std::vector<EventRecord>& events);
std::string EventStatsToJson(const EventStats& stats);

// "a@2" addresses node a at timestamp 2, "a#1" at time index 1. The split
// is at the last '@' or '#', so ids may contain either character.
TimestampedNode ParseNodeAddress(const TemporalGraph& tg,
                                 std::string_view address);
std::string FormatNodeAddress(const TemporalGraph& tg, std::size_t node,
                              std::size_t time_index);

// {"nodes":[["a",0],...],"colours":{"a#0":"blue",...},
//  "relations":[0,1],"edges":[[r,["b",1],["a",2]],...]}
std::string KnowledgeGraphToJson(const KnowledgeGraph& kg);

// {"stable_at":k|null,"layers":[{"layer":0,"classes":[["a#0",...],...]}]}
std::string ColouringToJson(const KnowledgeGraph& kg,
                            const Colouring& colouring);

// {"distinguishable":b,"first_layer":l|null,"mode":"global"}
std::string VerdictToJson(const Verdict& verdict);
// {"class":"local_only","global":{...},"local":{...}}
std::string VerdictPairToJson(const Verdict& global, const Verdict& local);

// Matrix with rows = timestamped nodes of the first graph, columns = those
// of the second, cells = pair classes. Headers use the a@t syntax.
std::string ClassMatrixToCsv(const ClassMatrix& m, const TemporalGraph& first,
                             const TemporalGraph& second);

// {"isomorphic":false,"kind":"timewise"} or, with a witness,
// {"isomorphic":true,"kind":"pointwise","maps":[{"a":"b'",...},...]}
std::string IsoResultToJson(IsoKind kind, const std::optional<IsoWitness>& w,
                            const TemporalGraph& first,
                            const TemporalGraph& second);

// Integers outside the int64 range are emitted as decimal strings.
std::string EmbeddingsToJson(const EmbeddingState& state,
                             const TemporalGraph& tg,
                             const ModelConfig& config);

std::string FuzzReportToJson(const FuzzReport& report);

}  // namespace tempowl

#endif  // TEMPOWL_IO_H_
