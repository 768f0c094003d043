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

#include <set>

#include "gtest/gtest.h"
#include "tempowl/generators.h"
#include "tempowl/prng.h"

namespace tempowl {
namespace {

TemporalGraphSpec TwoNodeSpec() {
  TemporalGraphSpec spec;
  spec.node_ids = {"a", "b"};
  spec.times = {1, 2};
  for (int i = 0; i < 2; ++i) {
    spec.snapshots.push_back({{{"a", "x"}, {"b", "x"}}, {{"a", "b"}}});
  }
  return spec;
}

ErrorCode CodeOf(const TemporalGraphSpec& spec) {
  const auto issue = Validate(spec);
  return issue ? issue->code : ErrorCode::kOk;
}

TEST(ValidateTest, AcceptsFig2) {
  const TemporalGraph fig2 = MakeFixture("fig2").graphs[0];
  EXPECT_FALSE(Validate(fig2.ToSpec()).has_value());
  EXPECT_EQ(fig2.num_nodes(), 3u);
  EXPECT_EQ(fig2.num_snapshots(), 4u);
}

TEST(ValidateTest, RejectsRepeatedTimestamp) {
  TemporalGraphSpec spec = TwoNodeSpec();
  spec.times = {3, 3};
  EXPECT_EQ(CodeOf(spec), ErrorCode::kNonIncreasingTimes);
}

TEST(ValidateTest, RejectsSelfLoop) {
  TemporalGraphSpec spec = TwoNodeSpec();
  spec.snapshots[0].edges = {{"a", "a"}};
  EXPECT_EQ(CodeOf(spec), ErrorCode::kSelfLoop);
}

TEST(ValidateTest, ReportsEachViolationKind) {
  TemporalGraphSpec spec = TwoNodeSpec();
  spec.times.clear();
  spec.snapshots.clear();
  EXPECT_EQ(CodeOf(spec), ErrorCode::kEmptyTimes);

  spec = TwoNodeSpec();
  spec.snapshots.pop_back();
  EXPECT_EQ(CodeOf(spec), ErrorCode::kSnapshotCountMismatch);

  spec = TwoNodeSpec();
  spec.node_ids.push_back("a");
  EXPECT_EQ(CodeOf(spec), ErrorCode::kDuplicateNode);

  spec = TwoNodeSpec();
  spec.snapshots[1].colours.erase("b");
  EXPECT_EQ(CodeOf(spec), ErrorCode::kMissingColour);

  spec = TwoNodeSpec();
  spec.snapshots[1].edges = {{"a", "z"}};
  EXPECT_EQ(CodeOf(spec), ErrorCode::kUnknownNode);

  spec = TwoNodeSpec();
  spec.snapshots[1].edges = {{"a", "b"}, {"b", "a"}};
  EXPECT_EQ(CodeOf(spec), ErrorCode::kDuplicateEdge);
}

TEST(ValidateTest, FromSpecThrowsWithTheSameCode) {
  TemporalGraphSpec spec = TwoNodeSpec();
  spec.times = {2, 1};
  try {
    TemporalGraph::FromSpec(spec);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIncreasingTimes);
  }
}

TEST(ValidateTest, AcceptsEveryGeneratorOutput) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomGraphOptions o;
    o.seed = seed;
    o.nodes = 1 + seed % 7;
    o.snapshots = 1 + seed % 4;
    o.uniform_grid = seed % 2 == 0;
    o.colour_persistent = seed % 3 == 0;
    const TemporalGraph tg = RandomTemporalGraph(o);
    EXPECT_FALSE(Validate(tg.ToSpec()).has_value()) << "seed " << seed;
  }
}

TEST(ColourPersistenceTest, Fixtures) {
  EXPECT_TRUE(IsColourPersistent(MakeFixture("fig3").graphs[0]));
  EXPECT_FALSE(IsColourPersistent(MakeFixture("fig2").graphs[0]));
}

TEST(ColourPersistenceTest, SingleSnapshotIsPersistent) {
  TemporalGraphSpec spec;
  spec.node_ids = {"a", "b"};
  spec.times = {7};
  spec.snapshots = {{{{"a", "red"}, {"b", "blue"}}, {}}};
  EXPECT_TRUE(IsColourPersistent(TemporalGraph::FromSpec(spec)));
}

TEST(AggregatedTest, Fig3HasFourLabelledEdges) {
  const AggregatedGraph agg = ToAggregated(MakeFixture("fig3").graphs[0]);
  ASSERT_EQ(agg.node_ids, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(agg.colours, (std::vector<Colour>{"blue", "green", "green"}));
  // a=0, b=1, c=2; sorted by (time, first, second).
  const std::vector<AggregatedEdge> expected = {
      {0, 1, 2}, {1, 2, 3}, {0, 2, 4}, {1, 2, 4}};
  EXPECT_EQ(agg.edges, expected);
}

TEST(AggregatedTest, EdgelessPersistentGraphHasNoEdges) {
  TemporalGraphSpec spec;
  spec.node_ids = {"a"};
  spec.times = {1, 2};
  spec.snapshots = {{{{"a", "x"}}, {}}, {{{"a", "x"}}, {}}};
  EXPECT_TRUE(ToAggregated(TemporalGraph::FromSpec(spec)).edges.empty());
}

TEST(AggregatedTest, NonPersistentGraphIsRejected) {
  try {
    ToAggregated(MakeFixture("fig2").graphs[0]);
    FAIL() << "expected NotColourPersistent";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotColourPersistent);
  }
}

TEST(AggregatedTest, Fig3RoundTripsWithExplicitTimes) {
  const TemporalGraph fig3 = MakeFixture("fig3").graphs[0];
  const AggregatedGraph agg = ToAggregated(fig3);
  EXPECT_EQ(FromAggregated(agg, fig3.times()), fig3);
  // Without explicit times the edgeless first snapshot cannot be recovered.
  const TemporalGraph derived = FromAggregated(agg);
  EXPECT_EQ(derived.times(), (std::vector<Timestamp>{2, 3, 4}));
  EXPECT_EQ(ToAggregated(derived), agg);
}

TEST(AggregatedTest, SingleEdgeGivesOneSnapshot) {
  AggregatedGraph agg{{"u", "v"}, {"g", "g"}, {{0, 1, 5}}};
  const TemporalGraph tg = FromAggregated(agg);
  ASSERT_EQ(tg.times(), (std::vector<Timestamp>{5}));
  EXPECT_TRUE(tg.HasEdge(0, 0, 1));
}

TEST(AggregatedTest, ErrorsWithoutDerivableTimes) {
  AggregatedGraph agg{{"u"}, {"g"}, {}};
  try {
    FromAggregated(agg);
    FAIL() << "expected EmptyEdgeSet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyEdgeSet);
  }
  AggregatedGraph labelled{{"u", "v"}, {"g", "g"}, {{0, 1, 9}}};
  try {
    FromAggregated(labelled, std::vector<Timestamp>{1, 2});
    FAIL() << "expected UnknownTime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTime);
  }
}

TEST(AggregatedTest, RoundTripIsIdentityOnRandomPersistentGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomGraphOptions o;
    o.seed = seed;
    o.nodes = 2 + seed % 5;
    o.snapshots = 1 + seed % 5;
    o.colour_persistent = true;
    o.uniform_grid = seed % 2 == 0;
    const TemporalGraph tg = RandomTemporalGraph(o);
    EXPECT_EQ(FromAggregated(ToAggregated(tg), tg.times()), tg) << seed;
  }
}

TEST(EventsTest, Fig3Events) {
  const std::vector<EventRecord> events = {
      {"a", "b", 2}, {"b", "c", 3}, {"a", "c", 4}, {"b", "c", 4}};
  const TemporalGraph tg = FromEvents(events, "green");
  EXPECT_EQ(tg.node_ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(tg.times(), (std::vector<Timestamp>{2, 3, 4}));
  EXPECT_TRUE(IsColourPersistent(tg));
  // Same labelled edges as the aggregated form of the fig3 fixture.
  EXPECT_EQ(ToAggregated(tg).edges,
            ToAggregated(MakeFixture("fig3").graphs[0]).edges);
}

TEST(EventsTest, EmptyInputIsAnError) {
  try {
    FromEvents({}, "green");
    FAIL() << "expected EmptyEdgeSet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyEdgeSet);
  }
}

TEST(EventsTest, LargeRandomStreamMatchesRecount) {
  Xorshift64Star rng(2024);
  std::vector<EventRecord> events;
  for (int k = 0; k < 10000; ++k) {
    const auto u = rng.Below(200);
    auto v = rng.Below(199);
    if (v >= u) ++v;
    events.push_back({"v" + std::to_string(u), "v" + std::to_string(v),
                      static_cast<Timestamp>(rng.Below(500))});
  }
  std::set<std::string> nodes;
  std::set<Timestamp> steps;
  std::set<std::tuple<Timestamp, std::string, std::string>> distinct;
  for (const EventRecord& e : events) {
    nodes.insert(e.u);
    nodes.insert(e.v);
    steps.insert(e.t);
    distinct.insert({e.t, std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  const TemporalGraph tg = FromEvents(events, "0");
  EXPECT_EQ(tg.num_nodes(), nodes.size());
  EXPECT_EQ(tg.num_snapshots(), steps.size());
  EXPECT_EQ(tg.num_edges(), distinct.size());
  EXPECT_TRUE(IsColourPersistent(tg));
}

TEST(TemporalGraphTest, NeighboursAndLookups) {
  const TemporalGraph fig2 = MakeFixture("fig2").graphs[0];
  const auto nb = fig2.neighbours(3, 2);  // c at t4
  EXPECT_EQ(std::vector<std::uint32_t>(nb.begin(), nb.end()),
            (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(fig2.HasEdge(1, 1, 0));
  EXPECT_FALSE(fig2.HasEdge(0, 0, 1));
  EXPECT_EQ(fig2.time_index(3), std::optional<std::size_t>(2));
  EXPECT_FALSE(fig2.time_index(5).has_value());
  EXPECT_EQ(fig2.Resolve({"b", 3}), (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_THROW(fig2.Resolve({"z", 0}), Error);
  EXPECT_THROW(fig2.Resolve({"a", 4}), Error);
}

TEST(TemporalGraphTest, TimeShiftKeepsStructure) {
  const TemporalGraph fig2 = MakeFixture("fig2").graphs[0];
  const TemporalGraph shifted = TimeShifted(fig2, 7);
  EXPECT_EQ(shifted.times(), (std::vector<Timestamp>{8, 9, 10, 11}));
  EXPECT_EQ(TimeShifted(shifted, -7), fig2);
}

}  // namespace
}  // namespace tempowl
