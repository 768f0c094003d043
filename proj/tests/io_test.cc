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

#include <functional>

#include "gtest/gtest.h"
#include "json.hpp"
#include "tempowl/error.h"
#include "tempowl/generators.h"

namespace tempowl {
namespace {

using nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(IoTest, GraphJsonRoundTrip) {
  for (const auto& name : FixtureNames()) {
    for (const auto& g : MakeFixture(name).graphs) {
      EXPECT_TRUE(TemporalGraphFromJson(TemporalGraphToJson(g)) == g) << name;
    }
  }
  RandomGraphOptions o;
  o.uniform_grid = false;
  o.nodes = 7;
  const TemporalGraph tg = RandomTemporalGraph(o);
  EXPECT_TRUE(TemporalGraphFromJson(TemporalGraphToJson(tg)) == tg);
}

TEST(IoTest, CanonicalLayout) {
  const json j = json::parse(TemporalGraphToJson(MakeFixture("fig5_pair").graphs[0]));
  EXPECT_EQ(j["nodes"], json({"a", "b", "c"}));
  EXPECT_EQ(j["times"], json({1, 2}));
  EXPECT_EQ(j["snapshots"][0]["colours"]["b"], "green");
  EXPECT_EQ(j["snapshots"][0]["edges"], json::parse(R"([["a","b"]])"));
}

TEST(IoTest, SpecIsNotValidated) {
  const TemporalGraphSpec spec = SpecFromJson(
      R"({"nodes":["a"],"times":[2,1],"snapshots":[{"colours":{},"edges":[["a","a"]]}]})");
  EXPECT_EQ(spec.times, (std::vector<Timestamp>{2, 1}));
  EXPECT_TRUE(Validate(spec).has_value());
  EXPECT_EQ(CodeOf([&] { TemporalGraph::FromSpec(spec); }),
            ErrorCode::kNonIncreasingTimes);
}

TEST(IoTest, NonStringColoursKeepTheirText) {
  const TemporalGraph tg = TemporalGraphFromJson(
      R"({"nodes":["a"],"times":[1],"snapshots":[{"colours":{"a":7},"edges":[]}]})");
  EXPECT_EQ(tg.colour(0, 0), "7");
}

TEST(IoTest, MalformedJsonIsAParseError) {
  for (const char* text :
       {"", "{", "[]", R"({"nodes":"a","times":[],"snapshots":[]})",
        R"({"nodes":["a"],"times":[1.5],"snapshots":[]})",
        R"({"nodes":["a"],"times":[1],"snapshots":[{"colours":{},"edges":[["a"]]}]})"}) {
    EXPECT_EQ(CodeOf([&] { SpecFromJson(text); }), ErrorCode::kParseError)
        << text;
  }
}

TEST(IoTest, EventsCsv) {
  const auto events = ParseEventsCsv("u,v,t\na,b,2\nb,c,3\na,c,4\nb,c,4\n");
  ASSERT_EQ(events.size(), 4u);
  EXPECT_EQ(events[2].u, "a");
  EXPECT_EQ(events[2].t, 4);
  const EventStats s = ComputeEventStats(events);
  EXPECT_EQ(s.nodes, 3u);
  EXPECT_EQ(s.edges, 4u);
  EXPECT_EQ(s.steps, 3u);
  EXPECT_EQ(json::parse(EventStatsToJson(s)),
            json::parse(R"({"nodes":3,"edges":4,"steps":3})"));
  EXPECT_TRUE(ParseEventsCsv("u,v,t\n").empty());
}

TEST(IoTest, EventsCsvErrorsNameTheLine) {
  try {
    ParseEventsCsv("u,v,t\na,b,1\na,b\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
  EXPECT_EQ(CodeOf([] { ParseEventsCsv("x,y,z\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseEventsCsv("u,v,t\na,b,soon\n"); }),
            ErrorCode::kParseError);
}

TEST(IoTest, NodeAddresses) {
  const TemporalGraph tg = MakeFixture("fig2").graphs[0];
  EXPECT_EQ(ParseNodeAddress(tg, "b@4"), (TimestampedNode{"b", 3}));
  EXPECT_EQ(ParseNodeAddress(tg, "b#0"), (TimestampedNode{"b", 0}));
  EXPECT_EQ(FormatNodeAddress(tg, 1, 3), "b@4");
  EXPECT_EQ(CodeOf([&] { ParseNodeAddress(tg, "b"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { ParseNodeAddress(tg, "b@x"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { ParseNodeAddress(tg, "q@1"); }),
            ErrorCode::kUnknownNode);
  EXPECT_EQ(CodeOf([&] { ParseNodeAddress(tg, "b@9"); }),
            ErrorCode::kUnknownTime);
  EXPECT_EQ(CodeOf([&] { ParseNodeAddress(tg, "b#4"); }),
            ErrorCode::kUnknownTime);
  // The last separator wins, so ids may contain '@'.
  TemporalGraphSpec spec;
  spec.node_ids = {"x@y"};
  spec.times = {5};
  spec.snapshots = {{{{"x@y", "red"}}, {}}};
  EXPECT_EQ(ParseNodeAddress(TemporalGraph::FromSpec(spec), "x@y@5"),
            (TimestampedNode{"x@y", 0}));
}

TEST(IoTest, VerdictJson) {
  Verdict g{true, 1, Mode::kGlobal};
  Verdict l{false, std::nullopt, Mode::kLocal};
  const json single = json::parse(VerdictToJson(g));
  EXPECT_EQ(single["distinguishable"], true);
  EXPECT_EQ(single["first_layer"], 1);
  const json both = json::parse(VerdictPairToJson(g, l));
  EXPECT_EQ(both["class"], "global_only");
  EXPECT_EQ(both["local"]["distinguishable"], false);
  EXPECT_TRUE(both["local"]["first_layer"].is_null());
}

TEST(IoTest, ColouringJsonListsClasses) {
  const TemporalGraph tg = MakeFixture("fig3").graphs[0];
  const KnowledgeGraph kg = GlobalEncoding(tg);
  const json j = json::parse(ColouringToJson(kg, Refine(kg)));
  ASSERT_TRUE(j["stable_at"].is_number());
  const json& layer0 = j["layers"][0];
  EXPECT_EQ(layer0["layer"], 0);
  std::size_t members = 0;
  for (const auto& cls : layer0["classes"]) members += cls.size();
  EXPECT_EQ(members, 12u);
  EXPECT_EQ(layer0["classes"].size(), 2u);  // blue, green
}

TEST(IoTest, KnowledgeGraphJson) {
  const KnowledgeGraph kg = LocalEncoding(MakeFixture("fig5_pair").graphs[0]);
  const json j = json::parse(KnowledgeGraphToJson(kg));
  EXPECT_EQ(j["nodes"].size(), 6u);
  EXPECT_EQ(j["colours"]["a#0"], "green");
  EXPECT_EQ(j["edges"].size(), kg.edges().size());
}

TEST(IoTest, ClassMatrixCsvHeader) {
  const Fixture fx = MakeFixture("fig6_pair");
  const std::string csv = ClassMatrixToCsv(ClassifyAll(fx.graphs[0], fx.graphs[1]),
                                           fx.graphs[0], fx.graphs[1]);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "node,a'@1,a'@2,b'@1,b'@2,c'@1,c'@2");
  EXPECT_NE(csv.find("\na@2,"), std::string::npos);
  EXPECT_NE(csv.find("local_only"), std::string::npos);
}

TEST(IoTest, IsoJsonUsesIds) {
  const Fixture fx = MakeFixture("fig5_pair");
  const json yes = json::parse(IsoResultToJson(
      IsoKind::kPointwise, PointwiseIso(fx.graphs[0], fx.graphs[1]),
      fx.graphs[0], fx.graphs[1]));
  EXPECT_EQ(yes["isomorphic"], true);
  EXPECT_EQ(yes["kind"], "pointwise");
  EXPECT_EQ(yes["maps"][0]["a"], "b'");
  EXPECT_EQ(yes["maps"][1]["a"], "a'");
  const json no = json::parse(IsoResultToJson(IsoKind::kTimewise, std::nullopt,
                                              fx.graphs[0], fx.graphs[1]));
  EXPECT_EQ(no["isomorphic"], false);
}

TEST(IoTest, LargeEmbeddingsBecomeStrings) {
  RandomGraphOptions o;
  o.seed = 11;
  o.nodes = 6;
  o.edge_prob = 0.8;
  const TemporalGraph tg = RandomTemporalGraph(o);
  ModelConfig cfg;
  cfg.variant = Variant::kConcatSumRelu;
  cfg.layers = 12;
  cfg.seed = 1;
  const EmbeddingState state = Forward(tg, cfg);
  const json j = json::parse(EmbeddingsToJson(state, tg, cfg));
  EXPECT_EQ(j["variant"], "concat_sum_relu");
  ASSERT_EQ(j["embeddings"].size(), 13u);
  std::size_t strings = 0;
  std::size_t numbers = 0;
  for (std::size_t l : {0u, 12u}) {
    const json& values = j["embeddings"][l]["embeddings"];
    for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
      const Embedding& h = state.At(l, v, 0);
      const json& row = values[FormatNodeAddress(tg, v, 0)];
      ASSERT_EQ(row.size(), h.size());
      for (std::size_t k = 0; k < h.size(); ++k) {
        if (row[k].is_string()) {
          ++strings;
          EXPECT_EQ(BigInt(row[k].get<std::string>()), h[k]);
        } else {
          ++numbers;
          EXPECT_EQ(BigInt(row[k].get<std::int64_t>()), h[k]);
        }
      }
    }
  }
  EXPECT_GT(strings, 0u);
  EXPECT_GT(numbers, 0u);
}

TEST(IoTest, FuzzReportJson) {
  FuzzReport r;
  r.property = Property::kLemma1;
  r.trials = 10;
  r.base_seed = 3;
  r.violations = 1;
  r.min_failing_seed = 5;
  r.counters["pairs"] = 2;
  const json j = json::parse(FuzzReportToJson(r));
  EXPECT_EQ(j["property"], "lemma1");
  EXPECT_EQ(j["violations"], 1);
  EXPECT_EQ(j["min_failing_seed"], 5);
}

}  // namespace
}  // namespace tempowl
