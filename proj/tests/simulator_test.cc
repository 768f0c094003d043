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

#include "tempowl/simulator.h"

#include <limits>

#include "gtest/gtest.h"
#include "tempowl/error.h"
#include "tempowl/generators.h"
#include "tempowl/knowledge_graph.h"
#include "tempowl/refinement.h"

namespace tempowl {
namespace {

constexpr Variant kVectorVariants[] = {Variant::kSumSign,
                                       Variant::kConcatSumRelu};

ModelConfig Config(Mode mode, Variant variant, std::uint64_t seed,
                   std::size_t layers = 3) {
  ModelConfig c;
  c.mode = mode;
  c.variant = variant;
  c.seed = seed;
  c.layers = layers;
  return c;
}

std::vector<EmbeddingState> Pair(const Fixture& fx, const ModelConfig& c) {
  return ForwardBatch({&fx.graphs[0], &fx.graphs[1]}, c);
}

// Embedding equality on (v, i) pairs must induce exactly the rwl partition.
TEST(SimulatorTest, HashInjectiveRealisesRefinement) {
  std::vector<TemporalGraph> graphs;
  for (const auto& name : FixtureNames()) {
    for (const auto& g : MakeFixture(name).graphs) graphs.push_back(g);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomGraphOptions o;
    o.seed = seed;
    o.nodes = 5;
    o.uniform_grid = seed % 2 == 0;
    graphs.push_back(RandomTemporalGraph(o));
  }
  for (const auto& tg : graphs) {
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      const KnowledgeGraph kg = Encode(tg, EncodingFor(mode));
      const Colouring colouring = Refine(kg);
      const std::size_t layers = kg.num_nodes();
      const EmbeddingState state =
          Forward(tg, Config(mode, Variant::kHashInjective, 0, layers));
      for (std::size_t l = 0; l <= layers; ++l) {
        for (std::uint32_t x = 0; x < kg.num_nodes(); ++x) {
          for (std::uint32_t y = x + 1; y < kg.num_nodes(); ++y) {
            const bool same_colour =
                colouring.ColourAt(l, x) == colouring.ColourAt(l, y);
            ASSERT_EQ(same_colour, EmbeddingEqual(state, kg.nodes()[x].tnode,
                                                  kg.nodes()[y].tnode, l))
                << ModeName(mode) << " layer " << l;
          }
        }
      }
    }
  }
}

TEST(SimulatorTest, HashInjectiveBatchMatchesJointRefinement) {
  for (const char* name : {"fig5_pair", "fig6_pair"}) {
    const Fixture fx = MakeFixture(name);
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      const JointRefinement joint(fx.graphs[0], fx.graphs[1],
                                  EncodingFor(mode));
      const auto states = Pair(fx, Config(mode, Variant::kHashInjective, 0, 4));
      for (std::size_t l = 0; l <= 4; ++l) {
        for (std::size_t v = 0; v < 3; ++v) {
          for (std::size_t w = 0; w < 3; ++w) {
            for (std::size_t i = 0; i < 2; ++i) {
              const bool same = joint.colouring().ColourAt(
                                    l, joint.UnionIndex(0, v, i)) ==
                                joint.colouring().ColourAt(
                                    l, joint.UnionIndex(1, w, i));
              EXPECT_EQ(same, states[0].At(l, v, i) == states[1].At(l, w, i))
                  << name << " " << ModeName(mode) << " layer " << l;
            }
          }
        }
      }
    }
  }
}

TEST(SimulatorTest, EdgelessSumSignIgnoresOtherNodes) {
  TemporalGraphSpec crowd;
  crowd.node_ids = {"x", "y", "z"};
  crowd.times = {1, 5};
  crowd.snapshots = {{{{"x", "red"}, {"y", "blue"}, {"z", "red"}}, {}},
                     {{{"x", "red"}, {"y", "red"}, {"z", "blue"}}, {}}};
  TemporalGraphSpec alone;
  alone.node_ids = {"x"};
  alone.times = {3};
  alone.snapshots = {{{{"x", "red"}}, {}}};
  const TemporalGraph a = TemporalGraph::FromSpec(crowd);
  const TemporalGraph b = TemporalGraph::FromSpec(alone);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      const auto s = ForwardBatch({&a, &b}, Config(mode, Variant::kSumSign, seed));
      for (std::size_t l = 0; l <= 3; ++l) {
        EXPECT_EQ(s[0].At(l, 0, 0), s[1].At(l, 0, 0));
        EXPECT_EQ(s[0].At(l, 2, 0), s[1].At(l, 0, 0));
        EXPECT_EQ(s[0].At(l, 1, 1), s[1].At(l, 0, 0));
        for (std::size_t k = 0; l > 0 && k < s[0].At(l, 0, 0).size(); ++k) {
          const BigInt& h = s[0].At(l, 0, 0)[k];
          EXPECT_TRUE(h == -1 || h == 0 || h == 1);
        }
      }
    }
  }
}

TEST(SimulatorTest, Fig5PairSeparatedBySomeSeedAtLayerOne) {
  const Fixture fx = MakeFixture("fig5_pair");
  for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
    bool separated = false;
    for (std::uint64_t seed = 0; seed < 50 && !separated; ++seed) {
      const auto s = Pair(fx, Config(mode, Variant::kSumSign, seed, 1));
      EXPECT_TRUE(EmbeddingEqual(s[0], {"a", 1}, s[1], {"a'", 1}, 0));
      separated = !EmbeddingEqual(s[0], {"a", 1}, s[1], {"a'", 1}, 1);
    }
    EXPECT_TRUE(separated) << ModeName(mode);
  }
}

TEST(SimulatorTest, Fig6PairGlobalNeverSeparates) {
  const Fixture fx = MakeFixture("fig6_pair");
  for (Variant variant : kVectorVariants) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto s = Pair(fx, Config(Mode::kGlobal, variant, seed, 4));
      for (std::size_t l = 0; l <= 4; ++l) {
        EXPECT_TRUE(EmbeddingEqual(s[0], {"a", 1}, s[1], {"a'", 1}, l))
            << VariantName(variant) << " seed " << seed << " layer " << l;
      }
    }
  }
}

TEST(SimulatorTest, Fig6PairLocalSeparatesForSomeSeed) {
  const Fixture fx = MakeFixture("fig6_pair");
  bool separated = false;
  for (std::uint64_t seed = 0; seed < 50 && !separated; ++seed) {
    const auto s = Pair(fx, Config(Mode::kLocal, Variant::kConcatSumRelu, seed, 2));
    separated = !EmbeddingEqual(s[0], {"a", 1}, s[1], {"a'", 1}, 2);
  }
  EXPECT_TRUE(separated);
}

TEST(SimulatorTest, DeterministicGivenSeed) {
  RandomGraphOptions o;
  o.seed = 3;
  o.nodes = 6;
  const TemporalGraph tg = RandomTemporalGraph(o);
  for (Variant variant : kVectorVariants) {
    const ModelConfig c = Config(Mode::kLocal, variant, 42);
    const EmbeddingState a = Forward(tg, c);
    const EmbeddingState b = Forward(tg, c);
    for (std::size_t l = 0; l < a.num_layers(); ++l) {
      for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
        for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
          EXPECT_EQ(a.At(l, v, i), b.At(l, v, i));
        }
      }
    }
  }
}

TEST(SimulatorTest, ConcatValuesExceedMachineWords) {
  RandomGraphOptions o;
  o.seed = 11;
  o.nodes = 6;
  o.edge_prob = 0.8;
  const TemporalGraph tg = RandomTemporalGraph(o);
  const EmbeddingState s =
      Forward(tg, Config(Mode::kGlobal, Variant::kConcatSumRelu, 1, 12));
  BigInt largest = 0;
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    for (const BigInt& x : s.At(12, v, 0)) {
      largest = std::max(largest, BigInt(abs(x)));
    }
  }
  EXPECT_GT(largest, BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(SimulatorTest, RejectsBadConfigAndLayers) {
  const TemporalGraph tg = MakeFixture("fig2").graphs[0];
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  ModelConfig c;
  c.width = 0;
  EXPECT_EQ(code_of([&] { Forward(tg, c); }), ErrorCode::kConfigMismatch);
  c.width = 4;
  c.weight_bound = 0;
  EXPECT_EQ(code_of([&] { Forward(tg, c); }), ErrorCode::kConfigMismatch);
  c.weight_bound = 3;
  c.layers = 2;
  const EmbeddingState s = Forward(tg, c);
  EXPECT_EQ(s.num_layers(), 3u);
  EXPECT_EQ(code_of([&] { s.At(3, 0, 0); }), ErrorCode::kLayerNotComputed);
  EXPECT_EQ(code_of([&] { EmbeddingEqual(s, {"a", 0}, {"b", 0}, 5); }),
            ErrorCode::kLayerNotComputed);
  EXPECT_EQ(code_of([&] { s.At(0, {"q", 0}); }), ErrorCode::kUnknownNode);
  EXPECT_TRUE(EmbeddingEqual(s, {"c", 2}, {"c", 2}, 2));
}

}  // namespace
}  // namespace tempowl
