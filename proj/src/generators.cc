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

#include "tempowl/generators.h"

#include <algorithm>
#include <numeric>

#include "tempowl/prng.h"

namespace tempowl {
namespace {

SnapshotSpec Snapshot(std::map<std::string, Colour> colours,
                      std::vector<std::pair<std::string, std::string>> edges) {
  return SnapshotSpec{std::move(colours), std::move(edges)};
}

TemporalGraph Fig2() {
  TemporalGraphSpec spec;
  spec.node_ids = {"a", "b", "c"};
  spec.times = {1, 2, 3, 4};
  spec.snapshots = {
      Snapshot({{"a", "blue"}, {"b", "green"}, {"c", "red"}}, {}),
      Snapshot({{"a", "green"}, {"b", "green"}, {"c", "red"}}, {{"a", "b"}}),
      Snapshot({{"a", "green"}, {"b", "green"}, {"c", "green"}}, {{"b", "c"}}),
      Snapshot({{"a", "blue"}, {"b", "green"}, {"c", "green"}},
               {{"a", "c"}, {"b", "c"}}),
  };
  return TemporalGraph::FromSpec(spec);
}

TemporalGraph Fig3() {
  const std::map<std::string, Colour> colours = {
      {"a", "blue"}, {"b", "green"}, {"c", "green"}};
  TemporalGraphSpec spec;
  spec.node_ids = {"a", "b", "c"};
  spec.times = {1, 2, 3, 4};
  spec.snapshots = {
      Snapshot(colours, {}),
      Snapshot(colours, {{"a", "b"}}),
      Snapshot(colours, {{"b", "c"}}),
      Snapshot(colours, {{"a", "c"}, {"b", "c"}}),
  };
  return TemporalGraph::FromSpec(spec);
}

// All-green graph over {a,b,c} + suffix, with edges given per time index.
TemporalGraph Green(const std::string& suffix, std::vector<Timestamp> times,
                    const std::vector<std::vector<std::pair<char, char>>>&
                        edges_per_snapshot) {
  TemporalGraphSpec spec;
  for (char c : {'a', 'b', 'c'}) spec.node_ids.push_back(c + suffix);
  spec.times = std::move(times);
  for (const auto& edges : edges_per_snapshot) {
    SnapshotSpec s;
    for (const auto& id : spec.node_ids) s.colours[id] = "green";
    for (auto [u, v] : edges) s.edges.emplace_back(u + suffix, v + suffix);
    spec.snapshots.push_back(std::move(s));
  }
  return TemporalGraph::FromSpec(spec);
}

// Reuses the relative order of `shuffle` inside each colour class, giving a
// random colour-preserving bijection.
std::vector<std::size_t> WithinClasses(const std::vector<Colour>& colours,
                                       const std::vector<std::size_t>& shuffle) {
  std::map<Colour, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < colours.size(); ++v) {
    members[colours[v]].push_back(v);
  }
  std::vector<std::size_t> perm(colours.size());
  for (const auto& [colour, vs] : members) {
    std::vector<std::size_t> targets = vs;
    std::sort(targets.begin(), targets.end(), [&](std::size_t x, std::size_t y) {
      return shuffle[x] < shuffle[y];
    });
    for (std::size_t k = 0; k < vs.size(); ++k) perm[vs[k]] = targets[k];
  }
  return perm;
}

}  // namespace

const std::vector<std::string>& FixtureNames() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig5_pair",
                                                 "fig6_pair"};
  return names;
}

Fixture MakeFixture(std::string_view name) {
  if (name == "fig2") return {"fig2", {Fig2()}};
  if (name == "fig3") return {"fig3", {Fig3()}};
  if (name == "fig5_pair") {
    return {"fig5_pair",
            {Green("", {1, 2}, {{{'a', 'b'}}, {}}),
             Green("'", {1, 2}, {{{'b', 'c'}}, {}})}};
  }
  if (name == "fig6_pair") {
    return {"fig6_pair",
            {Green("", {1, 2}, {{{'a', 'b'}}, {{'b', 'c'}}}),
             Green("'", {1, 2}, {{{'a', 'b'}}, {}})}};
  }
  throw Error(ErrorCode::kUnknownFixture,
              "unknown fixture '" + std::string(name) + "'");
}

TemporalGraph RandomTemporalGraph(const RandomGraphOptions& options) {
  if (options.nodes == 0 || options.snapshots == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "nodes and snapshots must be positive");
  }
  if (!(options.edge_prob >= 0.0 && options.edge_prob <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge_prob must lie in [0, 1]");
  }
  if (options.palette == 0) {
    throw Error(ErrorCode::kInvalidArgument, "palette must be positive");
  }
  Xorshift64Star rng(options.seed);
  const std::size_t n = options.snapshots;

  std::vector<std::string> ids;
  for (std::size_t v = 0; v < options.nodes; ++v) {
    ids.push_back("n" + std::to_string(v));
  }
  std::vector<Timestamp> times(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (options.uniform_grid) {
      times[i] = static_cast<Timestamp>(i + 1);
    } else {
      const Timestamp gap = rng.Between(1, std::max<std::int64_t>(1, options.max_gap));
      times[i] = (i == 0 ? 0 : times[i - 1]) + gap;
    }
  }
  auto draw_colour = [&] {
    return "c" + std::to_string(rng.Below(options.palette));
  };
  std::vector<std::vector<Colour>> colours(n, std::vector<Colour>(options.nodes));
  if (options.colour_persistent) {
    for (std::size_t v = 0; v < options.nodes; ++v) {
      const Colour c = draw_colour();
      for (std::size_t i = 0; i < n; ++i) colours[i][v] = c;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t v = 0; v < options.nodes; ++v) colours[i][v] = draw_colour();
    }
  }
  std::vector<std::vector<IndexEdge>> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t u = 0; u < options.nodes; ++u) {
      for (std::uint32_t v = u + 1; v < options.nodes; ++v) {
        if (rng.Chance(options.edge_prob)) edges[i].push_back({u, v});
      }
    }
  }
  return TemporalGraph::FromIndexed(std::move(ids), std::move(times),
                                    std::move(colours), std::move(edges));
}

std::vector<std::size_t> RandomPermutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Xorshift64Star rng(seed);
  for (std::size_t k = n; k > 1; --k) {
    std::swap(perm[k - 1], perm[rng.Below(k)]);
  }
  return perm;
}

TemporalGraph PermuteNodes(const TemporalGraph& tg,
                           const std::vector<std::size_t>& perm) {
  const std::size_t nodes = tg.num_nodes();
  if (perm.size() != nodes) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<std::vector<Colour>> colours(tg.num_snapshots(),
                                           std::vector<Colour>(nodes));
  std::vector<std::vector<IndexEdge>> edges(tg.num_snapshots());
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    for (std::size_t v = 0; v < nodes; ++v) colours[i][perm[v]] = tg.colour(i, v);
    for (const IndexEdge& e : tg.edges(i)) {
      auto a = static_cast<std::uint32_t>(perm[e.first]);
      auto b = static_cast<std::uint32_t>(perm[e.second]);
      edges[i].push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return TemporalGraph::FromIndexed(tg.node_ids(), tg.times(),
                                    std::move(colours), std::move(edges));
}

PermutedCopy MakePermutedCopy(const TemporalGraph& tg, std::uint64_t seed) {
  auto perm = RandomPermutation(tg.num_nodes(), seed);
  return {PermuteNodes(tg, perm), std::move(perm)};
}

TemporalGraph PerSnapshotPermutedCopy(const TemporalGraph& tg,
                                      std::uint64_t seed,
                                      bool colour_preserving) {
  const std::size_t nodes = tg.num_nodes();
  std::vector<std::vector<Colour>> colours(tg.num_snapshots(),
                                           std::vector<Colour>(nodes));
  std::vector<std::vector<IndexEdge>> edges(tg.num_snapshots());
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    auto perm = RandomPermutation(nodes, SplitMix64(seed + i));
    if (colour_preserving) perm = WithinClasses(tg.colours(i), perm);
    for (std::size_t v = 0; v < nodes; ++v) colours[i][perm[v]] = tg.colour(i, v);
    for (const IndexEdge& e : tg.edges(i)) {
      auto a = static_cast<std::uint32_t>(perm[e.first]);
      auto b = static_cast<std::uint32_t>(perm[e.second]);
      edges[i].push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return TemporalGraph::FromIndexed(tg.node_ids(), tg.times(),
                                    std::move(colours), std::move(edges));
}

}  // namespace tempowl
