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

#ifndef TEMPOWL_GENERATORS_H_
#define TEMPOWL_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempowl/temporal_graph.h"

namespace tempowl {

// A named fixture: one graph, or two for the *_pair fixtures.
struct Fixture {
  std::string name;
  std::vector<TemporalGraph> graphs;
};

// fig2, fig3, fig5_pair, fig6_pair.
Fixture MakeFixture(std::string_view name);
const std::vector<std::string>& FixtureNames();

struct RandomGraphOptions {
  std::uint64_t seed = 0;
  std::size_t nodes = 4;
  std::size_t snapshots = 3;
  double edge_prob = 0.3;
  std::size_t palette = 2;
  bool colour_persistent = false;
  // Times 1..n when set; otherwise strictly increasing with random gaps.
  bool uniform_grid = true;
  std::int64_t max_gap = 3;
};

// Nodes n0, n1, ...; colours c0, c1, ...; Erdos-Renyi edges per snapshot.
TemporalGraph RandomTemporalGraph(const RandomGraphOptions& options);

// Relabels node index v as perm[v] in every snapshot. Node ids keep their
// positions, so the output lists the same ids in the same order.
TemporalGraph PermuteNodes(const TemporalGraph& tg,
                           const std::vector<std::size_t>& perm);

// Uniformly random permutation of [0, n).
std::vector<std::size_t> RandomPermutation(std::size_t n, std::uint64_t seed);

struct PermutedCopy {
  TemporalGraph graph;
  std::vector<std::size_t> perm;
};

// One node bijection applied to every snapshot: timewise isomorphic to the
// input by construction.
PermutedCopy MakePermutedCopy(const TemporalGraph& tg, std::uint64_t seed);

// An independent bijection per snapshot: pointwise isomorphic, usually not
// timewise isomorphic. With colour_preserving set, each bijection only
// moves nodes within their colour class of that snapshot, so the colour
// tables are unchanged (and colour persistence is kept).
TemporalGraph PerSnapshotPermutedCopy(const TemporalGraph& tg,
                                      std::uint64_t seed,
                                      bool colour_preserving = false);

}  // namespace tempowl

#endif  // TEMPOWL_GENERATORS_H_
