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

#ifndef TEMPOWL_ISOMORPHISM_H_
#define TEMPOWL_ISOMORPHISM_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tempowl/temporal_graph.h"

namespace tempowl {

enum class IsoKind { kPointwise, kTimewise };

std::string_view IsoKindName(IsoKind kind);

// Pointwise: one bijection per snapshot. Timewise: a single bijection valid
// for every snapshot. maps[k][v] is the node index in the second graph that
// node index v of the first graph is sent to.
struct IsoWitness {
  IsoKind kind = IsoKind::kPointwise;
  std::vector<std::vector<std::size_t>> maps;
};

// Restricts the search to witnesses relating two timestamped nodes: the
// bijection (for pointwise, the one at first.time_index) must send
// first.node to second.node, and both time indices must agree.
struct IsoAnchor {
  TimestampedNode first;
  TimestampedNode second;
};

struct IsoOptions {
  // Above this many nodes the checkers refuse (kSizeLimitExceeded).
  std::size_t node_bound = 64;
  std::optional<IsoAnchor> anchor;
};

// Requires identical time lists and an isomorphism for each snapshot pair.
std::optional<IsoWitness> PointwiseIso(const TemporalGraph& first,
                                       const TemporalGraph& second,
                                       const IsoOptions& options = {});

// Requires equal snapshot counts, equal consecutive time gaps and one
// bijection that is an isomorphism of every snapshot pair.
std::optional<IsoWitness> TimewiseIso(const TemporalGraph& first,
                                      const TemporalGraph& second,
                                      const IsoOptions& options = {});

// Checks a witness against the definitions directly (and the anchor, when
// given). Shares no code with the search.
bool VerifyWitness(const TemporalGraph& first, const TemporalGraph& second,
                   const IsoWitness& witness,
                   const std::optional<IsoAnchor>& anchor = std::nullopt);

}  // namespace tempowl

#endif  // TEMPOWL_ISOMORPHISM_H_
