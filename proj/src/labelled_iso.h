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

#ifndef TEMPOWL_SRC_LABELLED_ISO_H_
#define TEMPOWL_SRC_LABELLED_ISO_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tempowl::internal {

// Undirected graph whose nodes carry an opaque key and whose node pairs
// carry a set of edge labels (empty set = no edge).
struct LabelledGraph {
  explicit LabelledGraph(std::size_t n)
      : node_keys(n), labels(n * n) {}

  std::size_t size() const { return node_keys.size(); }
  const std::vector<std::uint32_t>& LabelsOf(std::size_t u,
                                             std::size_t v) const {
    return labels[u * size() + v];
  }
  // Labels must be added in ascending order per pair.
  void AddLabel(std::size_t u, std::size_t v, std::uint32_t label) {
    labels[u * size() + v].push_back(label);
    labels[v * size() + u].push_back(label);
  }

  std::vector<std::string> node_keys;
  std::vector<std::vector<std::uint32_t>> labels;
};

// Exact search: colour-refinement classes restrict candidates, then
// backtracking checks every mapped pair. Returns mapping[v] = image of v.
std::optional<std::vector<std::size_t>> FindIsomorphism(
    const LabelledGraph& first, const LabelledGraph& second);

}  // namespace tempowl::internal

#endif  // TEMPOWL_SRC_LABELLED_ISO_H_
