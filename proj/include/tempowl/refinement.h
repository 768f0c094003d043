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

#ifndef TEMPOWL_REFINEMENT_H_
#define TEMPOWL_REFINEMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tempowl/knowledge_graph.h"

namespace tempowl {

using ColourId = std::uint32_t;

// Per-layer colour history of relational 1-WL. Colour ids are dense per
// layer and assigned in first-encounter order over the node sweep, so two
// runs on the same graph are bit-identical.
class Colouring {
 public:
  Colouring(std::vector<std::vector<ColourId>> layers,
            std::optional<std::size_t> stable_at)
      : layers_(std::move(layers)), stable_at_(stable_at) {}

  // Layers 0..num_layers()-1 are stored. When stable_at() is set it equals
  // num_layers() - 1 and every later layer has the same partition.
  std::size_t num_layers() const { return layers_.size(); }
  std::optional<std::size_t> stable_at() const { return stable_at_; }
  std::size_t num_nodes() const {
    return layers_.empty() ? 0 : layers_[0].size();
  }

  // Throws kLayerNotComputed past a bounded run.
  ColourId ColourAt(std::size_t layer, std::uint32_t node) const;
  std::span<const ColourId> Layer(std::size_t layer) const;
  std::size_t NumClassesAt(std::size_t layer) const;

  // Disjoint classes covering every node, each ascending, classes ordered
  // by smallest member.
  std::vector<std::vector<std::uint32_t>> PartitionAt(std::size_t layer) const;

  // Least layer at which the two nodes get different colours; nullopt when
  // they agree on every computed layer (for a stabilised run, on every
  // layer at all).
  std::optional<std::size_t> FirstSeparatingLayer(std::uint32_t a,
                                                  std::uint32_t b) const;

 private:
  std::size_t Clamp(std::size_t layer) const;

  std::vector<std::vector<ColourId>> layers_;
  std::optional<std::size_t> stable_at_;
};

// Runs colour refinement until the partition stops splitting or
// `max_layers` layers past the initial colouring have been computed.
// Default bound is |nodes|, which always reaches stabilisation.
Colouring Refine(const KnowledgeGraph& kg,
                 std::optional<std::size_t> max_layers = std::nullopt);

}  // namespace tempowl

#endif  // TEMPOWL_REFINEMENT_H_
