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

#include "tempowl/refinement.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace tempowl {
namespace {

// Fixed-width little-endian encoding, so distinct signatures never share a
// byte string and interning is injective.
void AppendU32(std::string& out, std::uint32_t x) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>(x >> (8 * k)));
}

void AppendI64(std::string& out, std::int64_t x) {
  const auto u = static_cast<std::uint64_t>(x);
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>(u >> (8 * k)));
}

class InternTable {
 public:
  ColourId Intern(std::string key) {
    auto [it, inserted] =
        ids_.emplace(std::move(key), static_cast<ColourId>(ids_.size()));
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, ColourId> ids_;
};

std::vector<ColourId> InitialLayer(const KnowledgeGraph& kg) {
  InternTable table;
  std::vector<ColourId> layer(kg.num_nodes());
  for (std::uint32_t v = 0; v < kg.num_nodes(); ++v) {
    layer[v] = table.Intern(kg.colours()[v]);
  }
  return layer;
}

std::vector<ColourId> NextLayer(const KnowledgeGraph& kg,
                                const std::vector<ColourId>& prev,
                                std::size_t* num_classes) {
  InternTable table;
  std::vector<ColourId> next(kg.num_nodes());
  std::vector<std::pair<ColourId, Relation>> multiset;
  std::string key;
  for (std::uint32_t v = 0; v < kg.num_nodes(); ++v) {
    multiset.clear();
    for (const KgEdge& e : kg.InEdges(v)) {
      multiset.emplace_back(prev[e.source], e.relation);
    }
    std::sort(multiset.begin(), multiset.end());
    key.clear();
    AppendU32(key, prev[v]);
    for (const auto& [c, r] : multiset) {
      AppendU32(key, c);
      AppendI64(key, r);
    }
    next[v] = table.Intern(key);
  }
  *num_classes = table.size();
  return next;
}

std::size_t CountClasses(const std::vector<ColourId>& layer) {
  ColourId max_id = 0;
  for (ColourId c : layer) max_id = std::max(max_id, c);
  return layer.empty() ? 0 : max_id + 1;
}

}  // namespace

std::size_t Colouring::Clamp(std::size_t layer) const {
  if (layer < layers_.size()) return layer;
  if (stable_at_) return *stable_at_;
  throw Error(ErrorCode::kLayerNotComputed,
              "layer " + std::to_string(layer) + " not computed (bounded run of " +
                  std::to_string(layers_.size() - 1) + " layers)");
}

ColourId Colouring::ColourAt(std::size_t layer, std::uint32_t node) const {
  const std::size_t l = Clamp(layer);
  if (node >= layers_[l].size()) {
    throw Error(ErrorCode::kUnknownNode, "node index out of range");
  }
  return layers_[l][node];
}

std::span<const ColourId> Colouring::Layer(std::size_t layer) const {
  return layers_[Clamp(layer)];
}

std::size_t Colouring::NumClassesAt(std::size_t layer) const {
  return CountClasses(layers_[Clamp(layer)]);
}

std::vector<std::vector<std::uint32_t>> Colouring::PartitionAt(
    std::size_t layer) const {
  const auto& colours = layers_[Clamp(layer)];
  // Ids are first-encounter ordered, so class k's smallest member precedes
  // class k+1's; grouping by id already yields the canonical order.
  std::vector<std::vector<std::uint32_t>> classes(CountClasses(colours));
  for (std::uint32_t v = 0; v < colours.size(); ++v) {
    classes[colours[v]].push_back(v);
  }
  return classes;
}

std::optional<std::size_t> Colouring::FirstSeparatingLayer(
    std::uint32_t a, std::uint32_t b) const {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l][a] != layers_[l][b]) return l;
  }
  return std::nullopt;
}

Colouring Refine(const KnowledgeGraph& kg,
                 std::optional<std::size_t> max_layers) {
  const std::size_t bound = max_layers.value_or(kg.num_nodes());
  std::vector<std::vector<ColourId>> layers;
  layers.push_back(InitialLayer(kg));
  std::size_t classes = CountClasses(layers.back());
  std::optional<std::size_t> stable_at;
  while (layers.size() <= bound) {
    std::size_t next_classes = 0;
    std::vector<ColourId> next = NextLayer(kg, layers.back(), &next_classes);
    // Refinement is monotone, so an equal class count means an equal
    // partition.
    if (next_classes == classes) {
      stable_at = layers.size() - 1;
      break;
    }
    classes = next_classes;
    layers.push_back(std::move(next));
  }
  if (!stable_at && kg.num_nodes() <= 1) stable_at = layers.size() - 1;
  return Colouring(std::move(layers), stable_at);
}

}  // namespace tempowl
