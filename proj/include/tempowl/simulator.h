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

#ifndef TEMPOWL_SIMULATOR_H_
#define TEMPOWL_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tempowl/distinguish.h"
#include "tempowl/temporal_graph.h"

namespace tempowl {

using BigInt = boost::multiprecision::cpp_int;
using Embedding = std::vector<BigInt>;

enum class Variant { kSumSign, kConcatSumRelu, kHashInjective };

std::string_view VariantName(Variant variant);

// Message-passing TGNN with integer weights. Global mode passes the
// neighbour's embedding at its own edge time t'; local mode passes the
// neighbour's embedding at the current time t. The time encoding is the
// identity on the time difference t - t'.
//
//   sum_sign:        h = sign(W (h_prev + sum alpha(dt) msg) - 1)
//   concat_sum_relu: h = W2 [h_prev || max(0, W1 sum (msg || dt))]
//   hash_injective:  h = intern(h_prev, {{(msg, dt)}})
struct ModelConfig {
  Mode mode = Mode::kGlobal;
  std::size_t layers = 2;
  std::size_t width = 8;
  Variant variant = Variant::kSumSign;
  std::uint64_t seed = 0;
  std::int64_t weight_bound = 3;
};

class EmbeddingState {
 public:
  EmbeddingState(std::vector<std::string> node_ids, std::size_t num_times,
                 std::vector<std::vector<Embedding>> layers);

  std::size_t num_layers() const { return layers_.size(); }
  std::size_t num_times() const { return num_times_; }
  const std::vector<std::string>& node_ids() const { return node_ids_; }

  // Embedding of node index v at time index i in layer l.
  const Embedding& At(std::size_t layer, std::size_t v, std::size_t i) const;
  const Embedding& At(std::size_t layer, const TimestampedNode& node) const;

 private:
  std::vector<std::string> node_ids_;
  std::size_t num_times_;
  std::unordered_map<std::string, std::size_t> index_of_;
  std::vector<std::vector<Embedding>> layers_;  // [layer][v * n + i]
};

EmbeddingState Forward(const TemporalGraph& tg, const ModelConfig& config);

// Runs one model over several graphs. Weights, the colour encoding and (for
// hash_injective) the intern tables are shared, so embeddings of different
// graphs are comparable.
std::vector<EmbeddingState> ForwardBatch(
    const std::vector<const TemporalGraph*>& graphs, const ModelConfig& config);

bool EmbeddingEqual(const EmbeddingState& state, const TimestampedNode& a,
                    const TimestampedNode& b, std::size_t layer);
bool EmbeddingEqual(const EmbeddingState& first, const TimestampedNode& a,
                    const EmbeddingState& second, const TimestampedNode& b,
                    std::size_t layer);

}  // namespace tempowl

#endif  // TEMPOWL_SIMULATOR_H_
