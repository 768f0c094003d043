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

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "tempowl/knowledge_graph.h"
#include "tempowl/prng.h"

namespace tempowl {
namespace {

constexpr std::int64_t kEncodingRange = 1024;

using Matrix = std::vector<std::vector<std::int64_t>>;

struct LayerWeights {
  Matrix w;   // sum_sign: d x d; concat_sum_relu: W1, d x (d + 1)
  Matrix w2;  // concat_sum_relu only: d x 2d
};

Matrix RandomMatrix(Xorshift64Star& rng, std::size_t rows, std::size_t cols,
                    std::int64_t bound) {
  Matrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = rng.Between(-bound, bound);
  }
  return m;
}

// Nonzero alpha in [-bound, bound], a pure function of (seed, layer, dt).
std::int64_t Alpha(std::uint64_t seed, std::size_t layer, Timestamp dt,
                   std::int64_t bound) {
  const std::uint64_t h = SplitMix64(
      SplitMix64(seed ^ 0xA1FA) ^ SplitMix64(layer) ^
      SplitMix64(static_cast<std::uint64_t>(dt) + 0x5EED));
  const auto span = static_cast<std::uint64_t>(2 * bound);
  const auto pick = static_cast<std::int64_t>(h % span);
  return pick < bound ? pick - bound : pick - bound + 1;
}

// Colour token -> fixed integer vector; independent of the graph and seed.
Embedding EncodeColour(const Colour& colour, std::size_t width) {
  const std::uint64_t base = Fnv1a64(colour.data(), colour.size());
  Embedding out(width);
  for (std::size_t k = 0; k < width; ++k) {
    const std::uint64_t h = SplitMix64(base + 0x9E3779B97F4A7C15ULL * k);
    out[k] = static_cast<std::int64_t>(h % (2 * kEncodingRange + 1)) -
             kEncodingRange;
  }
  return out;
}

Embedding MatVec(const Matrix& m, const Embedding& x) {
  Embedding out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (m[r][c] != 0) acc += m[r][c] * x[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

struct GraphWork {
  const TemporalGraph* tg;
  // nbrs[v * n + i] = (u, j) pairs of the temporal neighbourhood.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> nbrs;
  std::vector<std::vector<Embedding>> layers;
};

struct Summand {
  const Embedding* msg;
  Timestamp dt;
};

class Model {
 public:
  explicit Model(const ModelConfig& config) : config_(config) {
    if (config.width == 0) {
      throw Error(ErrorCode::kConfigMismatch, "width must be positive");
    }
    if (config.weight_bound < 1) {
      throw Error(ErrorCode::kConfigMismatch, "weight_bound must be >= 1");
    }
    const std::size_t d = config.width;
    Xorshift64Star rng(config.seed);
    weights_.resize(config.layers + 1);
    for (std::size_t l = 1; l <= config.layers; ++l) {
      switch (config.variant) {
        case Variant::kSumSign:
          weights_[l].w = RandomMatrix(rng, d, d, config.weight_bound);
          break;
        case Variant::kConcatSumRelu:
          weights_[l].w = RandomMatrix(rng, d, d + 1, config.weight_bound);
          weights_[l].w2 = RandomMatrix(rng, d, 2 * d, config.weight_bound);
          break;
        case Variant::kHashInjective:
          break;
      }
    }
  }

  Embedding Initial(const Colour& colour) {
    if (config_.variant == Variant::kHashInjective) {
      const auto id = colour_ids_.emplace(colour, colour_ids_.size())
                          .first->second;
      return Embedding{BigInt(id)};
    }
    return EncodeColour(colour, config_.width);
  }

  Embedding Step(std::size_t layer, const Embedding& prev,
                 std::vector<Summand>& summands) {
    std::sort(summands.begin(), summands.end(),
              [](const Summand& a, const Summand& b) {
                if (*a.msg != *b.msg) return *a.msg < *b.msg;
                return a.dt < b.dt;
              });
    switch (config_.variant) {
      case Variant::kSumSign:
        return SumSign(layer, prev, summands);
      case Variant::kConcatSumRelu:
        return ConcatSumRelu(layer, prev, summands);
      case Variant::kHashInjective:
        return Hash(layer, prev, summands);
    }
    throw Error(ErrorCode::kInternal, "unknown variant");
  }

 private:
  Embedding SumSign(std::size_t layer, const Embedding& prev,
                    const std::vector<Summand>& summands) const {
    Embedding acc = prev;
    for (const Summand& s : summands) {
      const std::int64_t a =
          Alpha(config_.seed, layer, s.dt, config_.weight_bound);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += a * (*s.msg)[k];
    }
    Embedding out = MatVec(weights_[layer].w, acc);
    for (BigInt& x : out) {
      x -= 1;
      x = x.sign();
    }
    return out;
  }

  Embedding ConcatSumRelu(std::size_t layer, const Embedding& prev,
                          const std::vector<Summand>& summands) const {
    const std::size_t d = config_.width;
    Embedding agg(d + 1);
    for (const Summand& s : summands) {
      for (std::size_t k = 0; k < d; ++k) agg[k] += (*s.msg)[k];
      agg[d] += s.dt;
    }
    Embedding hidden = MatVec(weights_[layer].w, agg);
    Embedding joined = prev;
    for (BigInt& x : hidden) joined.push_back(x.sign() > 0 ? x : BigInt(0));
    return MatVec(weights_[layer].w2, joined);
  }

  Embedding Hash(std::size_t layer, const Embedding& prev,
                 const std::vector<Summand>& summands) {
    std::vector<std::int64_t> key;
    key.reserve(1 + 2 * summands.size());
    key.push_back(static_cast<std::int64_t>(prev[0]));
    for (const Summand& s : summands) {
      key.push_back(static_cast<std::int64_t>((*s.msg)[0]));
      key.push_back(s.dt);
    }
    if (layer_ids_.size() <= layer) layer_ids_.resize(layer + 1);
    auto& table = layer_ids_[layer];
    const auto id = table.emplace(std::move(key), table.size()).first->second;
    return Embedding{BigInt(id)};
  }

  ModelConfig config_;
  std::vector<LayerWeights> weights_;
  std::map<Colour, std::size_t> colour_ids_;
  std::vector<std::map<std::vector<std::int64_t>, std::size_t>> layer_ids_;
};

}  // namespace

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kSumSign:
      return "sum_sign";
    case Variant::kConcatSumRelu:
      return "concat_sum_relu";
    case Variant::kHashInjective:
      return "hash_injective";
  }
  return "unknown";
}

EmbeddingState::EmbeddingState(std::vector<std::string> node_ids,
                               std::size_t num_times,
                               std::vector<std::vector<Embedding>> layers)
    : node_ids_(std::move(node_ids)),
      num_times_(num_times),
      layers_(std::move(layers)) {
  for (std::size_t v = 0; v < node_ids_.size(); ++v) index_of_[node_ids_[v]] = v;
}

const Embedding& EmbeddingState::At(std::size_t layer, std::size_t v,
                                    std::size_t i) const {
  if (layer >= layers_.size()) {
    throw Error(ErrorCode::kLayerNotComputed,
                "layer " + std::to_string(layer) + " not computed (have " +
                    std::to_string(layers_.size()) + ")");
  }
  if (v >= node_ids_.size() || i >= num_times_) {
    throw Error(ErrorCode::kUnknownNode, "timestamped node out of range");
  }
  return layers_[layer][v * num_times_ + i];
}

const Embedding& EmbeddingState::At(std::size_t layer,
                                    const TimestampedNode& node) const {
  auto it = index_of_.find(node.node);
  if (it == index_of_.end()) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + node.node + "'");
  }
  return At(layer, it->second, node.time_index);
}

std::vector<EmbeddingState> ForwardBatch(
    const std::vector<const TemporalGraph*>& graphs,
    const ModelConfig& config) {
  Model model(config);
  std::vector<GraphWork> work;
  work.reserve(graphs.size());
  for (const TemporalGraph* tg : graphs) {
    GraphWork w{tg, {}, {}};
    const std::size_t n = tg->num_snapshots();
    w.nbrs.resize(tg->num_timestamped_nodes());
    w.layers.assign(config.layers + 1,
                    std::vector<Embedding>(tg->num_timestamped_nodes()));
    for (std::size_t v = 0; v < tg->num_nodes(); ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        w.nbrs[v * n + i] = TemporalNeighbourhood(*tg, v, i);
        w.layers[0][v * n + i] = model.Initial(tg->colour(i, v));
      }
    }
    work.push_back(std::move(w));
  }

  std::vector<Summand> summands;
  for (std::size_t l = 1; l <= config.layers; ++l) {
    for (GraphWork& w : work) {
      const TemporalGraph& tg = *w.tg;
      const std::size_t n = tg.num_snapshots();
      const auto& prev = w.layers[l - 1];
      for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
        for (std::size_t i = 0; i < n; ++i) {
          summands.clear();
          for (auto [u, j] : w.nbrs[v * n + i]) {
            const std::size_t source =
                config.mode == Mode::kGlobal ? u * n + j : u * n + i;
            summands.push_back({&prev[source], tg.times()[i] - tg.times()[j]});
          }
          w.layers[l][v * n + i] = model.Step(l, prev[v * n + i], summands);
        }
      }
    }
  }

  std::vector<EmbeddingState> out;
  out.reserve(work.size());
  for (GraphWork& w : work) {
    out.emplace_back(w.tg->node_ids(), w.tg->num_snapshots(),
                     std::move(w.layers));
  }
  return out;
}

EmbeddingState Forward(const TemporalGraph& tg, const ModelConfig& config) {
  return std::move(ForwardBatch({&tg}, config).front());
}

bool EmbeddingEqual(const EmbeddingState& state, const TimestampedNode& a,
                    const TimestampedNode& b, std::size_t layer) {
  return state.At(layer, a) == state.At(layer, b);
}

bool EmbeddingEqual(const EmbeddingState& first, const TimestampedNode& a,
                    const EmbeddingState& second, const TimestampedNode& b,
                    std::size_t layer) {
  return first.At(layer, a) == second.At(layer, b);
}

}  // namespace tempowl
