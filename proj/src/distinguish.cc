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

#include "tempowl/distinguish.h"

namespace tempowl {

std::string_view ModeName(Mode mode) {
  return mode == Mode::kGlobal ? "global" : "local";
}

Encoding EncodingFor(Mode mode) {
  return mode == Mode::kGlobal ? Encoding::kGlobal : Encoding::kLocal;
}

std::string_view PairClassName(PairClass c) {
  switch (c) {
    case PairClass::kBoth: return "both";
    case PairClass::kGlobalOnly: return "global_only";
    case PairClass::kLocalOnly: return "local_only";
    case PairClass::kNeither: return "neither";
  }
  return "neither";
}

PairClass Combine(bool global_distinguishes, bool local_distinguishes) {
  if (global_distinguishes && local_distinguishes) return PairClass::kBoth;
  if (global_distinguishes) return PairClass::kGlobalOnly;
  if (local_distinguishes) return PairClass::kLocalOnly;
  return PairClass::kNeither;
}

JointRefinement::JointRefinement(const TemporalGraph& first,
                                 const TemporalGraph& second,
                                 Encoding encoding,
                                 std::optional<std::size_t> max_layers)
    : union_(DisjointUnion(Encode(first, encoding, 0),
                           Encode(second, encoding, 0))),
      colouring_(Refine(union_.graph, max_layers)) {
  const TemporalGraph* graphs[2] = {&first, &second};
  // DisjointUnion shifts the second graph's origin past the first's; an
  // empty first graph means no shift.
  const int origins[2] = {0, first.num_timestamped_nodes() > 0 ? 1 : 0};
  for (int side = 0; side < 2; ++side) {
    const TemporalGraph& tg = *graphs[side];
    num_times_[side] = tg.num_snapshots();
    lookup_[side].resize(tg.num_timestamped_nodes());
    for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
      for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
        lookup_[side][v * tg.num_snapshots() + i] =
            union_.graph.IndexOf({origins[side], {tg.node_id(v), i}});
      }
    }
  }
}

std::uint32_t JointRefinement::UnionIndex(int side, std::size_t node,
                                          std::size_t time_index) const {
  return lookup_[side][node * num_times_[side] + time_index];
}

std::optional<std::size_t> JointRefinement::FirstSeparatingLayer(
    std::size_t node1, std::size_t time1, std::size_t node2,
    std::size_t time2) const {
  return colouring_.FirstSeparatingLayer(UnionIndex(0, node1, time1),
                                         UnionIndex(1, node2, time2));
}

Verdict Distinguish(const TemporalGraph& first, const TimestampedNode& node1,
                    const TemporalGraph& second, const TimestampedNode& node2,
                    Mode mode, std::optional<std::size_t> max_layers) {
  auto [v1, i1] = first.Resolve(node1);
  auto [v2, i2] = second.Resolve(node2);
  JointRefinement joint(first, second, EncodingFor(mode), max_layers);
  Verdict verdict;
  verdict.mode = mode;
  verdict.first_layer = joint.FirstSeparatingLayer(v1, i1, v2, i2);
  verdict.distinguishable = verdict.first_layer.has_value();
  return verdict;
}

PairClass ClassifyPair(const TemporalGraph& first, const TimestampedNode& node1,
                       const TemporalGraph& second,
                       const TimestampedNode& node2) {
  const Verdict g = Distinguish(first, node1, second, node2, Mode::kGlobal);
  const Verdict l = Distinguish(first, node1, second, node2, Mode::kLocal);
  return Combine(g.distinguishable, l.distinguishable);
}

ClassMatrix ClassifyAll(const TemporalGraph& first,
                        const TemporalGraph& second) {
  const JointRefinement global(first, second, Encoding::kGlobal);
  const JointRefinement local(first, second, Encoding::kLocal);
  ClassMatrix m;
  for (std::size_t v = 0; v < first.num_nodes(); ++v) {
    for (std::size_t i = 0; i < first.num_snapshots(); ++i) {
      m.rows.push_back({first.node_id(v), i});
    }
  }
  for (std::size_t u = 0; u < second.num_nodes(); ++u) {
    for (std::size_t j = 0; j < second.num_snapshots(); ++j) {
      m.columns.push_back({second.node_id(u), j});
    }
  }
  const std::size_t cells = m.rows.size() * m.columns.size();
  m.classes.reserve(cells);
  m.global_first_layer.reserve(cells);
  m.local_first_layer.reserve(cells);
  auto narrow = [](std::optional<std::size_t> x) {
    return x ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(*x))
             : std::nullopt;
  };
  for (std::size_t v = 0; v < first.num_nodes(); ++v) {
    for (std::size_t i = 0; i < first.num_snapshots(); ++i) {
      for (std::size_t u = 0; u < second.num_nodes(); ++u) {
        for (std::size_t j = 0; j < second.num_snapshots(); ++j) {
          auto g = global.FirstSeparatingLayer(v, i, u, j);
          auto l = local.FirstSeparatingLayer(v, i, u, j);
          const PairClass c = Combine(g.has_value(), l.has_value());
          m.classes.push_back(c);
          m.global_first_layer.push_back(narrow(g));
          m.local_first_layer.push_back(narrow(l));
          ++m.counts[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return m;
}

}  // namespace tempowl
