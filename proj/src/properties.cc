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

#include "tempowl/properties.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>
#include <unordered_map>

#include "tempowl/generators.h"
#include "tempowl/isomorphism.h"
#include "tempowl/knowledge_graph.h"
#include "tempowl/prng.h"

namespace tempowl {
namespace {

constexpr Property kAll[] = {
    Property::kTheorem5,     Property::kTheorem6,  Property::kTheorem7,
    Property::kTheorem8,     Property::kTheorem9,  Property::kLemma1,
    Property::kSoundness,    Property::kCompleteness,
    Property::kStabilisation,
};

std::string Describe(const TemporalGraph& tg, std::size_t v, std::size_t i) {
  return "(" + tg.node_id(v) + ",t=" + std::to_string(tg.times()[i]) + ")";
}

// All graphs encoded into one KG; graph k gets origin k.
KnowledgeGraph JointEncoding(const std::vector<const TemporalGraph*>& graphs,
                             Encoding encoding) {
  std::vector<KgNode> nodes;
  std::vector<Colour> colours;
  std::vector<KgEdge> edges;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const KnowledgeGraph kg =
        Encode(*graphs[k], encoding, static_cast<int>(k));
    const auto offset = static_cast<std::uint32_t>(nodes.size());
    nodes.insert(nodes.end(), kg.nodes().begin(), kg.nodes().end());
    colours.insert(colours.end(), kg.colours().begin(), kg.colours().end());
    for (KgEdge e : kg.edges()) {
      e.source += offset;
      e.target += offset;
      edges.push_back(e);
    }
  }
  return KnowledgeGraph(std::move(nodes), std::move(colours), std::move(edges));
}

struct Located {
  std::size_t graph;
  std::size_t v;
  std::size_t i;
};

// For each KG node of the joint encoding, where it lives.
std::vector<Located> Locate(const KnowledgeGraph& kg,
                            const std::vector<const TemporalGraph*>& graphs) {
  std::vector<Located> out(kg.num_nodes());
  for (std::size_t x = 0; x < kg.num_nodes(); ++x) {
    const KgNode& node = kg.node(static_cast<std::uint32_t>(x));
    const auto k = static_cast<std::size_t>(node.origin);
    out[x] = {k, graphs[k]->NodeIndexOrThrow(node.tnode.node),
              node.tnode.time_index};
  }
  return out;
}

RandomGraphOptions DrawOptions(Xorshift64Star& rng, std::size_t max_nodes,
                               std::size_t max_snapshots) {
  RandomGraphOptions o;
  o.seed = rng.Next();
  o.nodes = static_cast<std::size_t>(rng.Between(1, static_cast<std::int64_t>(max_nodes)));
  o.snapshots = static_cast<std::size_t>(
      rng.Between(1, static_cast<std::int64_t>(max_snapshots)));
  o.edge_prob = 0.15 + 0.1 * static_cast<double>(rng.Below(5));
  o.palette = static_cast<std::size_t>(rng.Between(1, 3));
  o.colour_persistent = rng.Chance(0.5);
  o.uniform_grid = rng.Chance(0.5);
  o.max_gap = 3;
  return o;
}

// ---------------------------------------------------------------------------
// Trials.

TrialResult Fail(std::string detail) {
  TrialResult r;
  r.ok = false;
  r.detail = std::move(detail);
  return r;
}

std::optional<std::string> CheckVerdictPair(const TemporalGraph& a,
                                            const TimestampedNode& na,
                                            const TemporalGraph& b,
                                            const TimestampedNode& nb,
                                            PairClass expected,
                                            std::optional<std::size_t> glob,
                                            std::optional<std::size_t> loc) {
  const Verdict g = DistinguishableGlobal(a, na, b, nb);
  const Verdict l = DistinguishableLocal(a, na, b, nb);
  const PairClass c = Combine(g.distinguishable, l.distinguishable);
  if (c != expected || g.first_layer != glob || l.first_layer != loc) {
    return "fixture regression: got " + std::string(PairClassName(c)) +
           " for (" + na.node + "#" + std::to_string(na.time_index) + ")";
  }
  return std::nullopt;
}

// Matrix entries agree with per-pair calls; swapping the arguments
// transposes the matrix.
std::optional<std::string> CheckMatrixConsistency(const TemporalGraph& a,
                                                  const TemporalGraph& b,
                                                  Xorshift64Star& rng,
                                                  TrialResult& result) {
  const ClassMatrix m = ClassifyAll(a, b);
  const ClassMatrix t = ClassifyAll(b, a);
  const std::size_t rows = m.rows.size();
  const std::size_t cols = m.columns.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.at(r, c) != t.at(c, r)) {
        return "classification not symmetric at " + m.rows[r].node + "/" +
               m.columns[c].node;
      }
    }
  }
  for (int sample = 0; sample < 4 && rows > 0 && cols > 0; ++sample) {
    const std::size_t r = rng.Below(rows);
    const std::size_t c = rng.Below(cols);
    if (ClassifyPair(a, m.rows[r], b, m.columns[c]) != m.at(r, c)) {
      return "matrix disagrees with classify_pair at " + m.rows[r].node +
             "/" + m.columns[c].node;
    }
  }
  result.counters["global_only"] += m.counts[1];
  result.counters["local_only"] += m.counts[2];
  result.counters["both"] += m.counts[0];
  result.counters["neither"] += m.counts[3];
  return std::nullopt;
}

TrialResult Theorem5Trial(std::uint64_t seed) {
  TrialResult result;
  const Fixture fx = MakeFixture("fig5_pair");
  const TemporalGraph& a = fx.graphs[0];
  const TemporalGraph& b = fx.graphs[1];
  auto witness = PointwiseIso(a, b);
  if (!witness || !VerifyWitness(a, b, *witness)) {
    return Fail("fig5_pair is not pointwise isomorphic");
  }
  if (auto bad = CheckVerdictPair(a, {"a", 1}, b, {"a'", 1}, PairClass::kBoth,
                                  1, 1)) {
    return Fail(*bad);
  }

  Xorshift64Star rng(seed);
  const TemporalGraph tg = RandomTemporalGraph(DrawOptions(rng, 6, 4));
  const TemporalGraph copy = PerSnapshotPermutedCopy(tg, rng.Next());
  auto w = PointwiseIso(tg, copy);
  if (!w) return Fail("per-snapshot permuted copy has no pointwise witness");
  if (!VerifyWitness(tg, copy, *w)) return Fail("pointwise witness rejected");
  const ClassMatrix m = ClassifyAll(tg, copy);
  const std::size_t n = tg.num_snapshots();
  std::uint64_t separated = 0;
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.at(v * n + i, w->maps[i][v] * n + i) != PairClass::kNeither) {
        ++separated;
      }
    }
  }
  result.counters["witness_pairs_separated"] += separated;
  result.counters["trials_with_separation"] += separated > 0 ? 1 : 0;
  return result;
}

TrialResult Theorem6Trial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  const TemporalGraph tg = RandomTemporalGraph(DrawOptions(rng, 6, 4));
  PermutedCopy pc = MakePermutedCopy(tg, rng.Next());
  TemporalGraph copy = pc.graph;
  if (rng.Chance(0.5)) {
    copy = TimeShifted(copy, rng.Between(-5, 10));
    result.counters["time_shifted"] += 1;
  }
  const std::size_t n = tg.num_snapshots();

  auto witness = TimewiseIso(tg, copy);
  if (!witness || !VerifyWitness(tg, copy, *witness)) {
    return Fail("permuted copy not recognised as timewise isomorphic");
  }

  const ClassMatrix m = ClassifyAll(tg, copy);
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      const PairClass c = m.at(v * n + i, pc.perm[v] * n + i);
      if (c != PairClass::kNeither) {
        return Fail("corresponding pair " + Describe(tg, v, i) +
                    " classified " + std::string(PairClassName(c)));
      }
    }
  }

  for (int s = 0; s < 5; ++s) {
    ModelConfig cfg;
    cfg.layers = 3;
    cfg.width = 4;
    cfg.seed = rng.Next();
    cfg.variant = s % 2 == 0 ? Variant::kSumSign : Variant::kConcatSumRelu;
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      cfg.mode = mode;
      const auto states = ForwardBatch({&tg, &copy}, cfg);
      for (std::size_t l = 0; l <= cfg.layers; ++l) {
        for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
          for (std::size_t i = 0; i < n; ++i) {
            if (states[0].At(l, v, i) != states[1].At(l, pc.perm[v], i)) {
              return Fail("embeddings differ for " + Describe(tg, v, i) +
                          " at layer " + std::to_string(l) + ", " +
                          std::string(ModeName(mode)) + " " +
                          std::string(VariantName(cfg.variant)) +
                          " model seed " + std::to_string(cfg.seed));
            }
          }
        }
      }
      result.counters["forward_pairs"] += 1;
    }
  }
  return result;
}

TrialResult Theorem7Trial(std::uint64_t seed) {
  TrialResult result;
  const TemporalGraph fig2 = MakeFixture("fig2").graphs[0];
  const TemporalGraph fig3 = MakeFixture("fig3").graphs[0];
  if (auto bad = CheckVerdictPair(fig2, {"b", 3}, fig3, {"b", 3},
                                  PairClass::kGlobalOnly, 1, std::nullopt)) {
    return Fail(*bad);
  }
  Xorshift64Star rng(seed);
  RandomGraphOptions o = DrawOptions(rng, 5, 4);
  o.colour_persistent = false;
  const TemporalGraph a = RandomTemporalGraph(o);
  o.seed = rng.Next();
  const TemporalGraph b = RandomTemporalGraph(o);
  if (auto bad = CheckMatrixConsistency(a, b, rng, result)) return Fail(*bad);
  return result;
}

TrialResult Theorem8Trial(std::uint64_t seed) {
  TrialResult result;
  const Fixture fx = MakeFixture("fig6_pair");
  if (auto bad = CheckVerdictPair(fx.graphs[0], {"a", 1}, fx.graphs[1],
                                  {"a'", 1}, PairClass::kLocalOnly,
                                  std::nullopt, 2)) {
    return Fail(*bad);
  }
  Xorshift64Star rng(seed);
  RandomGraphOptions o = DrawOptions(rng, 5, 4);
  const TemporalGraph a = RandomTemporalGraph(o);
  o.seed = rng.Next();
  const TemporalGraph b = RandomTemporalGraph(o);
  if (auto bad = CheckMatrixConsistency(a, b, rng, result)) return Fail(*bad);
  return result;
}

// Flips one random node pair in one random snapshot.
TemporalGraph ToggleEdge(const TemporalGraph& tg, Xorshift64Star& rng) {
  if (tg.num_nodes() < 2) return tg;
  std::vector<std::vector<Colour>> colours;
  std::vector<std::vector<IndexEdge>> edges;
  for (std::size_t i = 0; i < tg.num_snapshots(); ++i) {
    colours.push_back(tg.colours(i));
    edges.emplace_back(tg.edges(i).begin(), tg.edges(i).end());
  }
  const std::size_t i = rng.Below(tg.num_snapshots());
  auto u = static_cast<std::uint32_t>(rng.Below(tg.num_nodes()));
  auto v = static_cast<std::uint32_t>(rng.Below(tg.num_nodes() - 1));
  if (v >= u) ++v;
  const IndexEdge e{std::min(u, v), std::max(u, v)};
  auto it = std::find(edges[i].begin(), edges[i].end(), e);
  if (it == edges[i].end()) {
    edges[i].push_back(e);
  } else {
    edges[i].erase(it);
  }
  return TemporalGraph::FromIndexed(tg.node_ids(), tg.times(),
                                    std::move(colours), std::move(edges));
}

TrialResult Theorem9Trial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  RandomGraphOptions o = DrawOptions(rng, 8, 5);
  o.colour_persistent = true;
  const TemporalGraph a = RandomTemporalGraph(o);
  TemporalGraph b = a;
  switch (rng.Below(3)) {
    case 0:
      o = DrawOptions(rng, 8, 5);
      o.colour_persistent = true;
      b = RandomTemporalGraph(o);
      break;
    case 1:
      b = PerSnapshotPermutedCopy(a, rng.Next(), true);
      break;
    default:
      b = ToggleEdge(a, rng);
      break;
  }
  if (!IsColourPersistent(a) || !IsColourPersistent(b)) {
    return Fail("generator produced a non-persistent pair");
  }
  if (auto bad = CheckGlobalImpliesLocal(a, b)) return Fail(*bad);
  const ClassMatrix m = ClassifyAll(a, b);
  result.counters["pairs"] += m.classes.size();
  result.counters["both"] += m.counts[0];
  result.counters["local_only"] += m.counts[2];
  return result;
}

TrialResult Lemma1Trial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  RandomGraphOptions o = DrawOptions(rng, 6, 5);
  o.colour_persistent = true;
  o.uniform_grid = true;
  const TemporalGraph tg = RandomTemporalGraph(o);
  std::uint64_t shifted = 0;
  if (auto bad = CheckShiftProperty(tg, &shifted)) return Fail(*bad);
  result.counters["shifted_pairs"] += shifted;
  return result;
}

TrialResult SoundnessTrial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  const TemporalGraph tg = RandomTemporalGraph(DrawOptions(rng, 6, 4));
  for (int s = 0; s < 10; ++s) {
    ModelConfig cfg;
    cfg.layers = 3;
    cfg.width = 4;
    cfg.seed = rng.Next();
    cfg.variant = s % 2 == 0 ? Variant::kSumSign : Variant::kConcatSumRelu;
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      cfg.mode = mode;
      if (auto bad = CheckSoundness({&tg}, cfg)) return Fail(*bad);
      result.counters["models"] += 1;
    }
  }
  return result;
}

TrialResult CompletenessTrial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  const TemporalGraph a = RandomTemporalGraph(DrawOptions(rng, 6, 4));
  const TemporalGraph b = RandomTemporalGraph(DrawOptions(rng, 6, 4));
  const std::size_t layers =
      a.num_timestamped_nodes() + b.num_timestamped_nodes();
  for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
    if (auto bad = CheckCompleteness({&a}, mode, layers)) return Fail(*bad);
    if (auto bad = CheckCompleteness({&a, &b}, mode, layers)) return Fail(*bad);
  }
  result.counters["timestamped_nodes"] += layers;
  return result;
}

TrialResult StabilisationTrial(std::uint64_t seed) {
  TrialResult result;
  Xorshift64Star rng(seed);
  const TemporalGraph tg = RandomTemporalGraph(DrawOptions(rng, 8, 5));
  for (Encoding e : {Encoding::kGlobal, Encoding::kLocal}) {
    const KnowledgeGraph kg = Encode(tg, e);
    if (auto bad = CheckRefinementInvariants(kg)) return Fail(*bad);
    result.counters["refinements"] += 1;
  }
  return result;
}

}  // namespace

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kTheorem5:
      return "theorem5";
    case Property::kTheorem6:
      return "theorem6";
    case Property::kTheorem7:
      return "theorem7";
    case Property::kTheorem8:
      return "theorem8";
    case Property::kTheorem9:
      return "theorem9";
    case Property::kLemma1:
      return "lemma1";
    case Property::kSoundness:
      return "soundness";
    case Property::kCompleteness:
      return "completeness";
    case Property::kStabilisation:
      return "stabilisation";
  }
  return "unknown";
}

std::optional<Property> ParseProperty(std::string_view name) {
  for (Property p : kAll) {
    if (PropertyName(p) == name) return p;
  }
  return std::nullopt;
}

const std::vector<Property>& AllProperties() {
  static const std::vector<Property> all(std::begin(kAll), std::end(kAll));
  return all;
}

TrialResult RunTrial(Property p, std::uint64_t seed) {
  try {
    switch (p) {
      case Property::kTheorem5:
        return Theorem5Trial(seed);
      case Property::kTheorem6:
        return Theorem6Trial(seed);
      case Property::kTheorem7:
        return Theorem7Trial(seed);
      case Property::kTheorem8:
        return Theorem8Trial(seed);
      case Property::kTheorem9:
        return Theorem9Trial(seed);
      case Property::kLemma1:
        return Lemma1Trial(seed);
      case Property::kSoundness:
        return SoundnessTrial(seed);
      case Property::kCompleteness:
        return CompletenessTrial(seed);
      case Property::kStabilisation:
        return StabilisationTrial(seed);
    }
  } catch (const std::exception& e) {
    return Fail(std::string("exception: ") + e.what());
  }
  return Fail("unknown property");
}

std::size_t DefaultThreadCount() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TEMPOWL_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return n;
}

FuzzReport RunFuzz(Property p, std::uint64_t trials, std::uint64_t base_seed,
                   std::size_t threads) {
  const auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = DefaultThreadCount();
  threads = std::max<std::size_t>(
      1, std::min<std::size_t>(threads, static_cast<std::size_t>(trials)));

  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t k = next++; k < trials; k = next++) {
      results[static_cast<std::size_t>(k)] = RunTrial(p, base_seed + k);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  FuzzReport report;
  report.property = p;
  report.trials = trials;
  report.base_seed = base_seed;
  for (std::uint64_t k = 0; k < trials; ++k) {
    TrialResult& r = results[static_cast<std::size_t>(k)];
    for (const auto& [name, count] : r.counters) report.counters[name] += count;
    if (!r.ok) {
      if (report.violations++ == 0) {
        report.min_failing_seed = base_seed + k;
        report.failure_detail = std::move(r.detail);
      }
    }
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::optional<std::string> CheckShiftProperty(const TemporalGraph& tg,
                                              std::uint64_t* shifted_pairs) {
  const KnowledgeGraph kg = LocalEncoding(tg);
  const Colouring col = Refine(kg);
  const std::size_t n = tg.num_snapshots();
  const auto& times = tg.times();
  const std::size_t total = tg.num_timestamped_nodes();
  std::vector<std::uint32_t> index(total);
  for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      index[v * n + i] = kg.IndexOf({0, {tg.node_id(v), i}});
    }
  }
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = x + 1; y < total; ++y) {
      const auto sep = col.FirstSeparatingLayer(index[x], index[y]);
      if (!sep) continue;
      const std::size_t v = x / n, i = x % n;
      const std::size_t u = y / n, j = y % n;
      const Timestamp horizon = times.back() - std::min(times[i], times[j]);
      for (Timestamp k = 1; k <= horizon; ++k) {
        const auto ik = tg.time_index(times[i] + k);
        const auto jk = tg.time_index(times[j] + k);
        if (!ik || !jk) continue;
        if (shifted_pairs != nullptr) ++*shifted_pairs;
        const auto shifted = col.FirstSeparatingLayer(
            index[v * n + *ik], index[u * n + *jk]);
        if (!shifted || *shifted > *sep) {
          return Describe(tg, v, i) + "/" + Describe(tg, u, j) +
                 " differ at layer " + std::to_string(*sep) +
                 " but the pair shifted by " + std::to_string(k) +
                 " does not";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckSoundness(
    const std::vector<const TemporalGraph*>& graphs,
    const ModelConfig& config) {
  const KnowledgeGraph kg = JointEncoding(graphs, EncodingFor(config.mode));
  const Colouring col = Refine(kg, config.layers);
  const auto where = Locate(kg, graphs);
  const auto states = ForwardBatch(graphs, config);
  for (std::size_t l = 0; l <= config.layers; ++l) {
    std::unordered_map<ColourId, std::size_t> representative;
    for (std::size_t x = 0; x < kg.num_nodes(); ++x) {
      const ColourId c = col.ColourAt(l, static_cast<std::uint32_t>(x));
      auto [it, fresh] = representative.emplace(c, x);
      if (fresh) continue;
      const Located& p = where[it->second];
      const Located& q = where[x];
      if (states[p.graph].At(l, p.v, p.i) != states[q.graph].At(l, q.v, q.i)) {
        return "rwl-equal " + Describe(*graphs[p.graph], p.v, p.i) + "/" +
               Describe(*graphs[q.graph], q.v, q.i) +
               " have different embeddings at layer " + std::to_string(l) +
               " (" + std::string(ModeName(config.mode)) + ", " +
               std::string(VariantName(config.variant)) + ", model seed " +
               std::to_string(config.seed) + ")";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckCompleteness(
    const std::vector<const TemporalGraph*>& graphs, Mode mode,
    std::size_t layers) {
  const KnowledgeGraph kg = JointEncoding(graphs, EncodingFor(mode));
  const Colouring col = Refine(kg, layers);
  const auto where = Locate(kg, graphs);
  ModelConfig cfg;
  cfg.mode = mode;
  cfg.layers = layers;
  cfg.variant = Variant::kHashInjective;
  const auto states = ForwardBatch(graphs, cfg);
  for (std::size_t l = 0; l <= layers; ++l) {
    std::unordered_map<ColourId, BigInt> forward;
    std::map<BigInt, ColourId> backward;
    for (std::size_t x = 0; x < kg.num_nodes(); ++x) {
      const ColourId c = col.ColourAt(l, static_cast<std::uint32_t>(x));
      const Located& p = where[x];
      const BigInt& h = states[p.graph].At(l, p.v, p.i)[0];
      auto [f, f_new] = forward.emplace(c, h);
      auto [b, b_new] = backward.emplace(h, c);
      if (f->second != h || b->second != c) {
        return "partitions differ at layer " + std::to_string(l) + " (" +
               std::string(ModeName(mode)) + ") at " +
               Describe(*graphs[p.graph], p.v, p.i);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckRefinementInvariants(const KnowledgeGraph& kg) {
  const Colouring col = Refine(kg);
  if (!col.stable_at()) return "refinement did not stabilise";
  if (*col.stable_at() > kg.num_nodes()) {
    return "stable_at " + std::to_string(*col.stable_at()) + " exceeds " +
           std::to_string(kg.num_nodes()) + " nodes";
  }
  if (kg.num_nodes() == 0) return std::nullopt;
  // Layer 0 is exactly the initial colour partition.
  std::map<Colour, ColourId> by_colour;
  std::map<ColourId, Colour> by_id;
  for (std::uint32_t x = 0; x < kg.num_nodes(); ++x) {
    const ColourId c = col.ColourAt(0, x);
    auto [f, f_new] = by_colour.emplace(kg.colours()[x], c);
    auto [b, b_new] = by_id.emplace(c, kg.colours()[x]);
    if (f->second != c || b->second != kg.colours()[x]) {
      return "layer 0 does not match the initial colours";
    }
  }
  for (std::size_t l = 1; l < col.num_layers(); ++l) {
    std::unordered_map<ColourId, ColourId> parent;
    for (std::uint32_t x = 0; x < kg.num_nodes(); ++x) {
      auto [it, fresh] =
          parent.emplace(col.ColourAt(l, x), col.ColourAt(l - 1, x));
      if (it->second != col.ColourAt(l - 1, x)) {
        return "layer " + std::to_string(l) + " merges classes of layer " +
               std::to_string(l - 1);
      }
    }
    if (col.NumClassesAt(l) < col.NumClassesAt(l - 1)) {
      return "class count decreased at layer " + std::to_string(l);
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckGlobalImpliesLocal(
    const TemporalGraph& first, const TemporalGraph& second) {
  const ClassMatrix m = ClassifyAll(first, second);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      const std::size_t cell = r * m.columns.size() + c;
      const auto& g = m.global_first_layer[cell];
      const auto& l = m.local_first_layer[cell];
      if (g && (!l || *l > *g)) {
        return "pair " + m.rows[r].node + "#" +
               std::to_string(m.rows[r].time_index) + "/" +
               m.columns[c].node + "#" +
               std::to_string(m.columns[c].time_index) +
               " separated by global at layer " + std::to_string(*g) +
               (l ? " but by local only at layer " + std::to_string(*l)
                  : " but never by local");
      }
    }
  }
  return std::nullopt;
}

}  // namespace tempowl
