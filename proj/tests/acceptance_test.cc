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

// Acceptance suite. Prints one PASS/FAIL line per criterion, with its time
// limit, and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rwl_oracle.h"
#include "tempowl/distinguish.h"
#include "tempowl/generators.h"
#include "tempowl/isomorphism.h"
#include "tempowl/knowledge_graph.h"
#include "tempowl/prng.h"
#include "tempowl/properties.h"
#include "tempowl/refinement.h"

namespace tempowl {
namespace {

// A criterion returns an empty string on success, otherwise the reason.
struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> run;
};

std::string Expect(bool ok, const std::string& what) {
  return ok ? "" : what;
}

std::string FuzzClean(Property p, std::uint64_t trials) {
  const FuzzReport r = RunFuzz(p, trials, 1);
  std::ostringstream os;
  if (r.trials != trials) os << "ran " << r.trials << " trials; ";
  if (r.violations > 0) {
    os << r.violations << " violations, min seed " << *r.min_failing_seed
       << ": " << r.failure_detail;
  }
  return os.str();
}

std::string Criterion1() {
  const TemporalGraph a = MakeFixture("fig2").graphs[0];
  const TemporalGraph b = MakeFixture("fig3").graphs[0];
  const TimestampedNode b4{"b", 3};
  const Verdict g = DistinguishableGlobal(a, b4, b, b4);
  const Verdict l = DistinguishableLocal(a, b4, b, b4);
  std::string why;
  why += Expect(ClassifyPair(a, b4, b, b4) == PairClass::kGlobalOnly,
                "class is not global_only; ");
  why += Expect(g.distinguishable && g.first_layer == 1u,
                "global first_layer is not 1; ");
  why += Expect(!l.distinguishable, "local distinguishes; ");
  return why;
}

std::string Criterion2() {
  const Fixture fx = MakeFixture("fig6_pair");
  const TimestampedNode a{"a", 1};
  const TimestampedNode a_prime{"a'", 1};
  const Verdict g = DistinguishableGlobal(fx.graphs[0], a, fx.graphs[1], a_prime);
  const Verdict l = DistinguishableLocal(fx.graphs[0], a, fx.graphs[1], a_prime);
  std::string why;
  why += Expect(ClassifyPair(fx.graphs[0], a, fx.graphs[1], a_prime) ==
                    PairClass::kLocalOnly,
                "class is not local_only; ");
  why += Expect(l.distinguishable && l.first_layer == 2u,
                "local first_layer is not 2; ");
  why += Expect(!g.distinguishable, "global distinguishes; ");
  return why;
}

std::string Criterion3() {
  const Fixture fx = MakeFixture("fig5_pair");
  const auto w = PointwiseIso(fx.graphs[0], fx.graphs[1]);
  const TimestampedNode a{"a", 1};
  const TimestampedNode a_prime{"a'", 1};
  const Verdict g = DistinguishableGlobal(fx.graphs[0], a, fx.graphs[1], a_prime);
  const Verdict l = DistinguishableLocal(fx.graphs[0], a, fx.graphs[1], a_prime);
  std::string why;
  why += Expect(w.has_value(), "no pointwise witness; ");
  if (w) {
    why += Expect(w->maps[0] == std::vector<std::size_t>{1, 2, 0},
                  "first bijection is not a->b', b->c', c->a'; ");
    why += Expect(VerifyWitness(fx.graphs[0], fx.graphs[1], *w),
                  "witness fails verification; ");
  }
  why += Expect(ClassifyPair(fx.graphs[0], a, fx.graphs[1], a_prime) ==
                    PairClass::kBoth,
                "class is not both; ");
  why += Expect(g.first_layer == 1u, "global first_layer is not 1; ");
  why += Expect(l.first_layer == 1u, "local first_layer is not 1; ");
  return why;
}

std::string Criterion8() {
  std::vector<const TemporalGraph*> all;
  std::vector<Fixture> fixtures;
  for (const auto& name : FixtureNames()) fixtures.push_back(MakeFixture(name));
  for (const Fixture& fx : fixtures) {
    std::vector<const TemporalGraph*> graphs;
    for (const auto& g : fx.graphs) graphs.push_back(&g);
    std::size_t total = 0;
    for (const auto* g : graphs) total += g->num_timestamped_nodes();
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      if (auto bad = CheckCompleteness(graphs, mode, total)) {
        return fx.name + ": " + *bad;
      }
      for (const auto* g : graphs) {
        if (auto bad = CheckCompleteness({g}, mode, total)) {
          return fx.name + ": " + *bad;
        }
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Xorshift64Star rng(seed);
    RandomGraphOptions o;
    o.seed = seed;
    o.nodes = 1 + rng.Below(7);
    o.snapshots = 1 + rng.Below(4);
    o.palette = 1 + rng.Below(3);
    o.edge_prob = 0.1 + 0.1 * static_cast<double>(rng.Below(5));
    o.colour_persistent = rng.Chance(0.5);
    o.uniform_grid = rng.Chance(0.5);
    const TemporalGraph tg = RandomTemporalGraph(o);
    for (Mode mode : {Mode::kGlobal, Mode::kLocal}) {
      if (auto bad = CheckCompleteness({&tg}, mode, tg.num_timestamped_nodes())) {
        return "random seed " + std::to_string(seed) + ": " + *bad;
      }
    }
  }
  return "";
}

// KGs with at most 12 nodes: encodings of small temporal graphs and raw
// random multi-relational graphs.
std::vector<KnowledgeGraph> OracleCorpus() {
  std::vector<KnowledgeGraph> out;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Xorshift64Star rng(seed ^ 0xACCE55);
    RandomGraphOptions o;
    o.seed = seed;
    o.snapshots = 1 + rng.Below(4);
    o.nodes = 1 + rng.Below(12 / o.snapshots);
    o.palette = 1 + rng.Below(3);
    o.edge_prob = 0.2 + 0.1 * static_cast<double>(rng.Below(5));
    o.uniform_grid = rng.Chance(0.5);
    const TemporalGraph tg = RandomTemporalGraph(o);
    out.push_back(GlobalEncoding(tg));
    out.push_back(LocalEncoding(tg));

    const std::size_t n = 1 + rng.Below(12);
    std::vector<KgNode> nodes;
    std::vector<Colour> colours;
    for (std::size_t x = 0; x < n; ++x) {
      nodes.push_back({0, {"x" + std::to_string(x), 0}});
      colours.push_back(rng.Chance(0.7) ? "p" : "q");
    }
    std::vector<KgEdge> edges;
    for (std::uint32_t s = 0; s < n; ++s) {
      for (std::uint32_t t = 0; t < n; ++t) {
        for (Relation r = 0; r < 3; ++r) {
          if (rng.Chance(0.08)) edges.push_back({r, s, t});
        }
      }
    }
    out.emplace_back(std::move(nodes), std::move(colours), std::move(edges));
  }
  return out;
}

std::string Criterion9() {
  std::size_t checked = 0;
  for (const KnowledgeGraph& kg : OracleCorpus()) {
    if (kg.num_nodes() > 12) return "corpus graph above 12 nodes";
    const Colouring c = Refine(kg);
    std::size_t bad = 0;
    if (!testing::MatchesOracle(kg, c, &bad)) {
      return "partition mismatch at layer " + std::to_string(bad) +
             " on corpus graph " + std::to_string(checked);
    }
    const std::size_t fixpoint = testing::OracleLayers(kg).size() - 2;
    if (c.stable_at() != fixpoint) {
      return "stable_at differs from the oracle fixpoint on corpus graph " +
             std::to_string(checked);
    }
    ++checked;
  }
  return checked == 900 ? "" : "corpus has the wrong size";
}

std::string Criterion10() {
  std::string why = FuzzClean(Property::kStabilisation, 1000);
  if (!why.empty()) return why;
  for (const KnowledgeGraph& kg : OracleCorpus()) {
    if (auto bad = CheckRefinementInvariants(kg)) return *bad;
  }
  return "";
}

}  // namespace
}  // namespace tempowl

int main() {
  using tempowl::Criterion;
  using tempowl::FuzzClean;
  using tempowl::Property;
  const std::vector<Criterion> criteria = {
      {1, "global_only regression, fig2 vs fig3 at (b,t4)", 1,
       tempowl::Criterion1},
      {2, "local_only regression, fig6_pair at (a,t2)/(a',t2)", 1,
       tempowl::Criterion2},
      {3, "pointwise isomorphic yet separated, fig5_pair", 1,
       tempowl::Criterion3},
      {4, "timewise isomorphic copies never separated, 1000 trials", 120,
       [] { return FuzzClean(Property::kTheorem6, 1000); }},
      {5, "persistent colours: no global_only pair, 1000 trials", 120,
       [] { return FuzzClean(Property::kTheorem9, 1000); }},
      {6, "K_loc separations survive time shifts, 500 trials", 60,
       [] { return FuzzClean(Property::kLemma1, 500); }},
      {7, "equal rwl colours imply equal embeddings, 500 trials", 180,
       [] { return FuzzClean(Property::kSoundness, 500); }},
      {8, "hash_injective classes equal rwl partitions", 60,
       tempowl::Criterion8},
      {9, "rwl engine equals naive oracle, KGs up to 12 nodes", 60,
       tempowl::Criterion9},
      {10, "stable_at bound and monotone refinement", 60,
       tempowl::Criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why = c.run();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (why.empty() && seconds >= c.limit_seconds) {
      why = "over the time limit";
    }
    const bool ok = why.empty();
    failures += !ok;
    std::printf("%s AC%-2d %-55s %8.3fs (limit %4.0fs)%s%s\n",
                ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.limit_seconds, ok ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
