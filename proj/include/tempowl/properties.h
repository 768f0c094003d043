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

#ifndef TEMPOWL_PROPERTIES_H_
#define TEMPOWL_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempowl/distinguish.h"
#include "tempowl/refinement.h"
#include "tempowl/simulator.h"
#include "tempowl/temporal_graph.h"

namespace tempowl {

enum class Property {
  kTheorem5,       // pointwise isomorphic pairs that some model separates
  kTheorem6,       // timewise isomorphic pairs are never separated
  kTheorem7,       // global-only separations exist (non-persistent colours)
  kTheorem8,       // local-only separations exist
  kTheorem9,       // persistent colours: local separates whatever global does
  kLemma1,         // K_loc separations persist under a common time shift
  kSoundness,      // equal rwl colours imply equal embeddings
  kCompleteness,   // hash_injective classes equal rwl classes
  kStabilisation,  // stable_at bound and monotone refinement
};

std::string_view PropertyName(Property p);
std::optional<Property> ParseProperty(std::string_view name);
const std::vector<Property>& AllProperties();

struct TrialResult {
  bool ok = true;
  std::string detail;  // first violation, empty when ok
  std::map<std::string, std::uint64_t> counters;
};

// Trial parameters are a pure function of the seed.
TrialResult RunTrial(Property p, std::uint64_t seed);

struct FuzzReport {
  Property property = Property::kTheorem9;
  std::uint64_t trials = 0;
  std::uint64_t base_seed = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> min_failing_seed;
  std::string failure_detail;  // detail of the minimal failing seed
  std::map<std::string, std::uint64_t> counters;
  double seconds = 0.0;
};

// Trial k uses seed base_seed + k. threads == 0 picks
// min(hardware_concurrency, TEMPOWL_THREADS if set). Results do not depend
// on the thread count.
FuzzReport RunFuzz(Property p, std::uint64_t trials, std::uint64_t base_seed,
                   std::size_t threads = 0);

std::size_t DefaultThreadCount();

// Building blocks shared with the trials, exposed for direct testing. Each
// returns a description of the first violation, or nullopt.

// Time-axis shift check on one graph's K_loc: if (v,t) and (u,t') differ at
// layer l then (v,t+k) and (u,t'+k) differ at layer l whenever both are
// time points. `shifted_pairs`, when given, is increased by the number of
// shifted pairs compared.
std::optional<std::string> CheckShiftProperty(
    const TemporalGraph& tg, std::uint64_t* shifted_pairs = nullptr);

// Equal rwl colours (joint refinement over all graphs) imply equal
// embeddings at layers 0..config.layers.
std::optional<std::string> CheckSoundness(
    const std::vector<const TemporalGraph*>& graphs, const ModelConfig& config);

// hash_injective equality classes equal rwl classes at every layer up to
// `layers` (joint over all graphs).
std::optional<std::string> CheckCompleteness(
    const std::vector<const TemporalGraph*>& graphs, Mode mode,
    std::size_t layers);

// stable_at <= |nodes| and each layer refines the previous one.
std::optional<std::string> CheckRefinementInvariants(const KnowledgeGraph& kg);

// No global_only cell; first local layer <= first global layer.
std::optional<std::string> CheckGlobalImpliesLocal(const TemporalGraph& first,
                                                   const TemporalGraph& second);

}  // namespace tempowl

#endif  // TEMPOWL_PROPERTIES_H_
