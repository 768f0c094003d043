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

#include "tempowl/tempowl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "tempowl/distinguish.h"
#include "tempowl/generators.h"
#include "tempowl/io.h"
#include "tempowl/isomorphism.h"
#include "tempowl/knowledge_graph.h"
#include "tempowl/properties.h"
#include "tempowl/refinement.h"
#include "tempowl/simulator.h"

#ifndef TEMPOWL_VERSION
#define TEMPOWL_VERSION "0.0.0"
#endif

struct tw_graph {
  tempowl::TemporalGraph graph;
};

namespace {

using tempowl::ErrorCode;

static_assert(static_cast<int>(ErrorCode::kInternal) == TW_INTERNAL);
static_assert(static_cast<int>(ErrorCode::kUnknownTime) == TW_UNKNOWN_TIME);
static_assert(static_cast<int>(ErrorCode::kSelfLoop) == TW_SELF_LOOP);

thread_local std::string last_error;

tw_status Fail(ErrorCode code, const std::string& message) {
  last_error = message;
  return static_cast<tw_status>(code);
}

// Runs body, mapping exceptions onto status codes.
template <typename Body>
tw_status Guard(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tempowl::Error& e) {
    return Fail(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ErrorCode::kInternal, e.what());
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tw_status Emit(const std::string& s, char** out) {
  *out = Duplicate(s);
  return TW_OK;
}

tw_graph* Wrap(tempowl::TemporalGraph g) {
  return new tw_graph{std::move(g)};
}

bool Missing(const void* p, const char* what, tw_status& status) {
  if (p != nullptr) return false;
  status = Fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
  return true;
}

tempowl::Encoding ToEncoding(tw_encoding e) {
  switch (e) {
    case TW_ENCODING_GLOBAL:
      return tempowl::Encoding::kGlobal;
    case TW_ENCODING_LOCAL:
      return tempowl::Encoding::kLocal;
  }
  throw tempowl::Error(ErrorCode::kInvalidArgument, "unknown encoding");
}

std::optional<std::size_t> ToLayers(std::int64_t max_layers) {
  if (max_layers < 0) return std::nullopt;
  return static_cast<std::size_t>(max_layers);
}

}  // namespace

extern "C" {

const char* tw_version(void) { return TEMPOWL_VERSION; }

const char* tw_status_name(tw_status status) {
  if (status < TW_OK || status > TW_INTERNAL) return "Unknown";
  return tempowl::ErrorCodeName(static_cast<ErrorCode>(status)).data();
}

const char* tw_last_error(void) { return last_error.c_str(); }

void tw_string_free(char* s) { std::free(s); }

void tw_gen_options_init(tw_gen_options* options) {
  if (options == nullptr) return;
  const tempowl::RandomGraphOptions d;
  options->seed = d.seed;
  options->nodes = d.nodes;
  options->snapshots = d.snapshots;
  options->edge_prob = d.edge_prob;
  options->palette = d.palette;
  options->colour_persistent = d.colour_persistent ? 1 : 0;
  options->uniform_grid = d.uniform_grid ? 1 : 0;
  options->max_gap = d.max_gap;
}

void tw_sim_options_init(tw_sim_options* options) {
  if (options == nullptr) return;
  const tempowl::ModelConfig d;
  options->mode = TW_MODE_GLOBAL;
  options->variant = TW_VARIANT_SUM_SIGN;
  options->seed = d.seed;
  options->layers = d.layers;
  options->width = d.width;
}

tw_status tw_graph_from_json(const char* json, tw_graph** out) {
  return Guard([&] {
    tw_status s;
    if (Missing(json, "json", s) || Missing(out, "out", s)) return s;
    *out = Wrap(tempowl::TemporalGraphFromJson(json));
    return TW_OK;
  });
}

tw_status tw_graph_from_events_csv(const char* csv, const char* default_colour,
                                   tw_graph** out) {
  return Guard([&] {
    tw_status s;
    if (Missing(csv, "csv", s) || Missing(out, "out", s)) return s;
    const auto events = tempowl::ParseEventsCsv(csv);
    *out = Wrap(tempowl::FromEvents(
        events, default_colour != nullptr ? default_colour : "0"));
    return TW_OK;
  });
}

tw_status tw_graph_to_json(const tw_graph* graph, char** out) {
  return Guard([&] {
    tw_status s;
    if (Missing(graph, "graph", s) || Missing(out, "out", s)) return s;
    return Emit(tempowl::TemporalGraphToJson(graph->graph), out);
  });
}

void tw_graph_free(tw_graph* graph) { delete graph; }

size_t tw_graph_num_nodes(const tw_graph* graph) {
  return graph != nullptr ? graph->graph.num_nodes() : 0;
}

size_t tw_graph_num_snapshots(const tw_graph* graph) {
  return graph != nullptr ? graph->graph.num_snapshots() : 0;
}

size_t tw_graph_num_edges(const tw_graph* graph) {
  return graph != nullptr ? graph->graph.num_edges() : 0;
}

int tw_graph_is_colour_persistent(const tw_graph* graph) {
  return graph != nullptr && tempowl::IsColourPersistent(graph->graph) ? 1 : 0;
}

tw_status tw_validate_json(const char* json, char** report) {
  return Guard([&] {
    tw_status s;
    if (Missing(json, "json", s) || Missing(report, "report", s)) return s;
    nlohmann::ordered_json r;
    tw_status status = TW_OK;
    try {
      const auto issue = tempowl::Validate(tempowl::SpecFromJson(json));
      r["valid"] = !issue.has_value();
      if (issue) {
        r["code"] = std::string(tempowl::ErrorCodeName(issue->code));
        r["message"] = issue->message;
        status = Fail(issue->code, issue->message);
      }
    } catch (const tempowl::Error& e) {
      r["valid"] = false;
      r["code"] = std::string(tempowl::ErrorCodeName(e.code()));
      r["message"] = e.what();
      status = Fail(e.code(), e.what());
    }
    *report = Duplicate(r.dump());
    return status;
  });
}

tw_status tw_fixture(const char* name, tw_graph** first, tw_graph** second) {
  return Guard([&] {
    tw_status s;
    if (Missing(name, "name", s) || Missing(first, "first", s)) return s;
    tempowl::Fixture fx = tempowl::MakeFixture(name);
    *first = Wrap(std::move(fx.graphs[0]));
    if (second != nullptr) {
      *second = fx.graphs.size() > 1 ? Wrap(std::move(fx.graphs[1])) : nullptr;
    }
    return TW_OK;
  });
}

tw_status tw_generate(const tw_gen_options* options, tw_graph** out) {
  return Guard([&] {
    tw_status s;
    if (Missing(options, "options", s) || Missing(out, "out", s)) return s;
    tempowl::RandomGraphOptions o;
    o.seed = options->seed;
    o.nodes = options->nodes;
    o.snapshots = options->snapshots;
    o.edge_prob = options->edge_prob;
    o.palette = options->palette;
    o.colour_persistent = options->colour_persistent != 0;
    o.uniform_grid = options->uniform_grid != 0;
    o.max_gap = options->max_gap;
    *out = Wrap(tempowl::RandomTemporalGraph(o));
    return TW_OK;
  });
}

tw_status tw_time_shift(const tw_graph* graph, int64_t delta, tw_graph** out) {
  return Guard([&] {
    tw_status s;
    if (Missing(graph, "graph", s) || Missing(out, "out", s)) return s;
    *out = Wrap(tempowl::TimeShifted(graph->graph, delta));
    return TW_OK;
  });
}

tw_status tw_transform(const tw_graph* graph, tw_encoding encoding,
                       char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(graph, "graph", s) || Missing(json, "json", s)) return s;
    const auto kg = tempowl::Encode(graph->graph, ToEncoding(encoding));
    return Emit(tempowl::KnowledgeGraphToJson(kg), json);
  });
}

tw_status tw_refine(const tw_graph* graph, tw_encoding encoding,
                    int64_t max_layers, char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(graph, "graph", s) || Missing(json, "json", s)) return s;
    const auto kg = tempowl::Encode(graph->graph, ToEncoding(encoding));
    const auto colouring = tempowl::Refine(kg, ToLayers(max_layers));
    return Emit(tempowl::ColouringToJson(kg, colouring), json);
  });
}

tw_status tw_compare(const tw_graph* first, const char* node1,
                     const tw_graph* second, const char* node2, tw_mode mode,
                     int64_t max_layers, char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(first, "first", s) || Missing(second, "second", s) ||
        Missing(node1, "node1", s) || Missing(node2, "node2", s) ||
        Missing(json, "json", s)) {
      return s;
    }
    const auto a = tempowl::ParseNodeAddress(first->graph, node1);
    const auto b = tempowl::ParseNodeAddress(second->graph, node2);
    const auto layers = ToLayers(max_layers);
    auto run = [&](tempowl::Mode m) {
      return tempowl::Distinguish(first->graph, a, second->graph, b, m,
                                  layers);
    };
    switch (mode) {
      case TW_MODE_GLOBAL:
        return Emit(tempowl::VerdictToJson(run(tempowl::Mode::kGlobal)), json);
      case TW_MODE_LOCAL:
        return Emit(tempowl::VerdictToJson(run(tempowl::Mode::kLocal)), json);
      case TW_MODE_BOTH:
        return Emit(tempowl::VerdictPairToJson(run(tempowl::Mode::kGlobal),
                                               run(tempowl::Mode::kLocal)),
                    json);
    }
    return Fail(ErrorCode::kInvalidArgument, "unknown mode");
  });
}

tw_status tw_classify(const tw_graph* first, const tw_graph* second,
                      char** csv) {
  return Guard([&] {
    tw_status s;
    if (Missing(first, "first", s) || Missing(second, "second", s) ||
        Missing(csv, "csv", s)) {
      return s;
    }
    const auto m = tempowl::ClassifyAll(first->graph, second->graph);
    return Emit(tempowl::ClassMatrixToCsv(m, first->graph, second->graph), csv);
  });
}

tw_status tw_iso(const tw_graph* first, const tw_graph* second,
                 tw_iso_kind kind, size_t node_bound, const char* node1,
                 const char* node2, char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(first, "first", s) || Missing(second, "second", s) ||
        Missing(json, "json", s)) {
      return s;
    }
    tempowl::IsoOptions options;
    if (node_bound > 0) options.node_bound = node_bound;
    if ((node1 == nullptr) != (node2 == nullptr)) {
      return Fail(ErrorCode::kInvalidArgument,
                  "give both anchor nodes or neither");
    }
    if (node1 != nullptr) {
      options.anchor = tempowl::IsoAnchor{
          tempowl::ParseNodeAddress(first->graph, node1),
          tempowl::ParseNodeAddress(second->graph, node2)};
    }
    std::optional<tempowl::IsoWitness> w;
    tempowl::IsoKind k;
    switch (kind) {
      case TW_ISO_POINTWISE:
        k = tempowl::IsoKind::kPointwise;
        w = tempowl::PointwiseIso(first->graph, second->graph, options);
        break;
      case TW_ISO_TIMEWISE:
        k = tempowl::IsoKind::kTimewise;
        w = tempowl::TimewiseIso(first->graph, second->graph, options);
        break;
      default:
        return Fail(ErrorCode::kInvalidArgument, "unknown isomorphism kind");
    }
    if (w && !tempowl::VerifyWitness(first->graph, second->graph, *w,
                                     options.anchor)) {
      return Fail(ErrorCode::kInternal, "witness failed verification");
    }
    return Emit(tempowl::IsoResultToJson(k, w, first->graph, second->graph),
                json);
  });
}

tw_status tw_simulate(const tw_graph* graph, const tw_sim_options* options,
                      char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(graph, "graph", s) || Missing(options, "options", s) ||
        Missing(json, "json", s)) {
      return s;
    }
    tempowl::ModelConfig cfg;
    switch (options->mode) {
      case TW_MODE_GLOBAL:
        cfg.mode = tempowl::Mode::kGlobal;
        break;
      case TW_MODE_LOCAL:
        cfg.mode = tempowl::Mode::kLocal;
        break;
      default:
        return Fail(ErrorCode::kConfigMismatch,
                    "simulation mode must be global or local");
    }
    switch (options->variant) {
      case TW_VARIANT_SUM_SIGN:
        cfg.variant = tempowl::Variant::kSumSign;
        break;
      case TW_VARIANT_CONCAT_SUM_RELU:
        cfg.variant = tempowl::Variant::kConcatSumRelu;
        break;
      case TW_VARIANT_HASH_INJECTIVE:
        cfg.variant = tempowl::Variant::kHashInjective;
        break;
      default:
        return Fail(ErrorCode::kConfigMismatch, "unknown variant");
    }
    cfg.seed = options->seed;
    cfg.layers = options->layers;
    cfg.width = options->width;
    const auto state = tempowl::Forward(graph->graph, cfg);
    return Emit(tempowl::EmbeddingsToJson(state, graph->graph, cfg), json);
  });
}

tw_status tw_fuzz(const char* property, uint64_t trials, uint64_t seed,
                  size_t threads, char** json, uint64_t* violations) {
  return Guard([&] {
    tw_status s;
    if (Missing(property, "property", s) || Missing(json, "json", s)) return s;
    const auto p = tempowl::ParseProperty(property);
    if (!p) {
      return Fail(ErrorCode::kInvalidArgument,
                  std::string("unknown property '") + property + "'");
    }
    const auto report = tempowl::RunFuzz(*p, trials, seed, threads);
    if (violations != nullptr) *violations = report.violations;
    return Emit(tempowl::FuzzReportToJson(report), json);
  });
}

tw_status tw_event_stats(const char* csv, char** json) {
  return Guard([&] {
    tw_status s;
    if (Missing(csv, "csv", s) || Missing(json, "json", s)) return s;
    const auto stats = tempowl::ComputeEventStats(tempowl::ParseEventsCsv(csv));
    return Emit(tempowl::EventStatsToJson(stats), json);
  });
}

}  // extern "C"
