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

// Command-line front end. Every subcommand goes through the C API.
//
// Exit codes: 0 success, 1 property violation (or invalid graph for
// `validate`), 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempowl/tempowl.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct GraphDeleter {
  void operator()(tw_graph* g) const { tw_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tw_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tw_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"cannot write '" + path + "'"};
  out << text << '\n';
}

// Turns a failed status into a usage error carrying the library message.
void Check(tw_status status) {
  if (status == TW_OK) return;
  throw UsageError{std::string(tw_status_name(status)) + ": " +
                   tw_last_error()};
}

std::string Take(char* s) { return std::string(CString(s).get()); }

GraphPtr LoadGraph(const std::string& path) {
  const std::string text = ReadInput(path);
  tw_graph* g = nullptr;
  Check(tw_graph_from_json(text.c_str(), &g));
  return GraphPtr(g);
}

std::string GraphJson(const tw_graph* g) {
  char* out = nullptr;
  Check(tw_graph_to_json(g, &out));
  return Take(out);
}

tw_encoding ParseEncoding(const std::string& s) {
  return s == "loc" || s == "local" ? TW_ENCODING_LOCAL : TW_ENCODING_GLOBAL;
}

tw_mode ParseMode(const std::string& s) {
  if (s == "local") return TW_MODE_LOCAL;
  if (s == "both") return TW_MODE_BOTH;
  return TW_MODE_GLOBAL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempowl: temporal Weisfeiler-Leman distinguishability toolkit"};
  app.set_version_flag("--version", std::string(tw_version()));
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a temporal graph");
  validate->add_option("graph", validate_path, "Graph JSON (- for stdin)")
      ->required();

  // transform
  std::string transform_path, transform_encoding = "glob";
  auto* transform =
      app.add_subcommand("transform", "Emit the K_glob or K_loc encoding");
  transform->add_option("graph", transform_path, "Graph JSON")->required();
  transform->add_option("--encoding", transform_encoding, "glob or loc")
      ->check(CLI::IsMember({"glob", "loc"}));

  // refine
  std::string refine_path, refine_encoding = "glob";
  std::int64_t refine_layers = -1;
  auto* refine = app.add_subcommand(
      "refine", "Relational 1-WL partitions per layer of an encoding");
  refine->add_option("graph", refine_path, "Graph JSON")->required();
  refine->add_option("--encoding", refine_encoding, "glob or loc")
      ->check(CLI::IsMember({"glob", "loc"}));
  refine->add_option("--layers", refine_layers, "Layer bound (default: until stable)")
      ->check(CLI::NonNegativeNumber);

  // compare
  std::string cmp_a, cmp_b, cmp_node_a, cmp_node_b, cmp_mode = "both";
  std::int64_t cmp_layers = -1;
  auto* compare = app.add_subcommand(
      "compare", "Decide whether two timestamped nodes are distinguishable");
  compare->add_option("--a", cmp_a, "First graph JSON")->required();
  compare->add_option("--node-a", cmp_node_a, "node@time or node#index")
      ->required();
  compare->add_option("--b", cmp_b, "Second graph JSON")->required();
  compare->add_option("--node-b", cmp_node_b, "node@time or node#index")
      ->required();
  compare->add_option("--mode", cmp_mode, "global, local or both")
      ->check(CLI::IsMember({"global", "local", "both"}));
  compare->add_option("--layers", cmp_layers, "Layer bound")
      ->check(CLI::NonNegativeNumber);

  // classify
  std::string cls_a, cls_b;
  auto* classify = app.add_subcommand(
      "classify", "Pair-class matrix over all timestamped-node pairs (CSV)");
  classify->add_option("a", cls_a, "First graph JSON")->required();
  classify->add_option("b", cls_b, "Second graph JSON")->required();

  // iso
  std::string iso_a, iso_b, iso_kind = "pointwise", iso_node_a, iso_node_b;
  std::size_t iso_bound = 64;
  auto* iso = app.add_subcommand("iso", "Pointwise or timewise isomorphism");
  iso->add_option("a", iso_a, "First graph JSON")->required();
  iso->add_option("b", iso_b, "Second graph JSON")->required();
  iso->add_option("--kind", iso_kind, "pointwise or timewise")
      ->check(CLI::IsMember({"pointwise", "timewise"}));
  iso->add_option("--node-bound", iso_bound, "Refuse graphs above this size")
      ->check(CLI::PositiveNumber);
  auto* iso_anchor_a = iso->add_option(
      "--node-a", iso_node_a, "Require the witness to relate this node...");
  auto* iso_anchor_b =
      iso->add_option("--node-b", iso_node_b, "...to this node of b");
  iso_anchor_a->needs(iso_anchor_b);
  iso_anchor_b->needs(iso_anchor_a);

  // simulate
  std::string sim_path, sim_mode = "global", sim_variant = "sum_sign";
  tw_sim_options sim;
  tw_sim_options_init(&sim);
  auto* simulate =
      app.add_subcommand("simulate", "Exact MP-TGNN forward pass (JSON)");
  simulate->add_option("graph", sim_path, "Graph JSON")->required();
  simulate->add_option("--mode", sim_mode, "global or local")
      ->check(CLI::IsMember({"global", "local"}));
  simulate->add_option("--variant", sim_variant,
                       "sum_sign, concat_sum_relu or hash_injective")
      ->check(CLI::IsMember({"sum_sign", "concat_sum_relu", "hash_injective"}));
  simulate->add_option("--seed", sim.seed, "Weight seed");
  simulate->add_option("--layers", sim.layers, "Number of layers");
  simulate->add_option("--width", sim.width, "Embedding width")
      ->check(CLI::PositiveNumber);

  // fixture
  std::string fx_name, fx_out, fx_second;
  auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture graph");
  fixture->add_option("name", fx_name, "fig2, fig3, fig5_pair or fig6_pair")
      ->required();
  fixture->add_option("-o,--output", fx_out, "Output file (first graph)");
  fixture->add_option("--second", fx_second,
                      "Output file for the second graph of a pair");

  // gen
  tw_gen_options gen;
  tw_gen_options_init(&gen);
  bool gen_persistent = false, gen_irregular = false;
  std::string gen_out;
  auto* generate = app.add_subcommand("gen", "Seeded random temporal graph");
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("--nodes", gen.nodes, "Node count")
      ->check(CLI::PositiveNumber);
  generate->add_option("--snapshots", gen.snapshots, "Snapshot count")
      ->check(CLI::PositiveNumber);
  generate->add_option("--edge-prob", gen.edge_prob, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--palette", gen.palette, "Number of colours")
      ->check(CLI::PositiveNumber);
  generate->add_flag("--persistent", gen_persistent,
                     "Colour-persistent output");
  generate->add_flag("--irregular", gen_irregular,
                     "Random time gaps instead of times 1..n");
  generate->add_option("--max-gap", gen.max_gap, "Largest gap when irregular")
      ->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", gen_out, "Output file");

  // fuzz
  std::string fuzz_property;
  std::uint64_t fuzz_trials = 100, fuzz_seed = 1;
  std::size_t fuzz_threads = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded property-based check");
  fuzz->add_option("--property", fuzz_property,
                   "theorem5..theorem9, lemma1, soundness, completeness, "
                   "stabilisation")
      ->required();
  fuzz->add_option("--trials", fuzz_trials, "Number of trials");
  fuzz->add_option("--seed", fuzz_seed, "Seed of the first trial");
  fuzz->add_option("--threads", fuzz_threads,
                   "Worker count (default: cores, capped by TEMPOWL_THREADS)");

  // stats
  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "Node/edge/step counts of an event CSV");
  stats->add_option("events", stats_path, "CSV with header u,v,t")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      const std::string text = ReadInput(validate_path);
      char* report = nullptr;
      const tw_status s = tw_validate_json(text.c_str(), &report);
      std::cout << Take(report) << '\n';
      if (s == TW_OK) return kExitOk;
      return s == TW_PARSE_ERROR ? kExitUsage : kExitViolation;
    }
    if (*transform) {
      GraphPtr g = LoadGraph(transform_path);
      char* out = nullptr;
      Check(tw_transform(g.get(), ParseEncoding(transform_encoding), &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
    if (*refine) {
      GraphPtr g = LoadGraph(refine_path);
      char* out = nullptr;
      Check(tw_refine(g.get(), ParseEncoding(refine_encoding), refine_layers,
                      &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
    if (*compare) {
      GraphPtr a = LoadGraph(cmp_a);
      GraphPtr b = LoadGraph(cmp_b);
      char* out = nullptr;
      Check(tw_compare(a.get(), cmp_node_a.c_str(), b.get(),
                       cmp_node_b.c_str(), ParseMode(cmp_mode), cmp_layers,
                       &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
    if (*classify) {
      GraphPtr a = LoadGraph(cls_a);
      GraphPtr b = LoadGraph(cls_b);
      char* out = nullptr;
      Check(tw_classify(a.get(), b.get(), &out));
      std::cout << Take(out);
      return kExitOk;
    }
    if (*iso) {
      GraphPtr a = LoadGraph(iso_a);
      GraphPtr b = LoadGraph(iso_b);
      char* out = nullptr;
      Check(tw_iso(a.get(), b.get(),
                   iso_kind == "timewise" ? TW_ISO_TIMEWISE : TW_ISO_POINTWISE,
                   iso_bound, iso_node_a.empty() ? nullptr : iso_node_a.c_str(),
                   iso_node_b.empty() ? nullptr : iso_node_b.c_str(), &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
    if (*simulate) {
      GraphPtr g = LoadGraph(sim_path);
      sim.mode = sim_mode == "local" ? TW_MODE_LOCAL : TW_MODE_GLOBAL;
      sim.variant = sim_variant == "concat_sum_relu" ? TW_VARIANT_CONCAT_SUM_RELU
                    : sim_variant == "hash_injective" ? TW_VARIANT_HASH_INJECTIVE
                                                      : TW_VARIANT_SUM_SIGN;
      char* out = nullptr;
      Check(tw_simulate(g.get(), &sim, &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
    if (*fixture) {
      tw_graph* first = nullptr;
      tw_graph* second = nullptr;
      Check(tw_fixture(fx_name.c_str(), &first, &second));
      GraphPtr a(first), b(second);
      if (!b && !fx_second.empty()) {
        throw UsageError{"fixture '" + fx_name + "' has a single graph"};
      }
      WriteOutput(fx_out, GraphJson(a.get()));
      if (b) WriteOutput(fx_second, GraphJson(b.get()));
      return kExitOk;
    }
    if (*generate) {
      gen.colour_persistent = gen_persistent ? 1 : 0;
      gen.uniform_grid = gen_irregular ? 0 : 1;
      tw_graph* g = nullptr;
      Check(tw_generate(&gen, &g));
      GraphPtr owned(g);
      WriteOutput(gen_out, GraphJson(owned.get()));
      return kExitOk;
    }
    if (*fuzz) {
      char* out = nullptr;
      std::uint64_t violations = 0;
      Check(tw_fuzz(fuzz_property.c_str(), fuzz_trials, fuzz_seed,
                    fuzz_threads, &out, &violations));
      const std::string report = Take(out);
      std::cout << report << '\n';
      if (violations == 0) return kExitOk;
      const auto j = nlohmann::json::parse(report);
      std::cerr << "tempowl: " << fuzz_property << " violated in "
                << violations << " trial(s); reproduce with --trials 1 --seed "
                << j["min_failing_seed"].get<std::uint64_t>() << ": "
                << j["detail"].get<std::string>() << '\n';
      return kExitViolation;
    }
    if (*stats) {
      const std::string text = ReadInput(stats_path);
      char* out = nullptr;
      Check(tw_event_stats(text.c_str(), &out));
      std::cout << Take(out) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "tempowl: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
