// Copyright 2026 chordnet contributors
//
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

// chordnet command line. Every analysis goes through the public C API in
// chordnet.h; this file only parses flags, sequences calls and places
// output files.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "chordnet.h"

namespace {

int exit_code(cn_status status) {
  switch (status) {
    case CN_OK: return 0;
    case CN_ERROR_DATA: return 2;
    case CN_ERROR_NUMERIC: return 3;
    default: return 1;  // config, io, invalid
  }
}

void check(cn_status status) {
  if (status != CN_OK) {
    std::fprintf(stderr, "chordnet: error: %s\n", cn_last_error());
    std::exit(exit_code(status));
  }
}

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "chordnet: error: %s\n", message.c_str());
  std::exit(1);
}

struct ConfigDeleter { void operator()(cn_config* p) const { cn_config_free(p); } };
struct CorpusDeleter { void operator()(cn_corpus* p) const { cn_corpus_free(p); } };
struct GraphDeleter { void operator()(cn_graph* p) const { cn_graph_free(p); } };
struct GoogleDeleter { void operator()(cn_google* p) const { cn_google_free(p); } };
struct RankDeleter { void operator()(cn_rankvec* p) const { cn_rankvec_free(p); } };
struct SpectrumDeleter { void operator()(cn_spectrum* p) const { cn_spectrum_free(p); } };
struct PartitionDeleter { void operator()(cn_partition* p) const { cn_partition_free(p); } };

using ConfigPtr = std::unique_ptr<cn_config, ConfigDeleter>;
using CorpusPtr = std::unique_ptr<cn_corpus, CorpusDeleter>;
using GraphPtr = std::unique_ptr<cn_graph, GraphDeleter>;
using GooglePtr = std::unique_ptr<cn_google, GoogleDeleter>;
using RankPtr = std::unique_ptr<cn_rankvec, RankDeleter>;
using SpectrumPtr = std::unique_ptr<cn_spectrum, SpectrumDeleter>;
using PartitionPtr = std::unique_ptr<cn_partition, PartitionDeleter>;

// Flag values are kept as text and funneled into the config handle, so the
// config file, environment and flags resolve in one place.
struct Options {
  std::string config_path;
  std::string input;
  std::string out;
  std::string mode;
  std::string period;
  std::string quartets;
  std::string alpha;
  std::string seed;
  std::string tol;
  std::string restarts;
  std::string ensemble;
  std::string top_m;
  std::string metric = "fidelity";
  std::string series;
  std::string fit_window;
  std::string rewire_method;
  bool unweighted = false;
};

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON config file (env CHORDNET_CONFIG)");
  cmd->add_option("--input", o.input, "annotation TSV file");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--mode", o.mode, "restrict to one mode (major/minor)");
  cmd->add_option("--period", o.period, "restrict to one period");
  cmd->add_option("--alpha", o.alpha, "teleportation parameter (default 0.85)");
  cmd->add_option("--seed", o.seed, "base random seed (default 0)");
  cmd->add_option("--tol", o.tol, "PageRank convergence threshold (default 1e-12)");
}

ConfigPtr build_config(const Options& o) {
  cn_config* raw = nullptr;
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CHORDNET_CONFIG")) path = env;
  }
  if (path.empty()) {
    check(cn_config_create(&raw));
  } else {
    check(cn_config_load(path.c_str(), &raw));
  }
  ConfigPtr config(raw);
  auto set = [&](const char* key, const std::string& value) {
    if (!value.empty()) check(cn_config_set(config.get(), key, value.c_str()));
  };
  set("input", o.input);
  set("output", o.out);
  set("mode", o.mode);
  set("period", o.period);
  set("alpha", o.alpha);
  set("seed", o.seed);
  set("pagerank_tol", o.tol);
  set("restarts", o.restarts);
  set("ensemble", o.ensemble);
  set("top_m", o.top_m);
  set("rewire_method", o.rewire_method);
  if (o.unweighted) set("rewire_weighted", "false");
  return config;
}

std::string cfg_get(const cn_config* config, const char* key) {
  char buffer[4096];
  check(cn_config_get(config, key, buffer, sizeof(buffer)));
  return buffer;
}

double cfg_double(const cn_config* config, const char* key) {
  return std::stod(cfg_get(config, key));
}

long cfg_long(const cn_config* config, const char* key) {
  return std::stol(cfg_get(config, key));
}

// Half-open 0-based window from the "A:B" (1-based inclusive) notation.
std::pair<size_t, size_t> cfg_window(const cn_config* config, const char* key) {
  std::string w = cfg_get(config, key);
  const auto colon = w.find(':');
  if (colon == std::string::npos) die("bad window '" + w + "'");
  const long a = std::stol(w.substr(0, colon));
  const long b = std::stol(w.substr(colon + 1));
  if (a < 1 || b < a) die("bad window '" + w + "'");
  return {static_cast<size_t>(a - 1), static_cast<size_t>(b)};
}

CorpusPtr load_corpus(const cn_config* config) {
  cn_corpus* raw = nullptr;
  check(cn_corpus_load(config, nullptr, &raw));
  return CorpusPtr(raw);
}

CorpusPtr load_filtered(const cn_config* config, const Options& o, bool mode_required) {
  const std::string mode = cfg_get(config, "mode");
  const std::string period = cfg_get(config, "period");
  if (mode_required && mode.empty()) {
    die("this subcommand needs --mode major or --mode minor");
  }
  CorpusPtr corpus = load_corpus(config);
  if (mode.empty() && period.empty() && o.quartets.empty()) return corpus;
  cn_corpus* filtered = nullptr;
  check(cn_corpus_filter(corpus.get(), mode.empty() ? nullptr : mode.c_str(),
                         period.empty() ? nullptr : period.c_str(),
                         o.quartets.empty() ? nullptr : o.quartets.c_str(), &filtered));
  return CorpusPtr(filtered);
}

GraphPtr build_graph(const cn_corpus* corpus) {
  cn_graph* raw = nullptr;
  check(cn_graph_build(corpus, &raw));
  return GraphPtr(raw);
}

RankPtr compute_pagerank(const cn_config* config, const cn_graph* graph, GooglePtr* google_out) {
  cn_google* google = nullptr;
  check(cn_google_build(graph, cfg_double(config, "alpha"), &google));
  GooglePtr g(google);
  cn_rankvec* ranks = nullptr;
  check(cn_pagerank(g.get(), cfg_double(config, "pagerank_tol"),
                    cfg_long(config, "pagerank_max_iter"), &ranks));
  if (google_out) *google_out = std::move(g);
  return RankPtr(ranks);
}

std::string out_path(const cn_config* config, const std::string& name) {
  const std::string dir = cfg_get(config, "output");
  return dir.empty() ? "-" : dir + "/" + name;
}

std::string require_out(const cn_config* config) {
  const std::string dir = cfg_get(config, "output");
  if (dir.empty()) die("this subcommand needs --out DIR");
  return dir;
}

/* ---- subcommands -------------------------------------------------------- */

void cmd_validate(const Options& o) {
  ConfigPtr config = build_config(o);
  CorpusPtr corpus = load_corpus(config.get());
  const std::string dir = cfg_get(config.get(), "output");
  if (dir.empty()) {
    check(cn_corpus_write_cleaning_report(corpus.get(), "-"));
    check(cn_corpus_write_summary_json(corpus.get(), "-"));
  } else {
    check(cn_corpus_write_cleaning_report(corpus.get(), (dir + "/cleaning_report.jsonl").c_str()));
    check(cn_corpus_write_summary_json(corpus.get(), (dir + "/summary.json").c_str()));
    check(cn_corpus_write_summary_json(corpus.get(), "-"));
  }
  std::fprintf(stderr, "validate: %zu entries, %zu segments, %zu substitutions, %zu warnings\n",
               cn_corpus_entries(corpus.get()), cn_corpus_segments(corpus.get()),
               cn_corpus_cleaning_substitutions(corpus.get()),
               cn_corpus_cleaning_warnings(corpus.get()));
}

void cmd_stats(const Options& o) {
  ConfigPtr config = build_config(o);
  const std::string dir = require_out(config.get());
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/false);
  check(cn_stats_write(corpus.get(), cfg_double(config.get(), "alpha"),
                       cfg_double(config.get(), "pagerank_tol"), dir.c_str()));
}

void cmd_export_graph(const Options& o) {
  ConfigPtr config = build_config(o);
  const std::string dir = require_out(config.get());
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  check(cn_graph_write_edges_tsv(graph.get(), (dir + "/edges.tsv").c_str()));
  check(cn_graph_write_vertices_csv(graph.get(), (dir + "/vertices.csv").c_str()));
  check(cn_graph_write_degree_csv(graph.get(), "in", (dir + "/degree_in.csv").c_str()));
  check(cn_graph_write_degree_csv(graph.get(), "out", (dir + "/degree_out.csv").c_str()));
}

void cmd_pagerank(const Options& o) {
  ConfigPtr config = build_config(o);
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  RankPtr ranks = compute_pagerank(config.get(), graph.get(), nullptr);
  check(cn_rankvec_write_csv(ranks.get(), out_path(config.get(), "pagerank.csv").c_str()));
}

void cmd_spectrum(const Options& o) {
  ConfigPtr config = build_config(o);
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  cn_google* google = nullptr;
  check(cn_google_build(graph.get(), cfg_double(config.get(), "alpha"), &google));
  GooglePtr g(google);
  cn_spectrum* spectrum = nullptr;
  check(cn_spectrum_compute(g.get(), &spectrum));
  SpectrumPtr s(spectrum);
  check(cn_spectrum_write_csv(s.get(), out_path(config.get(), "spectrum.csv").c_str()));
}

void cmd_fit(const Options& o) {
  ConfigPtr config = build_config(o);
  if (o.series.empty()) die("fit needs --series zipf|degree-in|degree-out|pagerank");
  const char* window_key = o.series == "zipf" ? "zipf_window"
                           : o.series == "pagerank" ? "pagerank_window"
                                                    : "degree_window";
  if (!o.fit_window.empty()) {
    check(cn_config_set(config.get(), window_key, o.fit_window.c_str()));
  }
  auto [first, last] = cfg_window(config.get(), window_key);

  if (o.series == "zipf") {
    CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/false);
    check(cn_corpus_fit_zipf(corpus.get(), first, last,
                             out_path(config.get(), "fit.json").c_str()));
    return;
  }
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  if (o.series == "degree-in" || o.series == "degree-out") {
    check(cn_graph_fit_degree(graph.get(), o.series == "degree-in" ? "in" : "out", first, last,
                              out_path(config.get(), "fit.json").c_str()));
  } else if (o.series == "pagerank") {
    RankPtr ranks = compute_pagerank(config.get(), graph.get(), nullptr);
    check(cn_rankvec_fit(ranks.get(), first, last, out_path(config.get(), "fit.json").c_str()));
  } else {
    die("unknown series '" + o.series + "'");
  }
}

void cmd_communities(const Options& o) {
  ConfigPtr config = build_config(o);
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  RankPtr ranks = compute_pagerank(config.get(), graph.get(), nullptr);
  cn_partition* partition = nullptr;
  check(cn_communities(graph.get(), static_cast<int>(cfg_long(config.get(), "restarts")),
                       static_cast<uint64_t>(cfg_long(config.get(), "seed")), &partition));
  PartitionPtr p(partition);
  check(cn_partition_write_csv(p.get(), ranks.get(),
                               out_path(config.get(), "communities.csv").c_str()));
  const std::string dir = cfg_get(config.get(), "output");
  if (!dir.empty()) {
    check(cn_partition_write_profiles_json(p.get(), ranks.get(),
                                           static_cast<int>(cfg_long(config.get(), "profile_top")),
                                           (dir + "/profiles.json").c_str()));
  }
  std::fprintf(stderr, "communities: %d communities, modularity %.6f\n",
               cn_partition_count(p.get()), cn_partition_modularity(p.get()));
}

void cmd_null_stats(const Options& o) {
  ConfigPtr config = build_config(o);
  CorpusPtr corpus = load_filtered(config.get(), o, /*mode_required=*/true);
  GraphPtr graph = build_graph(corpus.get());
  check(cn_null_stats(graph.get(), static_cast<int>(cfg_long(config.get(), "ensemble")),
                      static_cast<int>(cfg_long(config.get(), "restarts")),
                      static_cast<uint64_t>(cfg_long(config.get(), "seed")),
                      cfg_get(config.get(), "rewire_weighted") == "true" ? 1 : 0,
                      cfg_get(config.get(), "rewire_method").c_str(),
                      out_path(config.get(), "null_stats.json").c_str(), nullptr, nullptr));
}

void cmd_compare_periods(const Options& o) {
  ConfigPtr config = build_config(o);
  const std::string mode = cfg_get(config.get(), "mode");
  if (mode.empty()) die("compare-periods needs --mode major or --mode minor");
  CorpusPtr corpus = load_corpus(config.get());
  const std::string dir = cfg_get(config.get(), "output");
  const std::string csv =
      dir.empty() ? "-" : dir + "/compare_" + o.metric + ".csv";
  const std::string json =
      dir.empty() ? "" : dir + "/compare_" + o.metric + ".json";
  check(cn_compare_periods(corpus.get(), mode.c_str(), o.metric.c_str(),
                           static_cast<int>(cfg_long(config.get(), "top_m")),
                           cfg_double(config.get(), "alpha"),
                           cfg_double(config.get(), "pagerank_tol"), csv.c_str(),
                           json.empty() ? nullptr : json.c_str()));
}

void cmd_report(const Options& o) {
  ConfigPtr config = build_config(o);
  const std::string dir = require_out(config.get());
  check(cn_report_run(config.get(), dir.c_str()));
  std::printf("%s/manifest.json\n", dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chordnet - chord-transition network analysis of harmonic annotation corpora"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand(
      "validate", "load, clean and segment the corpus; emit cleaning report and counts");
  add_common_flags(validate, o);
  validate->callback([&] { cmd_validate(o); });

  auto* stats = app.add_subcommand("stats", "frequency, Zipf, bigram and rank-join tables");
  add_common_flags(stats, o);
  stats->add_option("--quartets", o.quartets, "comma-separated quartet ids");
  stats->callback([&] { cmd_stats(o); });

  auto* export_graph =
      app.add_subcommand("export-graph", "edge list (TSV) and vertex table (CSV) of one graph");
  add_common_flags(export_graph, o);
  export_graph->add_option("--quartets", o.quartets, "comma-separated quartet ids");
  export_graph->callback([&] { cmd_export_graph(o); });

  auto* pagerank = app.add_subcommand("pagerank", "PageRank vector of one graph");
  add_common_flags(pagerank, o);
  pagerank->add_option("--quartets", o.quartets, "comma-separated quartet ids");
  pagerank->callback([&] { cmd_pagerank(o); });

  auto* spectrum = app.add_subcommand("spectrum", "complex Google-matrix spectrum of one graph");
  add_common_flags(spectrum, o);
  spectrum->add_option("--quartets", o.quartets, "comma-separated quartet ids");
  spectrum->callback([&] { cmd_spectrum(o); });

  auto* fit = app.add_subcommand("fit", "power-law fit of a ranked series");
  add_common_flags(fit, o);
  fit->add_option("--series", o.series, "zipf, degree-in, degree-out or pagerank")->required();
  fit->add_option("--fit-window", o.fit_window, "FIRST:LAST points, 1-based inclusive");
  fit->callback([&] { cmd_fit(o); });

  auto* communities =
      app.add_subcommand("communities", "best-of-restarts Louvain partition of one graph");
  add_common_flags(communities, o);
  communities->add_option("--restarts", o.restarts, "Louvain restarts (default 100)");
  communities->add_option("--quartets", o.quartets, "comma-separated quartet ids");
  communities->callback([&] { cmd_communities(o); });

  auto* null_stats = app.add_subcommand(
      "null-stats", "best-found modularity over a degree-preserving null ensemble");
  add_common_flags(null_stats, o);
  null_stats->add_option("--ensemble", o.ensemble, "number of rewired graphs (default 100)");
  null_stats->add_option("--restarts", o.restarts, "Louvain restarts per graph (default 100)");
  null_stats->add_option("--method", o.rewire_method, "stub (default) or swap");
  null_stats->add_flag("--unweighted", o.unweighted, "preserve unweighted degrees instead");
  null_stats->callback([&] { cmd_null_stats(o); });

  auto* compare = app.add_subcommand(
      "compare-periods", "pairwise-quartet PageRank comparison across periods");
  add_common_flags(compare, o);
  compare->add_option("--metric", o.metric, "fidelity (default) or similarity");
  compare->add_option("--top-m", o.top_m, "similarity list depth (default 30)");
  compare->callback([&] { cmd_compare_periods(o); });

  auto* report = app.add_subcommand("report", "full analysis bundle with manifest");
  add_common_flags(report, o);
  report->add_option("--restarts", o.restarts, "Louvain restarts (default 100)");
  report->add_option("--ensemble", o.ensemble, "null ensemble size (default 100)");
  report->callback([&] { cmd_report(o); });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
