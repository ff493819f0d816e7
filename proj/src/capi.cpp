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

#include "chordnet.h"

#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include "chordnet/annotations.hpp"
#include "chordnet/community.hpp"
#include "chordnet/config.hpp"
#include "chordnet/errors.hpp"
#include "chordnet/network.hpp"
#include "chordnet/report.hpp"
#include "chordnet/spectral.hpp"
#include "chordnet/stats.hpp"
#include "chordnet/stylometry.hpp"
#include "chordnet/text.hpp"

using namespace chordnet;

struct cn_config {
  RunConfig cfg;
};

struct cn_corpus {
  Corpus corpus;
  CleaningReport report;
  std::size_t raw_rows = 0;
  std::string input_path;
};

struct cn_graph {
  ChordGraph g;
};

struct cn_google {
  GoogleMatrix g;
};

struct cn_rankvec {
  RankVector v;
};

struct cn_spectrum {
  Spectrum s;
};

struct cn_partition {
  ChordGraph graph;  // vertex alignment for lookups and exports
  Partition p;
};

namespace {

thread_local std::string g_last_error;

cn_status fail(const std::string& message, cn_status code) {
  g_last_error = message;
  return code;
}

template <typename Fn>
cn_status guarded(Fn&& fn) {
  try {
    fn();
    return CN_OK;
  } catch (const ConfigError& e) {
    return fail(e.what(), CN_ERROR_CONFIG);
  } catch (const DataError& e) {
    return fail(e.what(), CN_ERROR_DATA);
  } catch (const NumericError& e) {
    return fail(e.what(), CN_ERROR_NUMERIC);
  } catch (const IoError& e) {
    return fail(e.what(), CN_ERROR_IO);
  } catch (const std::exception& e) {
    return fail(e.what(), CN_ERROR_INVALID);
  }
}

cn_status invalid(const char* message) { return fail(message, CN_ERROR_INVALID); }

// "-" sends the content to stdout; anything else is a file path.
void write_output(const char* path, const std::string& content) {
  if (std::string(path) == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
  } else {
    write_file(path, content);
  }
}

std::optional<Mode> optional_mode(const char* mode) {
  if (mode == nullptr) return std::nullopt;
  return parse_mode(mode);
}

RewireMethod parse_rewire_method(const char* method) {
  std::string m = method == nullptr ? "stub" : method;
  if (m == "stub") return RewireMethod::stub_matching;
  if (m == "swap") return RewireMethod::edge_swap;
  throw ConfigError("unknown rewire method '" + m + "' (expected stub or swap)");
}

}  // namespace

extern "C" {

const char* cn_version(void) { return "0.1.0"; }

const char* cn_last_error(void) { return g_last_error.c_str(); }

/* ---- configuration ---------------------------------------------------- */

cn_status cn_config_create(cn_config** out) {
  if (!out) return invalid("cn_config_create: out is NULL");
  return guarded([&] { *out = new cn_config(); });
}

cn_status cn_config_load(const char* json_path, cn_config** out) {
  if (!json_path || !out) return invalid("cn_config_load: NULL argument");
  return guarded([&] { *out = new cn_config{load_config(json_path)}; });
}

cn_status cn_config_set(cn_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return invalid("cn_config_set: NULL argument");
  return guarded([&] { apply_override(config->cfg, key, value); });
}

cn_status cn_config_get(const cn_config* config, const char* key, char* buffer,
                        size_t capacity) {
  if (!config || !key || !buffer) return invalid("cn_config_get: NULL argument");
  return guarded([&] {
    std::string value = get_override(config->cfg, key);
    if (value.size() + 1 > capacity) {
      throw std::runtime_error("cn_config_get: buffer too small for key '" + std::string(key) +
                               "'");
    }
    std::memcpy(buffer, value.c_str(), value.size() + 1);
  });
}

void cn_config_free(cn_config* config) { delete config; }

/* ---- corpus ------------------------------------------------------------ */

cn_status cn_corpus_load(const cn_config* config, const char* tsv_path, cn_corpus** out) {
  if (!out) return invalid("cn_corpus_load: out is NULL");
  return guarded([&] {
    RunConfig cfg = config ? config->cfg : RunConfig{};
    if (tsv_path) cfg.input_path = tsv_path;
    LoadedCorpus loaded = load_corpus(cfg);
    *out = new cn_corpus{std::move(loaded.corpus), std::move(loaded.report), loaded.raw_rows,
                         loaded.input_path};
  });
}

cn_status cn_corpus_filter(const cn_corpus* corpus, const char* mode, const char* period,
                           const char* quartets, cn_corpus** out) {
  if (!corpus || !out) return invalid("cn_corpus_filter: NULL argument");
  return guarded([&] {
    CorpusFilter f;
    f.mode = optional_mode(mode);
    if (period) f.period = period;
    if (quartets) {
      std::set<std::string> ids;
      for (auto& q : split(quartets, ',')) {
        std::string t = trim(q);
        if (!t.empty()) ids.insert(t);
      }
      f.quartets = std::move(ids);
    }
    *out = new cn_corpus{filter(corpus->corpus, f), corpus->report, corpus->raw_rows,
                         corpus->input_path};
  });
}

void cn_corpus_free(cn_corpus* corpus) { delete corpus; }

size_t cn_corpus_entries(const cn_corpus* corpus) { return corpus ? corpus->raw_rows : 0; }

size_t cn_corpus_events(const cn_corpus* corpus) {
  return corpus ? corpus->corpus.summary().total_events : 0;
}

size_t cn_corpus_segments(const cn_corpus* corpus) {
  return corpus ? corpus->corpus.summary().total_segments : 0;
}

size_t cn_corpus_segments_in_mode(const cn_corpus* corpus, const char* mode) {
  if (!corpus || !mode) return 0;
  try {
    return parse_mode(mode) == Mode::major ? corpus->corpus.summary().segments_major
                                           : corpus->corpus.summary().segments_minor;
  } catch (const std::exception&) {
    return 0;
  }
}

size_t cn_corpus_events_in_mode(const cn_corpus* corpus, const char* mode) {
  if (!corpus || !mode) return 0;
  try {
    return parse_mode(mode) == Mode::major ? corpus->corpus.summary().events_major
                                           : corpus->corpus.summary().events_minor;
  } catch (const std::exception&) {
    return 0;
  }
}

size_t cn_corpus_distinct_labels_in_mode(const cn_corpus* corpus, const char* mode) {
  if (!corpus || !mode) return 0;
  try {
    return parse_mode(mode) == Mode::major ? corpus->corpus.summary().distinct_major
                                           : corpus->corpus.summary().distinct_minor;
  } catch (const std::exception&) {
    return 0;
  }
}

size_t cn_corpus_cleaning_substitutions(const cn_corpus* corpus) {
  return corpus ? corpus->report.substitutions() : 0;
}

size_t cn_corpus_cleaning_warnings(const cn_corpus* corpus) {
  return corpus ? corpus->report.warnings() : 0;
}

cn_status cn_corpus_write_cleaning_report(const cn_corpus* corpus, const char* path) {
  if (!corpus || !path) return invalid("cn_corpus_write_cleaning_report: NULL argument");
  return guarded([&] { write_output(path, emit_cleaning_jsonl(corpus->report)); });
}

cn_status cn_corpus_write_summary_json(const cn_corpus* corpus, const char* path) {
  if (!corpus || !path) return invalid("cn_corpus_write_summary_json: NULL argument");
  return guarded([&] {
    LoadedCorpus loaded{corpus->corpus, corpus->report, corpus->raw_rows, corpus->input_path};
    write_output(path, emit_validate_summary_json(loaded));
  });
}

cn_status cn_corpus_fit_zipf(const cn_corpus* corpus, size_t first, size_t last,
                             const char* json_path) {
  if (!corpus || !json_path) return invalid("cn_corpus_fit_zipf: NULL argument");
  return guarded([&] {
    auto fit = fit_powerlaw(zipf_table(frequency_table(corpus->corpus)), first, last);
    write_output(json_path, emit_fit_json(fit));
  });
}

/* ---- graph -------------------------------------------------------------- */

cn_status cn_graph_build(const cn_corpus* corpus, cn_graph** out) {
  if (!corpus || !out) return invalid("cn_graph_build: NULL argument");
  return guarded([&] { *out = new cn_graph{build_graph(corpus->corpus)}; });
}

void cn_graph_free(cn_graph* graph) { delete graph; }

size_t cn_graph_vertices(const cn_graph* graph) { return graph ? graph->g.vertex_count() : 0; }

const char* cn_graph_label(const cn_graph* graph, size_t index) {
  if (!graph || index >= graph->g.vertex_count()) return nullptr;
  return graph->g.labels()[index].c_str();
}

int64_t cn_graph_weight(const cn_graph* graph, const char* from, const char* to) {
  if (!graph || !from || !to) return 0;
  const int i = graph->g.vertex(from);
  const int j = graph->g.vertex(to);
  if (i < 0 || j < 0) return 0;
  return graph->g.weight(i, j);
}

int64_t cn_graph_total_weight(const cn_graph* graph) {
  return graph ? graph->g.total_weight() : 0;
}

int64_t cn_graph_out_degree(const cn_graph* graph, const char* label) {
  if (!graph || !label) return 0;
  const int v = graph->g.vertex(label);
  return v < 0 ? 0 : graph->g.out_degree(v);
}

int64_t cn_graph_in_degree(const cn_graph* graph, const char* label) {
  if (!graph || !label) return 0;
  const int v = graph->g.vertex(label);
  return v < 0 ? 0 : graph->g.in_degree(v);
}

cn_status cn_graph_write_edges_tsv(const cn_graph* graph, const char* path) {
  if (!graph || !path) return invalid("cn_graph_write_edges_tsv: NULL argument");
  return guarded([&] { write_output(path, emit_edges_tsv(graph->g)); });
}

cn_status cn_graph_write_vertices_csv(const cn_graph* graph, const char* path) {
  if (!graph || !path) return invalid("cn_graph_write_vertices_csv: NULL argument");
  return guarded([&] { write_output(path, emit_vertices_csv(graph->g)); });
}

cn_status cn_graph_write_degree_csv(const cn_graph* graph, const char* direction,
                                    const char* path) {
  if (!graph || !direction || !path) return invalid("cn_graph_write_degree_csv: NULL argument");
  return guarded([&] {
    std::string d = to_lower(direction);
    if (d != "in" && d != "out") throw ConfigError("direction must be 'in' or 'out'");
    auto points = degree_distribution(graph->g, d == "in" ? Direction::in : Direction::out);
    write_output(path, emit_degree_csv(points));
  });
}

cn_status cn_graph_fit_degree(const cn_graph* graph, const char* direction, size_t first,
                              size_t last, const char* json_path) {
  if (!graph || !direction || !json_path) return invalid("cn_graph_fit_degree: NULL argument");
  return guarded([&] {
    std::string d = to_lower(direction);
    if (d != "in" && d != "out") throw ConfigError("direction must be 'in' or 'out'");
    auto points = degree_distribution(graph->g, d == "in" ? Direction::in : Direction::out);
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : points) {
      if (p.k <= 0 || p.count_above == 0) continue;
      xy.emplace_back(p.k_normalized, static_cast<double>(p.count_above));
    }
    write_output(json_path, emit_fit_json(fit_powerlaw(xy, first, last)));
  });
}

/* ---- spectral ----------------------------------------------------------- */

cn_status cn_google_build(const cn_graph* graph, double alpha, cn_google** out) {
  if (!graph || !out) return invalid("cn_google_build: NULL argument");
  return guarded([&] { *out = new cn_google{build_google(graph->g, alpha)}; });
}

void cn_google_free(cn_google* google) { delete google; }

size_t cn_google_size(const cn_google* google) { return google ? google->g.size() : 0; }

double cn_google_alpha(const cn_google* google) { return google ? google->g.alpha() : 0.0; }

double cn_google_entry(const cn_google* google, size_t row, size_t col) {
  if (!google || row >= google->g.size() || col >= google->g.size()) return 0.0;
  return google->g.matrix()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

cn_status cn_pagerank(const cn_google* google, double tol, long max_iter, cn_rankvec** out) {
  if (!google || !out) return invalid("cn_pagerank: NULL argument");
  return guarded([&] { *out = new cn_rankvec{pagerank(google->g, tol, max_iter)}; });
}

void cn_rankvec_free(cn_rankvec* ranks) { delete ranks; }

size_t cn_rankvec_size(const cn_rankvec* ranks) { return ranks ? ranks->v.size() : 0; }

const char* cn_rankvec_label(const cn_rankvec* ranks, size_t rank_index) {
  if (!ranks || rank_index >= ranks->v.size()) return nullptr;
  return ranks->v.by_rank()[rank_index].label.c_str();
}

double cn_rankvec_score_at(const cn_rankvec* ranks, size_t rank_index) {
  if (!ranks || rank_index >= ranks->v.size()) return 0.0;
  return ranks->v.by_rank()[rank_index].score;
}

double cn_rankvec_score(const cn_rankvec* ranks, const char* label) {
  if (!ranks || !label) return 0.0;
  return ranks->v.score(label);
}

cn_status cn_rankvec_write_csv(const cn_rankvec* ranks, const char* path) {
  if (!ranks || !path) return invalid("cn_rankvec_write_csv: NULL argument");
  return guarded([&] { write_output(path, emit_pagerank_csv(ranks->v)); });
}

cn_status cn_rankvec_fit(const cn_rankvec* ranks, size_t first, size_t last,
                         const char* json_path) {
  if (!ranks || !json_path) return invalid("cn_rankvec_fit: NULL argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = 0; i < ranks->v.size(); ++i) {
      xy.emplace_back(static_cast<double>(i + 1), ranks->v.by_rank()[i].score);
    }
    write_output(json_path, emit_fit_json(fit_powerlaw(xy, first, last)));
  });
}

cn_status cn_google_eigenvector_support(const cn_google* google, double re, double im,
                                        const char* csv_path) {
  if (!google || !csv_path) return invalid("cn_google_eigenvector_support: NULL argument");
  return guarded([&] {
    auto support = eigenvector_support(google->g, std::complex<double>(re, im));
    write_output(csv_path, emit_support_csv(support));
  });
}

cn_status cn_spectrum_compute(const cn_google* google, cn_spectrum** out) {
  if (!google || !out) return invalid("cn_spectrum_compute: NULL argument");
  return guarded([&] { *out = new cn_spectrum{spectrum(google->g)}; });
}

void cn_spectrum_free(cn_spectrum* spectrum) { delete spectrum; }

size_t cn_spectrum_size(const cn_spectrum* spectrum) {
  return spectrum ? spectrum->s.eigenvalues.size() : 0;
}

cn_status cn_spectrum_eigenvalue(const cn_spectrum* spectrum, size_t index, double* re,
                                 double* im) {
  if (!spectrum || !re || !im) return invalid("cn_spectrum_eigenvalue: NULL argument");
  if (index >= spectrum->s.eigenvalues.size()) {
    return invalid("cn_spectrum_eigenvalue: index out of range");
  }
  *re = spectrum->s.eigenvalues[index].real();
  *im = spectrum->s.eigenvalues[index].imag();
  return CN_OK;
}

cn_status cn_spectrum_write_csv(const cn_spectrum* spectrum, const char* path) {
  if (!spectrum || !path) return invalid("cn_spectrum_write_csv: NULL argument");
  return guarded([&] { write_output(path, emit_spectrum_csv(spectrum->s)); });
}

cn_status cn_fit_powerlaw(const double* xs, const double* ys, size_t n, size_t first,
                          size_t last, double* slope, double* intercept, double* residual) {
  if (!xs || !ys || !slope) return invalid("cn_fit_powerlaw: NULL argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(n);
    for (size_t i = 0; i < n; ++i) xy.emplace_back(xs[i], ys[i]);
    PowerLawFit fit = fit_powerlaw(xy, first, last);
    *slope = fit.slope;
    if (intercept) *intercept = fit.intercept;
    if (residual) *residual = fit.residual;
  });
}

/* ---- communities -------------------------------------------------------- */

cn_status cn_communities(const cn_graph* graph, int restarts, uint64_t seed,
                         cn_partition** out) {
  if (!graph || !out) return invalid("cn_communities: NULL argument");
  return guarded([&] {
    Partition p = best_partition(undirect(graph->g), restarts, seed);
    *out = new cn_partition{graph->g, std::move(p)};
  });
}

void cn_partition_free(cn_partition* partition) { delete partition; }

double cn_partition_modularity(const cn_partition* partition) {
  return partition ? partition->p.modularity : 0.0;
}

int cn_partition_count(const cn_partition* partition) {
  return partition ? partition->p.community_count() : 0;
}

int cn_partition_community_of(const cn_partition* partition, const char* label) {
  if (!partition || !label) return -1;
  const int v = partition->graph.vertex(label);
  if (v < 0) return -1;
  return partition->p.community[static_cast<std::size_t>(v)];
}

cn_status cn_partition_write_csv(const cn_partition* partition, const cn_rankvec* ranks,
                                 const char* path) {
  if (!partition || !ranks || !path) return invalid("cn_partition_write_csv: NULL argument");
  return guarded(
      [&] { write_output(path, emit_communities_csv(partition->graph, partition->p, ranks->v)); });
}

cn_status cn_partition_write_profiles_json(const cn_partition* partition,
                                           const cn_rankvec* ranks, int top,
                                           const char* path) {
  if (!partition || !ranks || !path) {
    return invalid("cn_partition_write_profiles_json: NULL argument");
  }
  return guarded([&] {
    auto profiles = community_profile(partition->graph, partition->p, ranks->v, top);
    write_output(path, emit_profiles_json(profiles, partition->p));
  });
}

cn_status cn_null_stats(const cn_graph* graph, int ensemble, int restarts, uint64_t seed,
                        int weighted, const char* method, const char* json_path,
                        double* mean, double* stddev) {
  if (!graph) return invalid("cn_null_stats: NULL graph");
  return guarded([&] {
    NullEnsembleStats stats = null_modularity_stats(undirect(graph->g), ensemble, restarts, seed,
                                                    weighted != 0, parse_rewire_method(method));
    if (mean) *mean = stats.mean;
    if (stddev) *stddev = stats.stddev;
    if (json_path) write_output(json_path, emit_null_stats_json(stats));
  });
}

/* ---- stylometry and stats ----------------------------------------------- */

cn_status cn_compare_periods(const cn_corpus* corpus, const char* mode, const char* metric,
                             int top_m, double alpha, double tol, const char* csv_path,
                             const char* json_path) {
  if (!corpus || !mode || !metric) return invalid("cn_compare_periods: NULL argument");
  return guarded([&] {
    Metric m;
    std::string ms = to_lower(metric);
    if (ms == "fidelity") {
      m = Metric::fidelity;
    } else if (ms == "similarity") {
      m = Metric::similarity;
    } else {
      throw ConfigError("unknown metric '" + std::string(metric) +
                        "' (expected fidelity or similarity)");
    }
    auto cells = period_comparison(corpus->corpus, parse_mode(mode), m, top_m, alpha, tol);
    if (csv_path) write_output(csv_path, emit_comparison_csv(cells, m));
    if (json_path) write_output(json_path, emit_comparison_json(cells, m));
  });
}

cn_status cn_stats_write(const cn_corpus* corpus, double alpha, double tol,
                         const char* out_dir) {
  if (!corpus || !out_dir) return invalid("cn_stats_write: NULL argument");
  return guarded([&] { write_stats_tables(corpus->corpus, alpha, tol, out_dir); });
}

/* ---- full pipeline ------------------------------------------------------ */

cn_status cn_report_run(const cn_config* config, const char* out_dir) {
  if (!config || !out_dir) return invalid("cn_report_run: NULL argument");
  return guarded([&] {
    RunConfig cfg = config->cfg;
    cfg.output_dir = out_dir;
    run_report(cfg);
  });
}

} /* extern "C" */
