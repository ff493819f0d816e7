/* Copyright 2026 chordnet contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* chordnet: chord-transition network analysis of harmonic annotation
 * corpora. C API over the C++ core: opaque handles, status codes, and
 * thread-local error messages via cn_last_error().
 *
 * Conventions:
 *   - every *_free() accepts NULL;
 *   - functions returning cn_status write results through out-parameters
 *     only on CN_OK;
 *   - any `path` argument accepts "-" for stdout;
 *   - returned strings stay owned by their handle and are valid until the
 *     handle is freed or the same accessor is called again.
 */

#ifndef CHORDNET_H_
#define CHORDNET_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cn_status {
  CN_OK = 0,
  CN_ERROR_CONFIG = 1,  /* user/config error (also the CLI exit code) */
  CN_ERROR_DATA = 2,    /* data error */
  CN_ERROR_NUMERIC = 3, /* numerical failure */
  CN_ERROR_IO = 4,      /* unreadable/unwritable file */
  CN_ERROR_INVALID = 5  /* API misuse (null handle, bad index) */
} cn_status;

typedef struct cn_config cn_config;
typedef struct cn_corpus cn_corpus;
typedef struct cn_graph cn_graph;
typedef struct cn_google cn_google;
typedef struct cn_rankvec cn_rankvec;
typedef struct cn_spectrum cn_spectrum;
typedef struct cn_partition cn_partition;

const char* cn_version(void);
/* Message of the most recent failure on this thread; never NULL. */
const char* cn_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Defaults target the public ABC all_annotations.tsv schema. */
cn_status cn_config_create(cn_config** out);
cn_status cn_config_load(const char* json_path, cn_config** out);
/* Dotted keys, e.g. "alpha", "columns.numeral", "zipf_window" ("10:300"). */
cn_status cn_config_set(cn_config* config, const char* key, const char* value);
/* Reads a value back as text (unset optionals read as ""). Fails with
 * CN_ERROR_INVALID when the buffer is too small. */
cn_status cn_config_get(const cn_config* config, const char* key, char* buffer,
                        size_t capacity);
void cn_config_free(cn_config* config);

/* ---- corpus: load + clean + segment ----------------------------------- */

/* tsv_path may be NULL to use the config's input path. */
cn_status cn_corpus_load(const cn_config* config, const char* tsv_path, cn_corpus** out);
/* Any filter may be NULL; quartets is a comma-separated list ("" = none). */
cn_status cn_corpus_filter(const cn_corpus* corpus, const char* mode, const char* period,
                           const char* quartets, cn_corpus** out);
void cn_corpus_free(cn_corpus* corpus);

size_t cn_corpus_entries(const cn_corpus* corpus); /* raw data rows loaded */
size_t cn_corpus_events(const cn_corpus* corpus);
size_t cn_corpus_segments(const cn_corpus* corpus);
size_t cn_corpus_segments_in_mode(const cn_corpus* corpus, const char* mode);
size_t cn_corpus_events_in_mode(const cn_corpus* corpus, const char* mode);
size_t cn_corpus_distinct_labels_in_mode(const cn_corpus* corpus, const char* mode);
size_t cn_corpus_cleaning_substitutions(const cn_corpus* corpus);
size_t cn_corpus_cleaning_warnings(const cn_corpus* corpus);
/* Cleaning report as JSON lines with file:line provenance. */
cn_status cn_corpus_write_cleaning_report(const cn_corpus* corpus, const char* path);
cn_status cn_corpus_write_summary_json(const cn_corpus* corpus, const char* path);
/* Zipf tail fit of the corpus frequency table; window is 0-based, half
 * open, last = 0 meaning "to the end". */
cn_status cn_corpus_fit_zipf(const cn_corpus* corpus, size_t first, size_t last,
                             const char* json_path);

/* ---- transition graph -------------------------------------------------- */

cn_status cn_graph_build(const cn_corpus* corpus, cn_graph** out);
void cn_graph_free(cn_graph* graph);
size_t cn_graph_vertices(const cn_graph* graph);
const char* cn_graph_label(const cn_graph* graph, size_t index);
int64_t cn_graph_weight(const cn_graph* graph, const char* from, const char* to);
int64_t cn_graph_total_weight(const cn_graph* graph);
int64_t cn_graph_out_degree(const cn_graph* graph, const char* label);
int64_t cn_graph_in_degree(const cn_graph* graph, const char* label);
cn_status cn_graph_write_edges_tsv(const cn_graph* graph, const char* path);
cn_status cn_graph_write_vertices_csv(const cn_graph* graph, const char* path);
/* direction is "in" or "out". */
cn_status cn_graph_write_degree_csv(const cn_graph* graph, const char* direction,
                                    const char* path);
cn_status cn_graph_fit_degree(const cn_graph* graph, const char* direction, size_t first,
                              size_t last, const char* json_path);

/* ---- Google matrix, PageRank, spectrum --------------------------------- */

cn_status cn_google_build(const cn_graph* graph, double alpha, cn_google** out);
void cn_google_free(cn_google* google);
size_t cn_google_size(const cn_google* google);
double cn_google_alpha(const cn_google* google);
double cn_google_entry(const cn_google* google, size_t row, size_t col);

cn_status cn_pagerank(const cn_google* google, double tol, long max_iter, cn_rankvec** out);
void cn_rankvec_free(cn_rankvec* ranks);
size_t cn_rankvec_size(const cn_rankvec* ranks);
/* rank_index is 0-based in rank order (0 = highest score). */
const char* cn_rankvec_label(const cn_rankvec* ranks, size_t rank_index);
double cn_rankvec_score_at(const cn_rankvec* ranks, size_t rank_index);
double cn_rankvec_score(const cn_rankvec* ranks, const char* label);
cn_status cn_rankvec_write_csv(const cn_rankvec* ranks, const char* path);
cn_status cn_rankvec_fit(const cn_rankvec* ranks, size_t first, size_t last,
                         const char* json_path);

/* Labels sorted by descending eigenvector amplitude for the eigenvalue
 * closest to re + im*i, which must match a computed eigenvalue within
 * 1e-6. CSV columns: label,amplitude. */
cn_status cn_google_eigenvector_support(const cn_google* google, double re, double im,
                                        const char* csv_path);

cn_status cn_spectrum_compute(const cn_google* google, cn_spectrum** out);
void cn_spectrum_free(cn_spectrum* spectrum);
size_t cn_spectrum_size(const cn_spectrum* spectrum);
/* index 0 = largest modulus. */
cn_status cn_spectrum_eigenvalue(const cn_spectrum* spectrum, size_t index, double* re,
                                 double* im);
cn_status cn_spectrum_write_csv(const cn_spectrum* spectrum, const char* path);

/* Least squares on (log x, log y) over the half-open window [first, last). */
cn_status cn_fit_powerlaw(const double* xs, const double* ys, size_t n, size_t first,
                          size_t last, double* slope, double* intercept, double* residual);

/* ---- communities -------------------------------------------------------- */

/* Best-of-`restarts` Louvain partitions with seeds seed..seed+restarts-1. */
cn_status cn_communities(const cn_graph* graph, int restarts, uint64_t seed,
                         cn_partition** out);
void cn_partition_free(cn_partition* partition);
double cn_partition_modularity(const cn_partition* partition);
int cn_partition_count(const cn_partition* partition);
int cn_partition_community_of(const cn_partition* partition, const char* label); /* -1 absent */
cn_status cn_partition_write_csv(const cn_partition* partition, const cn_rankvec* ranks,
                                 const char* path);
cn_status cn_partition_write_profiles_json(const cn_partition* partition,
                                           const cn_rankvec* ranks, int top,
                                           const char* path);

/* Degree-preserving null ensemble; method is "stub" or "swap"; mean/stddev
 * may be NULL; json_path may be NULL to skip the file. */
cn_status cn_null_stats(const cn_graph* graph, int ensemble, int restarts, uint64_t seed,
                        int weighted, const char* method, const char* json_path,
                        double* mean, double* stddev);

/* ---- stylometry and corpus statistics ----------------------------------- */

/* metric is "fidelity" or "similarity"; either output path may be NULL. */
cn_status cn_compare_periods(const cn_corpus* corpus, const char* mode, const char* metric,
                             int top_m, double alpha, double tol, const char* csv_path,
                             const char* json_path);
/* Frequency/Zipf/bigram/rank-join tables under out_dir. */
cn_status cn_stats_write(const cn_corpus* corpus, double alpha, double tol,
                         const char* out_dir);

/* ---- full pipeline ------------------------------------------------------ */

/* Runs the whole analysis bundle for config's input into out_dir and writes
 * manifest.json last. */
cn_status cn_report_run(const cn_config* config, const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHORDNET_H_ */
