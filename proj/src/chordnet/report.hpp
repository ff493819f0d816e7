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

#ifndef CHORDNET_REPORT_HPP_
#define CHORDNET_REPORT_HPP_

#include <string>
#include <vector>

#include "chordnet/annotations.hpp"
#include "chordnet/community.hpp"
#include "chordnet/config.hpp"
#include "chordnet/network.hpp"
#include "chordnet/spectral.hpp"
#include "chordnet/stats.hpp"
#include "chordnet/stylometry.hpp"

namespace chordnet {

// Emitters return full file contents; all floating point goes through
// format_double so identical runs produce identical bytes.
std::string emit_edges_tsv(const ChordGraph& g);
std::string emit_vertices_csv(const ChordGraph& g);
std::string emit_pagerank_csv(const RankVector& p);
std::string emit_spectrum_csv(const Spectrum& s);
std::string emit_support_csv(const std::vector<SupportEntry>& support);
std::string emit_degree_csv(const std::vector<DegreePoint>& points);
std::string emit_communities_csv(const ChordGraph& g, const Partition& partition,
                                 const RankVector& p);
std::string emit_profiles_json(const std::vector<CommunityProfile>& profiles,
                               const Partition& partition);
std::string emit_null_stats_json(const NullEnsembleStats& stats);
std::string emit_fit_json(const PowerLawFit& fit);
std::string emit_frequencies_csv(const FrequencyTable& table);
std::string emit_zipf_csv(const std::vector<std::pair<double, double>>& zipf);
std::string emit_bigrams_csv(const BigramMatrix& bigrams);
std::string emit_rank_join_csv(const std::vector<RankJoinRow>& rows);
std::string emit_comparison_csv(const std::vector<ComparisonCell>& cells, Metric metric);
std::string emit_comparison_json(const std::vector<ComparisonCell>& cells, Metric metric);
std::string emit_cleaning_jsonl(const CleaningReport& report);

void write_file(const std::string& path, const std::string& content);

// Loaded + cleaned + segmented corpus with its cleaning report.
struct LoadedCorpus {
  Corpus corpus;
  CleaningReport report;
  std::size_t raw_rows = 0;
  std::string input_path;
};

LoadedCorpus load_corpus(const RunConfig& config);

std::string emit_validate_summary_json(const LoadedCorpus& loaded);

// Frequency/Zipf tables for the whole corpus plus bigram and rank-join
// tables per mode present. Returns the paths written.
std::vector<std::string> write_stats_tables(const Corpus& corpus, double alpha, double tol,
                                            const std::string& out_dir);

// Writes the full analysis bundle (per mode and per period: graph exports,
// PageRank, spectrum, communities, null stats, fits, comparisons, stats
// tables) under config.output_dir, then the manifest. Throws with the
// failing stage named; the manifest is only written when every stage
// succeeded.
std::string run_report(const RunConfig& config);  // returns manifest path

}  // namespace chordnet

#endif  // CHORDNET_REPORT_HPP_
