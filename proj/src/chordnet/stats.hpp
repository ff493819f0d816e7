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

#ifndef CHORDNET_STATS_HPP_
#define CHORDNET_STATS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordnet/annotations.hpp"

namespace chordnet {

// Occurrence counts with ranks assigned by descending count, ties broken
// lexicographically by label.
struct FrequencyTable {
  std::vector<std::pair<std::string, std::int64_t>> by_rank;
  std::map<std::string, std::int64_t> counts;

  std::int64_t count(const std::string& label) const;
  std::size_t rank_of(const std::string& label) const;  // 1-based, 0 if absent
  std::int64_t total() const;
};

FrequencyTable frequency_table(const Corpus& corpus);

// (rank, frequency) pairs, rank ascending; input for the Zipf tail fit.
std::vector<std::pair<double, double>> zipf_table(const FrequencyTable& table);

// Within-segment adjacent pairs; identical to the edge weights of the graph
// built from the same corpus.
using BigramMatrix = std::map<std::pair<std::string, std::string>, std::int64_t>;

BigramMatrix bigram_matrix(const Corpus& corpus);

struct RankJoinRow {
  std::string label;
  std::int64_t frequency = 0;
  std::size_t frequency_rank = 0;
  double pagerank = 0;
  std::size_t pagerank_rank = 0;
};

// Frequency rank joined with PageRank rank per label, ordered by frequency
// rank. Surfaces chords whose network importance diverges from raw counts.
std::vector<RankJoinRow> pagerank_vs_frequency(const Corpus& corpus, double alpha,
                                               double tol = 1e-12);

}  // namespace chordnet

#endif  // CHORDNET_STATS_HPP_
