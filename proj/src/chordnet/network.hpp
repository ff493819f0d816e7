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

#ifndef CHORDNET_NETWORK_HPP_
#define CHORDNET_NETWORK_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordnet/annotations.hpp"

namespace chordnet {

// Weighted directed multigraph over distinct chord labels. Vertex ids are
// positions in the lexicographically sorted label list, so matrices, ranks
// and exports are reproducible.
class ChordGraph {
 public:
  ChordGraph() = default;

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  int vertex(const std::string& label) const;  // -1 when absent

  std::int64_t weight(int from, int to) const;
  const std::map<int, std::int64_t>& out_edges(int v) const { return out_[v]; }
  std::int64_t out_degree(int v) const { return out_degree_[v]; }
  std::int64_t in_degree(int v) const { return in_degree_[v]; }
  std::int64_t total_weight() const { return total_weight_; }

  void add_transition(int from, int to, std::int64_t count = 1);

  static ChordGraph over_labels(std::vector<std::string> sorted_labels);

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::map<int, std::int64_t>> out_;
  std::vector<std::int64_t> out_degree_;
  std::vector<std::int64_t> in_degree_;
  std::int64_t total_weight_ = 0;
};

// One vertex per distinct label, w(i->j) adjacent pairs inside segments.
// Throws DataError for a corpus with zero chords.
ChordGraph build_graph(const Corpus& corpus);

// One graph per period, in the corpus's period order.
std::vector<std::pair<std::string, ChordGraph>> build_period_graphs(const Corpus& corpus);

// Undirected projection. a_ij = w(i->j) + w(j->i) for i != j, loops kept at
// their directed weight; degrees count loops twice; m = sum_{i<j} a_ij +
// sum_i a_ii so that total weight is conserved.
struct UndirectedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<std::pair<int, double>>> neighbors;  // j != i, sorted by j
  std::vector<double> loop;    // a_ii
  std::vector<double> degree;  // d_i = sum_{j != i} a_ij + 2 a_ii
  double total_m = 0;

  std::size_t vertex_count() const { return labels.size(); }
  double degree_sum() const;
};

UndirectedGraph undirect(const ChordGraph& g);

enum class Direction { in, out };

// Cumulative degree distribution: for every realized degree k, the number
// of vertices with degree strictly greater than k, with k normalized by
// its maximum. Weighted degrees by default.
struct DegreePoint {
  std::int64_t k = 0;
  double k_normalized = 0;
  std::size_t count_above = 0;
};

std::vector<DegreePoint> degree_distribution(const ChordGraph& g, Direction direction,
                                             bool weighted = true);

}  // namespace chordnet

#endif  // CHORDNET_NETWORK_HPP_
