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

#ifndef CHORDNET_STYLOMETRY_HPP_
#define CHORDNET_STYLOMETRY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "chordnet/annotations.hpp"
#include "chordnet/network.hpp"
#include "chordnet/spectral.hpp"

namespace chordnet {

// Two score vectors embedded over the union of their label sets, absent
// labels filled with zero. Each vector's own scores are preserved exactly.
struct AlignedVectorPair {
  std::vector<std::string> labels;  // sorted union
  std::vector<double> a;
  std::vector<double> b;
};

AlignedVectorPair align(const RankVector& p, const RankVector& q);

// Squared L2 inner product of the union-aligned, L2-normalized vectors.
// 1 for proportional vectors, 0 for disjoint supports. Throws DataError on
// a zero vector.
double fidelity(const RankVector& p, const RankVector& q);

// Size of the intersection of the two top-m label sets (scores descending,
// ties lexicographic). m is clamped to the smaller label count.
int similarity(const RankVector& p, const RankVector& q, int top_m = 30);

// One graph per unordered pair of quartets of the period/mode, built from
// those two quartets' segments only. Throws DataError when fewer than two
// quartets have segments there.
struct QuartetPairGraph {
  std::string quartet_a;
  std::string quartet_b;
  ChordGraph graph;
};

std::vector<QuartetPairGraph> pair_graphs(const Corpus& corpus, const std::string& period,
                                          Mode mode);

struct PairVector {
  std::string quartet_a;
  std::string quartet_b;  // equals quartet_a for single-quartet fallbacks
  RankVector ranks;
};

// PageRank vector of every quartet-pair graph; a period with exactly one
// eligible quartet contributes its single-quartet vector so cross-period
// comparisons stay possible.
std::vector<PairVector> pair_vectors(const Corpus& corpus, const std::string& period, Mode mode,
                                     double alpha, double tol);

enum class Metric { fidelity, similarity };

struct ComparisonValue {
  std::string vectors_a;  // "q1+q2" naming of the first vector
  std::string vectors_b;
  double value = 0;
  int density = 0;  // values of the same cell within 0.002
};

struct ComparisonCell {
  std::string period_i;
  std::string period_j;
  std::vector<ComparisonValue> values;
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 when fewer than 2 values
};

// Evaluates the metric over all admissible vector pairs for every period
// pair i <= j: all pairs across periods, only quartet-disjoint pairs within
// one period. Cells are ordered by (i, j) in the corpus period order.
std::vector<ComparisonCell> period_comparison(const Corpus& corpus, Mode mode, Metric metric,
                                              int top_m, double alpha, double tol);

}  // namespace chordnet

#endif  // CHORDNET_STYLOMETRY_HPP_
