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

#ifndef CHORDNET_COMMUNITY_HPP_
#define CHORDNET_COMMUNITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "chordnet/network.hpp"
#include "chordnet/spectral.hpp"

namespace chordnet {

struct Partition {
  std::vector<int> community;          // per vertex, contiguous ids 0..C-1
  double modularity = 0;
  std::uint64_t seed = 0;
  int restarts = 1;
  std::vector<double> restart_scores;  // one best score per restart

  int community_count() const;
};

// Normalized modularity Q = (1/2m) sum_C sum_{i,j in C} [a_ij - d_i d_j/(2m)]
// with the loop convention that makes the one-community partition score
// exactly 0. Accepts any non-negative community ids covering all vertices.
double modularity(const UndirectedGraph& g, const std::vector<int>& community);

// Greedy local moving plus graph aggregation, deterministic for a given
// seed. A vertex moves to the first seed-enumerated candidate community
// with strictly positive gain.
Partition louvain(const UndirectedGraph& g, std::uint64_t seed);

// Best of `restarts` runs with seeds base_seed .. base_seed + restarts - 1.
Partition best_partition(const UndirectedGraph& g, int restarts, std::uint64_t base_seed = 0);

struct CommunityProfile {
  int id = 0;
  std::size_t size = 0;
  double pagerank_mass = 0;
  std::vector<RankEntry> top;  // highest-PageRank members first
};

// Per-community membership summaries ordered by descending PageRank mass.
std::vector<CommunityProfile> community_profile(const ChordGraph& g, const Partition& partition,
                                                const RankVector& p, int top);

enum class RewireMethod { stub_matching, edge_swap };

// Degree-preserving randomization. Stub matching re-pairs all edge stubs;
// edge swapping performs 10|E| double-edge swaps. Multi-edges and loops are
// allowed, matching the source being a multigraph. Weighted mode preserves
// weighted degrees exactly; unweighted mode preserves distinct-neighbor
// counts instead.
UndirectedGraph configuration_rewire(const UndirectedGraph& g, std::uint64_t seed,
                                     bool weighted = true,
                                     RewireMethod method = RewireMethod::stub_matching);

struct NullEnsembleStats {
  int ensemble = 0;
  int restarts = 0;
  double mean = 0;
  double stddev = 0;           // sample standard deviation
  std::vector<double> values;  // best modularity per rewired graph
};

// Best-found modularity over `ensemble` degree-preserving rewirings.
NullEnsembleStats null_modularity_stats(const UndirectedGraph& g, int ensemble, int restarts,
                                        std::uint64_t seed, bool weighted = true,
                                        RewireMethod method = RewireMethod::stub_matching);

}  // namespace chordnet

#endif  // CHORDNET_COMMUNITY_HPP_
