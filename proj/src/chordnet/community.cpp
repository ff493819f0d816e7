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

#include "chordnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "chordnet/errors.hpp"
#include "chordnet/rng.hpp"

namespace chordnet {

int Partition::community_count() const {
  int c = 0;
  for (int id : community) c = std::max(c, id + 1);
  return c;
}

double modularity(const UndirectedGraph& g, const std::vector<int>& community) {
  const std::size_t n = g.vertex_count();
  if (community.size() != n) {
    throw DataError("partition covers " + std::to_string(community.size()) + " vertices, graph has " +
                    std::to_string(n));
  }
  if (g.total_m <= 0) throw DataError("modularity is undefined for a graph with no edges");
  for (int c : community) {
    if (c < 0) throw DataError("partition contains an unassigned vertex");
  }

  const double m = g.total_m;
  std::map<int, double> intra;    // L_c: intra-community edges once, loops once
  std::map<int, double> degrees;  // D_c
  for (std::size_t i = 0; i < n; ++i) {
    degrees[community[i]] += g.degree[i];
    intra[community[i]] += g.loop[i];
    for (const auto& [j, w] : g.neighbors[i]) {
      if (j > static_cast<int>(i) && community[static_cast<std::size_t>(j)] == community[i]) {
        intra[community[i]] += w;
      }
    }
  }
  double q = 0;
  for (const auto& [c, l] : intra) {
    const double d = degrees[c];
    q += l / m - (d / (2.0 * m)) * (d / (2.0 * m));
  }
  // Communities with degree but no intra edges still contribute -D^2/(2m)^2.
  for (const auto& [c, d] : degrees) {
    if (intra.find(c) == intra.end()) q -= (d / (2.0 * m)) * (d / (2.0 * m));
  }
  return q;
}

namespace {

// One sweep-until-stable local-moving phase. Returns true when at least one
// vertex changed community. Vertices move to the first candidate community
// with a strictly positive gain; the candidate order is seed-shuffled per
// visit so restarts explore different basins.
bool local_moving(const UndirectedGraph& g, std::vector<int>& com, Rng& rng) {
  const std::size_t n = g.vertex_count();
  const double m = g.total_m;
  std::vector<double> sum_tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) sum_tot[static_cast<std::size_t>(com[i])] += g.degree[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  bool any_move = false;
  bool moved = true;
  int pass = 0;
  const int max_passes = 1000;
  while (moved && pass++ < max_passes) {
    moved = false;
    for (std::size_t i : order) {
      const int old = com[i];
      sum_tot[static_cast<std::size_t>(old)] -= g.degree[i];

      // Weight from i to each neighboring community (loops excluded: they
      // follow i into any community and cancel out of the comparison).
      std::map<int, double> k_ic;
      k_ic[old];  // staying is always a candidate
      for (const auto& [j, w] : g.neighbors[i]) {
        k_ic[com[static_cast<std::size_t>(j)]] += w;
      }

      auto gain = [&](int c) {
        return k_ic[c] / m -
               sum_tot[static_cast<std::size_t>(c)] * g.degree[i] / (2.0 * m * m);
      };
      std::vector<int> candidates;
      candidates.reserve(k_ic.size());
      for (const auto& [c, kw] : k_ic) {
        if (c != old) candidates.push_back(c);
      }
      rng.shuffle(candidates);
      const double gain_old = gain(old);
      int target = old;
      for (int c : candidates) {
        if (gain(c) > gain_old + 1e-12) {
          target = c;
          break;
        }
      }
      sum_tot[static_cast<std::size_t>(target)] += g.degree[i];
      com[i] = target;
      if (target != old) {
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

std::vector<int> renumber(const std::vector<int>& com) {
  std::map<int, int> remap;
  std::vector<int> out(com.size());
  for (std::size_t i = 0; i < com.size(); ++i) {
    auto [it, inserted] = remap.emplace(com[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  return out;
}

UndirectedGraph aggregate(const UndirectedGraph& g, const std::vector<int>& com, int n_com) {
  UndirectedGraph a;
  a.labels.resize(static_cast<std::size_t>(n_com));
  for (int c = 0; c < n_com; ++c) a.labels[static_cast<std::size_t>(c)] = std::to_string(c);
  a.neighbors.resize(static_cast<std::size_t>(n_com));
  a.loop.assign(static_cast<std::size_t>(n_com), 0.0);
  a.degree.assign(static_cast<std::size_t>(n_com), 0.0);

  std::vector<std::map<int, double>> sym(static_cast<std::size_t>(n_com));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const int ci = com[i];
    a.loop[static_cast<std::size_t>(ci)] += g.loop[i];
    for (const auto& [j, w] : g.neighbors[i]) {
      if (j <= static_cast<int>(i)) continue;  // each undirected edge once
      const int cj = com[static_cast<std::size_t>(j)];
      if (ci == cj) {
        a.loop[static_cast<std::size_t>(ci)] += w;
      } else {
        sym[static_cast<std::size_t>(ci)][cj] += w;
        sym[static_cast<std::size_t>(cj)][ci] += w;
      }
    }
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(n_com); ++c) {
    a.neighbors[c].assign(sym[c].begin(), sym[c].end());
    double adjacent = 0;
    for (const auto& [j, w] : a.neighbors[c]) adjacent += w;
    a.degree[c] = adjacent + 2.0 * a.loop[c];
    a.total_m += a.loop[c];
    for (const auto& [j, w] : a.neighbors[c]) {
      if (j > static_cast<int>(c)) a.total_m += w;
    }
  }
  return a;
}

}  // namespace

Partition louvain(const UndirectedGraph& g, std::uint64_t seed) {
  if (g.total_m <= 0) throw DataError("Louvain requires a graph with at least one edge");
  Rng rng(seed);

  // assignment[v] = community of original vertex v, tracked across levels.
  std::vector<int> assignment(g.vertex_count());
  std::iota(assignment.begin(), assignment.end(), 0);

  UndirectedGraph level = g;
  std::vector<int> level_com(level.vertex_count());
  std::iota(level_com.begin(), level_com.end(), 0);

  while (true) {
    std::iota(level_com.begin(), level_com.end(), 0);
    const bool improved = local_moving(level, level_com, rng);
    if (!improved) break;
    level_com = renumber(level_com);
    const int n_com = 1 + *std::max_element(level_com.begin(), level_com.end());
    for (int& a : assignment) a = level_com[static_cast<std::size_t>(a)];
    if (static_cast<std::size_t>(n_com) == level.vertex_count()) break;
    level = aggregate(level, level_com, n_com);
    level_com.assign(level.vertex_count(), 0);
  }

  Partition p;
  p.community = renumber(assignment);
  p.modularity = modularity(g, p.community);
  p.seed = seed;
  p.restarts = 1;
  p.restart_scores = {p.modularity};
  return p;
}

Partition best_partition(const UndirectedGraph& g, int restarts, std::uint64_t base_seed) {
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  Partition best;
  std::vector<double> scores;
  scores.reserve(static_cast<std::size_t>(restarts));
  for (int t = 0; t < restarts; ++t) {
    Partition p = louvain(g, base_seed + static_cast<std::uint64_t>(t));
    scores.push_back(p.modularity);
    if (t == 0 || p.modularity > best.modularity) best = std::move(p);
  }
  best.restarts = restarts;
  best.restart_scores = std::move(scores);
  return best;
}

std::vector<CommunityProfile> community_profile(const ChordGraph& g, const Partition& partition,
                                                const RankVector& p, int top) {
  if (partition.community.size() != g.vertex_count()) {
    throw DataError("partition and graph disagree on vertex count");
  }
  if (p.size() != g.vertex_count()) {
    throw DataError("rank vector and graph disagree on vertex count");
  }
  for (const auto& label : g.labels()) {
    if (!p.has(label)) throw DataError("rank vector is missing label '" + label + "'");
  }

  const int n_com = partition.community_count();
  std::vector<CommunityProfile> profiles(static_cast<std::size_t>(n_com));
  for (int c = 0; c < n_com; ++c) profiles[static_cast<std::size_t>(c)].id = c;
  std::vector<std::vector<RankEntry>> members(static_cast<std::size_t>(n_com));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto c = static_cast<std::size_t>(partition.community[v]);
    const std::string& label = g.labels()[v];
    members[c].push_back({label, p.score(label)});
    profiles[c].size += 1;
    profiles[c].pagerank_mass += p.score(label);
  }
  for (std::size_t c = 0; c < members.size(); ++c) {
    auto& list = members[c];
    std::sort(list.begin(), list.end(), [](const RankEntry& a, const RankEntry& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.label < b.label;
    });
    if (top >= 0 && list.size() > static_cast<std::size_t>(top)) {
      list.resize(static_cast<std::size_t>(top));
    }
    profiles[c].top = std::move(list);
  }
  std::sort(profiles.begin(), profiles.end(), [](const CommunityProfile& a, const CommunityProfile& b) {
    if (a.pagerank_mass != b.pagerank_mass) return a.pagerank_mass > b.pagerank_mass;
    return a.id < b.id;
  });
  return profiles;
}

namespace {

std::int64_t integral_weight(double w) {
  const double r = std::round(w);
  if (std::abs(w - r) > 1e-9 || r < 0) {
    throw DataError("degree-preserving rewiring requires non-negative integer weights");
  }
  return static_cast<std::int64_t>(r);
}

UndirectedGraph from_edge_list(const std::vector<std::string>& labels,
                               const std::vector<std::pair<int, int>>& edges) {
  const std::size_t n = labels.size();
  UndirectedGraph u;
  u.labels = labels;
  u.neighbors.resize(n);
  u.loop.assign(n, 0.0);
  u.degree.assign(n, 0.0);
  std::vector<std::map<int, double>> sym(n);
  for (auto [a, b] : edges) {
    if (a == b) {
      u.loop[static_cast<std::size_t>(a)] += 1.0;
    } else {
      sym[static_cast<std::size_t>(a)][b] += 1.0;
      sym[static_cast<std::size_t>(b)][a] += 1.0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    u.neighbors[i].assign(sym[i].begin(), sym[i].end());
    double adjacent = 0;
    for (const auto& [j, w] : u.neighbors[i]) adjacent += w;
    u.degree[i] = adjacent + 2.0 * u.loop[i];
    u.total_m += u.loop[i];
    for (const auto& [j, w] : u.neighbors[i]) {
      if (j > static_cast<int>(i)) u.total_m += w;
    }
  }
  return u;
}

// Multigraph edge list with each unit of weight as one edge; unweighted mode
// collapses multiplicities first.
std::vector<std::pair<int, int>> edge_list(const UndirectedGraph& g, bool weighted) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::int64_t loops = integral_weight(g.loop[i]);
    const std::int64_t loop_count = weighted ? loops : (loops > 0 ? 1 : 0);
    for (std::int64_t c = 0; c < loop_count; ++c) {
      edges.emplace_back(static_cast<int>(i), static_cast<int>(i));
    }
    for (const auto& [j, w] : g.neighbors[i]) {
      if (j < static_cast<int>(i)) continue;
      const std::int64_t count = weighted ? integral_weight(w) : 1;
      for (std::int64_t c = 0; c < count; ++c) {
        edges.emplace_back(static_cast<int>(i), j);
      }
    }
  }
  return edges;
}

}  // namespace

UndirectedGraph configuration_rewire(const UndirectedGraph& g, std::uint64_t seed, bool weighted,
                                     RewireMethod method) {
  if (g.total_m <= 0) throw DataError("cannot rewire a graph with no edges");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges = edge_list(g, weighted);

  if (method == RewireMethod::stub_matching) {
    std::vector<int> stubs;
    stubs.reserve(edges.size() * 2);
    for (auto [a, b] : edges) {
      stubs.push_back(a);
      stubs.push_back(b);
    }
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> rewired;
    rewired.reserve(edges.size());
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      rewired.emplace_back(stubs[k], stubs[k + 1]);
    }
    return from_edge_list(g.labels, rewired);
  }

  // Double-edge swaps: (a,b),(c,d) -> (a,d),(c,b). Degrees are invariant.
  const std::size_t n_swaps = edges.size() * 10;
  for (std::size_t s = 0; s < n_swaps; ++s) {
    const std::size_t e1 = static_cast<std::size_t>(rng.bounded(edges.size()));
    const std::size_t e2 = static_cast<std::size_t>(rng.bounded(edges.size()));
    if (e1 == e2) continue;
    auto& [a, b] = edges[e1];
    auto& [c, d] = edges[e2];
    if (rng.bounded(2) == 0) std::swap(c, d);
    std::swap(b, d);
  }
  return from_edge_list(g.labels, edges);
}

NullEnsembleStats null_modularity_stats(const UndirectedGraph& g, int ensemble, int restarts,
                                        std::uint64_t seed, bool weighted, RewireMethod method) {
  if (ensemble < 2) throw ConfigError("null ensemble size must be >= 2");
  NullEnsembleStats stats;
  stats.ensemble = ensemble;
  stats.restarts = restarts;
  stats.values.reserve(static_cast<std::size_t>(ensemble));
  for (int e = 0; e < ensemble; ++e) {
    const std::uint64_t rewire_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(e));
    const std::uint64_t louvain_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(e) + 1);
    UndirectedGraph rewired = configuration_rewire(g, rewire_seed, weighted, method);
    stats.values.push_back(best_partition(rewired, restarts, louvain_seed).modularity);
  }
  double sum = 0;
  for (double v : stats.values) sum += v;
  stats.mean = sum / static_cast<double>(ensemble);
  double ss = 0;
  for (double v : stats.values) ss += (v - stats.mean) * (v - stats.mean);
  stats.stddev = std::sqrt(ss / static_cast<double>(ensemble - 1));
  return stats;
}

}  // namespace chordnet
