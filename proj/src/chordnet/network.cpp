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

#include "chordnet/network.hpp"

#include <algorithm>
#include <set>

#include "chordnet/errors.hpp"

namespace chordnet {

int ChordGraph::vertex(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t ChordGraph::weight(int from, int to) const {
  const auto& edges = out_[static_cast<std::size_t>(from)];
  auto it = edges.find(to);
  return it == edges.end() ? 0 : it->second;
}

void ChordGraph::add_transition(int from, int to, std::int64_t count) {
  out_[static_cast<std::size_t>(from)][to] += count;
  out_degree_[static_cast<std::size_t>(from)] += count;
  in_degree_[static_cast<std::size_t>(to)] += count;
  total_weight_ += count;
}

ChordGraph ChordGraph::over_labels(std::vector<std::string> sorted_labels) {
  ChordGraph g;
  g.labels_ = std::move(sorted_labels);
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    g.index_[g.labels_[i]] = static_cast<int>(i);
  }
  g.out_.resize(g.labels_.size());
  g.out_degree_.assign(g.labels_.size(), 0);
  g.in_degree_.assign(g.labels_.size(), 0);
  return g;
}

ChordGraph build_graph(const Corpus& corpus) {
  if (corpus.total_events() == 0) {
    throw DataError("cannot build a graph from a corpus with zero chords");
  }
  std::set<std::string> label_set;
  for (const auto& seg : corpus.segments()) {
    for (const auto& ev : seg.events) label_set.insert(ev.label);
  }
  ChordGraph g = ChordGraph::over_labels({label_set.begin(), label_set.end()});
  for (const auto& seg : corpus.segments()) {
    for (std::size_t i = 0; i + 1 < seg.events.size(); ++i) {
      g.add_transition(g.vertex(seg.events[i].label), g.vertex(seg.events[i + 1].label));
    }
  }
  return g;
}

std::vector<std::pair<std::string, ChordGraph>> build_period_graphs(const Corpus& corpus) {
  std::vector<std::pair<std::string, ChordGraph>> out;
  for (const auto& period : corpus.periods()) {
    CorpusFilter f;
    f.period = period;
    out.emplace_back(period, build_graph(filter(corpus, f)));
  }
  return out;
}

double UndirectedGraph::degree_sum() const {
  double s = 0;
  for (double d : degree) s += d;
  return s;
}

UndirectedGraph undirect(const ChordGraph& g) {
  const std::size_t n = g.vertex_count();
  UndirectedGraph u;
  u.labels = g.labels();
  u.neighbors.resize(n);
  u.loop.assign(n, 0.0);
  u.degree.assign(n, 0.0);

  std::vector<std::map<int, double>> sym(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, w] : g.out_edges(static_cast<int>(i))) {
      if (static_cast<std::size_t>(j) == i) {
        u.loop[i] += static_cast<double>(w);
      } else {
        sym[i][j] += static_cast<double>(w);
        sym[static_cast<std::size_t>(j)][static_cast<int>(i)] += static_cast<double>(w);
      }
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

std::vector<DegreePoint> degree_distribution(const ChordGraph& g, Direction direction,
                                             bool weighted) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DataError("degree distribution of an empty graph");

  std::vector<std::int64_t> degrees(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (weighted) {
      degrees[v] = direction == Direction::out ? g.out_degree(static_cast<int>(v))
                                               : g.in_degree(static_cast<int>(v));
    } else {
      if (direction == Direction::out) {
        degrees[v] = static_cast<std::int64_t>(g.out_edges(static_cast<int>(v)).size());
      } else {
        std::int64_t distinct_in = 0;
        for (std::size_t w = 0; w < n; ++w) {
          if (g.weight(static_cast<int>(w), static_cast<int>(v)) > 0) ++distinct_in;
        }
        degrees[v] = distinct_in;
      }
    }
  }

  std::set<std::int64_t> realized(degrees.begin(), degrees.end());
  std::int64_t k_max = *realized.rbegin();
  std::vector<DegreePoint> points;
  for (std::int64_t k : realized) {
    DegreePoint p;
    p.k = k;
    p.k_normalized = k_max > 0 ? static_cast<double>(k) / static_cast<double>(k_max) : 0.0;
    p.count_above = static_cast<std::size_t>(
        std::count_if(degrees.begin(), degrees.end(), [&](std::int64_t d) { return d > k; }));
    points.push_back(p);
  }
  return points;
}

}  // namespace chordnet
