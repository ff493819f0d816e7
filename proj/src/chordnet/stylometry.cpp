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

#include "chordnet/stylometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chordnet/errors.hpp"

namespace chordnet {

AlignedVectorPair align(const RankVector& p, const RankVector& q) {
  std::set<std::string> unions;
  for (const auto& e : p.by_rank()) unions.insert(e.label);
  for (const auto& e : q.by_rank()) unions.insert(e.label);
  AlignedVectorPair out;
  out.labels.assign(unions.begin(), unions.end());
  out.a.reserve(out.labels.size());
  out.b.reserve(out.labels.size());
  for (const auto& label : out.labels) {
    out.a.push_back(p.score(label));
    out.b.push_back(q.score(label));
  }
  return out;
}

double fidelity(const RankVector& p, const RankVector& q) {
  AlignedVectorPair v = align(p, q);
  double na = 0, nb = 0;
  for (double x : v.a) na += x * x;
  for (double x : v.b) nb += x * x;
  if (na == 0 || nb == 0) throw DataError("fidelity is undefined for a zero vector");
  double dot = 0;
  for (std::size_t i = 0; i < v.labels.size(); ++i) dot += v.a[i] * v.b[i];
  const double f = (dot * dot) / (na * nb);
  return std::min(f, 1.0);  // clip rounding excess above 1
}

int similarity(const RankVector& p, const RankVector& q, int top_m) {
  const std::size_t m = std::min({static_cast<std::size_t>(std::max(top_m, 0)), p.size(), q.size()});
  std::set<std::string> top_p;
  std::set<std::string> top_q;
  for (std::size_t i = 0; i < m; ++i) {
    top_p.insert(p.by_rank()[i].label);
    top_q.insert(q.by_rank()[i].label);
  }
  int shared = 0;
  for (const auto& label : top_p) shared += top_q.count(label) > 0 ? 1 : 0;
  return shared;
}

namespace {

std::vector<std::string> eligible_quartets(const Corpus& corpus, const std::string& period,
                                           Mode mode) {
  CorpusFilter f;
  f.mode = mode;
  f.period = period;
  return filter(corpus, f).quartets();
}

Corpus two_quartet_corpus(const Corpus& corpus, const std::string& period, Mode mode,
                          const std::string& a, const std::string& b) {
  CorpusFilter f;
  f.mode = mode;
  f.period = period;
  f.quartets = std::set<std::string>{a, b};
  return filter(corpus, f);
}

}  // namespace

std::vector<QuartetPairGraph> pair_graphs(const Corpus& corpus, const std::string& period,
                                          Mode mode) {
  std::vector<std::string> quartets = eligible_quartets(corpus, period, mode);
  std::sort(quartets.begin(), quartets.end());
  if (quartets.size() < 2) {
    throw DataError("period '" + period + "' has " + std::to_string(quartets.size()) +
                    " quartet(s) with " + mode_name(mode) + " segments; need at least 2");
  }
  std::vector<QuartetPairGraph> out;
  for (std::size_t i = 0; i < quartets.size(); ++i) {
    for (std::size_t j = i + 1; j < quartets.size(); ++j) {
      QuartetPairGraph g;
      g.quartet_a = quartets[i];
      g.quartet_b = quartets[j];
      g.graph = build_graph(two_quartet_corpus(corpus, period, mode, quartets[i], quartets[j]));
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<PairVector> pair_vectors(const Corpus& corpus, const std::string& period, Mode mode,
                                     double alpha, double tol) {
  std::vector<std::string> quartets = eligible_quartets(corpus, period, mode);
  std::sort(quartets.begin(), quartets.end());
  std::vector<PairVector> out;
  if (quartets.empty()) return out;
  if (quartets.size() == 1) {
    PairVector v;
    v.quartet_a = v.quartet_b = quartets[0];
    v.ranks = pagerank(
        build_google(build_graph(two_quartet_corpus(corpus, period, mode, quartets[0], quartets[0])),
                     alpha),
        tol);
    out.push_back(std::move(v));
    return out;
  }
  for (auto& pg : pair_graphs(corpus, period, mode)) {
    PairVector v;
    v.quartet_a = pg.quartet_a;
    v.quartet_b = pg.quartet_b;
    v.ranks = pagerank(build_google(pg.graph, alpha), tol);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ComparisonCell> period_comparison(const Corpus& corpus, Mode mode, Metric metric,
                                              int top_m, double alpha, double tol) {
  const std::vector<std::string> periods = corpus.periods();
  if (periods.size() < 2) {
    throw DataError("period comparison needs at least 2 periods, corpus has " +
                    std::to_string(periods.size()));
  }

  std::vector<std::vector<PairVector>> vectors;
  vectors.reserve(periods.size());
  for (const auto& period : periods) {
    vectors.push_back(pair_vectors(corpus, period, mode, alpha, tol));
  }

  auto evaluate = [&](const PairVector& a, const PairVector& b) {
    return metric == Metric::fidelity
               ? fidelity(a.ranks, b.ranks)
               : static_cast<double>(similarity(a.ranks, b.ranks, top_m));
  };
  auto name = [](const PairVector& v) {
    return v.quartet_a == v.quartet_b ? v.quartet_a : v.quartet_a + "+" + v.quartet_b;
  };

  std::vector<ComparisonCell> cells;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    for (std::size_t j = i; j < periods.size(); ++j) {
      ComparisonCell cell;
      cell.period_i = periods[i];
      cell.period_j = periods[j];
      if (i == j) {
        const auto& vs = vectors[i];
        for (std::size_t a = 0; a < vs.size(); ++a) {
          for (std::size_t b = a + 1; b < vs.size(); ++b) {
            // Within a period only vector pairs with no quartet in common.
            std::set<std::string> qa{vs[a].quartet_a, vs[a].quartet_b};
            if (qa.count(vs[b].quartet_a) || qa.count(vs[b].quartet_b)) continue;
            cell.values.push_back({name(vs[a]), name(vs[b]), evaluate(vs[a], vs[b]), 0});
          }
        }
      } else {
        for (const auto& va : vectors[i]) {
          for (const auto& vb : vectors[j]) {
            cell.values.push_back({name(va), name(vb), evaluate(va, vb), 0});
          }
        }
      }
      if (!cell.values.empty()) {
        double sum = 0;
        for (const auto& v : cell.values) sum += v.value;
        cell.mean = sum / static_cast<double>(cell.values.size());
        if (cell.values.size() > 1) {
          double ss = 0;
          for (const auto& v : cell.values) ss += (v.value - cell.mean) * (v.value - cell.mean);
          cell.stddev = std::sqrt(ss / static_cast<double>(cell.values.size() - 1));
        }
        for (auto& v : cell.values) {
          v.density = static_cast<int>(
              std::count_if(cell.values.begin(), cell.values.end(),
                            [&](const ComparisonValue& w) { return std::abs(w.value - v.value) <= 0.002; }));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace chordnet
