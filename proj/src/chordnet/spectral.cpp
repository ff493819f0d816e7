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

#include "chordnet/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "chordnet/errors.hpp"
#include "chordnet/text.hpp"

namespace chordnet {

GoogleMatrix build_google(const ChordGraph& g, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw ConfigError("alpha must lie in [0, 1], got " + format_double(alpha));
  }
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (n == 0) throw DataError("cannot build a Google matrix over an empty graph");

  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, (1.0 - alpha) / static_cast<double>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::int64_t out = g.out_degree(static_cast<int>(j));
    if (out == 0) {
      // Dangling chord: its column of S is uniform.
      for (Eigen::Index i = 0; i < n; ++i) {
        m(i, j) += alpha / static_cast<double>(n);
      }
      continue;
    }
    for (const auto& [to, w] : g.out_edges(static_cast<int>(j))) {
      m(to, j) += alpha * static_cast<double>(w) / static_cast<double>(out);
    }
  }
  return GoogleMatrix(std::move(m), alpha, g.labels());
}

RankVector::RankVector(std::vector<RankEntry> entries, Norm norm) : norm_(norm) {
  by_rank_ = std::move(entries);
  std::sort(by_rank_.begin(), by_rank_.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.label < b.label;
  });
  for (std::size_t i = 0; i < by_rank_.size(); ++i) {
    by_label_[by_rank_[i].label] = by_rank_[i].score;
    rank_[by_rank_[i].label] = i + 1;
  }
}

double RankVector::score(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? 0.0 : it->second;
}

bool RankVector::has(const std::string& label) const { return by_label_.count(label) > 0; }

std::size_t RankVector::rank_of(const std::string& label) const {
  auto it = rank_.find(label);
  return it == rank_.end() ? 0 : it->second;
}

RankVector pagerank(const GoogleMatrix& g, double tol, long max_iter) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double delta = 0;
  for (long it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = g.matrix() * x;
    y /= y.lpNorm<1>();
    delta = (y - x).lpNorm<1>();
    x = y;
    if (delta < tol) {
      std::vector<RankEntry> entries(static_cast<std::size_t>(n));
      for (Eigen::Index i = 0; i < n; ++i) {
        entries[static_cast<std::size_t>(i)] = {g.labels()[static_cast<std::size_t>(i)], x(i)};
      }
      return RankVector(std::move(entries), Norm::l1);
    }
  }
  throw NumericError("PageRank did not converge after " + std::to_string(max_iter) +
                     " iterations (residual " + format_double(delta) + ")");
}

namespace {

Eigen::EigenSolver<Eigen::MatrixXd> solve_eigen(const GoogleMatrix& g, bool with_vectors) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(g.matrix(), with_vectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigensolver failed to converge on a " + std::to_string(g.size()) +
                       "x" + std::to_string(g.size()) + " Google matrix");
  }
  return solver;
}

bool spectral_order(const std::complex<double>& a, const std::complex<double>& b) {
  double ma = std::abs(a);
  double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace

Spectrum spectrum(const GoogleMatrix& g) {
  auto solver = solve_eigen(g, /*with_vectors=*/false);
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), spectral_order);
  return s;
}

std::vector<SupportEntry> eigenvector_support(const GoogleMatrix& g,
                                              std::complex<double> eigenvalue) {
  auto solver = solve_eigen(g, /*with_vectors=*/true);
  const auto& values = solver.eigenvalues();
  Eigen::Index best = -1;
  double best_dist = 1e-6;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    double dist = std::abs(values(i) - eigenvalue);
    if (dist <= best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  if (best < 0) {
    throw ConfigError("eigenvalue " + format_double(eigenvalue.real()) + "+" +
                      format_double(eigenvalue.imag()) + "i is not in the computed spectrum");
  }
  std::vector<SupportEntry> support(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    support[i] = {g.labels()[i], std::abs(solver.eigenvectors()(static_cast<Eigen::Index>(i), best))};
  }
  std::sort(support.begin(), support.end(), [](const SupportEntry& a, const SupportEntry& b) {
    if (a.amplitude != b.amplitude) return a.amplitude > b.amplitude;
    return a.label < b.label;
  });
  return support;
}

PowerLawFit fit_powerlaw(const std::vector<std::pair<double, double>>& points,
                         std::size_t first, std::size_t last) {
  if (last == 0 || last > points.size()) last = points.size();
  PowerLawFit fit;
  fit.first = first;
  fit.last = last;

  std::vector<std::pair<double, double>> logs;
  for (std::size_t i = first; i < last; ++i) {
    if (points[i].first > 0 && points[i].second > 0) {
      logs.emplace_back(std::log10(points[i].first), std::log10(points[i].second));
    }
  }
  if (logs.size() < 2) {
    throw DataError("power-law fit needs at least 2 positive points in the window, got " +
                    std::to_string(logs.size()));
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : logs) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(logs.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw DataError("power-law fit is degenerate (all x equal)");
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (const auto& [x, y] : logs) {
    const double r = y - (fit.slope * x + fit.intercept);
    fit.residual += r * r;
  }
  fit.points_used = logs.size();
  return fit;
}

}  // namespace chordnet
