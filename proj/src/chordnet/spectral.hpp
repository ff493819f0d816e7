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

#ifndef CHORDNET_SPECTRAL_HPP_
#define CHORDNET_SPECTRAL_HPP_

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "chordnet/network.hpp"

namespace chordnet {

// Column-stochastic Google matrix G = alpha * S + (1 - alpha) / N, where
// column j of S holds the normalized out-transitions of chord j and dangling
// columns are uniform. Columns sum to 1 within 1e-12.
class GoogleMatrix {
 public:
  GoogleMatrix(Eigen::MatrixXd g, double alpha, std::vector<std::string> labels)
      : g_(std::move(g)), alpha_(alpha), labels_(std::move(labels)) {}

  const Eigen::MatrixXd& matrix() const { return g_; }
  double alpha() const { return alpha_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  Eigen::MatrixXd g_;
  double alpha_;
  std::vector<std::string> labels_;
};

GoogleMatrix build_google(const ChordGraph& g, double alpha);

enum class Norm { l1, l2 };

struct RankEntry {
  std::string label;
  double score = 0;
};

// Scores over labels with a deterministic rank order: descending score,
// ties broken lexicographically by label.
class RankVector {
 public:
  RankVector() = default;
  RankVector(std::vector<RankEntry> entries, Norm norm);

  const std::vector<RankEntry>& by_rank() const { return by_rank_; }
  Norm norm() const { return norm_; }
  std::size_t size() const { return by_rank_.size(); }
  double score(const std::string& label) const;  // 0 for absent labels
  bool has(const std::string& label) const;
  // 1-based rank of a label, 0 when absent.
  std::size_t rank_of(const std::string& label) const;

 private:
  std::vector<RankEntry> by_rank_;
  std::map<std::string, double> by_label_;
  std::map<std::string, std::size_t> rank_;
  Norm norm_ = Norm::l1;
};

// Power iteration from the uniform vector until the successive-iterate L1
// difference drops below tol; result is L1-normalized. Throws NumericError
// with the residual when the iteration cap is hit.
RankVector pagerank(const GoogleMatrix& g, double tol = 1e-12, long max_iter = 100000);

// All N complex eigenvalues of G, sorted by descending modulus (ties by
// descending real, then descending imaginary part).
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
};

Spectrum spectrum(const GoogleMatrix& g);

// Labels sorted by descending |component| of the eigenvector attached to the
// given eigenvalue. The eigenvalue must match a computed one within 1e-6.
struct SupportEntry {
  std::string label;
  double amplitude = 0;
};

std::vector<SupportEntry> eigenvector_support(const GoogleMatrix& g,
                                              std::complex<double> eigenvalue);

// Ordinary least squares on (log x, log y) over a half-open index window
// into the point list. Points with non-positive coordinates are skipped;
// fewer than 2 usable points is an error.
struct PowerLawFit {
  double slope = 0;
  double intercept = 0;  // in log10 space
  double residual = 0;   // sum of squared log10 residuals
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t points_used = 0;
};

PowerLawFit fit_powerlaw(const std::vector<std::pair<double, double>>& points,
                         std::size_t first, std::size_t last);

}  // namespace chordnet

#endif  // CHORDNET_SPECTRAL_HPP_
