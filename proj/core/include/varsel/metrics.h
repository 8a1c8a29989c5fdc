// Copyright 2026 The Authors.
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

// Scalar performance metrics for a selection of columns.

#ifndef VARSEL_METRICS_H_
#define VARSEL_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varsel/dataset.h"

namespace varsel {

// Variance explained (percent) after selecting k = 1, 2, ... variables.
using VeCurve = std::vector<double>;

// 100 * (1 - ||X - Xhat_S||_F^2 / ||X||_F^2); 0 for an empty selection.
double variance_explained(const Dataset& data, std::span<const int> selected);

// Sum over ordered pairs (i, j) in S of <x_i, x_j>^2, diagonal included.
double frame_potential(const Dataset& data, std::span<const int> selected);

// Gaussian model K(X, X) = X^T X / m with measurement noise sigma.
class CovarianceModel {
 public:
  // sigma defaults to 0.01 * sqrt(mean of diag(cov)).
  explicit CovarianceModel(const Dataset& data,
                           std::optional<double> sigma = std::nullopt);
  CovarianceModel(Matrix cov, double sigma);

  const Matrix& cov() const { return cov_; }
  double sigma() const { return sigma_; }
  int size() const { return static_cast<int>(cov_.rows()); }

  static double DefaultSigma(const Matrix& cov);

 private:
  Matrix cov_;
  double sigma_;
};

// MI(S; U) = 1/2 [ln det(S_UU + s^2 I) - ln det(S*)] where S* is the
// covariance of U conditioned on S, all blocks regularised by s^2 I. The
// (2 pi e) constants cancel and are dropped.
double mutual_information(const CovarianceModel& model,
                          std::span<const int> selected);

// var(x_i | S) / var(x_i | U \ x_i) on the regularised covariance. The log of
// this ratio is twice the entropy difference H(x_i | S) - H(x_i | U \ x_i);
// both rank candidates identically.
double delta_mi(const CovarianceModel& model, const IndexSets& sets,
                int candidate);

// (0.01 / (v - 1)) * sum of the curve; the curve must have v - 1 entries.
double auc(const VeCurve& curve, int v);

// Share (percent) of k = 1..k*_99% at which each curve attains the best VE.
// k*_99% is the first k at which every curve exceeds 99. Ties within 1e-9
// percentage points credit every tied curve.
std::map<std::string, double> relative_performance(
    const std::map<std::string, VeCurve>& curves);

// Smallest k (1-based count) with curve[k-1] >= n.
int k_at_threshold(const VeCurve& curve, double n);

// Incremental VE of a growing selection. Deflates a residual copy of X by each
// added column; columns already in the span add nothing.
class VarianceTracker {
 public:
  explicit VarianceTracker(const Matrix& x);

  // Returns the VE (percent) after adding `index`.
  double add(int index);
  double value() const { return value_; }

 private:
  Matrix residual_;
  double total_sq_;
  double min_sq_norm_;
  double value_ = 0.0;
};

}  // namespace varsel

#endif  // VARSEL_METRICS_H_
