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

#include "varsel/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "varsel/errors.h"
#include "varsel/linalg.h"

namespace varsel {

namespace {

constexpr double kTopRankTolerance = 1e-9;

Matrix SubMatrix(const Matrix& m, std::span<const int> rows,
                 std::span<const int> cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

void CheckIndices(std::span<const int> indices, int v) {
  std::vector<char> seen(static_cast<size_t>(v), 0);
  for (int i : indices) {
    if (i < 0 || i >= v) {
      throw Error(ErrorCode::kInvalidArgument, "index out of range", {i});
    }
    if (seen[i]) throw Error(ErrorCode::kInvalidArgument, "duplicate index", {i});
    seen[i] = 1;
  }
}

// x_ii + s^2 - k^T (K + s^2 I)^{-1} k over the rows/cols in `given`.
double ConditionalVariance(const CovarianceModel& model, int i,
                           std::span<const int> given) {
  const double s2 = model.sigma() * model.sigma();
  const double prior = model.cov()(i, i) + s2;
  if (given.empty()) return prior;
  Matrix block = SubMatrix(model.cov(), given, given);
  block.diagonal().array() += s2;
  Vector cross(static_cast<Eigen::Index>(given.size()));
  for (size_t j = 0; j < given.size(); ++j) cross(j) = model.cov()(given[j], i);
  const auto llt = CholeskyWithJitter(block);
  if (!llt) {
    throw Error(ErrorCode::kSingularCovariance, "conditioning block is singular",
                std::vector<long long>(given.begin(), given.end()));
  }
  const Vector half = llt->matrixL().solve(cross);
  return prior - half.squaredNorm();
}

}  // namespace

double variance_explained(const Dataset& data, std::span<const int> selected) {
  if (selected.empty()) return 0.0;
  CheckIndices(selected, data.cols());
  const Matrix& x = data.values();
  const double total = x.squaredNorm();
  if (total == 0.0) return 100.0;
  const Matrix residual = x - project_onto(x, selected);
  return (1.0 - residual.squaredNorm() / total) * 100.0;
}

double frame_potential(const Dataset& data, std::span<const int> selected) {
  CheckIndices(selected, data.cols());
  Matrix xs(data.rows(), static_cast<Eigen::Index>(selected.size()));
  for (size_t j = 0; j < selected.size(); ++j) xs.col(j) = data.values().col(selected[j]);
  return (xs.transpose() * xs).squaredNorm();
}

CovarianceModel::CovarianceModel(const Dataset& data, std::optional<double> sigma)
    : cov_(data.values().transpose() * data.values() /
           static_cast<double>(data.rows())),
      sigma_(0.0) {
  sigma_ = sigma ? *sigma : DefaultSigma(cov_);
  if (!(sigma_ >= 0.0) || !std::isfinite(sigma_)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be finite and >= 0");
  }
}

CovarianceModel::CovarianceModel(Matrix cov, double sigma)
    : cov_(std::move(cov)), sigma_(sigma) {
  if (cov_.rows() != cov_.cols() || cov_.rows() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "covariance must be square");
  }
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "covariance must be symmetric");
  }
  if (!(sigma_ >= 0.0) || !std::isfinite(sigma_)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be finite and >= 0");
  }
}

double CovarianceModel::DefaultSigma(const Matrix& cov) {
  return 0.01 * std::sqrt(cov.diagonal().mean());
}

double mutual_information(const CovarianceModel& model,
                          std::span<const int> selected) {
  const int v = model.size();
  CheckIndices(selected, v);
  IndexSets sets(v, selected);
  const std::vector<int> unselected = sets.unselected();
  if (selected.empty() || unselected.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "mutual information needs non-empty selected and unselected sets");
  }
  const double s2 = model.sigma() * model.sigma();
  Matrix uu = SubMatrix(model.cov(), unselected, unselected);
  uu.diagonal().array() += s2;
  Matrix ss = SubMatrix(model.cov(), selected, selected);
  ss.diagonal().array() += s2;
  const Matrix su = SubMatrix(model.cov(), selected, unselected);

  const auto llt = CholeskyWithJitter(ss);
  if (!llt) throw Error(ErrorCode::kSingularCovariance, "S block is singular");
  const Matrix half = llt->matrixL().solve(su);
  const Matrix conditional = uu - half.transpose() * half;

  const auto ld_prior = LogDetSpd(uu);
  const auto ld_post = LogDetSpd(conditional);
  if (!ld_prior || !ld_post) {
    throw Error(ErrorCode::kSingularCovariance, "U block is singular");
  }
  return 0.5 * (*ld_prior - *ld_post);
}

double delta_mi(const CovarianceModel& model, const IndexSets& sets, int candidate) {
  if (sets.size() != model.size()) {
    throw Error(ErrorCode::kInvalidArgument, "index sets do not match the model");
  }
  if (candidate < 0 || candidate >= model.size() || sets.is_selected(candidate)) {
    throw Error(ErrorCode::kInvalidArgument, "candidate must be unselected",
                {candidate});
  }
  std::vector<int> others = sets.unselected();
  others.erase(std::find(others.begin(), others.end(), candidate));
  const double given_selected = ConditionalVariance(model, candidate, sets.selected());
  const double given_others = ConditionalVariance(model, candidate, others);
  if (!(given_others > 0.0)) {
    throw Error(ErrorCode::kSingularCovariance,
                "candidate is determined by the unselected variables", {candidate});
  }
  return given_selected / given_others;
}

double auc(const VeCurve& curve, int v) {
  if (v < 2 || curve.size() != static_cast<size_t>(v - 1)) {
    throw Error(ErrorCode::kLengthMismatch,
                "AUC needs v - 1 = " + std::to_string(v - 1) + " curve entries, got " +
                    std::to_string(curve.size()));
  }
  double sum = 0.0;
  for (double ve : curve) sum += ve;
  return 0.01 / static_cast<double>(v - 1) * sum;
}

std::map<std::string, double> relative_performance(
    const std::map<std::string, VeCurve>& curves) {
  std::map<std::string, double> out;
  if (curves.empty()) return out;
  const size_t length = curves.begin()->second.size();
  for (const auto& [name, curve] : curves) {
    if (curve.size() != length) {
      throw Error(ErrorCode::kLengthMismatch, "curve '" + name + "' has a different length");
    }
  }
  size_t k_star = 0;
  for (size_t k = 0; k < length && k_star == 0; ++k) {
    const bool all_above = std::all_of(curves.begin(), curves.end(),
                                       [k](const auto& c) { return c.second[k] > 99.0; });
    if (all_above) k_star = k + 1;
  }
  if (k_star == 0) {
    throw Error(ErrorCode::kThresholdNeverReached,
                "not every curve exceeds 99% variance explained");
  }
  for (const auto& [name, curve] : curves) out[name] = 0.0;
  for (size_t k = 0; k < k_star; ++k) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : curves) best = std::max(best, c.second[k]);
    for (const auto& [name, curve] : curves) {
      if (curve[k] >= best - kTopRankTolerance) out[name] += 1.0;
    }
  }
  for (auto& [name, count] : out) count *= 100.0 / static_cast<double>(k_star);
  return out;
}

int k_at_threshold(const VeCurve& curve, double n) {
  for (size_t k = 0; k < curve.size(); ++k) {
    if (curve[k] >= n) return static_cast<int>(k + 1);
  }
  throw Error(ErrorCode::kThresholdNeverReached,
              "curve never reaches " + std::to_string(n) + "%");
}

VarianceTracker::VarianceTracker(const Matrix& x)
    : residual_(x), total_sq_(x.squaredNorm()) {
  const double tol = kDegenerateRelTolerance * std::sqrt(total_sq_);
  min_sq_norm_ = tol * tol;
}

double VarianceTracker::add(int index) {
  if (total_sq_ == 0.0) {
    value_ = 100.0;
    return value_;
  }
  if (deflate_in_place(residual_, index, min_sq_norm_)) {
    const double ve = (1.0 - residual_.squaredNorm() / total_sq_) * 100.0;
    value_ = std::clamp(ve, 0.0, 100.0);
  }
  return value_;
}

}  // namespace varsel
