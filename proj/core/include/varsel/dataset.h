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

// Data matrix representation and the linear-algebra substrate shared by the
// selectors: centering, unit-norm scaling, orthogonal projection onto a set of
// columns and rank-one residual deflation.
//
// Indices are 0-based throughout the library. Reports and the CLI convert to
// 1-based at the boundary.

#ifndef VARSEL_DATASET_H_
#define VARSEL_DATASET_H_

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace varsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Column norms at or below this are treated as zero by normalize_unit.
inline constexpr double kZeroNormTolerance = 1e-12;
// A residual column is degenerate when its norm is at or below this fraction
// of the Frobenius norm of the original data.
inline constexpr double kDegenerateRelTolerance = 1e-10;

// An m x v observation matrix. Immutable once built; the preprocessing flags
// are validated against the values at construction.
class Dataset {
 public:
  explicit Dataset(Matrix values, std::vector<std::string> labels = {},
                   bool centered = false, bool unit_norm = false);

  const Matrix& values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool centered() const { return centered_; }
  bool unit_norm() const { return unit_norm_; }
  int rows() const { return static_cast<int>(values_.rows()); }
  int cols() const { return static_cast<int>(values_.cols()); }

 private:
  Matrix values_;
  std::vector<std::string> labels_;
  bool centered_;
  bool unit_norm_;
};

// Selected / unselected partition of {0..v-1}. `selected` keeps selection
// order.
class IndexSets {
 public:
  explicit IndexSets(int v);
  IndexSets(int v, std::span<const int> selected);

  int size() const { return static_cast<int>(in_selected_.size()); }
  const std::vector<int>& selected() const { return selected_; }
  // Ascending order.
  std::vector<int> unselected() const;
  bool is_selected(int index) const { return in_selected_.at(index) != 0; }

  void select(int index);

 private:
  std::vector<int> selected_;
  std::vector<char> in_selected_;
};

Dataset center_columns(const Dataset& data);

// Throws Error(kZeroColumn) when a column norm is <= kZeroNormTolerance.
Dataset normalize_unit(const Dataset& data);

// X_S (X_S^T X_S)^{-1} X_S^T X. Throws Error(kRankDeficient) when the Gram
// matrix of the selected columns is numerically singular.
Matrix project_onto(const Matrix& x, std::span<const int> selected);
inline Matrix project_onto(const Dataset& data, std::span<const int> selected) {
  return project_onto(data.values(), selected);
}

// Residual of the original data after removing the span of `deflated_by`.
class ResidualMatrix {
 public:
  explicit ResidualMatrix(const Matrix& x);

  const Matrix& values() const { return values_; }
  const std::vector<int>& deflated_by() const { return deflated_by_; }
  // ||X||_F of the data the residual started from.
  double reference_norm() const { return reference_norm_; }

 private:
  friend ResidualMatrix deflate(const ResidualMatrix& residual, int pivot);

  Matrix values_;
  std::vector<int> deflated_by_;
  double reference_norm_;
};

// R - r_p r_p^T R / (r_p^T r_p). Throws Error(kDegeneratePivot) when the pivot
// residual is below kDegenerateRelTolerance * ||X||_F, and
// Error(kInvalidArgument) when the pivot was already removed.
ResidualMatrix deflate(const ResidualMatrix& residual, int pivot);

// In-place variant used by the selectors. Returns false (and leaves `r`
// untouched) if column `pivot` has squared norm <= `min_sq_norm`.
bool deflate_in_place(Matrix& r, int pivot, double min_sq_norm);

// Comma separated numeric matrix, rows are observations. Blank lines and lines
// starting with '#' are ignored.
Dataset load_csv(const std::filesystem::path& path, bool has_header);
// Full round-trip precision; each comment becomes a "# " line at the top.
void write_csv(const Dataset& data, const std::filesystem::path& path,
               const std::vector<std::string>& comments = {});
void write_csv(const Dataset& data, std::ostream& out,
               const std::vector<std::string>& comments = {});

}  // namespace varsel

#endif  // VARSEL_DATASET_H_
