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

#include "varsel/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include "varsel/errors.h"
#include "varsel/linalg.h"

namespace varsel {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroColumn: return "ZeroColumn";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kDegeneratePivot: return "DegeneratePivot";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kSingularCovariance: return "SingularCovariance";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kThresholdNeverReached: return "ThresholdNeverReached";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Dataset::Dataset(Matrix values, std::vector<std::string> labels, bool centered,
                 bool unit_norm)
    : values_(std::move(values)),
      labels_(std::move(labels)),
      centered_(centered),
      unit_norm_(unit_norm) {
  if (values_.rows() < 2 || values_.cols() < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "dataset needs at least 2 rows and 1 column");
  }
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(values_.cols())) {
    throw Error(ErrorCode::kInvalidArgument, "label count != column count");
  }
  if (!values_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "dataset contains non-finite values");
  }
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    const auto col = values_.col(j);
    if (centered_) {
      const double scale = std::max(1.0, col.cwiseAbs().maxCoeff());
      if (std::abs(col.mean()) > 1e-9 * scale) {
        throw Error(ErrorCode::kInvalidArgument, "column is not centered", {j});
      }
    }
    if (unit_norm_ && std::abs(col.norm() - 1.0) > 1e-9) {
      throw Error(ErrorCode::kInvalidArgument, "column is not unit norm", {j});
    }
  }
}

IndexSets::IndexSets(int v) : in_selected_(static_cast<size_t>(v), 0) {
  if (v < 1) throw Error(ErrorCode::kInvalidArgument, "v must be >= 1");
}

IndexSets::IndexSets(int v, std::span<const int> selected) : IndexSets(v) {
  for (int i : selected) select(i);
}

std::vector<int> IndexSets::unselected() const {
  std::vector<int> out;
  out.reserve(in_selected_.size() - selected_.size());
  for (int i = 0; i < size(); ++i) {
    if (!in_selected_[i]) out.push_back(i);
  }
  return out;
}

void IndexSets::select(int index) {
  if (index < 0 || index >= size()) {
    throw Error(ErrorCode::kInvalidArgument, "index out of range", {index});
  }
  if (in_selected_[index]) {
    throw Error(ErrorCode::kInvalidArgument, "index already selected", {index});
  }
  in_selected_[index] = 1;
  selected_.push_back(index);
}

Dataset center_columns(const Dataset& data) {
  Matrix centered = data.values().rowwise() - data.values().colwise().mean();
  return Dataset(std::move(centered), data.labels(), true, false);
}

Dataset normalize_unit(const Dataset& data) {
  Matrix scaled = data.values();
  for (Eigen::Index j = 0; j < scaled.cols(); ++j) {
    const double norm = scaled.col(j).norm();
    if (norm <= kZeroNormTolerance) {
      throw Error(ErrorCode::kZeroColumn, "cannot normalise a zero column", {j});
    }
    scaled.col(j) /= norm;
  }
  bool centered = data.centered();
  for (Eigen::Index j = 0; centered && j < scaled.cols(); ++j) {
    centered = std::abs(scaled.col(j).mean()) <= 1e-9;
  }
  return Dataset(std::move(scaled), data.labels(), centered, true);
}

Matrix project_onto(const Matrix& x, std::span<const int> selected) {
  if (selected.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "selection must be non-empty");
  }
  Matrix xs(x.rows(), static_cast<Eigen::Index>(selected.size()));
  for (size_t j = 0; j < selected.size(); ++j) {
    if (selected[j] < 0 || selected[j] >= x.cols()) {
      throw Error(ErrorCode::kInvalidArgument, "index out of range", {selected[j]});
    }
    xs.col(static_cast<Eigen::Index>(j)) = x.col(selected[j]);
  }
  const Matrix gram = xs.transpose() * xs;
  const auto llt = CholeskyWithJitter(gram);
  if (!llt) {
    throw Error(ErrorCode::kRankDeficient, "selected columns are linearly dependent",
                std::vector<long long>(selected.begin(), selected.end()));
  }
  const Matrix coef = llt->solve(xs.transpose() * x);
  return xs * coef;
}

ResidualMatrix::ResidualMatrix(const Matrix& x)
    : values_(x), reference_norm_(x.norm()) {}

ResidualMatrix deflate(const ResidualMatrix& residual, int pivot) {
  if (pivot < 0 || pivot >= residual.values_.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "pivot out of range", {pivot});
  }
  if (std::find(residual.deflated_by_.begin(), residual.deflated_by_.end(),
                pivot) != residual.deflated_by_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "pivot already deflated", {pivot});
  }
  const double tol = kDegenerateRelTolerance * residual.reference_norm_;
  ResidualMatrix out = residual;
  if (!deflate_in_place(out.values_, pivot, tol * tol)) {
    throw Error(ErrorCode::kDegeneratePivot, "pivot residual is numerically zero",
                {pivot});
  }
  out.deflated_by_.push_back(pivot);
  return out;
}

bool deflate_in_place(Matrix& r, int pivot, double min_sq_norm) {
  const double sq = r.col(pivot).squaredNorm();
  if (!(sq > min_sq_norm)) return false;
  const Vector rp = r.col(pivot);
  const Eigen::RowVectorXd coef = (rp.transpose() * r) / sq;
  r.noalias() -= rp * coef;
  r.col(pivot).setZero();
  return true;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    cells.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());

  std::vector<std::string> labels;
  std::vector<double> cells;
  size_t width = 0;
  long long rows = 0;
  long long line_no = 0;
  bool header_pending = has_header;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto parts = SplitCommas(view);
    if (header_pending) {
      for (auto p : parts) labels.emplace_back(p);
      width = parts.size();
      header_pending = false;
      continue;
    }
    if (width == 0) width = parts.size();
    if (parts.size() != width) {
      throw Error(ErrorCode::kRaggedRows,
                  "line " + std::to_string(line_no) + " has " +
                      std::to_string(parts.size()) + " cells, expected " +
                      std::to_string(width),
                  {line_no});
    }
    for (size_t c = 0; c < parts.size(); ++c) {
      std::string_view cell = parts[c];
      if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size() ||
          !std::isfinite(value)) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + " column " +
                        std::to_string(c + 1) + ": '" + std::string(parts[c]) + "'",
                    {line_no, static_cast<long long>(c + 1)});
      }
      cells.push_back(value);
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::kEmptyFile, path.string() + " has no data rows");

  Matrix values(rows, static_cast<Eigen::Index>(width));
  for (long long r = 0; r < rows; ++r) {
    for (size_t c = 0; c < width; ++c) values(r, c) = cells[r * width + c];
  }
  return Dataset(std::move(values), std::move(labels));
}

void write_csv(const Dataset& data, std::ostream& out,
               const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  if (!data.labels().empty()) {
    for (size_t j = 0; j < data.labels().size(); ++j) {
      out << (j ? "," : "") << data.labels()[j];
    }
    out << '\n';
  }
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  const Matrix& x = data.values();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out << (j ? "," : "") << x(i, j);
    out << '\n';
  }
  out.precision(precision);
}

void write_csv(const Dataset& data, const std::filesystem::path& path,
               const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  write_csv(data, out, comments);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace varsel
