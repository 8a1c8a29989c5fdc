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

#include "varsel/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "varsel/errors.h"
#include "varsel/metrics.h"

namespace varsel {

namespace {

double Binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

void CheckSubsetSize(int v, int k) {
  if (k < 1 || k > v) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must lie in [1, " + std::to_string(v) + "], got " + std::to_string(k));
  }
  const double count = Binomial(v, k);
  if (count > kMaxSubsets) {
    throw Error(ErrorCode::kTooLarge,
                "C(" + std::to_string(v) + ", " + std::to_string(k) + ") = " +
                    std::to_string(count) + " subsets exceeds the exhaustive limit",
                {static_cast<long long>(count)});
  }
}

// Keeps the best value seen, preferring the earliest (lexicographically
// smallest) set among values within kTieTolerance.
class Best {
 public:
  explicit Best(bool maximize) : maximize_(maximize) {}

  void Offer(double value, std::span<const int> indices) {
    if (!std::isfinite(value)) return;
    if (!indices_.empty()) {
      const double tol = kTieTolerance * std::max(1.0, std::abs(value_));
      const bool better = maximize_ ? value > value_ + tol : value < value_ - tol;
      if (!better) return;
    }
    value_ = value;
    indices_.assign(indices.begin(), indices.end());
  }

  OptimalSubset Result(Metric metric) const {
    if (indices_.empty()) {
      throw Error(ErrorCode::kSingularCovariance, "no subset had a finite metric value");
    }
    return {indices_, value_, metric};
  }

 private:
  bool maximize_;
  double value_ = 0.0;
  std::vector<int> indices_;
};

// Visits every size-k subset of {0..v-1} in lexicographic order. `enter` is
// called when index s is placed at `depth`, `leaf` once a subset is complete.
template <typename Enter, typename Leaf>
void Combinations(int v, int k, Enter&& enter, Leaf&& leaf) {
  std::vector<int> idx(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == k) {
      leaf(std::span<const int>(idx));
      return;
    }
    for (int s = start; s <= v - (k - depth); ++s) {
      idx[depth] = s;
      enter(depth, std::span<const int>(idx.data(), static_cast<size_t>(depth + 1)));
      self(self, depth + 1, s + 1);
    }
  };
  rec(rec, 0, 0);
}

// tr(X^T P_S X) via Cholesky rows of G_SS and W = L^{-1} G_{S,:}, extended
// one row per level of the combination tree.
OptimalSubset ExhaustiveVe(const Matrix& x, int k) {
  const int v = static_cast<int>(x.cols());
  const Matrix g = x.transpose() * x;
  const double total = g.trace();
  const double dependent = kDegenerateRelTolerance * kDegenerateRelTolerance * total;
  Matrix l = Matrix::Zero(k, k);
  Matrix w = Matrix::Zero(k, v);
  std::vector<double> acc(static_cast<size_t>(k + 1), 0.0);
  Best best(true);
  Combinations(
      v, k,
      [&](int d, std::span<const int> idx) {
        const int s = idx[d];
        double d2 = g(s, s);
        for (int j = 0; j < d; ++j) {
          double e = g(s, idx[j]);
          for (int q = 0; q < j; ++q) e -= l(d, q) * l(j, q);
          l(d, j) = l(j, j) > 0.0 ? e / l(j, j) : 0.0;
          d2 -= l(d, j) * l(d, j);
        }
        if (d2 <= dependent) {
          // In the span of the earlier picks: contributes nothing.
          l(d, d) = 0.0;
          w.row(d).setZero();
          acc[d + 1] = acc[d];
          return;
        }
        l(d, d) = std::sqrt(d2);
        Eigen::RowVectorXd row = g.row(s);
        for (int j = 0; j < d; ++j) row -= l(d, j) * w.row(j);
        w.row(d) = row / l(d, d);
        acc[d + 1] = acc[d] + w.row(d).squaredNorm();
      },
      [&](std::span<const int> idx) {
        const double ve = total == 0.0 ? 100.0 : 100.0 * acc[k] / total;
        best.Offer(std::min(ve, 100.0), idx);
      });
  return best.Result(Metric::kVe);
}

OptimalSubset ExhaustiveFp(const Matrix& x, int k) {
  const int v = static_cast<int>(x.cols());
  const Matrix g = x.transpose() * x;
  std::vector<double> acc(static_cast<size_t>(k + 1), 0.0);
  Best best(false);
  Combinations(
      v, k,
      [&](int d, std::span<const int> idx) {
        const int s = idx[d];
        double inc = g(s, s) * g(s, s);
        for (int j = 0; j < d; ++j) inc += 2.0 * g(s, idx[j]) * g(s, idx[j]);
        acc[d + 1] = acc[d] + inc;
      },
      [&](std::span<const int> idx) { best.Offer(acc[k], idx); });
  return best.Result(Metric::kFp);
}

OptimalSubset ExhaustiveMi(const Dataset& data, int k, std::optional<double> sigma) {
  if (k >= data.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "MI needs k < v");
  }
  const CovarianceModel model(data, sigma);
  Best best(true);
  Combinations(
      data.cols(), k, [](int, std::span<const int>) {},
      [&](std::span<const int> idx) { best.Offer(mutual_information(model, idx), idx); });
  return best.Result(Metric::kMi);
}

std::uint32_t Bit(int i) { return std::uint32_t{1} << i; }

double Scale(const SetFunction& g) {
  double s = 0.0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << g.size()); ++m) {
    s = std::max(s, std::abs(g(m)));
  }
  return std::max(1.0, s);
}

void ValidateLattice(const SetFunction& g, double tol) {
  if (g.size() > kMaxLatticeSize) {
    throw Error(ErrorCode::kTooLarge,
                "lattice enumeration is limited to v <= " + std::to_string(kMaxLatticeSize));
  }
  const std::uint32_t full = (std::uint32_t{1} << g.size()) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (g(m) < -tol) {
      throw Error(ErrorCode::kInvalidArgument, "set function takes a negative value",
                  {static_cast<long long>(m)});
    }
    for (int i = 0; i < g.size(); ++i) {
      if (m & Bit(i)) continue;
      if (g(m | Bit(i)) < g(m) - tol) {
        throw Error(ErrorCode::kNotMonotone, "g(A) > g(B) for A subset of B",
                    {static_cast<long long>(m), static_cast<long long>(m | Bit(i))});
      }
    }
  }
}

}  // namespace

SetFunction::SetFunction(int v, std::vector<double> values) : v_(v), values_(std::move(values)) {
  if (v < 1 || v > 24) throw Error(ErrorCode::kInvalidArgument, "set function size out of range");
  if (values_.size() != (size_t{1} << v)) {
    throw Error(ErrorCode::kLengthMismatch, "need 2^v tabulated values");
  }
}

SetFunction SetFunction::Tabulate(int v,
                                  const std::function<double(std::span<const int>)>& g) {
  if (v < 1 || v > 24) throw Error(ErrorCode::kInvalidArgument, "set function size out of range");
  std::vector<double> values(size_t{1} << v);
  std::vector<int> idx;
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    idx.clear();
    for (int i = 0; i < v; ++i) {
      if (m & Bit(i)) idx.push_back(i);
    }
    values[m] = g(idx);
  }
  return SetFunction(v, std::move(values));
}

double SetFunction::operator()(std::span<const int> indices) const {
  std::uint32_t m = 0;
  for (int i : indices) {
    if (i < 0 || i >= v_) throw Error(ErrorCode::kInvalidArgument, "index out of range", {i});
    m |= Bit(i);
  }
  return values_[m];
}

double SetFunctionGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  return g_(mask_ | Bit(candidate)) - g_(mask_);
}

void SetFunctionGain::commit(const IndexSets& sets, int candidate) {
  (void)sets;
  mask_ |= Bit(candidate);
}

double metric_value(const Dataset& data, std::span<const int> selected, Metric metric,
                    std::optional<double> sigma) {
  switch (metric) {
    case Metric::kVe: return variance_explained(data, selected);
    case Metric::kFp: return frame_potential(data, selected);
    case Metric::kMi: return mutual_information(CovarianceModel(data, sigma), selected);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric");
}

OptimalSubset exhaustive_optimal(const Dataset& data, int k, Metric metric,
                                 std::optional<double> sigma) {
  CheckSubsetSize(data.cols(), k);
  switch (metric) {
    case Metric::kVe: return ExhaustiveVe(data.values(), k);
    case Metric::kFp: return ExhaustiveFp(data.values(), k);
    case Metric::kMi: return ExhaustiveMi(data, k, sigma);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric");
}

OptimalSubset exhaustive_optimal(const SetFunction& g, int k) {
  CheckSubsetSize(g.size(), k);
  std::vector<std::uint32_t> masks(static_cast<size_t>(k + 1), 0);
  Best best(true);
  Combinations(
      g.size(), k,
      [&](int d, std::span<const int> idx) { masks[d + 1] = masks[d] | Bit(idx[d]); },
      [&](std::span<const int> idx) { best.Offer(g(masks[k]), idx); });
  return best.Result(Metric::kVe);
}

double curvature(const SetFunction& g) {
  const double tol = kTieTolerance * Scale(g);
  ValidateLattice(g, tol);
  const int v = g.size();
  const std::uint32_t full = (std::uint32_t{1} << v) - 1;
  double alpha = 0.0;
  for (int i = 0; i < v; ++i) {
    const std::uint32_t rest = full & ~Bit(i);
    // B ranges over subsets of X \ i, A over strict subsets of B.
    for (std::uint32_t b = rest;; b = (b - 1) & rest) {
      const double gb = g(b | Bit(i)) - g(b);
      for (std::uint32_t a = (b - 1) & b; a != b; a = (a - 1) & b) {
        const double ga = g(a | Bit(i)) - g(a);
        if (ga > tol) alpha = std::max(alpha, 1.0 - gb / ga);
        if (a == 0) break;
      }
      if (b == 0) break;
    }
  }
  return std::clamp(alpha, 0.0, 1.0);
}

double submodularity_ratio(const SetFunction& g) {
  const double tol = kTieTolerance * Scale(g);
  ValidateLattice(g, tol);
  const int v = g.size();
  const std::uint32_t full = (std::uint32_t{1} << v) - 1;
  double gamma = 1.0;
  std::vector<double> marginal(static_cast<size_t>(v));
  for (std::uint32_t a = 0; a < full; ++a) {
    const double ga = g(a);
    for (int i = 0; i < v; ++i) marginal[i] = (a & Bit(i)) ? 0.0 : g(a | Bit(i)) - ga;
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      const double den = g(a | b) - ga;
      if (!(den > tol)) continue;
      double num = 0.0;
      for (std::uint32_t bits = b; bits != 0; bits &= bits - 1) {
        num += marginal[std::countr_zero(bits)];
      }
      gamma = std::min(gamma, num / den);
    }
  }
  return std::clamp(gamma, 0.0, 1.0);
}

BoundValues bound_values(double alpha, double gamma, int k) {
  constexpr double kSlack = 1e-12;
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(alpha >= -kSlack && alpha <= 1.0 + kSlack) ||
      !(gamma >= -kSlack && gamma <= 1.0 + kSlack)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and gamma must lie in [0, 1]");
  }
  alpha = std::clamp(alpha, 0.0, 1.0);
  gamma = std::clamp(gamma, 0.0, 1.0);
  const double kd = static_cast<double>(k);
  BoundValues out;
  out.b_n = 1.0 - std::pow((kd - 1.0) / kd, kd);
  out.b_alpha_gamma = alpha < 1e-12
                          ? gamma
                          : (1.0 - std::pow((kd - alpha * gamma) / kd, kd)) / alpha;
  return out;
}

BoundReport bound_report(const SetFunction& g, int k) {
  BoundReport report;
  report.alpha = curvature(g);
  report.gamma = submodularity_ratio(g);
  const BoundValues b = bound_values(report.alpha, report.gamma, k);
  report.b_n = b.b_n;
  report.b_alpha_gamma = b.b_alpha_gamma;
  SetFunctionGain gain(g);
  report.greedy = greedy_select(gain, StoppingRule::Cardinality(k)).order;
  report.optimal = exhaustive_optimal(g, k);
  const double greedy_value = g(report.greedy);
  report.greedy_ratio =
      report.optimal.value == 0.0 ? 1.0 : greedy_value / report.optimal.value;
  return report;
}

Comparison compare_to_optimal(const SelectionResult& result, const OptimalSubset& optimal,
                              const Dataset& data, std::optional<double> sigma) {
  const size_t k = optimal.indices.size();
  if (result.order.size() < k) {
    throw Error(ErrorCode::kInvalidArgument, "selection is shorter than the optimal subset");
  }
  const std::span<const int> mine(result.order.data(), k);
  Comparison out;
  for (int i : mine) {
    if (std::find(optimal.indices.begin(), optimal.indices.end(), i) != optimal.indices.end()) {
      ++out.n_common;
    }
  }
  out.ratio = metric_value(data, mine, optimal.metric, sigma) / optimal.value;
  return out;
}

Dataset dataset_from_gram(const Matrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Gram matrix must be square");
  }
  const Eigen::Index v = gram.rows();
  const Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kSingularCovariance, "Gram matrix is not positive definite");
  }
  // Orthonormal columns orthogonal to the all-ones vector keep X centred.
  Matrix seed = Matrix::Zero(v + 1, v + 1);
  seed.col(0).setOnes();
  seed.bottomRightCorner(v, v).setIdentity();
  const Matrix q = Eigen::HouseholderQR<Matrix>(seed).householderQ();
  Matrix x = q.rightCols(v) * llt.matrixU();
  return Dataset(std::move(x), {}, true);
}

}  // namespace varsel
