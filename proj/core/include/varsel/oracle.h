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

// Ground truth for small instances: exhaustive subset search, curvature and
// submodularity ratio of tabulated set functions, and the greedy performance
// bounds.

#ifndef VARSEL_ORACLE_H_
#define VARSEL_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "varsel/dataset.h"
#include "varsel/greedy.h"
#include "varsel/selectors.h"

namespace varsel {

// Largest number of subsets exhaustive_optimal will enumerate.
inline constexpr double kMaxSubsets = 1e7;
// Largest ground set for curvature / submodularity_ratio.
inline constexpr int kMaxLatticeSize = 12;

// A set function on {0..v-1} stored as 2^v values indexed by bitmask.
class SetFunction {
 public:
  SetFunction(int v, std::vector<double> values);
  static SetFunction Tabulate(int v,
                              const std::function<double(std::span<const int>)>& g);

  int size() const { return v_; }
  double operator()(std::uint32_t mask) const { return values_[mask]; }
  double operator()(std::span<const int> indices) const;

 private:
  int v_;
  std::vector<double> values_;
};

// Marginal gains of a SetFunction, for the greedy drivers. value() is g(S).
class SetFunctionGain : public GainFunction {
 public:
  explicit SetFunctionGain(const SetFunction& g) : g_(g) {}
  int size() const override { return g_.size(); }
  double gain(const IndexSets& sets, int candidate) override;
  void commit(const IndexSets& sets, int candidate) override;
  double value() const override { return g_(mask_); }

 private:
  const SetFunction& g_;
  std::uint32_t mask_ = 0;
};

enum class Metric { kVe, kFp, kMi };

struct OptimalSubset {
  std::vector<int> indices;  // ascending, 0-based
  double value = 0.0;
  Metric metric = Metric::kVe;
};

// VE and MI are maximised, FP minimised; ties go to the lexicographically
// smallest index set. `sigma` only matters for MI. Throws Error(kTooLarge)
// when C(v, k) > kMaxSubsets.
OptimalSubset exhaustive_optimal(const Dataset& data, int k, Metric metric,
                                 std::optional<double> sigma = std::nullopt);
// Maximises a tabulated set function over subsets of size k.
OptimalSubset exhaustive_optimal(const SetFunction& g, int k);

double metric_value(const Dataset& data, std::span<const int> selected, Metric metric,
                    std::optional<double> sigma = std::nullopt);

// Curvature and submodularity ratio by full enumeration. The function must be
// non-negative (Error(kInvalidArgument)) and non-decreasing
// (Error(kNotMonotone), with the witness pair of masks as indices). Both
// results lie in [0, 1]; pairs with a zero denominator are skipped.
double curvature(const SetFunction& g);
double submodularity_ratio(const SetFunction& g);

struct BoundValues {
  double b_n = 0.0;
  double b_alpha_gamma = 0.0;
};
BoundValues bound_values(double alpha, double gamma, int k);

struct BoundReport {
  double alpha = 0.0;
  double gamma = 0.0;
  double b_n = 0.0;
  double b_alpha_gamma = 0.0;
  // g(greedy set) / g(optimal set); 1 when the optimum is 0.
  double greedy_ratio = 1.0;
  std::vector<int> greedy;
  OptimalSubset optimal;
};
BoundReport bound_report(const SetFunction& g, int k);

struct Comparison {
  int n_common = 0;
  // metric(result's first k) / optimal.value.
  double ratio = 0.0;
};
Comparison compare_to_optimal(const SelectionResult& result, const OptimalSubset& optimal,
                              const Dataset& data,
                              std::optional<double> sigma = std::nullopt);

// A centred (v + 1) x v dataset whose Gram matrix X^T X equals `gram`.
// Throws Error(kSingularCovariance) if gram is not positive definite.
Dataset dataset_from_gram(const Matrix& gram);

}  // namespace varsel

#endif  // VARSEL_ORACLE_H_
