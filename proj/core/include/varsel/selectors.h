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

// The unsupervised variable selectors. Each one is a GainFunction wired into
// one of the greedy drivers.
//
// All selectors take mean-centred data (Error(kInvalidArgument) otherwise).
// FSFP-FSCA and UFS additionally scale the columns to unit norm themselves.
// The VE curve of every result is measured against the centred input.

#ifndef VARSEL_SELECTORS_H_
#define VARSEL_SELECTORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varsel/dataset.h"
#include "varsel/greedy.h"
#include "varsel/metrics.h"

namespace varsel {

enum class Algorithm { kFsca, kLfsca, kFosMod, kPfs, kItfs, kFsfpFsca, kUfs };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kFsca, Algorithm::kLfsca,    Algorithm::kFosMod, Algorithm::kPfs,
    Algorithm::kItfs, Algorithm::kFsfpFsca, Algorithm::kUfs};

// "FSCA", "L-FSCA", "FOS-MOD", "PFS", "ITFS", "FSFP-FSCA", "UFS".
std::string_view DisplayName(Algorithm algorithm);
// "fsca", "lfsca", "fosmod", "pfs", "itfs", "fsfp_fsca", "ufs".
std::string_view Id(Algorithm algorithm);
// Accepts either spelling, case-insensitive.
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct SelectionResult {
  std::string algorithm;
  // 0-based, in selection order.
  std::vector<int> order;
  VeCurve ve_curve;
  // The selector's own criterion at each step (see each selector).
  std::vector<double> native_trace;
  std::int64_t eval_count = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::string> warnings;
};

struct SelectorOptions {
  // ITFS noise level; CovarianceModel::DefaultSigma when unset.
  std::optional<double> sigma;
  // FSFP-FSCA / UFS: drive the submodular part with the lazy engine.
  bool lazy = false;
  // UFS: rebuild the Gram-Schmidt basis from scratch at every step.
  bool rebuild_basis = false;
  double nipals_tolerance = 1e-9;
  int nipals_max_iterations = 500;
};

// Native trace: marginal VE (percentage points) of each pick.
SelectionResult fsca_select(const Dataset& data, const StoppingRule& stop);
SelectionResult lfsca_select(const Dataset& data, const StoppingRule& stop);
// Native trace: mean squared correlation of the pick with all variables.
SelectionResult fosmod_select(const Dataset& data, const StoppingRule& stop);
// Native trace: |Pearson correlation| of the pick with the first PC.
SelectionResult pfs_select(const Dataset& data, const StoppingRule& stop,
                           const SelectorOptions& options = {});
// Native trace: delta_mi ratio of each pick.
SelectionResult itfs_select(const Dataset& data, const StoppingRule& stop,
                            std::optional<double> sigma = std::nullopt);
// Native trace: FP of the selection after each pick (unit-norm columns).
SelectionResult fsfp_fsca_select(const Dataset& data, const StoppingRule& stop,
                                 bool lazy = false);
// The first two picks are the pair minimising |<x_i, x_j>|, larger index
// first. Native trace: R^2 of each pick against the basis of earlier picks.
SelectionResult ufs_select(const Dataset& data, const StoppingRule& stop,
                           bool lazy = false, bool rebuild_basis = false);

SelectionResult run_selector(Algorithm algorithm, const Dataset& data,
                             const StoppingRule& stop,
                             const SelectorOptions& options = {});

struct NipalsResult {
  Vector scores;    // first principal component score vector, length m
  Vector loadings;  // unit-norm loading vector, length v
  int iterations = 0;
  bool converged = false;
};

// First principal component by NIPALS, started from the column of largest
// norm. Stops when successive score vectors differ by <= tolerance (relative)
// or after max_iterations; in the latter case converged is false and the last
// iterate is returned. The sign makes the largest-magnitude loading positive.
NipalsResult nipals_first_pc(const Matrix& matrix, double tolerance = 1e-9,
                             int max_iterations = 500);

// Orthonormal basis of the columns by modified Gram-Schmidt with one
// re-orthogonalisation pass. Throws Error(kRankDeficient) on a dependent
// column.
Matrix gram_schmidt(const Matrix& columns);

// --- Gain functions ---------------------------------------------------------

// Shared residual state for FSCA, FOS-MOD and PFS: R starts at X and is
// deflated by every pick. Columns whose residual norm falls to
// kDegenerateRelTolerance * ||X||_F are excluded for good. value() is the VE
// of the current selection.
class ResidualGain : public GainFunction {
 public:
  explicit ResidualGain(const Matrix& x);

  int size() const override { return static_cast<int>(residual_.cols()); }
  void commit(const IndexSets& sets, int candidate) override;
  double value() const override { return value_; }

  const Matrix& residual() const { return residual_; }

 protected:
  bool Degenerate(int candidate);

  Matrix residual_;
  double total_sq_;
  double min_sq_norm_;
  double value_ = 0.0;
  std::vector<char> excluded_;
};

// Marginal VE (percentage points) of adding a column: the Rayleigh quotient
// ||R^T r_i||^2 / ||r_i||^2 scaled by 100 / ||X||_F^2.
class FscaGain : public ResidualGain {
 public:
  using ResidualGain::ResidualGain;
  double gain(const IndexSets& sets, int candidate) override;
  void gains(const IndexSets& sets, std::span<const int> candidates,
             std::span<double> out) override;
};

// (1/v) sum_j rho^2(x_j, r_i).
class FosModGain : public ResidualGain {
 public:
  explicit FosModGain(const Matrix& x);
  double gain(const IndexSets& sets, int candidate) override;
  void gains(const IndexSets& sets, std::span<const int> candidates,
             std::span<double> out) override;

 private:
  Vector inv_sq_norms_;
};

// |rho(r_i, p_1)| with p_1 the first PC of the current residual.
class PfsGain : public ResidualGain {
 public:
  PfsGain(const Matrix& x, double tolerance, int max_iterations);
  double gain(const IndexSets& sets, int candidate) override;
  void gains(const IndexSets& sets, std::span<const int> candidates,
             std::span<double> out) override;
  void commit(const IndexSets& sets, int candidate) override;

  int nonconverged_steps() const { return nonconverged_; }

 private:
  const Vector& Component();

  double tolerance_;
  int max_iterations_;
  std::optional<Vector> component_;
  double component_norm_ = 0.0;
  int nonconverged_ = 0;
};

// Base for gains whose native state is not the residual; tracks VE of the
// selection against the centred data separately.
class TrackedGain : public GainFunction {
 public:
  explicit TrackedGain(const Matrix& x) : tracker_(x) {}
  void commit(const IndexSets& sets, int candidate) override;
  double value() const override { return tracker_.value(); }

 protected:
  virtual void OnCommit(const IndexSets& sets, int candidate) = 0;

 private:
  VarianceTracker tracker_;
};

// var(x_i | S) * precision_ii(U), i.e. the delta_mi ratio, maintained by
// rank-one updates of the conditional covariance given S and of the precision
// matrix of U.
class ItfsGain : public TrackedGain {
 public:
  ItfsGain(const Matrix& x, const CovarianceModel& model);
  int size() const override { return static_cast<int>(conditional_.rows()); }
  double gain(const IndexSets& sets, int candidate) override;

 protected:
  void OnCommit(const IndexSets& sets, int candidate) override;

 private:
  Matrix conditional_;
  Matrix precision_;
};

// -(<x_i,x_i>^2 + 2 sum_{j in S} <x_i,x_j>^2): the change in
// FP(X) - FP(X_S) when adding i. `unit` holds the unit-norm columns; VE is
// tracked against `x`.
class FrameGain : public TrackedGain {
 public:
  FrameGain(const Matrix& x, const Matrix& unit);
  int size() const override { return static_cast<int>(inner_.rows()); }
  double gain(const IndexSets& sets, int candidate) override;
  double frame_potential() const { return fp_; }

 protected:
  void OnCommit(const IndexSets& sets, int candidate) override;

 private:
  Matrix inner_;
  double fp_ = 0.0;
};

// -R^2(x_i, C_S) = -||C_S^T x_i||^2 on the unit-norm columns.
class UfsGain : public TrackedGain {
 public:
  UfsGain(const Matrix& x, const Matrix& unit, bool rebuild_basis);
  int size() const override { return static_cast<int>(unit_.cols()); }
  double gain(const IndexSets& sets, int candidate) override;
  const Matrix& basis() const { return basis_; }

  // Lexicographically first (i < j) minimising |<x_i, x_j>|.
  static std::pair<int, int> FirstPair(const Matrix& unit);

 protected:
  void OnCommit(const IndexSets& sets, int candidate) override;

 private:
  Matrix unit_;
  Matrix basis_;
  bool rebuild_basis_;
};

}  // namespace varsel

#endif  // VARSEL_SELECTORS_H_
