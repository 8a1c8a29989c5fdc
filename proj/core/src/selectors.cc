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

#include "varsel/selectors.h"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>

#include "varsel/errors.h"
#include "varsel/linalg.h"

namespace varsel {

namespace {

// A new Gram-Schmidt direction shorter than this (the inputs are unit norm)
// is treated as dependent.
constexpr double kDependentTolerance = 1e-10;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void RequireCentered(const Dataset& data, std::string_view algorithm) {
  if (!data.centered()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(algorithm) + " needs mean-centred data (see center_columns)");
  }
}

Matrix UnitColumns(const Dataset& data) {
  return data.unit_norm() ? data.values() : normalize_unit(data).values();
}

// Two passes of modified Gram-Schmidt of x against the orthonormal columns of
// `basis`. Returns the norm of what is left.
double Orthogonalize(const Matrix& basis, Vector& x) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index j = 0; j < basis.cols(); ++j) x -= basis.col(j).dot(x) * basis.col(j);
  }
  return x.norm();
}

void AppendDirection(Matrix& basis, const Vector& column, int index) {
  Vector x = column;
  const double norm = Orthogonalize(basis, x);
  if (!(norm > kDependentTolerance * std::max(1.0, column.norm()))) {
    throw Error(ErrorCode::kRankDeficient,
                "column is linearly dependent on the earlier selections", {index});
  }
  basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
  basis.col(basis.cols() - 1) = x / norm;
}

SelectionResult FromRun(Algorithm algorithm, GreedyRun run) {
  SelectionResult result;
  result.algorithm = std::string(DisplayName(algorithm));
  result.order = std::move(run.order);
  result.ve_curve = std::move(run.values);
  result.native_trace = std::move(run.gains);
  result.eval_count = run.evaluations;
  return result;
}

SelectionResult ResidualSelect(Algorithm algorithm, ResidualGain& gain,
                               const StoppingRule& stop, bool lazy) {
  GreedyRun run = lazy ? lazy_greedy_select(gain, stop) : greedy_select(gain, stop);
  return FromRun(algorithm, std::move(run));
}

}  // namespace

std::string_view DisplayName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFsca: return "FSCA";
    case Algorithm::kLfsca: return "L-FSCA";
    case Algorithm::kFosMod: return "FOS-MOD";
    case Algorithm::kPfs: return "PFS";
    case Algorithm::kItfs: return "ITFS";
    case Algorithm::kFsfpFsca: return "FSFP-FSCA";
    case Algorithm::kUfs: return "UFS";
  }
  return "?";
}

std::string_view Id(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFsca: return "fsca";
    case Algorithm::kLfsca: return "lfsca";
    case Algorithm::kFosMod: return "fosmod";
    case Algorithm::kPfs: return "pfs";
    case Algorithm::kItfs: return "itfs";
    case Algorithm::kFsfpFsca: return "fsfp_fsca";
    case Algorithm::kUfs: return "ufs";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (Algorithm a : kAllAlgorithms) {
    std::string display;
    for (char c : DisplayName(a)) display.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == Id(a) || lower == display) return a;
  }
  return std::nullopt;
}

// --- NIPALS / Gram-Schmidt -------------------------------------------------

NipalsResult nipals_first_pc(const Matrix& matrix, double tolerance, int max_iterations) {
  if (matrix.size() == 0 || !(matrix.squaredNorm() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "NIPALS needs a nonzero matrix");
  }
  if (max_iterations < 1) throw Error(ErrorCode::kInvalidArgument, "max_iterations < 1");
  Eigen::Index start = 0;
  matrix.colwise().squaredNorm().maxCoeff(&start);

  NipalsResult out;
  Vector t = matrix.col(start);
  Vector p;
  for (out.iterations = 1; out.iterations <= max_iterations; ++out.iterations) {
    p.noalias() = matrix.transpose() * t;
    p.normalize();
    Vector next = matrix * p;
    const double change = (next - t).norm();
    t = std::move(next);
    if (change <= tolerance * t.norm()) {
      out.converged = true;
      break;
    }
  }
  out.iterations = std::min(out.iterations, max_iterations);
  Eigen::Index lead = 0;
  p.cwiseAbs().maxCoeff(&lead);
  if (p(lead) < 0.0) {
    p = -p;
    t = -t;
  }
  out.scores = std::move(t);
  out.loadings = std::move(p);
  return out;
}

Matrix gram_schmidt(const Matrix& columns) {
  Matrix basis(columns.rows(), 0);
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    AppendDirection(basis, columns.col(j), static_cast<int>(j));
  }
  return basis;
}

// --- Residual-based gains ----------------------------------------------------

ResidualGain::ResidualGain(const Matrix& x)
    : residual_(x), total_sq_(x.squaredNorm()),
      excluded_(static_cast<size_t>(x.cols()), 0) {
  const double tol = kDegenerateRelTolerance * std::sqrt(total_sq_);
  min_sq_norm_ = tol * tol;
}

bool ResidualGain::Degenerate(int candidate) {
  if (excluded_[candidate]) return true;
  if (!(residual_.col(candidate).squaredNorm() > min_sq_norm_)) {
    excluded_[candidate] = 1;
    return true;
  }
  return false;
}

void ResidualGain::commit(const IndexSets& sets, int candidate) {
  (void)sets;
  excluded_[candidate] = 1;
  if (total_sq_ == 0.0) {
    value_ = 100.0;
    return;
  }
  if (deflate_in_place(residual_, candidate, min_sq_norm_)) {
    value_ = std::clamp((1.0 - residual_.squaredNorm() / total_sq_) * 100.0, 0.0, 100.0);
  }
}

double FscaGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  if (Degenerate(candidate)) return kExcluded;
  const double sq = residual_.col(candidate).squaredNorm();
  const Vector g = residual_.transpose() * residual_.col(candidate);
  return g.squaredNorm() / sq * (100.0 / total_sq_);
}

void FscaGain::gains(const IndexSets& sets, std::span<const int> candidates,
                     std::span<double> out) {
  (void)sets;
  const Eigen::Index v = residual_.cols();
  // Lower triangle of G = R^T R; column i of the full G has squared norm
  // colsum_i + rowsum_i - G_ii^2 over the triangle.
  Matrix g = Matrix::Zero(v, v);
  g.selfadjointView<Eigen::Lower>().rankUpdate(residual_.transpose());
  const Matrix sq = g.cwiseAbs2();
  const Vector col_part = sq.colwise().sum().transpose();
  const Vector row_part = sq.rowwise().sum();
  for (size_t n = 0; n < candidates.size(); ++n) {
    const int i = candidates[n];
    const double diag = g(i, i);
    if (excluded_[i] || !(diag > min_sq_norm_)) {
      excluded_[i] = 1;
      out[n] = kExcluded;
      continue;
    }
    out[n] = (col_part(i) + row_part(i) - sq(i, i)) / diag * (100.0 / total_sq_);
  }
}

FosModGain::FosModGain(const Matrix& x)
    : ResidualGain(x), inv_sq_norms_(x.cols()) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double sq = x.col(j).squaredNorm();
    inv_sq_norms_(j) = sq > kZeroNormTolerance * kZeroNormTolerance ? 1.0 / sq : 0.0;
  }
}

double FosModGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  if (Degenerate(candidate)) return kExcluded;
  const double sq = residual_.col(candidate).squaredNorm();
  // X^T r_i = R^T r_i because R = P X with P an orthogonal projector.
  const Vector g = residual_.transpose() * residual_.col(candidate);
  const double sum = g.cwiseAbs2().dot(inv_sq_norms_);
  return sum / sq / static_cast<double>(residual_.cols());
}

void FosModGain::gains(const IndexSets& sets, std::span<const int> candidates,
                       std::span<double> out) {
  (void)sets;
  const Eigen::Index v = residual_.cols();
  Matrix g = Matrix::Zero(v, v);
  g.selfadjointView<Eigen::Lower>().rankUpdate(residual_.transpose());
  const Matrix sq = g.cwiseAbs2();
  const Vector col_part = sq.transpose() * inv_sq_norms_;
  const Vector row_part = sq * inv_sq_norms_;
  for (size_t n = 0; n < candidates.size(); ++n) {
    const int i = candidates[n];
    const double diag = g(i, i);
    if (excluded_[i] || !(diag > min_sq_norm_)) {
      excluded_[i] = 1;
      out[n] = kExcluded;
      continue;
    }
    const double sum = col_part(i) + row_part(i) - sq(i, i) * inv_sq_norms_(i);
    out[n] = sum / diag / static_cast<double>(v);
  }
}

PfsGain::PfsGain(const Matrix& x, double tolerance, int max_iterations)
    : ResidualGain(x), tolerance_(tolerance), max_iterations_(max_iterations) {}

const Vector& PfsGain::Component() {
  if (!component_) {
    NipalsResult pc = nipals_first_pc(residual_, tolerance_, max_iterations_);
    if (!pc.converged) ++nonconverged_;
    component_norm_ = pc.scores.norm();
    component_ = std::move(pc.scores);
  }
  return *component_;
}

double PfsGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  if (Degenerate(candidate)) return kExcluded;
  const Vector& p = Component();
  const double norm = residual_.col(candidate).norm();
  return std::abs(residual_.col(candidate).dot(p)) / (norm * component_norm_);
}

void PfsGain::gains(const IndexSets& sets, std::span<const int> candidates,
                    std::span<double> out) {
  (void)sets;
  bool any = false;
  for (size_t n = 0; n < candidates.size(); ++n) {
    const bool degenerate = Degenerate(candidates[n]);
    if (degenerate) out[n] = kExcluded;
    any = any || !degenerate;
  }
  if (!any) return;
  const Vector& p = Component();
  const Vector dots = residual_.transpose() * p;
  for (size_t n = 0; n < candidates.size(); ++n) {
    const int i = candidates[n];
    if (excluded_[i]) continue;
    out[n] = std::abs(dots(i)) / (residual_.col(i).norm() * component_norm_);
  }
}

void PfsGain::commit(const IndexSets& sets, int candidate) {
  ResidualGain::commit(sets, candidate);
  component_.reset();
}

// --- Tracked gains -------------------------------------------------------------

void TrackedGain::commit(const IndexSets& sets, int candidate) {
  tracker_.add(candidate);
  OnCommit(sets, candidate);
}

ItfsGain::ItfsGain(const Matrix& x, const CovarianceModel& model) : TrackedGain(x) {
  if (model.size() != x.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "covariance model does not match the data");
  }
  const Eigen::Index v = model.size();
  conditional_ = model.cov();
  conditional_.diagonal().array() += model.sigma() * model.sigma();
  const auto llt = CholeskyWithJitter(conditional_);
  if (!llt) throw Error(ErrorCode::kSingularCovariance, "regularised covariance is singular");
  precision_ = llt->solve(Matrix::Identity(v, v));
}

double ItfsGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  const double p = precision_(candidate, candidate);
  if (!(p > 0.0)) {
    throw Error(ErrorCode::kSingularCovariance,
                "precision of the unselected block lost positivity", {candidate});
  }
  return conditional_(candidate, candidate) * p;
}

void ItfsGain::OnCommit(const IndexSets& sets, int candidate) {
  (void)sets;
  // Condition on the new pick: C <- C - c c^T / c_jj.
  const double d = conditional_(candidate, candidate);
  if (d > 0.0) {
    const Vector c = conditional_.col(candidate);
    conditional_.noalias() -= c * (c.transpose() / d);
  }
  // Drop the pick from U: the inverse of a principal submatrix.
  const double p = precision_(candidate, candidate);
  const Vector q = precision_.col(candidate);
  precision_.noalias() -= q * (q.transpose() / p);
  precision_.row(candidate).setZero();
  precision_.col(candidate).setZero();
}

FrameGain::FrameGain(const Matrix& x, const Matrix& unit)
    : TrackedGain(x), inner_(unit.transpose() * unit) {}

double FrameGain::gain(const IndexSets& sets, int candidate) {
  double increment = inner_(candidate, candidate) * inner_(candidate, candidate);
  for (int j : sets.selected()) {
    increment += 2.0 * inner_(candidate, j) * inner_(candidate, j);
  }
  return -increment;
}

void FrameGain::OnCommit(const IndexSets& sets, int candidate) {
  double increment = inner_(candidate, candidate) * inner_(candidate, candidate);
  for (int j : sets.selected()) {
    if (j != candidate) increment += 2.0 * inner_(candidate, j) * inner_(candidate, j);
  }
  fp_ += increment;
}

UfsGain::UfsGain(const Matrix& x, const Matrix& unit, bool rebuild_basis)
    : TrackedGain(x), unit_(unit), basis_(unit.rows(), 0), rebuild_basis_(rebuild_basis) {}

double UfsGain::gain(const IndexSets& sets, int candidate) {
  (void)sets;
  if (basis_.cols() == 0) return 0.0;
  return -(basis_.transpose() * unit_.col(candidate)).squaredNorm();
}

void UfsGain::OnCommit(const IndexSets& sets, int candidate) {
  if (!rebuild_basis_) {
    AppendDirection(basis_, unit_.col(candidate), candidate);
    return;
  }
  Matrix rebuilt(unit_.rows(), 0);
  for (int j : sets.selected()) AppendDirection(rebuilt, unit_.col(j), j);
  basis_ = std::move(rebuilt);
}

std::pair<int, int> UfsGain::FirstPair(const Matrix& unit) {
  if (unit.cols() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two columns");
  const Matrix q = unit.transpose() * unit;
  std::pair<int, int> best{0, 1};
  double best_abs = std::abs(q(0, 1));
  for (int i = 0; i < q.rows(); ++i) {
    for (int j = i + 1; j < q.cols(); ++j) {
      const double a = std::abs(q(i, j));
      if (a < best_abs - kTieTolerance) {
        best_abs = a;
        best = {i, j};
      }
    }
  }
  return best;
}

// --- Selectors -----------------------------------------------------------------

SelectionResult fsca_select(const Dataset& data, const StoppingRule& stop) {
  const auto start = Clock::now();
  RequireCentered(data, "FSCA");
  FscaGain gain(data.values());
  SelectionResult result = ResidualSelect(Algorithm::kFsca, gain, stop, false);
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult lfsca_select(const Dataset& data, const StoppingRule& stop) {
  const auto start = Clock::now();
  RequireCentered(data, "L-FSCA");
  FscaGain gain(data.values());
  SelectionResult result = ResidualSelect(Algorithm::kLfsca, gain, stop, true);
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult fosmod_select(const Dataset& data, const StoppingRule& stop) {
  const auto start = Clock::now();
  RequireCentered(data, "FOS-MOD");
  FosModGain gain(data.values());
  SelectionResult result = ResidualSelect(Algorithm::kFosMod, gain, stop, false);
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult pfs_select(const Dataset& data, const StoppingRule& stop,
                           const SelectorOptions& options) {
  const auto start = Clock::now();
  RequireCentered(data, "PFS");
  PfsGain gain(data.values(), options.nipals_tolerance, options.nipals_max_iterations);
  SelectionResult result = ResidualSelect(Algorithm::kPfs, gain, stop, false);
  if (gain.nonconverged_steps() > 0) {
    result.warnings.push_back("NIPALS did not converge at " +
                              std::to_string(gain.nonconverged_steps()) + " step(s)");
  }
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult itfs_select(const Dataset& data, const StoppingRule& stop,
                            std::optional<double> sigma) {
  const auto start = Clock::now();
  RequireCentered(data, "ITFS");
  if (sigma && !(*sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "ITFS needs sigma > 0");
  }
  const CovarianceModel model(data, sigma);
  if (!(model.sigma() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "ITFS needs sigma > 0 (all-zero data?)");
  }
  ItfsGain gain(data.values(), model);
  SelectionResult result = FromRun(Algorithm::kItfs, greedy_select(gain, stop));
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult fsfp_fsca_select(const Dataset& data, const StoppingRule& stop,
                                 bool lazy) {
  const auto start = Clock::now();
  RequireCentered(data, "FSFP-FSCA");
  stop.Validate(data.cols());
  const Dataset unit(UnitColumns(data), {}, data.centered(), true);
  const int first = fsca_select(unit, StoppingRule::Cardinality(1)).order.front();

  FrameGain gain(data.values(), unit.values());
  const int seed[] = {first};
  GreedyRun run = lazy ? lazy_greedy_select(gain, stop, seed)
                       : greedy_select(gain, stop, seed);
  // The engine cannot see the FSCA evaluations of the first pick.
  run.evaluations += data.cols();
  SelectionResult result = FromRun(Algorithm::kFsfpFsca, std::move(run));

  // Native trace: FP of the selection after each pick.
  const Matrix& q = unit.values();
  result.native_trace.clear();
  double fp = 0.0;
  for (size_t n = 0; n < result.order.size(); ++n) {
    const int i = result.order[n];
    double increment = std::pow(q.col(i).squaredNorm(), 2);
    for (size_t s = 0; s < n; ++s) {
      increment += 2.0 * std::pow(q.col(i).dot(q.col(result.order[s])), 2);
    }
    fp += increment;
    result.native_trace.push_back(fp);
  }
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult ufs_select(const Dataset& data, const StoppingRule& stop, bool lazy,
                           bool rebuild_basis) {
  const auto start = Clock::now();
  RequireCentered(data, "UFS");
  if (data.cols() < 2) throw Error(ErrorCode::kInvalidArgument, "UFS needs v >= 2");
  if (stop.kind() == StoppingRule::Kind::kCardinality && stop.k() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "UFS needs k >= 2");
  }
  stop.Validate(data.cols());
  const Matrix unit = UnitColumns(data);
  const auto [a, b] = UfsGain::FirstPair(unit);

  UfsGain gain(data.values(), unit, rebuild_basis);
  // The pair enters larger index first, the order a column-major scan of Q
  // meets it in the lower triangle.
  const int seed[] = {b, a};
  GreedyRun run = lazy ? lazy_greedy_select(gain, stop, seed)
                       : greedy_select(gain, stop, seed);
  // Scanning Q for the first pair touches every pair once.
  run.evaluations += static_cast<std::int64_t>(data.cols()) * (data.cols() - 1) / 2;
  SelectionResult result = FromRun(Algorithm::kUfs, std::move(run));
  // Native trace is R^2 = -gain; the seed pair gets 0 and <x_a, x_b>^2.
  const double ab = unit.col(a).dot(unit.col(b));
  result.native_trace[0] = 0.0;
  result.native_trace[1] = ab * ab;
  for (size_t n = 2; n < result.native_trace.size(); ++n) {
    result.native_trace[n] = -result.native_trace[n];
  }
  result.elapsed_seconds = Seconds(start);
  return result;
}

SelectionResult run_selector(Algorithm algorithm, const Dataset& data,
                             const StoppingRule& stop, const SelectorOptions& options) {
  switch (algorithm) {
    case Algorithm::kFsca: return fsca_select(data, stop);
    case Algorithm::kLfsca: return lfsca_select(data, stop);
    case Algorithm::kFosMod: return fosmod_select(data, stop);
    case Algorithm::kPfs: return pfs_select(data, stop, options);
    case Algorithm::kItfs: return itfs_select(data, stop, options.sigma);
    case Algorithm::kFsfpFsca: return fsfp_fsca_select(data, stop, options.lazy);
    case Algorithm::kUfs: return ufs_select(data, stop, options.lazy, options.rebuild_basis);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace varsel
