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
#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "varsel/errors.h"

namespace varsel {
namespace {

using ::varsel::testing::CenteredRandom;
using ::varsel::testing::QrVarianceExplained;
using ::varsel::testing::UnitRandom;

std::vector<int> Members(std::uint32_t mask, int v) {
  std::vector<int> out;
  for (int i = 0; i < v; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

// All k-subsets in lexicographic order.
std::vector<std::vector<int>> Combinations(int v, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == v - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

SetFunction RandomCoverage(int v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::bernoulli_distribution covers(0.35);
  const int universe = 12;
  std::vector<double> w(universe);
  for (double& x : w) x = weight(rng);
  std::vector<std::vector<char>> cover(v, std::vector<char>(universe));
  for (auto& row : cover) {
    for (auto& c : row) c = covers(rng);
  }
  return SetFunction::Tabulate(v, [&](std::span<const int> s) {
    double total = 0.0;
    for (int u = 0; u < universe; ++u) {
      bool hit = false;
      for (int i : s) hit = hit || cover[i][u];
      if (hit) total += w[u];
    }
    return total;
  });
}

// 1 - min over i, A subset B subset X\i of marginal(B)/marginal(A), written
// with plain set loops.
double LiteralCurvature(const SetFunction& g) {
  const int v = g.size();
  double alpha = 0.0;
  for (int i = 0; i < v; ++i) {
    for (std::uint32_t b = 0; b < (1u << v); ++b) {
      if (b & (1u << i)) continue;
      for (std::uint32_t a = 0; a < (1u << v); ++a) {
        if ((a & b) != a || a == b) continue;
        const double ga = g(a | (1u << i)) - g(a);
        const double gb = g(b | (1u << i)) - g(b);
        if (ga > 1e-12) alpha = std::max(alpha, 1.0 - gb / ga);
      }
    }
  }
  return std::min(alpha, 1.0);
}

double LiteralRatio(const SetFunction& g) {
  const int v = g.size();
  double gamma = 1.0;
  for (std::uint32_t a = 0; a < (1u << v); ++a) {
    for (std::uint32_t b = 1; b < (1u << v); ++b) {
      if (a & b) continue;
      double num = 0.0;
      for (int i : Members(b, v)) num += g(a | (1u << i)) - g(a);
      const double den = g(a | b) - g(a);
      if (den > 1e-12) gamma = std::min(gamma, num / den);
    }
  }
  return std::max(gamma, 0.0);
}

TEST(SetFunctionTest, TabulateAndLookup) {
  const SetFunction g = SetFunction::Tabulate(3, [](std::span<const int> s) {
    double t = 0.0;
    for (int i : s) t += i + 1;
    return t;
  });
  EXPECT_EQ(g(0b101u), 4.0);
  const std::vector<int> s = {1, 2};
  EXPECT_EQ(g(s), 5.0);
  EXPECT_THROW(SetFunction(3, std::vector<double>(7)), Error);
}

TEST(ExhaustiveTest, OrthogonalColumnsPickLargestNorms) {
  Matrix seedm = ::varsel::testing::RandomNormal(9, 5, 1);
  seedm.col(0).setOnes();
  Matrix q = Eigen::HouseholderQR<Matrix>(seedm).householderQ();
  Matrix x = q.middleCols(1, 4);
  const double norms[] = {1.0, 4.0, 2.0, 3.0};
  for (int j = 0; j < 4; ++j) x.col(j) *= norms[j];
  const Dataset d(x, {}, true);
  const OptimalSubset best = exhaustive_optimal(d, 2, Metric::kVe);
  EXPECT_EQ(best.indices, (std::vector<int>{1, 3}));
  EXPECT_NEAR(best.value, 100.0 * 25.0 / 30.0, 1e-9);
  EXPECT_NEAR(exhaustive_optimal(d, 4, Metric::kVe).value, 100.0, 1e-9);
}

TEST(ExhaustiveTest, VeMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset d = CenteredRandom(30, 8, 100 + seed);
    for (int k : {1, 3, 5}) {
      double best = -1.0;
      std::vector<int> arg;
      for (const auto& s : Combinations(8, k)) {
        const double ve = QrVarianceExplained(d.values(), s);
        if (ve > best + 1e-12) {
          best = ve;
          arg = s;
        }
      }
      const OptimalSubset got = exhaustive_optimal(d, k, Metric::kVe);
      EXPECT_EQ(got.indices, arg);
      EXPECT_NEAR(got.value, best, 1e-8);
    }
  }
}

TEST(ExhaustiveTest, AtLeastAsGoodAsFsca) {
  const Dataset d = CenteredRandom(200, 10, 7);
  const OptimalSubset best = exhaustive_optimal(d, 3, Metric::kVe);
  const SelectionResult r = fsca_select(d, StoppingRule::Cardinality(3));
  EXPECT_GE(best.value, r.ve_curve.back() - 1e-9);
  const Comparison c = compare_to_optimal(r, best, d);
  EXPECT_LE(c.ratio, 1.0 + 1e-12);
  EXPECT_GE(c.n_common, 0);
  EXPECT_LE(c.n_common, 3);
}

TEST(ExhaustiveTest, FrameAndMutualInformationMatchBruteForce) {
  const Dataset u = UnitRandom(25, 7, 8);
  const Dataset d = CenteredRandom(25, 7, 9);
  for (int k : {2, 4}) {
    double fp_best = 1e300;
    double mi_best = -1e300;
    std::vector<int> fp_arg;
    std::vector<int> mi_arg;
    const CovarianceModel model(d, 0.3);
    for (const auto& s : Combinations(7, k)) {
      double fp = 0.0;
      for (int i : s) {
        for (int j : s) fp += std::pow(u.values().col(i).dot(u.values().col(j)), 2);
      }
      if (fp < fp_best - 1e-12) {
        fp_best = fp;
        fp_arg = s;
      }
      const double mi = mutual_information(model, s);
      if (mi > mi_best + 1e-12) {
        mi_best = mi;
        mi_arg = s;
      }
    }
    const OptimalSubset fp = exhaustive_optimal(u, k, Metric::kFp);
    EXPECT_EQ(fp.indices, fp_arg);
    EXPECT_NEAR(fp.value, fp_best, 1e-10);
    const OptimalSubset mi = exhaustive_optimal(d, k, Metric::kMi, 0.3);
    EXPECT_EQ(mi.indices, mi_arg);
    EXPECT_NEAR(mi.value, mi_best, 1e-9);
    EXPECT_NEAR(metric_value(d, mi.indices, Metric::kMi, 0.3), mi_best, 1e-9);
  }
}

TEST(ExhaustiveTest, ColumnReorderingOnlyRelabels) {
  const Dataset d = CenteredRandom(40, 9, 12);
  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(12));
  Matrix shuffled(40, 9);
  for (int j = 0; j < 9; ++j) shuffled.col(j) = d.values().col(perm[j]);
  const Dataset p(shuffled, {}, true);
  for (int k : {2, 4}) {
    const OptimalSubset a = exhaustive_optimal(d, k, Metric::kVe);
    const OptimalSubset b = exhaustive_optimal(p, k, Metric::kVe);
    std::vector<int> mapped;
    for (int i : b.indices) mapped.push_back(perm[i]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, a.indices);
    EXPECT_NEAR(a.value, b.value, 1e-9);
  }
}

TEST(ExhaustiveTest, RefusesHugeSearches) {
  const Dataset d = CenteredRandom(61, 60, 10);
  try {
    exhaustive_optimal(d, 30, Metric::kVe);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(ExhaustiveTest, SetFunctionMaximum) {
  const SetFunction g = RandomCoverage(6, 11);
  double best = -1.0;
  for (const auto& s : Combinations(6, 3)) best = std::max(best, g(s));
  EXPECT_NEAR(exhaustive_optimal(g, 3).value, best, 1e-12);
}

TEST(CurvatureTest, ModularFunction) {
  const SetFunction g = SetFunction::Tabulate(5, [](std::span<const int> s) {
    double t = 0.0;
    for (int i : s) t += 0.5 + i;
    return t;
  });
  EXPECT_NEAR(curvature(g), 0.0, 1e-12);
  EXPECT_NEAR(submodularity_ratio(g), 1.0, 1e-12);
}

TEST(CurvatureTest, SaturatingFunctionIsFullyCurved) {
  const SetFunction g = SetFunction::Tabulate(
      4, [](std::span<const int> s) { return std::min<double>(s.size(), 1.0); });
  EXPECT_NEAR(curvature(g), 1.0, 1e-12);
  EXPECT_NEAR(submodularity_ratio(g), 1.0, 1e-12);
}

TEST(CurvatureTest, MatchesLiteralDefinitions) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SetFunction g = RandomCoverage(6, 20 + seed);
    EXPECT_NEAR(curvature(g), LiteralCurvature(g), 1e-12);
    EXPECT_NEAR(submodularity_ratio(g), 1.0, 1e-12);
  }
  // Supermodular: no curvature, ratio below one.
  const SetFunction sq = SetFunction::Tabulate(5, [](std::span<const int> s) {
    double t = 0.0;
    for (int i : s) t += 1.0 + i;
    return t * t;
  });
  EXPECT_NEAR(curvature(sq), 0.0, 1e-12);
  EXPECT_NEAR(submodularity_ratio(sq), LiteralRatio(sq), 1e-12);
  EXPECT_LT(submodularity_ratio(sq), 1.0);
}

TEST(CurvatureTest, VarianceExplainedLattice) {
  const Dataset d = CenteredRandom(20, 6, 30);
  const SetFunction g = SetFunction::Tabulate(6, [&](std::span<const int> s) {
    return s.empty() ? 0.0 : metric_value(d, s, Metric::kVe);
  });
  EXPECT_NEAR(curvature(g), LiteralCurvature(g), 1e-9);
  EXPECT_NEAR(submodularity_ratio(g), LiteralRatio(g), 1e-9);
}

TEST(CurvatureTest, FramePotentialDifferenceIsSubmodular) {
  const Dataset u = UnitRandom(20, 6, 31);
  const double total = frame_potential(u, std::vector<int>{0, 1, 2, 3, 4, 5});
  const SetFunction g = SetFunction::Tabulate(6, [&](std::span<const int> s) {
    const std::vector<int> rest = ::varsel::testing::Complement(6, s);
    return total - frame_potential(u, rest);
  });
  EXPECT_NEAR(submodularity_ratio(g), 1.0, 1e-12);
  EXPECT_NEAR(curvature(g), LiteralCurvature(g), 1e-12);
}

TEST(CurvatureTest, VarianceExplainedWithoutSuppressors) {
  Matrix seedm = ::varsel::testing::RandomNormal(12, 6, 32);
  seedm.col(0).setOnes();
  const Matrix q = Eigen::HouseholderQR<Matrix>(seedm).householderQ();
  Matrix x = q.middleCols(1, 5);
  for (int j = 0; j < 5; ++j) x.col(j) *= 1.0 + j;
  const Dataset d(x, {}, true);
  const SetFunction g = SetFunction::Tabulate(5, [&](std::span<const int> s) {
    return s.empty() ? 0.0 : metric_value(d, s, Metric::kVe);
  });
  EXPECT_NEAR(submodularity_ratio(g), 1.0, 1e-9);
  EXPECT_NEAR(curvature(g), 0.0, 1e-9);
}

TEST(CurvatureTest, RejectsBadFunctions) {
  const SetFunction decreasing = SetFunction::Tabulate(
      3, [](std::span<const int> s) { return 3.0 - static_cast<double>(s.size()); });
  try {
    curvature(decreasing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMonotone);
  }
  const SetFunction negative = SetFunction::Tabulate(
      2, [](std::span<const int> s) { return static_cast<double>(s.size()) - 1.0; });
  EXPECT_THROW(submodularity_ratio(negative), Error);
}

TEST(BoundsTest, KnownValues) {
  EXPECT_NEAR(bound_values(1.0, 1.0, 1).b_n, 1.0, 1e-15);
  EXPECT_NEAR(bound_values(1.0, 1.0, 1).b_alpha_gamma, 1.0, 1e-15);
  EXPECT_NEAR(bound_values(1.0, 1.0, 100000).b_n, 1.0 - std::exp(-1.0), 1e-5);
  EXPECT_NEAR(bound_values(0.0, 0.7, 5).b_alpha_gamma, 0.7, 1e-15);
  EXPECT_NEAR(bound_values(0.5, 1.0, 2).b_alpha_gamma, (1.0 - 0.75 * 0.75) / 0.5, 1e-15);
  EXPECT_THROW(bound_values(1.5, 1.0, 3), Error);
  EXPECT_THROW(bound_values(0.5, 1.0, 0), Error);
}

TEST(BoundsTest, GreedyMeetsBoundOnCoverage) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetFunction g = RandomCoverage(7, 40 + seed);
    for (int k : {2, 3, 4}) {
      const BoundReport r = bound_report(g, k);
      EXPECT_GE(r.greedy_ratio, r.b_alpha_gamma - 1e-9);
      EXPECT_GE(r.b_alpha_gamma, r.b_n - 1e-12);
      EXPECT_EQ(r.greedy.size(), static_cast<size_t>(k));
      EXPECT_LE(r.greedy_ratio, 1.0 + 1e-12);
    }
  }
}

TEST(DatasetFromGramTest, ReproducesGram) {
  const Matrix a = ::varsel::testing::RandomNormal(8, 5, 50);
  const Matrix gram = a.transpose() * a;
  const Dataset d = dataset_from_gram(gram);
  EXPECT_EQ(d.rows(), 6);
  EXPECT_TRUE(d.centered());
  EXPECT_LE((d.values().transpose() * d.values() - gram).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(d.values().colwise().sum().cwiseAbs().maxCoeff(), 1e-10);
  Matrix singular = gram;
  singular.row(4).setZero();
  singular.col(4).setZero();
  EXPECT_THROW(dataset_from_gram(singular), Error);
}

}  // namespace
}  // namespace varsel
