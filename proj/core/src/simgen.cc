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

#include "varsel/simgen.h"

#include <cmath>
#include <string>
#include <vector>

#include "varsel/errors.h"

namespace varsel {

double GaussianStream::Uniform() {
  // (-1, 1) on a 2^-52 grid; the polar rejection step removes 0 and the edges.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double a, b, s;
  do {
    a = Uniform();
    b = Uniform();
    s = a * a + b * b;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = b * scale;
  has_spare_ = true;
  return a * scale;
}

Matrix GaussianStream::matrix(Eigen::Index rows, Eigen::Index cols, double sd) {
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = sd * next();
  }
  return out;
}

Dataset gen_sim1(int m, std::uint64_t seed) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "gen_sim1 needs m >= 2");
  GaussianStream rng(seed);
  const Matrix base = rng.matrix(m, 4);
  const Matrix noise = rng.matrix(m, 20, kSim1NoiseSd);
  const Matrix hidden = rng.matrix(m, 2, kSim1HiddenNoiseSd);

  Matrix x(m, kSim1Columns);
  std::vector<std::string> labels;
  const char* names[] = {"w", "x", "y", "z"};
  for (int b = 0; b < 4; ++b) {
    x.col(6 * b) = base.col(b);
    labels.emplace_back(names[b]);
    for (int i = 1; i <= 5; ++i) {
      x.col(6 * b + i) = base.col(b) + noise.col(5 * b + i - 1);
      labels.push_back(std::string(names[b]) + std::to_string(i));
    }
  }
  x.col(24) = base.col(0) + base.col(1) + hidden.col(0);
  x.col(25) = base.col(2) + base.col(3) + hidden.col(1);
  labels.emplace_back("h1");
  labels.emplace_back("h2");
  return Dataset(std::move(x), std::move(labels));
}

Dataset gen_sim2(int m, int u, int v, std::uint64_t seed, double noise_sd) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "gen_sim2 needs m >= 2");
  if (u < 1 || u >= v) throw Error(ErrorCode::kInvalidArgument, "gen_sim2 needs 1 <= u < v");
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) {
    throw Error(ErrorCode::kInvalidArgument, "noise_sd must be finite and >= 0");
  }
  GaussianStream rng(seed);
  const Matrix independent = rng.matrix(m, u);
  const Matrix phi = rng.matrix(u, v - u);
  const Matrix noise = rng.matrix(m, v - u, noise_sd);

  Matrix x(m, v);
  x.leftCols(u) = independent;
  x.rightCols(v - u).noalias() = independent * phi;
  x.rightCols(v - u) += noise;
  std::vector<std::string> labels;
  for (int j = 1; j <= u; ++j) labels.push_back("xi" + std::to_string(j));
  for (int j = 1; j <= v - u; ++j) labels.push_back("xd" + std::to_string(j));
  return Dataset(std::move(x), std::move(labels));
}

}  // namespace varsel
