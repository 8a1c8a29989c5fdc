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

// Seeded generators for the two simulated benchmark datasets.
//
// Randomness comes from std::mt19937_64 (fully specified by the standard) and
// a hand-written Marsaglia polar transform, so a given seed produces the same
// bits on every conforming platform. std::normal_distribution is avoided
// because its algorithm is implementation defined.

#ifndef VARSEL_SIMGEN_H_
#define VARSEL_SIMGEN_H_

#include <cstdint>
#include <random>

#include "varsel/dataset.h"

namespace varsel {

// Standard normal variates from mt19937_64 via the Marsaglia polar method.
// Uniforms use the top 53 bits of each 64-bit output.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();
  // Fills a rows x cols matrix column by column with sd * N(0, 1).
  Matrix matrix(Eigen::Index rows, Eigen::Index cols, double sd = 1.0);

 private:
  double Uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline constexpr int kSim1Columns = 26;
inline constexpr double kSim1NoiseSd = 0.1;
inline constexpr double kSim1HiddenNoiseSd = 0.4;
inline constexpr double kSim2NoiseSd = 0.1;

// Columns w, w1..w5, x, x1..x5, y, y1..y5, z, z1..z5, h1, h2 with
// w_i = w + e_i, x_i = x + e_{i+5}, ..., h1 = w + x + e21, h2 = y + z + e22.
// Draw order: w, x, y, z, then e1..e22, each a full column of m values. Noise
// levels are standard deviations. The result is not centred.
Dataset gen_sim1(int m, std::uint64_t seed);

// X = [XI, XI * Phi + E] with XI (m x u), Phi (u x (v-u)) standard normal and
// E with standard deviation noise_sd. Draw order: XI, Phi, E, each
// column-major. The result is not centred.
Dataset gen_sim2(int m, int u, int v, std::uint64_t seed, double noise_sd = kSim2NoiseSd);

}  // namespace varsel

#endif  // VARSEL_SIMGEN_H_
