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

#ifndef VARSEL_LINALG_H_
#define VARSEL_LINALG_H_

#include <optional>

#include <Eigen/Dense>

namespace varsel {

// Cholesky of a symmetric positive (semi-)definite matrix. On failure, or when
// the factor is numerically singular (smallest pivot below 1e-10 of the
// largest singular-value scale), adds 1e-10 * trace / n to the diagonal and
// tries once more. Returns nullopt if that also fails.
std::optional<Eigen::LLT<Eigen::MatrixXd>> CholeskyWithJitter(
    const Eigen::MatrixXd& spd);

// log det of an SPD matrix via CholeskyWithJitter; nullopt when singular.
std::optional<double> LogDetSpd(const Eigen::MatrixXd& spd);

}  // namespace varsel

#endif  // VARSEL_LINALG_H_
