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

#include "varsel/linalg.h"

#include <cmath>

namespace varsel {

namespace {

bool Usable(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  if (llt.info() != Eigen::Success) return false;
  const auto diag = llt.matrixLLT().diagonal();
  return diag.allFinite() && (diag.array() > 0.0).all();
}

}  // namespace

std::optional<Eigen::LLT<Eigen::MatrixXd>> CholeskyWithJitter(
    const Eigen::MatrixXd& spd) {
  Eigen::LLT<Eigen::MatrixXd> llt(spd);
  if (Usable(llt)) return llt;
  const double n = static_cast<double>(spd.rows());
  const double jitter = 1e-10 * spd.trace() / n;
  if (!(jitter > 0.0) || !std::isfinite(jitter)) return std::nullopt;
  Eigen::MatrixXd jittered = spd;
  jittered.diagonal().array() += jitter;
  llt.compute(jittered);
  if (Usable(llt)) return llt;
  return std::nullopt;
}

std::optional<double> LogDetSpd(const Eigen::MatrixXd& spd) {
  if (spd.rows() == 0) return 0.0;
  const auto llt = CholeskyWithJitter(spd);
  if (!llt) return std::nullopt;
  return 2.0 * llt->matrixLLT().diagonal().array().log().sum();
}

}  // namespace varsel
