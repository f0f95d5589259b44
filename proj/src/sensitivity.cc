//
// Copyright 2026 The robustdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "robustdp/sensitivity.h"

#include <cmath>
#include <numbers>

#include "absl/strings/str_cat.h"
#include "robustdp/status_macros.h"

namespace robustdp {
namespace {

absl::Status CheckGamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 0.5)) {
    return absl::OutOfRangeError(
        absl::StrCat("gamma must lie in (0, 0.5), got ", gamma));
  }
  return absl::OkStatus();
}

absl::Status CheckC(double c_thresh) {
  if (!(c_thresh > 0.0) || !std::isfinite(c_thresh)) {
    return absl::OutOfRangeError(
        absl::StrCat("c_thresh must be positive, got ", c_thresh));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status RobustConfig::Validate() const {
  RETURN_IF_ERROR(CheckGamma(gamma));
  if (!(tau > 0.0 && tau < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrCat("tau must lie in (0, 1), got ", tau));
  }
  return CheckC(c_thresh);
}

absl::StatusOr<double> Kappa(double gamma) {
  RETURN_IF_ERROR(CheckGamma(gamma));
  const double denom = 1.0 - 2.0 * gamma;
  return gamma / denom +
         (std::numbers::sqrt2 * gamma + std::sqrt(2.0 * gamma)) / denom;
}

absl::StatusOr<double> RobustErrorBound(double gamma, double c_thresh) {
  RETURN_IF_ERROR(CheckC(c_thresh));
  ASSIGN_OR_RETURN(const double kappa, Kappa(gamma));
  return (3.0 + 2.0 * std::sqrt(gamma)) * kappa +
         2.0 * gamma * std::sqrt(c_thresh * std::log(1.0 / gamma));
}

absl::StatusOr<double> SinglePointBound(int64_t n, double c_thresh) {
  if (n < 3) {
    return absl::OutOfRangeError(
        absl::StrCat("single-point bound requires n >= 3, got ", n));
  }
  RETURN_IF_ERROR(CheckC(c_thresh));
  const double nd = static_cast<double>(n);
  return (3.0 + 2.0 / std::sqrt(nd)) *
             (1.0 + std::numbers::sqrt2 + std::sqrt(2.0 * nd)) / (nd - 2.0) +
         2.0 * std::sqrt(c_thresh * std::log(nd)) / nd;
}

absl::StatusOr<double> GlobalSensitivity(double robust_error) {
  if (!(robust_error > 0.0) || !std::isfinite(robust_error)) {
    return absl::OutOfRangeError(
        absl::StrCat("robust error bound must be positive, got ",
                     robust_error));
  }
  return 2.0 * robust_error;
}

absl::StatusOr<SensitivityBound> ComputeSensitivityBound(double gamma,
                                                         double c_thresh) {
  SensitivityBound bound;
  ASSIGN_OR_RETURN(bound.kappa, Kappa(gamma));
  ASSIGN_OR_RETURN(bound.robust_error, RobustErrorBound(gamma, c_thresh));
  ASSIGN_OR_RETURN(bound.l2_sensitivity, GlobalSensitivity(bound.robust_error));
  return bound;
}

}  // namespace robustdp
