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

// Closed-form error and sensitivity bounds for the filtered robust mean.
//
// For a gamma-corrupted sample of an identity-covariance Gaussian, the
// filter's output satisfies
//
//   ||mu_hat - mu||_2 <= (3 + 2 sqrt(gamma)) kappa + 2 gamma sqrt(C ln(1/gamma))
//
// with kappa = (gamma + sqrt(2) gamma + sqrt(2 gamma)) / (1 - 2 gamma). The
// bound involves neither the dimension nor the sample size, and twice its
// value bounds the l2 distance between outputs on adjacent datasets.
// Logarithms are natural throughout.

#ifndef ROBUSTDP_SENSITIVITY_H_
#define ROBUSTDP_SENSITIVITY_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace robustdp {

struct RobustConfig {
  // Corruption fraction, in (0, 0.5).
  double gamma = 0.1;
  // Confidence level; also the additive privacy term delta.
  double tau = 0.05;
  // The constant C in the filter threshold C * gamma * ln(1/gamma).
  double c_thresh = 1.0;

  absl::Status Validate() const;
};

struct SensitivityBound {
  double kappa = 0.0;
  double robust_error = 0.0;
  // Always exactly 2 * robust_error.
  double l2_sensitivity = 0.0;
};

absl::StatusOr<double> Kappa(double gamma);

absl::StatusOr<double> RobustErrorBound(double gamma, double c_thresh);

// The gamma = 1/n specialization for a dataset with a single changed point:
// (3 + 2/sqrt(n)) (1 + sqrt(2) + sqrt(2n)) / (n - 2) + 2 sqrt(C ln n) / n.
absl::StatusOr<double> SinglePointBound(int64_t n, double c_thresh);

absl::StatusOr<double> GlobalSensitivity(double robust_error);

absl::StatusOr<SensitivityBound> ComputeSensitivityBound(double gamma,
                                                         double c_thresh);

}  // namespace robustdp

#endif  // ROBUSTDP_SENSITIVITY_H_
