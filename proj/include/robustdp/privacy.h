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

#ifndef ROBUSTDP_PRIVACY_H_
#define ROBUSTDP_PRIVACY_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "robustdp/linalg.h"

namespace robustdp {

// (epsilon, delta) budget of one Gaussian-mechanism release. The estimators
// pass their confidence level tau as delta.
struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 0.05;

  absl::Status Validate() const;
};

struct NoiseSpec {
  // Per-coordinate variance sigma^2 = 2 ln(1.25/delta) sensitivity^2 / eps^2.
  double variance = 0.0;
  double sensitivity = 0.0;
  uint64_t seed = 0;

  double stddev() const;
};

// Gaussian-mechanism calibration for an l2 sensitivity. The result does not
// depend on the dimension of the vector that is later noised.
absl::StatusOr<NoiseSpec> NoiseScale(double sensitivity,
                                     const PrivacyParams& params,
                                     uint64_t seed = 0);

// value + N(0, variance I). Coordinate j uses the j-th draw of the seed's
// noise stream, so equal (value, spec) pairs give bit-identical results.
absl::StatusOr<Vector> AddGaussianNoise(const Vector& value,
                                        const NoiseSpec& spec);

}  // namespace robustdp

#endif  // ROBUSTDP_PRIVACY_H_
