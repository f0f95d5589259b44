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

#include "robustdp/privacy.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "robustdp/random.h"

namespace robustdp {

absl::Status PrivacyParams::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::OutOfRangeError(
        absl::StrCat("epsilon must be positive, got ", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  return absl::OkStatus();
}

double NoiseSpec::stddev() const { return std::sqrt(variance); }

absl::StatusOr<NoiseSpec> NoiseScale(double sensitivity,
                                     const PrivacyParams& params,
                                     uint64_t seed) {
  if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
    return absl::OutOfRangeError(absl::StrCat(
        "sensitivity must be finite and non-negative, got ", sensitivity));
  }
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  NoiseSpec spec;
  spec.sensitivity = sensitivity;
  spec.seed = seed;
  spec.variance = 2.0 * std::log(1.25 / params.delta) * sensitivity *
                  sensitivity / (params.epsilon * params.epsilon);
  return spec;
}

absl::StatusOr<Vector> AddGaussianNoise(const Vector& value,
                                        const NoiseSpec& spec) {
  if (!value.allFinite()) {
    return absl::InvalidArgumentError("cannot noise a non-finite vector");
  }
  if (!(spec.variance >= 0.0) || !std::isfinite(spec.variance)) {
    return absl::InvalidArgumentError("noise variance must be finite and >= 0");
  }
  if (spec.variance == 0.0) return value;
  const double sigma = spec.stddev();
  const CounterStream stream(spec.seed, StreamId::kNoise);
  Vector out = value;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    out(j) += sigma * stream.StandardNormal(static_cast<uint64_t>(j));
  }
  return out;
}

}  // namespace robustdp
