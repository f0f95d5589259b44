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

#ifndef ROBUSTDP_ESTIMATORS_H_
#define ROBUSTDP_ESTIMATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "robustdp/filter.h"
#include "robustdp/linalg.h"
#include "robustdp/privacy.h"
#include "robustdp/sensitivity.h"

namespace robustdp {

enum class Method {
  kDpRobust,
  kDpPlain,
  kDpWinsorized,
};

std::string_view MethodName(Method method);
absl::StatusOr<Method> ParseMethod(std::string_view name);

struct WinsorizeConfig {
  // Quantile trim level, in (0, 0.5).
  double alpha = 0.05;
  // Data are assumed to lie in [-range_bound, range_bound] per coordinate.
  double range_bound = 10.0;

  absl::Status Validate() const;
};

struct EstimateOptions {
  // Diagnostic mode attaches the pre-noise mean and filter diagnostics to the
  // report. Those fields are not privatized.
  bool diagnostic = false;
  FilterOptions filter;
};

struct EstimateReport {
  Method method = Method::kDpRobust;
  Vector private_mean;
  double noise_variance = 0.0;
  double bound_used = 0.0;
  double sensitivity_used = 0.0;
  PrivacyParams params;
  uint64_t seed = 0;
  std::vector<std::string> warnings;

  // Diagnostic mode only.
  std::optional<Vector> robust_mean;
  std::optional<FilterDiagnostics> filter_diag;
};

// Filtered mean plus Gaussian noise calibrated to twice the robust error
// bound. cfg.tau serves as the Gaussian mechanism's delta.
absl::StatusOr<EstimateReport> DpRobustMean(const Dataset& data,
                                            const RobustConfig& cfg,
                                            double epsilon, uint64_t seed,
                                            const EstimateOptions& options = {});

// DpRobustMean with gamma = 1/n and the matching single-point bound.
absl::StatusOr<EstimateReport> DpMean(const Dataset& data, double tau,
                                      double c_thresh, double epsilon,
                                      uint64_t seed,
                                      const EstimateOptions& options = {});

// Clamp to the known range, winsorize each coordinate at its empirical alpha
// and (1 - alpha) order statistics, average, and release with the Gaussian
// mechanism at l2 sensitivity 2 R sqrt(d) / n.
absl::StatusOr<EstimateReport> DpWinsorizedMean(
    const Dataset& data, const WinsorizeConfig& wcfg,
    const PrivacyParams& params, uint64_t seed,
    const EstimateOptions& options = {});

// The pre-noise winsorized mean used by DpWinsorizedMean.
absl::StatusOr<Vector> WinsorizedMean(const Dataset& data,
                                      const WinsorizeConfig& wcfg);

}  // namespace robustdp

#endif  // ROBUSTDP_ESTIMATORS_H_
