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

#include "robustdp/estimators.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "robustdp/status_macros.h"

namespace robustdp {
namespace {

void WarnOnLargeEpsilon(double epsilon, std::vector<std::string>* warnings) {
  if (epsilon > 1.0) {
    warnings->push_back(absl::StrCat(
        "epsilon = ", epsilon,
        " exceeds 1; the classical Gaussian mechanism calibration is only "
        "proven for epsilon <= 1"));
  }
}

// Shared tail of the two filtering estimators.
absl::StatusOr<EstimateReport> ReleaseFiltered(const Dataset& data,
                                               const RobustConfig& cfg,
                                               double bound, double epsilon,
                                               uint64_t seed, Method method,
                                               const EstimateOptions& options) {
  ASSIGN_OR_RETURN(FilterOutcome outcome,
                   FilterGaussianUnknownMean(data, cfg, options.filter));
  EstimateReport report;
  report.method = method;
  report.params = {epsilon, cfg.tau};
  report.seed = seed;
  report.bound_used = bound;
  ASSIGN_OR_RETURN(report.sensitivity_used, GlobalSensitivity(bound));
  ASSIGN_OR_RETURN(const NoiseSpec noise,
                   NoiseScale(report.sensitivity_used, report.params, seed));
  report.noise_variance = noise.variance;
  ASSIGN_OR_RETURN(report.private_mean, AddGaussianNoise(outcome.mean, noise));

  WarnOnLargeEpsilon(epsilon, &report.warnings);
  for (const std::string& w : outcome.diagnostics.warnings) {
    report.warnings.push_back(w);
  }
  if (options.diagnostic) {
    report.robust_mean = std::move(outcome.mean);
    report.filter_diag = std::move(outcome.diagnostics);
  }
  return report;
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kDpRobust:
      return "dp_robust";
    case Method::kDpPlain:
      return "dp_plain";
    case Method::kDpWinsorized:
      return "dp_winsorized";
  }
  return "unknown";
}

absl::StatusOr<Method> ParseMethod(std::string_view name) {
  for (Method m : {Method::kDpRobust, Method::kDpPlain, Method::kDpWinsorized}) {
    if (name == MethodName(m)) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown method: ", std::string(name)));
}

absl::Status WinsorizeConfig::Validate() const {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    return absl::OutOfRangeError(
        absl::StrCat("alpha must lie in (0, 0.5), got ", alpha));
  }
  if (!(range_bound > 0.0) || !std::isfinite(range_bound)) {
    return absl::OutOfRangeError(absl::StrCat(
        "range_bound must be finite and positive, got ", range_bound));
  }
  return absl::OkStatus();
}

absl::StatusOr<EstimateReport> DpRobustMean(const Dataset& data,
                                            const RobustConfig& cfg,
                                            double epsilon, uint64_t seed,
                                            const EstimateOptions& options) {
  RETURN_IF_ERROR(cfg.Validate());
  RETURN_IF_ERROR(PrivacyParams{epsilon, cfg.tau}.Validate());
  ASSIGN_OR_RETURN(const double bound,
                   RobustErrorBound(cfg.gamma, cfg.c_thresh));
  return ReleaseFiltered(data, cfg, bound, epsilon, seed, Method::kDpRobust,
                         options);
}

absl::StatusOr<EstimateReport> DpMean(const Dataset& data, double tau,
                                      double c_thresh, double epsilon,
                                      uint64_t seed,
                                      const EstimateOptions& options) {
  if (data.n() < 3) {
    return absl::OutOfRangeError(
        absl::StrCat("dp_mean requires n >= 3, got ", data.n()));
  }
  const RobustConfig cfg{1.0 / static_cast<double>(data.n()), tau, c_thresh};
  RETURN_IF_ERROR(cfg.Validate());
  RETURN_IF_ERROR(PrivacyParams{epsilon, tau}.Validate());
  ASSIGN_OR_RETURN(const double bound, SinglePointBound(data.n(), c_thresh));
  return ReleaseFiltered(data, cfg, bound, epsilon, seed, Method::kDpPlain,
                         options);
}

absl::StatusOr<Vector> WinsorizedMean(const Dataset& data,
                                      const WinsorizeConfig& wcfg) {
  RETURN_IF_ERROR(wcfg.Validate());
  if (data.empty()) return absl::InvalidArgumentError("empty input");
  const int64_t n = data.n();
  const double r = wcfg.range_bound;
  const int64_t trimmed = static_cast<int64_t>(std::floor(wcfg.alpha * n));

  RowMatrix clamped = data.rows().cwiseMax(-r).cwiseMin(r);
  std::vector<double> column(n);
  for (int64_t j = 0; j < data.d(); ++j) {
    for (int64_t i = 0; i < n; ++i) column[i] = clamped(i, j);
    std::sort(column.begin(), column.end());
    const double lo = column[trimmed];
    const double hi = column[n - 1 - trimmed];
    clamped.col(j) = clamped.col(j).cwiseMax(lo).cwiseMin(hi);
  }
  ASSIGN_OR_RETURN(const Dataset winsorized,
                   Dataset::Create(std::move(clamped)));
  return EmpiricalMean(winsorized);
}

absl::StatusOr<EstimateReport> DpWinsorizedMean(const Dataset& data,
                                                const WinsorizeConfig& wcfg,
                                                const PrivacyParams& params,
                                                uint64_t seed,
                                                const EstimateOptions& options) {
  RETURN_IF_ERROR(params.Validate());
  ASSIGN_OR_RETURN(Vector mean, WinsorizedMean(data, wcfg));

  EstimateReport report;
  report.method = Method::kDpWinsorized;
  report.params = params;
  report.seed = seed;
  // One changed row moves each clamped coordinate mean by at most 2R/n.
  report.sensitivity_used = 2.0 * wcfg.range_bound *
                            std::sqrt(static_cast<double>(data.d())) /
                            static_cast<double>(data.n());
  report.bound_used = report.sensitivity_used / 2.0;
  ASSIGN_OR_RETURN(const NoiseSpec noise,
                   NoiseScale(report.sensitivity_used, params, seed));
  report.noise_variance = noise.variance;
  ASSIGN_OR_RETURN(report.private_mean, AddGaussianNoise(mean, noise));
  WarnOnLargeEpsilon(params.epsilon, &report.warnings);
  if (options.diagnostic) report.robust_mean = std::move(mean);
  return report;
}

}  // namespace robustdp
