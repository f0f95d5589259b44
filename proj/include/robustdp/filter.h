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

// Iterative spectral filtering for the mean of an identity-covariance
// Gaussian under gamma-corruption.
//
// Each round computes the empirical mean and covariance of the surviving
// points. If the largest eigenvalue of (Sigma - I) is at most
// Thresh(gamma) = C * gamma * ln(1/gamma), the empirical mean is returned
// (the certificate). Otherwise the points are projected on the top
// eigenvector and those in an anomalously heavy tail are removed.

#ifndef ROBUSTDP_FILTER_H_
#define ROBUSTDP_FILTER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "robustdp/linalg.h"
#include "robustdp/sensitivity.h"

namespace robustdp {

enum class TerminationReason {
  kCertificate,
  kFallbackExhausted,
  kMaxIterations,
};

std::string_view TerminationReasonName(TerminationReason reason);

// Right-hand side of the tail test: the empirical fraction of projections
// strictly above T must exceed
//   kFixedGamma:      A exp(-T^2/2) + B gamma
//   kDimensionScaled: A exp(-T^2/2) + B gamma / (T^2 ln(d ln(d/gamma*tau)))
// where the inner quotient is read left to right, i.e. (d / gamma) * tau.
enum class TailRule {
  kFixedGamma,
  kDimensionScaled,
};

struct FilterOptions {
  TailRule rule = TailRule::kFixedGamma;
  double tail_coefficient = 8.0;   // A
  double gamma_coefficient = 8.0;  // B
  PowerIterationOptions power;
};

struct FilterDiagnostics {
  int iterations = 0;
  // Indices into the original dataset, in removal order.
  std::vector<int64_t> removed_indices;
  double final_spectral_deviation = 0.0;
  double threshold = 0.0;
  TerminationReason terminated_by = TerminationReason::kCertificate;
  std::vector<std::string> warnings;
};

struct FilterOutcome {
  Vector mean;
  Dataset surviving;
  // Original indices of the surviving rows, ascending.
  std::vector<int64_t> surviving_indices;
  FilterDiagnostics diagnostics;
};

absl::StatusOr<double> Thresh(double gamma, double c_thresh);

// ln(d * ln(d / gamma * tau)), evaluated left to right. NaN when undefined.
double TailDenominatorLog(int64_t d, double gamma, double tau);

// Indices (into `data`, ascending) of the points to drop along unit
// direction `v`. Never empty: when no tail threshold qualifies, the single
// point with the largest projection is returned (lowest index on ties).
absl::StatusOr<std::vector<int64_t>> FilterStep(
    const Dataset& data, const Vector& mu, const Vector& v, double gamma,
    double tau = 0.05, const FilterOptions& options = {});

absl::StatusOr<FilterOutcome> FilterGaussianUnknownMean(
    const Dataset& data, const RobustConfig& cfg,
    const FilterOptions& options = {});

// |S symmetric-difference S'| / |S| for multisets of rows, where rows are
// compared for exact equality.
absl::StatusOr<double> SymmetricDifferenceRatio(const Dataset& original,
                                                const Dataset& surviving);

}  // namespace robustdp

#endif  // ROBUSTDP_FILTER_H_
