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

#ifndef ROBUSTDP_DATAGEN_H_
#define ROBUSTDP_DATAGEN_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "robustdp/linalg.h"

namespace robustdp {

// n i.i.d. draws from N(mu, I_d). Entry (i, j) is draw i*d + j of the seed's
// sample stream.
absl::StatusOr<Dataset> SampleGaussian(int64_t n, int64_t d, const Vector& mu,
                                       uint64_t seed);

enum class AdversaryKind {
  // Replaced points all sit at center + offset.
  kConstantCluster,
  // Replaced points sit at center + magnitude * direction plus N(0, jitter^2)
  // noise per coordinate.
  kDirectionalSpread,
  // The m' points with the largest first coordinate are deleted; nothing is
  // inserted, so n shrinks.
  kSubtractiveOnly,
};

std::string_view AdversaryName(AdversaryKind kind);
absl::StatusOr<AdversaryKind> ParseAdversary(std::string_view name);

struct Adversary {
  AdversaryKind kind = AdversaryKind::kConstantCluster;
  // The true mean the attack is placed relative to. Empty means the origin.
  Vector center;
  // kConstantCluster. Empty means 10 * e_1.
  Vector offset;
  // kDirectionalSpread. Empty direction means e_1.
  Vector direction;
  double magnitude = 10.0;
  double jitter = 0.1;

  static Adversary ConstantCluster(Vector offset);
};

enum class CorruptionCount {
  // m' ~ Binomial(n, gamma): each row is selected independently.
  kBinomial,
  // m' = floor(gamma * n), chosen uniformly without replacement.
  kFixed,
};

struct CorruptionPlan {
  double gamma = 0.0;
  AdversaryKind adversary = AdversaryKind::kConstantCluster;
  // Indices into the input dataset, ascending.
  std::vector<int64_t> replaced_indices;
  int64_t m_prime = 0;
};

absl::StatusOr<std::pair<Dataset, CorruptionPlan>> Corrupt(
    const Dataset& data, double gamma, const Adversary& adversary,
    uint64_t seed, CorruptionCount count = CorruptionCount::kBinomial);

struct GoodnessOptions {
  // Constant of the O(sqrt(d ln(n / tau))) norm bound.
  double c1 = 3.0;
  // Thresholds T at which the half-space probabilities are compared.
  std::vector<double> t_grid = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
};

// Concentration conditions for a (gamma, tau)-good sample. Condition 2 is
// only checked on sampled directions and is therefore approximate.
struct GoodnessReport {
  double cond1_max_norm = 0.0;
  double cond1_bound = 0.0;
  bool cond1_pass = false;

  // Largest |P_S[v.(X - mu) >= T] - P_G[v.(X - mu) >= T]| seen.
  double cond2_worst_gap = 0.0;
  // Number of (direction, T) pairs whose bound was defined and checked.
  int64_t cond2_checked = 0;
  bool cond2_pass = false;

  double cond3_mean_error = 0.0;
  bool cond3_pass = false;

  double cond4_cov_deviation = 0.0;
  bool cond4_pass = false;
};

absl::StatusOr<GoodnessReport> GoodnessCheck(
    const Dataset& data, const Vector& mu_true, double gamma, double tau,
    int n_directions, uint64_t seed, const GoodnessOptions& options = {});

}  // namespace robustdp

#endif  // ROBUSTDP_DATAGEN_H_
