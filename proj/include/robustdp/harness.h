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

// Synthetic experiment runner: parameter sweeps, error measurement against
// the known true mean (always the origin), calibration of the threshold
// constant C, and aggregation into per-(n, d) summary rows.

#ifndef ROBUSTDP_HARNESS_H_
#define ROBUSTDP_HARNESS_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "robustdp/datagen.h"
#include "robustdp/estimators.h"

namespace robustdp {

struct ExperimentConfig {
  std::vector<int64_t> n_values;
  std::vector<int64_t> d_values;
  // Corruption level for dp_robust inputs and its filter.
  double gamma = 0.1;
  double epsilon = 1.0;
  double tau = 0.05;
  double c_thresh = 1.0;
  int trials = 20;
  uint64_t base_seed = 0;
  std::vector<Method> methods = {Method::kDpRobust, Method::kDpPlain,
                                 Method::kDpWinsorized};
  WinsorizeConfig winsorize;
  AdversaryKind adversary = AdversaryKind::kConstantCluster;
  // Also feed corrupted data to dp_plain and dp_winsorized.
  bool corrupt_baselines = false;
  // Wall-clock timing makes the CSV non-reproducible, so it is opt-in.
  bool record_timing = false;

  absl::Status Validate() const;
};

// Parses flat "key = value" lines; '#' starts a comment and lists are
// comma-separated. Keys are the ExperimentConfig field names, with the
// winsorize fields spelled winsorize.alpha and winsorize.range_bound.
absl::StatusOr<ExperimentConfig> ParseExperimentConfig(std::string_view text);

struct TrialRecord {
  Method method = Method::kDpRobust;
  int64_t n = 0;
  int64_t d = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  double tau = 0.0;
  double c_thresh = 0.0;
  int trial = 0;
  uint64_t seed = 0;
  double l2_error = 0.0;
  double robust_l2_error = 0.0;
  double noise_sigma = 0.0;
  int iterations = 0;
  int64_t removed_count = 0;
  double runtime_ms = 0.0;
  double bound_used = 0.0;
  // Empty for completed trials.
  std::string error;
};

// Seed of the dataset drawn for one (n, d, trial) cell.
uint64_t DataSeed(uint64_t base_seed, int64_t n, int64_t d, int trial);
// Noise seed of one method in one cell.
uint64_t MethodSeed(uint64_t base_seed, int64_t n, int64_t d, int trial,
                    Method method);

// Runs every (n, d, trial, method) combination in that nesting order.
// Per-trial failures become records with `error` set.
absl::StatusOr<std::vector<TrialRecord>> RunSweep(
    const ExperimentConfig& config);

std::string RecordsToCsv(const std::vector<TrialRecord>& records);

struct Calibration {
  double c_thresh = 0.0;
  // Fraction of trials whose first-round spectral deviation is within
  // Thresh(gamma, c_thresh).
  double pass_fraction = 0.0;
  bool at_grid_max = false;
  std::vector<std::string> warnings;
};

// Log-spaced candidate values 10^(k/20), k = -40..80.
const std::vector<double>& CalibrationGrid();

// Smallest grid C whose threshold admits the clean first-round spectral
// deviation in at least `quantile` of `trials` N(0, I) samples.
absl::StatusOr<Calibration> CalibrateC(int64_t n, int64_t d, double gamma,
                                       double quantile, int trials,
                                       uint64_t seed);

struct MethodSummary {
  int64_t count = 0;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  double mean = 0.0;
};

struct ExcessRow {
  int64_t n = 0;
  int64_t d = 0;
  // Indexed by Method; count == 0 when the method is absent.
  std::array<MethodSummary, 3> methods;
  // median(dp_winsorized) - median(other), over trials where both methods
  // completed. NaN without pairs.
  double excess_vs_robust = 0.0;
  double excess_vs_plain = 0.0;
};

struct ExcessTable {
  std::vector<ExcessRow> rows;
  std::vector<std::string> warnings;
};

ExcessTable ExcessErrorTable(const std::vector<TrialRecord>& records);
std::string ExcessTableToCsv(const ExcessTable& table);

// Linear-interpolation quantile of unsorted values, q in [0, 1].
double Quantile(std::vector<double> values, double q);

}  // namespace robustdp

#endif  // ROBUSTDP_HARNESS_H_
