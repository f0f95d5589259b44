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

#include "robustdp/datagen.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "robustdp/filter.h"
#include "robustdp/random.h"
#include "robustdp/status_macros.h"

namespace robustdp {
namespace {

Vector UnitVector(int64_t d, int64_t axis) {
  Vector e = Vector::Zero(d);
  e(axis) = 1.0;
  return e;
}

absl::StatusOr<Vector> OrDefault(const Vector& v, Vector fallback,
                                 std::string_view what) {
  if (v.size() == 0) return fallback;
  if (v.size() != fallback.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(what), " has dimension ", v.size(), ", expected ",
                     fallback.size()));
  }
  if (!v.allFinite()) {
    return absl::InvalidArgumentError(absl::StrCat(std::string(what), " is not finite"));
  }
  return v;
}

std::vector<int64_t> SelectIndices(int64_t n, double gamma, uint64_t seed,
                                   CorruptionCount count) {
  const CounterStream stream(seed, StreamId::kCorruptionSelect);
  std::vector<int64_t> picked;
  if (count == CorruptionCount::kBinomial) {
    for (int64_t i = 0; i < n; ++i) {
      if (stream.Uniform(i) < gamma) picked.push_back(i);
    }
    return picked;
  }
  const int64_t m = static_cast<int64_t>(std::floor(gamma * n));
  std::vector<int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int64_t k = 0; k < m; ++k) {
    const int64_t j =
        k + static_cast<int64_t>(stream.Uniform(k) * static_cast<double>(n - k));
    std::swap(perm[k], perm[std::min(j, n - 1)]);
  }
  picked.assign(perm.begin(), perm.begin() + m);
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

absl::StatusOr<Dataset> SampleGaussian(int64_t n, int64_t d, const Vector& mu,
                                       uint64_t seed) {
  if (n < 1 || d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid sample size n=", n, ", d=", d));
  }
  if (mu.size() != d) {
    return absl::InvalidArgumentError("mean dimension does not match d");
  }
  const CounterStream stream(seed, StreamId::kSample);
  RowMatrix rows(n, d);
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = 0; j < d; ++j) {
      rows(i, j) = mu(j) + stream.StandardNormal(static_cast<uint64_t>(i * d + j));
    }
  }
  return Dataset::Create(std::move(rows));
}

std::string_view AdversaryName(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kConstantCluster:
      return "constant_cluster";
    case AdversaryKind::kDirectionalSpread:
      return "directional_spread";
    case AdversaryKind::kSubtractiveOnly:
      return "subtractive_only";
  }
  return "unknown";
}

absl::StatusOr<AdversaryKind> ParseAdversary(std::string_view name) {
  for (AdversaryKind kind :
       {AdversaryKind::kConstantCluster, AdversaryKind::kDirectionalSpread,
        AdversaryKind::kSubtractiveOnly}) {
    if (name == AdversaryName(kind)) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown adversary: ", std::string(name)));
}

Adversary Adversary::ConstantCluster(Vector offset) {
  Adversary a;
  a.kind = AdversaryKind::kConstantCluster;
  a.offset = std::move(offset);
  return a;
}

absl::StatusOr<std::pair<Dataset, CorruptionPlan>> Corrupt(
    const Dataset& data, double gamma, const Adversary& adversary,
    uint64_t seed, CorruptionCount count) {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    return absl::OutOfRangeError(
        absl::StrCat("gamma must lie in [0, 0.5), got ", gamma));
  }
  CorruptionPlan plan;
  plan.gamma = gamma;
  plan.adversary = adversary.kind;
  if (gamma == 0.0 || data.empty()) return std::make_pair(data, plan);

  const int64_t n = data.n();
  const int64_t d = data.d();
  ASSIGN_OR_RETURN(const Vector center,
                   OrDefault(adversary.center, Vector::Zero(d), "center"));
  std::vector<int64_t> selected = SelectIndices(n, gamma, seed, count);
  plan.m_prime = static_cast<int64_t>(selected.size());

  RowMatrix rows = data.rows();
  switch (adversary.kind) {
    case AdversaryKind::kConstantCluster: {
      ASSIGN_OR_RETURN(const Vector offset,
                       OrDefault(adversary.offset, 10.0 * UnitVector(d, 0),
                                 "offset"));
      const Vector target = center + offset;
      for (int64_t i : selected) rows.row(i) = target.transpose();
      plan.replaced_indices = std::move(selected);
      break;
    }
    case AdversaryKind::kDirectionalSpread: {
      ASSIGN_OR_RETURN(Vector direction,
                       OrDefault(adversary.direction, UnitVector(d, 0),
                                 "direction"));
      if (direction.norm() == 0.0) {
        return absl::InvalidArgumentError("direction must be non-zero");
      }
      direction.normalize();
      const Vector target = center + adversary.magnitude * direction;
      const CounterStream jitter(seed, StreamId::kCorruptionJitter);
      for (int64_t i : selected) {
        for (int64_t j = 0; j < d; ++j) {
          rows(i, j) = target(j) + adversary.jitter *
                                       jitter.StandardNormal(i * d + j);
        }
      }
      plan.replaced_indices = std::move(selected);
      break;
    }
    case AdversaryKind::kSubtractiveOnly: {
      // Same count, but the adversary picks which rows to delete.
      std::vector<int64_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
        return rows(a, 0) > rows(b, 0);
      });
      plan.replaced_indices.assign(order.begin(),
                                   order.begin() + plan.m_prime);
      std::sort(plan.replaced_indices.begin(), plan.replaced_indices.end());
      std::vector<bool> gone(n, false);
      for (int64_t i : plan.replaced_indices) gone[i] = true;
      RowMatrix kept(n - plan.m_prime, d);
      for (int64_t i = 0, k = 0; i < n; ++i) {
        if (!gone[i]) kept.row(k++) = rows.row(i);
      }
      rows = std::move(kept);
      break;
    }
  }
  ASSIGN_OR_RETURN(Dataset corrupted, Dataset::Create(std::move(rows)));
  return std::make_pair(std::move(corrupted), std::move(plan));
}

absl::StatusOr<GoodnessReport> GoodnessCheck(const Dataset& data,
                                             const Vector& mu_true,
                                             double gamma, double tau,
                                             int n_directions, uint64_t seed,
                                             const GoodnessOptions& options) {
  if (data.n() < 2) {
    return absl::InvalidArgumentError("goodness check needs >= 2 samples");
  }
  if (mu_true.size() != data.d()) {
    return absl::InvalidArgumentError("mean dimension does not match data");
  }
  if (!(gamma > 0.0) || !(tau > 0.0 && tau < 1.0) || n_directions < 0) {
    return absl::InvalidArgumentError("invalid goodness parameters");
  }
  const int64_t n = data.n();
  const int64_t d = data.d();
  const Eigen::MatrixXd centered = data.rows().rowwise() - mu_true.transpose();

  GoodnessReport report;
  report.cond1_max_norm = centered.rowwise().norm().maxCoeff();
  report.cond1_bound =
      options.c1 * std::sqrt(static_cast<double>(d) *
                             std::log(static_cast<double>(n) / tau));
  report.cond1_pass = report.cond1_max_norm <= report.cond1_bound;

  const double denom_log = TailDenominatorLog(d, gamma, tau);
  const CounterStream directions(seed, StreamId::kDirections);
  bool cond2_ok = true;
  for (int k = 0; k < n_directions; ++k) {
    Vector v(d);
    for (int64_t j = 0; j < d; ++j) {
      v(j) = directions.StandardNormal(static_cast<uint64_t>(k) * d + j);
    }
    v.normalize();
    const Vector z = centered * v;
    for (double t : options.t_grid) {
      const double empirical =
          static_cast<double>((z.array() >= t).count()) / n;
      const double gaussian = 0.5 * std::erfc(t / std::sqrt(2.0));
      const double gap = std::abs(empirical - gaussian);
      report.cond2_worst_gap = std::max(report.cond2_worst_gap, gap);
      const double bound = gamma / (t * t * denom_log);
      if (!(bound > 0.0) || !std::isfinite(bound)) continue;
      ++report.cond2_checked;
      if (gap > bound) cond2_ok = false;
    }
  }
  report.cond2_pass = cond2_ok && report.cond2_checked > 0;

  ASSIGN_OR_RETURN(const Vector mean, EmpiricalMean(data));
  report.cond3_mean_error = (mean - mu_true).norm();
  report.cond3_pass = report.cond3_mean_error <= gamma;

  ASSIGN_OR_RETURN(const SymMatrix second_moment,
                   EmpiricalCovariance(data, mu_true));
  ASSIGN_OR_RETURN(const EigenResult upper,
                   LargestEigenpair(second_moment.Shifted(-1.0)));
  ASSIGN_OR_RETURN(
      const SymMatrix negated,
      SymMatrix::Create(Eigen::MatrixXd::Identity(d, d) -
                        second_moment.matrix()));
  ASSIGN_OR_RETURN(const EigenResult lower, LargestEigenpair(negated));
  report.cond4_cov_deviation =
      std::max({0.0, upper.value, lower.value});
  report.cond4_pass = report.cond4_cov_deviation <= gamma;
  return report;
}

}  // namespace robustdp
