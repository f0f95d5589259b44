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

#include "robustdp/filter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "robustdp/status_macros.h"

namespace robustdp {
namespace {

double TailAllowance(double t, double gamma, double tau, int64_t d,
                     const FilterOptions& options) {
  const double gaussian_tail = options.tail_coefficient * std::exp(-0.5 * t * t);
  switch (options.rule) {
    case TailRule::kFixedGamma:
      return gaussian_tail + options.gamma_coefficient * gamma;
    case TailRule::kDimensionScaled: {
      const double denom = t * t * TailDenominatorLog(d, gamma, tau);
      if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
      return gaussian_tail + options.gamma_coefficient * gamma / denom;
    }
  }
  return std::numeric_limits<double>::infinity();
}

// Lexicographic comparison of two dataset rows.
bool RowLess(const RowMatrix& a, int64_t i, const RowMatrix& b, int64_t j) {
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (a(i, k) != b(j, k)) return a(i, k) < b(j, k);
  }
  return false;
}

std::vector<int64_t> SortedRowOrder(const RowMatrix& m) {
  std::vector<int64_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int64_t i, int64_t j) {
    return RowLess(m, i, m, j);
  });
  return order;
}

}  // namespace

std::string_view TerminationReasonName(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::kCertificate:
      return "certificate";
    case TerminationReason::kFallbackExhausted:
      return "fallback_exhausted";
    case TerminationReason::kMaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

absl::StatusOr<double> Thresh(double gamma, double c_thresh) {
  if (!(gamma > 0.0 && gamma < 0.5)) {
    return absl::OutOfRangeError(
        absl::StrCat("gamma must lie in (0, 0.5), got ", gamma));
  }
  if (!(c_thresh > 0.0) || !std::isfinite(c_thresh)) {
    return absl::OutOfRangeError(
        absl::StrCat("c_thresh must be positive, got ", c_thresh));
  }
  return c_thresh * gamma * std::log(1.0 / gamma);
}

double TailDenominatorLog(int64_t d, double gamma, double tau) {
  const double dd = static_cast<double>(d);
  const double inner = std::log(dd / gamma * tau);
  const double outer_arg = dd * inner;
  if (!(outer_arg > 0.0)) return std::nan("");
  return std::log(outer_arg);
}

absl::StatusOr<std::vector<int64_t>> FilterStep(const Dataset& data,
                                                const Vector& mu,
                                                const Vector& v, double gamma,
                                                double tau,
                                                const FilterOptions& options) {
  if (data.empty()) return absl::InvalidArgumentError("empty input");
  if (mu.size() != data.d() || v.size() != data.d()) {
    return absl::InvalidArgumentError("direction/mean dimension mismatch");
  }
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    return absl::InvalidArgumentError("direction must have unit norm");
  }

  const int64_t n = data.n();
  const Vector projected = (data.rows() * v).array() - mu.dot(v);
  const Vector magnitude = projected.cwiseAbs();

  std::vector<double> sorted(magnitude.data(), magnitude.data() + n);
  std::sort(sorted.begin(), sorted.end());

  // Walk candidate thresholds upward; `above` counts points strictly above.
  bool found = false;
  double threshold = 0.0;
  for (int64_t k = 0; k < n;) {
    const double t = sorted[k];
    int64_t next = k;
    while (next < n && sorted[next] == t) ++next;
    const int64_t above = n - next;
    if (above == 0) break;
    const double fraction = static_cast<double>(above) / n;
    if (fraction > TailAllowance(t, gamma, tau, data.d(), options)) {
      threshold = t;
      found = true;
      break;
    }
    k = next;
  }

  std::vector<int64_t> remove;
  if (found) {
    for (int64_t i = 0; i < n; ++i) {
      if (magnitude(i) > threshold) remove.push_back(i);
    }
  } else {
    Eigen::Index arg = 0;
    magnitude.maxCoeff(&arg);  // first maximal index
    remove.push_back(arg);
  }
  return remove;
}

absl::StatusOr<FilterOutcome> FilterGaussianUnknownMean(
    const Dataset& data, const RobustConfig& cfg,
    const FilterOptions& options) {
  RETURN_IF_ERROR(cfg.Validate());
  if (data.n() < 2) {
    return absl::InvalidArgumentError("filtering requires at least 2 samples");
  }
  const int64_t n = data.n();
  ASSIGN_OR_RETURN(const double threshold, Thresh(cfg.gamma, cfg.c_thresh));
  const int64_t floor_size = std::max<int64_t>(
      2, static_cast<int64_t>(std::ceil((1.0 - 2.0 * cfg.gamma) * n)));

  FilterOutcome outcome;
  FilterDiagnostics& diag = outcome.diagnostics;
  diag.threshold = threshold;
  const double needed = data.d() / (cfg.gamma * cfg.gamma);
  if (static_cast<double>(n) < needed) {
    diag.warnings.push_back(absl::StrCat(
        "sample size ", n, " is below d/gamma^2 = ", needed,
        "; the error guarantee assumes far more samples"));
  }

  std::vector<int64_t> active(n);
  std::iota(active.begin(), active.end(), 0);
  while (true) {
    Dataset current = data.Subset(active);
    ASSIGN_OR_RETURN(Vector mu, EmpiricalMean(current));
    ASSIGN_OR_RETURN(const SymMatrix sigma, EmpiricalCovariance(current, mu));
    ASSIGN_OR_RETURN(const EigenResult eig,
                     LargestEigenpair(sigma.Shifted(-1.0), options.power));
    diag.final_spectral_deviation = std::max(0.0, eig.value);

    auto finish = [&](TerminationReason reason) {
      diag.terminated_by = reason;
      outcome.mean = std::move(mu);
      outcome.surviving = std::move(current);
      outcome.surviving_indices = active;
    };

    if (diag.final_spectral_deviation <= threshold) {
      finish(TerminationReason::kCertificate);
      break;
    }
    if (diag.iterations >= n) {
      finish(TerminationReason::kMaxIterations);
      break;
    }
    ASSIGN_OR_RETURN(
        const std::vector<int64_t> local,
        FilterStep(current, mu, eig.vector, cfg.gamma, cfg.tau, options));
    if (static_cast<int64_t>(active.size() - local.size()) < floor_size) {
      finish(TerminationReason::kFallbackExhausted);
      break;
    }

    std::vector<bool> drop(active.size(), false);
    for (int64_t i : local) {
      drop[i] = true;
      diag.removed_indices.push_back(active[i]);
    }
    std::vector<int64_t> kept;
    kept.reserve(active.size() - local.size());
    for (size_t i = 0; i < active.size(); ++i) {
      if (!drop[i]) kept.push_back(active[i]);
    }
    active = std::move(kept);
    ++diag.iterations;
  }
  return outcome;
}

absl::StatusOr<double> SymmetricDifferenceRatio(const Dataset& original,
                                                const Dataset& surviving) {
  if (original.empty()) return absl::InvalidArgumentError("empty input");
  if (!surviving.empty() && surviving.d() != original.d()) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  const RowMatrix& a = original.rows();
  const RowMatrix& b = surviving.rows();
  const std::vector<int64_t> oa = SortedRowOrder(a);
  const std::vector<int64_t> ob = SortedRowOrder(b);

  // Merge the two sorted multisets; unmatched rows on either side count.
  int64_t unmatched = 0;
  size_t i = 0, j = 0;
  while (i < oa.size() && j < ob.size()) {
    if (RowLess(a, oa[i], b, ob[j])) {
      ++unmatched;
      ++i;
    } else if (RowLess(b, ob[j], a, oa[i])) {
      ++unmatched;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  unmatched += (oa.size() - i) + (ob.size() - j);
  return static_cast<double>(unmatched) / original.n();
}

}  // namespace robustdp
