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

#include "robustdp/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "robustdp/random.h"

namespace robustdp {
namespace {

constexpr int64_t kPairwiseBlock = 16;
constexpr int kStallWindow = 10;
constexpr double kStallProgress = 1.0 - 1e-6;
constexpr double kRestartWeight = 0.5;

// Pairwise (cascade) sum of rows [begin, end) into `out`.
void PairwiseRowSum(const RowMatrix& rows, int64_t begin, int64_t end,
                    Vector* out) {
  if (end - begin <= kPairwiseBlock) {
    out->setZero(rows.cols());
    for (int64_t i = begin; i < end; ++i) *out += rows.row(i).transpose();
    return;
  }
  const int64_t mid = begin + (end - begin) / 2;
  Vector right;
  PairwiseRowSum(rows, begin, mid, out);
  PairwiseRowSum(rows, mid, end, &right);
  *out += right;
}

Vector RestartDirection(int64_t dim, int restart) {
  const CounterStream stream(static_cast<uint64_t>(restart),
                             StreamId::kPowerRestart);
  Vector r(dim);
  for (int64_t j = 0; j < dim; ++j) r(j) = stream.StandardNormal(j);
  return r.normalized();
}

}  // namespace

absl::StatusOr<Dataset> Dataset::Create(RowMatrix rows) {
  if (rows.rows() > 0 && rows.cols() == 0) {
    return absl::InvalidArgumentError("dataset rows must have dimension >= 1");
  }
  if (!rows.allFinite()) {
    return absl::InvalidArgumentError("dataset contains non-finite entries");
  }
  return Dataset(std::move(rows));
}

absl::StatusOr<Dataset> Dataset::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Dataset();
  const size_t d = rows.front().size();
  RowMatrix m(rows.size(), d);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", i, " has ", rows[i].size(), " entries, expected ", d));
    }
    for (size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return Create(std::move(m));
}

Dataset Dataset::Subset(std::span<const int64_t> indices) const {
  RowMatrix out(indices.size(), rows_.cols());
  for (size_t k = 0; k < indices.size(); ++k) out.row(k) = rows_.row(indices[k]);
  return Dataset(std::move(out));
}

absl::StatusOr<SymMatrix> SymMatrix::Create(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return absl::InvalidArgumentError("matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    return absl::InvalidArgumentError("matrix contains non-finite entries");
  }
  if (((m - m.transpose()).cwiseAbs().maxCoeff()) > kSymmetryTolerance) {
    return absl::InvalidArgumentError("matrix is not symmetric");
  }
  return SymMatrix(0.5 * (m + m.transpose()));
}

SymMatrix SymMatrix::Identity(int64_t dim) {
  return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

SymMatrix SymMatrix::Shifted(double shift) const {
  Eigen::MatrixXd m = m_;
  m.diagonal().array() += shift;
  return SymMatrix(std::move(m));
}

absl::StatusOr<Vector> EmpiricalMean(const Dataset& data) {
  if (data.empty()) return absl::InvalidArgumentError("empty input");
  Vector sum;
  PairwiseRowSum(data.rows(), 0, data.n(), &sum);
  return sum / static_cast<double>(data.n());
}

absl::StatusOr<SymMatrix> EmpiricalCovariance(const Dataset& data,
                                              const Vector& center) {
  if (data.n() < 2) {
    return absl::InvalidArgumentError(
        "covariance requires at least 2 samples");
  }
  if (center.size() != data.d()) {
    return absl::InvalidArgumentError(
        absl::StrCat("center has dimension ", center.size(), ", data has ",
                     data.d()));
  }
  const Eigen::MatrixXd centered =
      data.rows().rowwise() - center.transpose();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(data.d(), data.d());
  cov.selfadjointView<Eigen::Lower>().rankUpdate(centered.transpose());
  cov.triangularView<Eigen::StrictlyUpper>() = cov.transpose();
  cov /= static_cast<double>(data.n());
  return SymMatrix::Create(cov);
}

double EigenResidual(const SymMatrix& m, const EigenResult& eig) {
  return (m.matrix() * eig.vector - eig.value * eig.vector).norm();
}

absl::StatusOr<EigenResult> TopEigenpair(const SymMatrix& m,
                                         const PowerIterationOptions& options) {
  if (!(options.tolerance > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be positive");
  }
  if (options.max_iterations < 1) {
    return absl::InvalidArgumentError("max_iterations must be >= 1");
  }
  const int64_t dim = m.dim();
  const Eigen::MatrixXd& a = m.matrix();

  EigenResult result;
  result.vector = Vector::Constant(dim, 1.0 / std::sqrt(double(dim)));
  if (a.cwiseAbs().maxCoeff() == 0.0) {
    result.converged = true;
    return result;
  }

  Vector v = result.vector;
  Vector w(dim);
  // A stall is a residual that stops shrinking: the start vector has no
  // component along the dominant direction, or two eigenvalues of equal
  // magnitude and opposite sign make the iterate oscillate.
  double best_residual = std::numeric_limits<double>::infinity();
  int stalled = 0;
  int restarts = 0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    w.noalias() = a * v;
    const double lambda = v.dot(w);
    const double residual = (w - lambda * v).norm();
    const double scale = std::max(1.0, std::abs(lambda));

    result.value = lambda;
    result.vector = v;
    result.iterations = it;
    if (residual <= options.tolerance * scale) {
      result.converged = true;
      return result;
    }

    if (residual < kStallProgress * best_residual) {
      best_residual = residual;
      stalled = 0;
    } else {
      ++stalled;
    }
    const double w_norm = w.norm();
    if (stalled >= kStallWindow || w_norm == 0.0) {
      v = (v + kRestartWeight * RestartDirection(dim, restarts++)).normalized();
      best_residual = std::numeric_limits<double>::infinity();
      stalled = 0;
      continue;
    }
    v = w / w_norm;
  }
  return result;
}

absl::StatusOr<EigenResult> LargestEigenpair(
    const SymMatrix& m, const PowerIterationOptions& options) {
  auto top = TopEigenpair(m, options);
  if (!top.ok() || top->value >= 0.0) return top;

  // Dominant eigenvalue is negative: every eigenvalue of M + s*I is >= 0 for
  // s >= spectral radius, so its dominant eigenvalue is the largest one. A
  // converged negative dominant value is minus the spectral radius; otherwise
  // fall back to the infinity-norm bound.
  const double shift =
      top->converged ? -top->value
                     : m.matrix().cwiseAbs().rowwise().sum().maxCoeff();
  auto shifted = TopEigenpair(m.Shifted(shift), options);
  if (!shifted.ok()) return shifted;
  shifted->value -= shift;
  return shifted;
}

absl::StatusOr<double> SpectralDeviation(const SymMatrix& sigma,
                                         const PowerIterationOptions& options) {
  auto eig = LargestEigenpair(sigma.Shifted(-1.0), options);
  if (!eig.ok()) return eig.status();
  return std::max(0.0, eig->value);
}

}  // namespace robustdp
