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

#ifndef ROBUSTDP_LINALG_H_
#define ROBUSTDP_LINALG_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "absl/status/statusor.h"

namespace robustdp {

using Vector = Eigen::VectorXd;
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// An n x d collection of sample vectors, one sample per row. All entries are
// finite. A dataset may have zero rows; operations that need samples reject
// it.
class Dataset {
 public:
  Dataset() = default;

  static absl::StatusOr<Dataset> Create(RowMatrix rows);
  static absl::StatusOr<Dataset> FromRows(
      const std::vector<std::vector<double>>& rows);

  int64_t n() const { return rows_.rows(); }
  int64_t d() const { return rows_.cols(); }
  bool empty() const { return rows_.rows() == 0; }

  const RowMatrix& rows() const { return rows_; }
  auto row(int64_t i) const { return rows_.row(i); }

  // Rows at `indices`, in the given order. Indices must be in range.
  Dataset Subset(std::span<const int64_t> indices) const;

 private:
  explicit Dataset(RowMatrix rows) : rows_(std::move(rows)) {}

  RowMatrix rows_;
};

// A real symmetric d x d matrix. Construction accepts matrices that are
// symmetric within kSymmetryTolerance and stores the exactly symmetrized
// average (M + M^T) / 2.
class SymMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-10;

  static absl::StatusOr<SymMatrix> Create(const Eigen::MatrixXd& m);
  static SymMatrix Identity(int64_t dim);

  int64_t dim() const { return m_.rows(); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  // M + shift * I.
  SymMatrix Shifted(double shift) const;

 private:
  explicit SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

struct EigenResult {
  double value = 0.0;
  Vector vector;
  int iterations = 0;
  bool converged = false;
};

struct PowerIterationOptions {
  double tolerance = 1e-7;
  int max_iterations = 1000;
};

// Coordinate-wise arithmetic mean, accumulated by pairwise summation over
// rows in index order.
absl::StatusOr<Vector> EmpiricalMean(const Dataset& data);

// (1/n) * sum_i (x_i - center)(x_i - center)^T. Requires n >= 2.
absl::StatusOr<SymMatrix> EmpiricalCovariance(const Dataset& data,
                                              const Vector& center);

// Dominant (largest magnitude) eigenpair by power iteration from the
// normalized all-ones vector. Converged means the residual
// ||Mv - lambda v||_2 <= tolerance * max(1, |lambda|). When the Rayleigh
// quotient stalls for 10 iterations without meeting that bound the iterate
// is perturbed by a fixed pseudo-random direction.
//
// The zero matrix yields value 0, converged, and the starting vector.
absl::StatusOr<EigenResult> TopEigenpair(const SymMatrix& m,
                                         const PowerIterationOptions& options =
                                             {});

// Largest algebraic eigenpair. Equal to TopEigenpair when the dominant
// eigenvalue is non-negative; otherwise repeats power iteration on the
// positive-semidefinite shift M + ||M||_inf * I.
absl::StatusOr<EigenResult> LargestEigenpair(
    const SymMatrix& m, const PowerIterationOptions& options = {});

// Largest eigenvalue of (sigma - I), clamped below at 0.
absl::StatusOr<double> SpectralDeviation(
    const SymMatrix& sigma, const PowerIterationOptions& options = {});

// Residual ||Mv - lambda v||_2.
double EigenResidual(const SymMatrix& m, const EigenResult& eig);

}  // namespace robustdp

#endif  // ROBUSTDP_LINALG_H_
