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
#include <numeric>
#include <random>

#include <Eigen/QR>

#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace robustdp {
namespace {

using ::robustdp::testing::JacobiEigenvalues;
using ::robustdp::testing::RandomRows;
using ::robustdp::testing::Rows;

Dataset MakeDataset(const Rows& rows) {
  auto data = Dataset::FromRows(rows);
  EXPECT_TRUE(data.ok()) << data.status();
  return *std::move(data);
}

SymMatrix MakeSym(const Eigen::MatrixXd& m) {
  auto s = SymMatrix::Create(m);
  EXPECT_TRUE(s.ok()) << s.status();
  return *std::move(s);
}

Rows ToRows(const Eigen::MatrixXd& m) {
  Rows rows(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

Eigen::MatrixXd RandomSymmetric(int d, uint32_t seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> z;
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = z(gen);
  }
  return 0.5 * (a + a.transpose());
}

Eigen::MatrixXd RandomRotation(int d, uint32_t seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> z;
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = z(gen);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ();
}

TEST(DatasetTest, RejectsNonFiniteAndRaggedRows) {
  EXPECT_FALSE(Dataset::FromRows({{1.0, NAN}}).ok());
  EXPECT_FALSE(Dataset::FromRows({{1.0, INFINITY}}).ok());
  EXPECT_FALSE(Dataset::FromRows({{1.0, 2.0}, {3.0}}).ok());
  EXPECT_TRUE(Dataset::FromRows({}).ok());
}

TEST(EmpiricalMeanTest, SinglePoint) {
  const Vector mean = *EmpiricalMean(MakeDataset({{3.0, -1.0}}));
  EXPECT_EQ(mean(0), 3.0);
  EXPECT_EQ(mean(1), -1.0);
}

TEST(EmpiricalMeanTest, SymmetricPair) {
  const Vector mean = *EmpiricalMean(MakeDataset({{0, 0}, {2, 2}}));
  EXPECT_EQ(mean, Vector::Constant(2, 1.0));
}

TEST(EmpiricalMeanTest, EmptyInputIsAnError) {
  const auto mean = EmpiricalMean(Dataset());
  ASSERT_FALSE(mean.ok());
  EXPECT_EQ(mean.status().message(), "empty input");
}

TEST(EmpiricalMeanTest, MatchesLongDoubleResummation) {
  const Rows rows = RandomRows(50, 7, 5, 100.0);
  const Vector mean = *EmpiricalMean(MakeDataset(rows));
  const std::vector<double> oracle = testing::LongDoubleMean(rows);
  for (int j = 0; j < 7; ++j) EXPECT_NEAR(mean(j), oracle[j], 1e-12);
}

TEST(EmpiricalMeanTest, PermutationInvariant) {
  Rows rows = RandomRows(333, 4, 9);
  const Vector before = *EmpiricalMean(MakeDataset(rows));
  std::mt19937 gen(1);
  for (int rep = 0; rep < 5; ++rep) {
    std::shuffle(rows.begin(), rows.end(), gen);
    const Vector after = *EmpiricalMean(MakeDataset(rows));
    EXPECT_LT((after - before).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(EmpiricalCovarianceTest, IdenticalPointsGiveZero) {
  const Dataset data = MakeDataset(Rows(5, {1.5, -2.0, 0.25}));
  const Vector center = Eigen::Vector3d(1.5, -2.0, 0.25);
  const SymMatrix cov = *EmpiricalCovariance(data, center);
  EXPECT_EQ(cov.matrix(), Eigen::MatrixXd::Zero(3, 3));
}

TEST(EmpiricalCovarianceTest, OneDimensionalPair) {
  const SymMatrix cov =
      *EmpiricalCovariance(MakeDataset({{-1.0}, {1.0}}), Vector::Zero(1));
  EXPECT_EQ(cov.matrix()(0, 0), 1.0);
}

TEST(EmpiricalCovarianceTest, Errors) {
  EXPECT_FALSE(EmpiricalCovariance(MakeDataset({{1.0}}), Vector::Zero(1)).ok());
  EXPECT_FALSE(
      EmpiricalCovariance(MakeDataset({{1.0}, {2.0}}), Vector::Zero(2)).ok());
}

TEST(EmpiricalCovarianceTest, MatchesNaiveDoubleLoop) {
  const Rows rows = RandomRows(20, 4, 17, 3.0);
  const Dataset data = MakeDataset(rows);
  const Vector center = *EmpiricalMean(data);
  const SymMatrix cov = *EmpiricalCovariance(data, center);
  const Rows oracle = testing::NaiveCovariance(
      rows, std::vector<double>(center.data(), center.data() + 4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      EXPECT_NEAR(cov.matrix()(a, b), oracle[a][b], 1e-12);
    }
  }
  EXPECT_EQ(cov.matrix(), cov.matrix().transpose());
}

TEST(EmpiricalCovarianceTest, PositiveSemidefiniteAndPermutationInvariant) {
  std::mt19937 gen(23);
  std::normal_distribution<double> z;
  for (uint32_t seed = 0; seed < 10; ++seed) {
    Rows rows = RandomRows(40, 6, seed, 5.0);
    const Dataset data = MakeDataset(rows);
    const SymMatrix cov = *EmpiricalCovariance(data, *EmpiricalMean(data));
    for (int k = 0; k < 50; ++k) {
      Vector v(6);
      for (int j = 0; j < 6; ++j) v(j) = z(gen);
      v.normalize();
      EXPECT_GE(v.dot(cov.matrix() * v), -1e-10);
    }
    std::shuffle(rows.begin(), rows.end(), gen);
    const Dataset shuffled = MakeDataset(rows);
    const SymMatrix cov2 =
        *EmpiricalCovariance(shuffled, *EmpiricalMean(shuffled));
    EXPECT_LT((cov.matrix() - cov2.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(SymMatrixTest, RejectsAsymmetricAndSymmetrizesWithinTolerance) {
  Eigen::Matrix2d m;
  m << 1.0, 2.0, 2.5, 1.0;
  EXPECT_FALSE(SymMatrix::Create(m).ok());
  m << 1.0, 2.0, 2.0 + 1e-12, 1.0;
  const SymMatrix s = MakeSym(m);
  EXPECT_EQ(s.matrix()(0, 1), s.matrix()(1, 0));
}

TEST(TopEigenpairTest, Identity) {
  const EigenResult r = *TopEigenpair(SymMatrix::Identity(3));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(TopEigenpairTest, Diagonal) {
  const EigenResult r =
      *TopEigenpair(MakeSym(Eigen::Vector2d(3.0, 1.0).asDiagonal()));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 3.0, 1e-7);
  EXPECT_NEAR(std::abs(r.vector(0)), 1.0, 1e-6);
}

TEST(TopEigenpairTest, ZeroMatrixIsDocumentedSpecialCase) {
  const EigenResult r = *TopEigenpair(MakeSym(Eigen::MatrixXd::Zero(4, 4)));
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_NEAR(r.vector.norm(), 1.0, 1e-12);
}

TEST(TopEigenpairTest, RejectsBadOptions) {
  EXPECT_FALSE(TopEigenpair(SymMatrix::Identity(2), {0.0, 10}).ok());
  EXPECT_FALSE(TopEigenpair(SymMatrix::Identity(2), {1e-7, 0}).ok());
}

TEST(TopEigenpairTest, MatchesJacobiOracleOnRandomMatrices) {
  int checked = 0;
  for (uint32_t seed = 0; seed < 20; ++seed) {
    const Eigen::MatrixXd a = RandomSymmetric(6, seed);
    const std::vector<double> eig = JacobiEigenvalues(ToRows(a));
    const double dominant =
        std::abs(eig.front()) > std::abs(eig.back()) ? eig.front() : eig.back();
    const double runner_up = std::max(std::abs(eig[1]), std::abs(eig[4]));
    // Power iteration needs a gap to converge within 1000 steps.
    if (std::abs(dominant) - runner_up < 0.05) continue;
    const EigenResult r = *TopEigenpair(MakeSym(a), {1e-10, 5000});
    ASSERT_TRUE(r.converged) << "seed " << seed;
    EXPECT_NEAR(r.value, dominant, 1e-8) << "seed " << seed;
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(TopEigenpairTest, ResidualAndNormInvariants) {
  for (uint32_t seed = 100; seed < 140; ++seed) {
    const SymMatrix m = MakeSym(RandomSymmetric(5, seed));
    const EigenResult r = *TopEigenpair(m);
    EXPECT_NEAR(r.vector.norm(), 1.0, 1e-9);
    if (r.converged) {
      EXPECT_LE(EigenResidual(m, r), 1e-7 * std::max(1.0, std::abs(r.value)));
    }
  }
}

TEST(TopEigenpairTest, StartOnSubdominantEigenvectorIsAFixedPoint) {
  // The all-ones start is an eigenvector for eigenvalue 1; the dominant
  // eigenvalue 3 belongs to (1, -1).
  Eigen::Matrix2d m;
  m << 2.0, -1.0, -1.0, 2.0;
  const EigenResult r = *TopEigenpair(MakeSym(m));
  // The residual is exactly zero on the first step, so the iteration stops
  // there. Data covariances essentially never hit this.
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(LargestEigenpairTest, PrefersLargestAlgebraicValue) {
  const SymMatrix m = MakeSym(Eigen::Vector3d(-5.0, 0.5, 0.2).asDiagonal());
  const EigenResult top = *TopEigenpair(m);
  EXPECT_NEAR(top.value, -5.0, 1e-6);
  const EigenResult largest = *LargestEigenpair(m);
  EXPECT_NEAR(largest.value, 0.5, 1e-6);
}

TEST(SpectralDeviationTest, Examples) {
  EXPECT_EQ(*SpectralDeviation(SymMatrix::Identity(4)), 0.0);
  EXPECT_NEAR(
      *SpectralDeviation(MakeSym(Eigen::Vector2d(1.5, 1.0).asDiagonal())), 0.5,
      1e-7);
  // Deficit only: clamped to zero.
  EXPECT_EQ(
      *SpectralDeviation(MakeSym(Eigen::Vector2d(0.2, 0.9).asDiagonal())), 0.0);
}

TEST(SpectralDeviationTest, MatchesOracleOnCorruptedCovariance) {
  // 30 points near the origin and 5 far away along (1, 1, 0, 0).
  Rows rows = RandomRows(30, 4, 77);
  for (int i = 0; i < 5; ++i) rows.push_back({4.0, 4.0, 0.0, 0.0});
  const Dataset data = MakeDataset(rows);
  const SymMatrix cov = *EmpiricalCovariance(data, *EmpiricalMean(data));
  Eigen::MatrixXd shifted = cov.matrix() - Eigen::MatrixXd::Identity(4, 4);
  const double oracle = std::max(0.0, JacobiEigenvalues(ToRows(shifted)).back());
  EXPECT_NEAR(*SpectralDeviation(cov, {1e-12, 10000}), oracle, 1e-8);
}

TEST(SpectralDeviationTest, InvariantUnderRotation) {
  for (uint32_t seed = 0; seed < 10; ++seed) {
    Eigen::VectorXd diag(5);
    diag << 2.0, 1.3, 1.1, 0.7, 0.4;
    const Eigen::MatrixXd q = RandomRotation(5, seed);
    const Eigen::MatrixXd sigma = q * diag.asDiagonal() * q.transpose();
    EXPECT_NEAR(*SpectralDeviation(MakeSym(0.5 * (sigma + sigma.transpose())),
                                   {1e-12, 10000}),
                1.0, 1e-8);
  }
}

}  // namespace
}  // namespace robustdp
