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
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "robustdp/random.h"

namespace robustdp {
namespace {

TEST(SampleGaussianTest, Deterministic) {
  const Vector mu = Vector::LinSpaced(3, -1.0, 1.0);
  EXPECT_EQ(SampleGaussian(50, 3, mu, 8)->rows(),
            SampleGaussian(50, 3, mu, 8)->rows());
  EXPECT_NE(SampleGaussian(50, 3, mu, 8)->rows(),
            SampleGaussian(50, 3, mu, 9)->rows());
}

TEST(SampleGaussianTest, EntryAddressing) {
  const Vector mu = Vector::Constant(4, 2.5);
  const Dataset data = *SampleGaussian(7, 4, mu, 13);
  const CounterStream stream(13, StreamId::kSample);
  for (int64_t i = 0; i < 7; ++i) {
    for (int64_t j = 0; j < 4; ++j) {
      EXPECT_EQ(data.row(i)(j), 2.5 + stream.StandardNormal(i * 4 + j));
    }
  }
}

TEST(SampleGaussianTest, UnivariateMoments) {
  const Dataset data = *SampleGaussian(100000, 1, Vector::Zero(1), 1);
  const double mean = data.rows().mean();
  const double var =
      (data.rows().array() - mean).square().sum() / (data.n() - 1);
  EXPECT_LT(std::abs(mean), 4.0 / std::sqrt(1e5));
  EXPECT_GE(var, 0.97);
  EXPECT_LE(var, 1.03);
}

TEST(SampleGaussianTest, CoordinatesUncorrelated) {
  const Dataset data = *SampleGaussian(100000, 5, Vector::Zero(5), 2);
  const SymMatrix cov = *EmpiricalCovariance(data, *EmpiricalMean(data));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i != j) EXPECT_LT(std::abs(cov.matrix()(i, j)), 0.02);
    }
  }
}

TEST(SampleGaussianTest, Errors) {
  EXPECT_FALSE(SampleGaussian(0, 2, Vector::Zero(2), 0).ok());
  EXPECT_FALSE(SampleGaussian(3, 0, Vector::Zero(0), 0).ok());
  EXPECT_FALSE(SampleGaussian(3, 2, Vector::Zero(3), 0).ok());
}

TEST(AdversaryTest, NamesRoundTrip) {
  for (AdversaryKind k :
       {AdversaryKind::kConstantCluster, AdversaryKind::kDirectionalSpread,
        AdversaryKind::kSubtractiveOnly}) {
    EXPECT_EQ(*ParseAdversary(AdversaryName(k)), k);
  }
  EXPECT_FALSE(ParseAdversary("sign_flip").ok());
}

TEST(CorruptTest, ZeroGammaIsIdentity) {
  const Dataset data = *SampleGaussian(40, 3, Vector::Zero(3), 1);
  const auto [out, plan] = *Corrupt(data, 0.0, Adversary{}, 5);
  EXPECT_EQ(out.rows(), data.rows());
  EXPECT_TRUE(plan.replaced_indices.empty());
  EXPECT_EQ(plan.m_prime, 0);
}

TEST(CorruptTest, GammaOutOfRange) {
  const Dataset data = *SampleGaussian(10, 2, Vector::Zero(2), 1);
  EXPECT_EQ(Corrupt(data, 0.5, Adversary{}, 0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_FALSE(Corrupt(data, -0.01, Adversary{}, 0).ok());
}

TEST(CorruptTest, BinomialCountMean) {
  const Dataset data = *SampleGaussian(1000, 2, Vector::Zero(2), 1);
  double total = 0.0;
  std::set<int64_t> counts;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const CorruptionPlan plan = Corrupt(data, 0.1, Adversary{}, seed)->second;
    total += plan.m_prime;
    counts.insert(plan.m_prime);
  }
  EXPECT_NEAR(total / 200.0, 100.0, 10.0);
  // A binomial count varies across seeds; a fixed floor(gamma n) would not.
  EXPECT_GT(counts.size(), 5u);
}

TEST(CorruptTest, FixedCount) {
  const Dataset data = *SampleGaussian(1000, 2, Vector::Zero(2), 1);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const CorruptionPlan plan =
        Corrupt(data, 0.1, Adversary{}, seed, CorruptionCount::kFixed)->second;
    EXPECT_EQ(plan.m_prime, 100);
    EXPECT_EQ(plan.replaced_indices.size(), 100u);
  }
}

TEST(CorruptTest, PlanMatchesModifiedRows) {
  for (AdversaryKind kind :
       {AdversaryKind::kConstantCluster, AdversaryKind::kDirectionalSpread}) {
    const Dataset data = *SampleGaussian(500, 4, Vector::Zero(4), 3);
    Adversary adv;
    adv.kind = kind;
    const auto [out, plan] = *Corrupt(data, 0.2, adv, 17);
    ASSERT_EQ(out.n(), data.n());
    ASSERT_EQ(out.d(), data.d());
    EXPECT_EQ(static_cast<int64_t>(plan.replaced_indices.size()), plan.m_prime);
    EXPECT_TRUE(std::is_sorted(plan.replaced_indices.begin(),
                               plan.replaced_indices.end()));
    std::vector<int64_t> changed;
    for (int64_t i = 0; i < data.n(); ++i) {
      if (out.row(i) != data.row(i)) changed.push_back(i);
    }
    EXPECT_EQ(changed, plan.replaced_indices) << AdversaryName(kind);
  }
}

TEST(CorruptTest, ConstantClusterShiftsNaiveMean) {
  const Dataset data = *SampleGaussian(20000, 3, Vector::Zero(3), 4);
  const auto [out, plan] = *Corrupt(data, 0.1, Adversary{}, 6);
  for (int64_t i : plan.replaced_indices) {
    EXPECT_EQ(out.row(i), (10.0 * Vector::Unit(3, 0)).transpose());
  }
  const Vector shift = *EmpiricalMean(out) - *EmpiricalMean(data);
  EXPECT_NEAR(shift(0), 0.1 * 10.0, 0.1);
  EXPECT_LT(std::abs(shift(1)), 0.05);
}

TEST(CorruptTest, ConstantClusterRelativeToCenter) {
  const Vector mu = Vector::Constant(2, 5.0);
  const Dataset data = *SampleGaussian(100, 2, mu, 4);
  const auto [out, plan] =
      *Corrupt(data, 0.3, Adversary::ConstantCluster(Vector::Constant(2, -1.0)),
               2);
  Adversary with_center = Adversary::ConstantCluster(Vector::Constant(2, -1.0));
  with_center.center = mu;
  const auto [shifted, plan2] = *Corrupt(data, 0.3, with_center, 2);
  EXPECT_EQ(plan.replaced_indices, plan2.replaced_indices);
  ASSERT_FALSE(plan.replaced_indices.empty());
  const int64_t i = plan.replaced_indices[0];
  EXPECT_EQ(out.row(i), Eigen::RowVector2d(-1.0, -1.0));
  EXPECT_EQ(shifted.row(i), Eigen::RowVector2d(4.0, 4.0));
}

TEST(CorruptTest, DirectionalSpreadSitsNearTarget) {
  const Dataset data = *SampleGaussian(2000, 3, Vector::Zero(3), 4);
  Adversary adv;
  adv.kind = AdversaryKind::kDirectionalSpread;
  adv.direction = Vector::Ones(3);
  adv.magnitude = 6.0;
  const auto [out, plan] = *Corrupt(data, 0.1, adv, 9);
  const Vector target = Vector::Constant(3, 6.0 / std::sqrt(3.0));
  for (int64_t i : plan.replaced_indices) {
    EXPECT_LT((out.row(i).transpose() - target).norm(), 0.1 * 6.0);
  }
}

TEST(CorruptTest, SubtractiveRemovesLargestFirstCoordinate) {
  const Dataset data = *SampleGaussian(300, 2, Vector::Zero(2), 5);
  Adversary adv;
  adv.kind = AdversaryKind::kSubtractiveOnly;
  const auto [out, plan] = *Corrupt(data, 0.1, adv, 3);
  EXPECT_EQ(out.n(), data.n() - plan.m_prime);
  EXPECT_EQ(out.d(), data.d());
  ASSERT_GT(plan.m_prime, 0);
  double smallest_removed = INFINITY;
  for (int64_t i : plan.replaced_indices) {
    smallest_removed = std::min(smallest_removed, data.row(i)(0));
  }
  EXPECT_LE(out.rows().col(0).maxCoeff(), smallest_removed);
}

TEST(CorruptTest, RejectsMismatchedAdversaryVectors) {
  const Dataset data = *SampleGaussian(20, 3, Vector::Zero(3), 5);
  EXPECT_FALSE(
      Corrupt(data, 0.2, Adversary::ConstantCluster(Vector::Ones(2)), 1).ok());
  Adversary adv;
  adv.kind = AdversaryKind::kDirectionalSpread;
  adv.direction = Vector::Zero(3);
  EXPECT_FALSE(Corrupt(data, 0.4, adv, 1).ok());
}

TEST(GoodnessCheckTest, LargeCleanSamplesPassConditionsThreeAndFour) {
  int pass3 = 0, pass4 = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Dataset data = *SampleGaussian(50000, 5, Vector::Zero(5), seed);
    const GoodnessReport r =
        *GoodnessCheck(data, Vector::Zero(5), 0.2, 0.05, 20, seed);
    pass3 += r.cond3_pass;
    pass4 += r.cond4_pass;
    EXPECT_EQ(r.cond3_pass, r.cond3_mean_error <= 0.2);
    EXPECT_EQ(r.cond4_pass, r.cond4_cov_deviation <= 0.2);
    EXPECT_EQ(r.cond1_pass, r.cond1_max_norm <= r.cond1_bound);
    EXPECT_TRUE(r.cond1_pass);
    EXPECT_GE(r.cond2_worst_gap, 0.0);
  }
  EXPECT_GE(pass3, 95);
  EXPECT_GE(pass4, 95);
}

TEST(GoodnessCheckTest, FailureRateWithinTauPlusSlack) {
  const double tau = 0.05;
  int failures = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const Dataset data = *SampleGaussian(20000, 5, Vector::Zero(5), 1000 + seed);
    const GoodnessReport r =
        *GoodnessCheck(data, Vector::Zero(5), 0.2, tau, 0, seed);
    failures += !(r.cond3_pass && r.cond4_pass);
  }
  EXPECT_LE(failures / 200.0, tau + 0.05);
}

TEST(GoodnessCheckTest, WrongMeanFailsConditionThree) {
  const Dataset data = *SampleGaussian(5000, 3, Vector::Zero(3), 1);
  const GoodnessReport r =
      *GoodnessCheck(data, Vector::Constant(3, 10.0), 0.2, 0.05, 10, 1);
  EXPECT_FALSE(r.cond3_pass);
  EXPECT_GT(r.cond3_mean_error, 10.0);
}

TEST(GoodnessCheckTest, ConditionTwoSkipsUndefinedBounds) {
  // d = 1, gamma = 0.1, tau = 0.05: the inner log is negative, so no
  // (direction, T) pair has a defined bound.
  const Dataset data = *SampleGaussian(1000, 1, Vector::Zero(1), 1);
  const GoodnessReport r =
      *GoodnessCheck(data, Vector::Zero(1), 0.1, 0.05, 10, 1);
  EXPECT_EQ(r.cond2_checked, 0);
  EXPECT_FALSE(r.cond2_pass);
  EXPECT_GE(r.cond2_worst_gap, 0.0);
}

TEST(GoodnessCheckTest, ConditionTwoChecksEveryDefinedPair) {
  const Dataset data = *SampleGaussian(2000, 20, Vector::Zero(20), 1);
  const GoodnessReport r =
      *GoodnessCheck(data, Vector::Zero(20), 0.1, 0.05, 15, 1);
  EXPECT_EQ(r.cond2_checked, 15 * 8);
}

TEST(GoodnessCheckTest, Errors) {
  const Dataset data = *SampleGaussian(10, 2, Vector::Zero(2), 1);
  EXPECT_FALSE(GoodnessCheck(data, Vector::Zero(3), 0.1, 0.05, 1, 0).ok());
  EXPECT_FALSE(GoodnessCheck(data, Vector::Zero(2), 0.1, 1.5, 1, 0).ok());
  EXPECT_FALSE(GoodnessCheck(data, Vector::Zero(2), 0.0, 0.05, 1, 0).ok());
}

}  // namespace
}  // namespace robustdp
