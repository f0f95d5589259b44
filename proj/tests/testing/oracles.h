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

// Independent reference computations used only by tests. Nothing here calls
// into the library's numeric routines.

#ifndef ROBUSTDP_TESTING_ORACLES_H_
#define ROBUSTDP_TESTING_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace robustdp::testing {

using Rows = std::vector<std::vector<double>>;

inline Rows RandomRows(int64_t n, int64_t d, uint32_t seed,
                       double scale = 1.0) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  Rows rows(n, std::vector<double>(d));
  for (auto& r : rows) {
    for (auto& x : r) x = u(gen);
  }
  return rows;
}

// Column means accumulated in long double, in reverse row order.
inline std::vector<double> LongDoubleMean(const Rows& rows) {
  const size_t d = rows.front().size();
  std::vector<long double> acc(d, 0.0L);
  for (size_t i = rows.size(); i-- > 0;) {
    for (size_t j = 0; j < d; ++j) acc[j] += rows[i][j];
  }
  std::vector<double> out(d);
  for (size_t j = 0; j < d; ++j) out[j] = double(acc[j] / rows.size());
  return out;
}

// Direct O(n d^2) covariance about `center`, normalized by 1/n.
inline Rows NaiveCovariance(const Rows& rows, const std::vector<double>& c) {
  const size_t d = c.size();
  Rows cov(d, std::vector<double>(d, 0.0));
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) {
      long double s = 0.0L;
      for (const auto& r : rows) s += (long double)(r[a] - c[a]) * (r[b] - c[b]);
      cov[a][b] = double(s / rows.size());
    }
  }
  return cov;
}

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// sorted ascending.
inline std::vector<double> JacobiEigenvalues(Rows a) {
  const size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Multiset symmetric difference size by quadratic matching.
inline int64_t BruteForceSymmetricDifference(const Rows& a, const Rows& b) {
  std::vector<bool> used(b.size(), false);
  int64_t matched = 0;
  for (const auto& r : a) {
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b[j] == r) {
        used[j] = true;
        ++matched;
        break;
      }
    }
  }
  return static_cast<int64_t>(a.size() + b.size()) - 2 * matched;
}

}  // namespace robustdp::testing

#endif  // ROBUSTDP_TESTING_ORACLES_H_
