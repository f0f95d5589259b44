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

#include "robustdp/csv.h"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace robustdp {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(FormatDouble(std::nan("")), "nan");
  EXPECT_EQ(FormatDouble(INFINITY), "inf");
  EXPECT_EQ(FormatDouble(-INFINITY), "-inf");
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(gen);
    EXPECT_EQ(std::stod(FormatDouble(x)), x);
  }
}

TEST(DatasetCsvTest, RoundTrip) {
  const Dataset data = *Dataset::FromRows(
      {{0.1, -2.0, 3e-17}, {1.0 / 3.0, 1e300, -0.0}});
  std::stringstream buf;
  WriteDatasetCsv(data, buf);
  EXPECT_EQ(buf.str().substr(0, buf.str().find('\n')), "0.1,-2,3e-17");
  const auto back = ReadDatasetCsv(buf);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->rows(), data.rows());
}

TEST(DatasetCsvTest, ToleratesBlankLinesAndSpaces) {
  std::istringstream in("1, 2\n\n 3 ,4 \r\n");
  const auto data = ReadDatasetCsv(in);
  ASSERT_TRUE(data.ok()) << data.status();
  EXPECT_EQ(data->n(), 2);
  EXPECT_EQ(data->row(1)(0), 3.0);
}

TEST(DatasetCsvTest, Errors) {
  std::istringstream ragged("1,2\n3\n");
  EXPECT_FALSE(ReadDatasetCsv(ragged).ok());
  std::istringstream text("1,two\n");
  EXPECT_FALSE(ReadDatasetCsv(text).ok());
  std::istringstream nonfinite("1,nan\n");
  EXPECT_FALSE(ReadDatasetCsv(nonfinite).ok());
  EXPECT_FALSE(ReadDatasetCsvFile("/nonexistent/file.csv").ok());
}

}  // namespace
}  // namespace robustdp
