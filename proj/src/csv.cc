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

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace robustdp {

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

absl::StatusOr<Dataset> ReadDatasetCsv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const absl::string_view trimmed = absl::StripAsciiWhitespace(line);
    if (trimmed.empty()) continue;
    std::vector<double> row;
    for (absl::string_view field : absl::StrSplit(trimmed, ',')) {
      field = absl::StripAsciiWhitespace(field);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": cannot parse '", field, "' as a number"));
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return Dataset::FromRows(rows);
}

absl::StatusOr<Dataset> ReadDatasetCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ReadDatasetCsv(in);
}

void WriteDatasetCsv(const Dataset& data, std::ostream& out) {
  for (int64_t i = 0; i < data.n(); ++i) {
    for (int64_t j = 0; j < data.d(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(data.rows()(i, j));
    }
    out << '\n';
  }
}

}  // namespace robustdp
