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

#ifndef ROBUSTDP_CSV_H_
#define ROBUSTDP_CSV_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "robustdp/linalg.h"

namespace robustdp {

// Shortest decimal string that parses back to exactly `value`; "nan", "inf"
// and "-inf" for non-finite values.
std::string FormatDouble(double value);

// Headerless CSV, one sample per line, comma-separated decimal floats.
// Blank lines are ignored.
absl::StatusOr<Dataset> ReadDatasetCsv(std::istream& in);
absl::StatusOr<Dataset> ReadDatasetCsvFile(const std::string& path);
void WriteDatasetCsv(const Dataset& data, std::ostream& out);

}  // namespace robustdp

#endif  // ROBUSTDP_CSV_H_
