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

#ifndef ROBUSTDP_STATUS_MACROS_H_
#define ROBUSTDP_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define ROBUSTDP_CONCAT_INNER_(a, b) a##b
#define ROBUSTDP_CONCAT_(a, b) ROBUSTDP_CONCAT_INNER_(a, b)

#define RETURN_IF_ERROR(...)                   \
  do {                                         \
    const absl::Status _status = (__VA_ARGS__); \
    if (!_status.ok()) return _status;         \
  } while (0)

#define ROBUSTDP_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                    \
  if (!statusor.ok()) return statusor.status();               \
  lhs = *std::move(statusor)

// Evaluates `rexpr` (an absl::StatusOr<T>) and either assigns the value to
// `lhs` or returns the error from the enclosing function.
#define ASSIGN_OR_RETURN(lhs, ...) \
  ROBUSTDP_ASSIGN_OR_RETURN_IMPL_( \
      ROBUSTDP_CONCAT_(_statusor_, __LINE__), lhs, (__VA_ARGS__))

#endif  // ROBUSTDP_STATUS_MACROS_H_
