// Copyright 2026 The qlll Authors
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
#ifndef QLLL_ERRORS_H
#define QLLL_ERRORS_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlll {

enum class ErrorKind {
    DimensionMismatch,
    DimensionCapExceeded,
    NonFinite,
    NotSquare,
    NotHermitian,
    NotPositive,
    BadTrace,
    NotComplete,
    InvalidMeasurement,
    InvalidEvent,
    DifferentMeasurements,
    InvalidIndexSet,
    MissingAssignment,
    ConditionOnZero,
    BadOrdering,
    InternalConsistency,
    EnumerationCapExceeded,
    GaveUp,
    BadP,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported as an Error carrying a machine-readable
/// kind. Validation failures also carry the measured residual, and
/// index-specific failures (conditioning, prefix scans) carry the index.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::optional<double> residual = std::nullopt,
          std::optional<size_t> index = std::nullopt);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    std::optional<double> residual() const noexcept {
        return residual_;
    }
    std::optional<size_t> index() const noexcept {
        return index_;
    }

   private:
    ErrorKind kind_;
    std::optional<double> residual_;
    std::optional<size_t> index_;
};

}  // namespace qlll

#endif
