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
#include "qlll/errors.h"

#include <cstdlib>
#include <string>

#include "qlll/tolerance.h"

namespace qlll {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::DimensionCapExceeded:
            return "DimensionCapExceeded";
        case ErrorKind::NonFinite:
            return "NonFinite";
        case ErrorKind::NotSquare:
            return "NotSquare";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotPositive:
            return "NotPositive";
        case ErrorKind::BadTrace:
            return "BadTrace";
        case ErrorKind::NotComplete:
            return "NotComplete";
        case ErrorKind::InvalidMeasurement:
            return "InvalidMeasurement";
        case ErrorKind::InvalidEvent:
            return "InvalidEvent";
        case ErrorKind::DifferentMeasurements:
            return "DifferentMeasurements";
        case ErrorKind::InvalidIndexSet:
            return "InvalidIndexSet";
        case ErrorKind::MissingAssignment:
            return "MissingAssignment";
        case ErrorKind::ConditionOnZero:
            return "ConditionOnZero";
        case ErrorKind::BadOrdering:
            return "BadOrdering";
        case ErrorKind::InternalConsistency:
            return "InternalConsistency";
        case ErrorKind::EnumerationCapExceeded:
            return "EnumerationCapExceeded";
        case ErrorKind::GaveUp:
            return "GaveUp";
        case ErrorKind::BadP:
            return "BadP";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message, std::optional<double> residual, std::optional<size_t> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      residual_(residual),
      index_(index) {
}

void ToleranceConfig::validate() const {
    for (double t : {herm, psd, trace, complete, prob, ind}) {
        if (!(t > 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
        }
    }
}

size_t dimension_cap() {
    const char *env = std::getenv("QLLL_DIM_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultDimensionCap;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        return kDefaultDimensionCap;
    }
    return static_cast<size_t>(v);
}

}  // namespace qlll
