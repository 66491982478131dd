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
#ifndef QLLL_TOLERANCE_H
#define QLLL_TOLERANCE_H

#include <cstddef>

namespace qlll {

struct ToleranceConfig {
    double herm = 1e-10;
    double psd = 1e-9;
    double trace = 1e-10;
    double complete = 1e-9;
    double prob = 1e-9;
    double ind = 1e-7;

    /// Throws InvalidArgument unless every tolerance is strictly positive.
    void validate() const;
};

inline constexpr size_t kDefaultDimensionCap = 64;

/// Maximum Hilbert-space dimension accepted by constructors. Reads the
/// QLLL_DIM_CAP environment variable, falling back to kDefaultDimensionCap.
size_t dimension_cap();

}  // namespace qlll

#endif
