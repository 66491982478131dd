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
#ifndef QLLL_INSTANCE_GEN_H
#define QLLL_INSTANCE_GEN_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlll/lll.h"

namespace qlll {

/// The measurements used throughout the worked examples: computational
/// basis {|0><0|, |1><1|}, labels "0" and "1".
MeasurementPtr computational_basis_measurement(std::string name);
/// {|+><+|, |-><-|}, labels "0" and "1".
MeasurementPtr hadamard_basis_measurement(std::string name);
DensityOperator plus_state();
DensityOperator zero_state();

struct PaperExpectation {
    std::string description;
    std::string claim;
    /// Value the definitions give.
    double expected = 0.0;
    std::function<double()> compute;
    /// The printed value, when it differs from expected.
    std::optional<double> stated;
};

struct PaperExample {
    std::string name;
    TestEventAssignment assignment;
    std::vector<PaperExpectation> expectations;
};

/// Every worked numerical example with its stated values.
std::vector<PaperExample> paper_examples();

enum class GeneratorKind { PaperExamples, TensorProduct, SlidingWindow, RandomProjective, RandomPOVM, DependentChain };

std::string_view to_string(GeneratorKind k);
/// Accepts the kebab-case names ("tensor-product", ...). Throws InvalidArgument.
GeneratorKind parse_generator_kind(std::string_view text);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::RandomProjective;
    size_t n = 3;
    size_t local_dim = 2;
    size_t window = 1;
    uint64_t seed = 0;
    /// Spectrum size for the random kinds; 0 draws it from {2, 3}.
    size_t outcomes = 0;

    /// Throws InvalidArgument on n < 1, local_dim < 2, window outside [1, n].
    void validate() const;
};

/// Deterministic in spec. Throws DimensionCapExceeded.
///  - TensorProduct: measurement i is a random local basis on subsystem i of
///    a product state; all events independent.
///  - SlidingWindow: measurement i reads (digit sum mod local_dim) of
///    subsystems i..i+window-1 in a rotated product basis; d_min = window-1
///    for generic draws.
///  - DependentChain: one subsystem; measurements alternate between the
///    computational basis and a random basis that is not mutually unbiased.
///  - RandomProjective / RandomPOVM: dimension local_dim, random state.
///  - PaperExamples: the three-measurement worked example.
TestEventAssignment generate(const GeneratorSpec &spec);

struct GeneratedLLL {
    LLLInstance instance;
    size_t rejections = 0;
};

/// Shrinks event outcome sets of a generated instance until the LLL
/// assumption holds at every index; each removed outcome counts as one
/// rejection. Throws GaveUp when max_attempts is exhausted.
GeneratedLLL generate_assumption_satisfying(const GeneratorSpec &spec, const std::vector<double> &x,
                                            size_t max_attempts = 1000, const ToleranceConfig &tol = {});

/// Shrinks event outcome sets until max_i Pr[E_i] * e * (d_min + 1) <= 1.
TestEventAssignment generate_symmetric_satisfying(const GeneratorSpec &spec, size_t max_attempts = 1000,
                                                  const ToleranceConfig &tol = {});

}  // namespace qlll

#endif
