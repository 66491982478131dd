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
#ifndef QLLL_SERIALIZATION_H
#define QLLL_SERIALIZATION_H

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlll/errors.h"
#include "qlll/lll.h"
#include "qlll/oracle.h"

namespace qlll {

inline constexpr int kInstanceFormatVersion = 1;

/// Rows of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
/// Throws ParseError on a ragged, non-square or non-numeric array.
ComplexMatrix matrix_from_json(const nlohmann::json &j);

/// On-disk instance: a test, optional events, optional LLL weights.
struct InstanceFile {
    int version = kInstanceFormatVersion;
    ComplexMatrix state;
    std::vector<MeasurementPtr> measurements;
    std::vector<IndexedEvent> events;
    std::optional<std::vector<double>> x;

    size_t dim() const noexcept {
        return state.dim();
    }

    Test test(const ToleranceConfig &tol = {}) const;
    /// Events resolved against the measurement list. Throws InvalidEvent when
    /// two events share a position.
    TestEventAssignment assignment(const ToleranceConfig &tol = {}) const;

    static InstanceFile from_assignment(const TestEventAssignment &a,
                                        std::optional<std::vector<double>> x = std::nullopt);

    friend bool operator==(const InstanceFile &a, const InstanceFile &b);
};

/// Validates structure, every Kraus family (NotComplete etc.) and the state.
InstanceFile parse_instance(const nlohmann::json &j, const ToleranceConfig &tol = {});
InstanceFile parse_instance_text(std::string_view text, const ToleranceConfig &tol = {});
nlohmann::json instance_to_json(const InstanceFile &f);
/// Compact JSON text; parse_instance_text(serialize_instance(f)) == f bit-exactly.
std::string serialize_instance(const InstanceFile &f);

nlohmann::json profile_to_json(const DependenceProfile &p);
nlohmann::json report_to_json(const LLLReport &r);
nlohmann::json symmetric_to_json(const SymmetricReport &r);
nlohmann::json sample_to_json(const SampleEstimate &s);
nlohmann::json error_to_json(const Error &e);

}  // namespace qlll

#endif
