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
#ifndef QLLL_EVENTS_H
#define QLLL_EVENTS_H

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlll/linalg.h"

namespace qlll {

using OutcomeLabel = std::string;

/// A general quantum measurement: Kraus operators indexed by an ordered list
/// of distinct outcome labels, satisfying sum_m M_m^dagger M_m = I.
class Measurement {
   public:
    /// Throws InvalidMeasurement (empty spectrum, duplicate or empty labels,
    /// size mismatch), DimensionMismatch, DimensionCapExceeded or NotComplete.
    Measurement(std::string name, std::vector<OutcomeLabel> labels, std::vector<ComplexMatrix> kraus,
                const ToleranceConfig &tol = {});

    /// Projective measurement from orthogonal projectors; same checks.
    static Measurement projective(std::string name, std::vector<OutcomeLabel> labels,
                                  std::vector<ComplexMatrix> projectors, const ToleranceConfig &tol = {});

    const std::string &name() const noexcept {
        return name_;
    }
    size_t dim() const noexcept {
        return dim_;
    }
    size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<OutcomeLabel> &labels() const noexcept {
        return labels_;
    }
    const std::vector<ComplexMatrix> &kraus() const noexcept {
        return kraus_;
    }
    std::optional<size_t> index_of(const OutcomeLabel &label) const;
    const ComplexMatrix &kraus(const OutcomeLabel &label) const;

    /// Every Kraus operator is an orthogonal projector (Hermitian, idempotent,
    /// pairwise orthogonal) within the Hermiticity tolerance.
    bool is_projective() const noexcept {
        return projective_;
    }

    /// ||sum M^dagger M - I||_max.
    double completeness_residual() const;

    friend bool operator==(const Measurement &a, const Measurement &b);

   private:
    std::string name_;
    size_t dim_;
    std::vector<OutcomeLabel> labels_;
    std::vector<ComplexMatrix> kraus_;
    bool projective_ = false;
};

using MeasurementPtr = std::shared_ptr<const Measurement>;

MeasurementPtr make_measurement(Measurement m);

/// Pointer identity or structural equality.
bool same_measurement(const Measurement &a, const Measurement &b);

/// The map rho -> sum_{m in A} M_m rho M_m^dagger.
class SuperOperator {
   public:
    SuperOperator(size_t dim, std::vector<ComplexMatrix> kraus_subset);

    size_t dim() const noexcept {
        return dim_;
    }
    const std::vector<ComplexMatrix> &kraus_subset() const noexcept {
        return kraus_;
    }
    bool is_null() const noexcept {
        return kraus_.empty();
    }

    /// Unvalidated action on any dim x dim matrix; linear in its argument.
    ComplexMatrix operator()(const ComplexMatrix &rho) const;

   private:
    size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

/// The event {M in A}. Outcomes are held as a sorted label set so that equal
/// events compare equal regardless of how they were built.
class Event {
   public:
    /// Throws InvalidEvent if an outcome is not in spec(M).
    Event(MeasurementPtr measurement, std::vector<OutcomeLabel> outcomes);

    static Event singleton(MeasurementPtr measurement, const OutcomeLabel &label);
    static Event complete(MeasurementPtr measurement);
    static Event empty(MeasurementPtr measurement);

    const MeasurementPtr &measurement() const noexcept {
        return measurement_;
    }
    const std::vector<OutcomeLabel> &outcomes() const noexcept {
        return outcomes_;
    }
    size_t dim() const noexcept {
        return measurement_->dim();
    }
    bool contains(const OutcomeLabel &label) const;
    bool is_complete() const noexcept {
        return outcomes_.size() == measurement_->size();
    }
    bool is_empty() const noexcept {
        return outcomes_.empty();
    }

    friend bool operator==(const Event &a, const Event &b);

   private:
    MeasurementPtr measurement_;
    std::vector<OutcomeLabel> outcomes_;
};

SuperOperator super_operator_of(const Event &e);
Event complement(const Event &e);
/// Throws DifferentMeasurements.
Event event_union(const Event &a, const Event &b);

/// Applies s and validates the result as a partial density operator.
DensityOperator apply(const SuperOperator &s, const DensityOperator &rho, const ToleranceConfig &tol = {});

/// An event whose measurement is named by a 1-based position in a list of
/// measurements, as written in instance files and CLI queries.
struct IndexedEvent {
    size_t measurement_index = 0;
    std::vector<OutcomeLabel> outcomes;
    /// full(M<i>): the whole spectrum, whatever it turns out to be.
    bool complete = false;

    friend bool operator==(const IndexedEvent &, const IndexedEvent &) = default;
};

/// Throws InvalidEvent when the index is out of range or an outcome is unknown.
Event resolve(const IndexedEvent &e, std::span<const MeasurementPtr> measurements);

/// Parses one event: "M2 in {a,b}", "M2=a", "full(M2)", "empty(M2)".
/// Throws ParseError.
IndexedEvent parse_event(std::string_view text);
/// Semicolon-separated list of events; blank input is the empty sequence.
std::vector<IndexedEvent> parse_event_sequence(std::string_view text);
/// Renders in the "M<i> in {..}" form accepted by parse_event.
std::string format_event(const IndexedEvent &e);

}  // namespace qlll

#endif
