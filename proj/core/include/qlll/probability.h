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
#ifndef QLLL_PROBABILITY_H
#define QLLL_PROBABILITY_H

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qlll/events.h"

namespace qlll {

/// Events performed in order: the first element is measured first.
using EventSequence = std::vector<Event>;

/// A prepared state followed by a fixed, ordered list of measurements.
class Test {
   public:
    /// rho must be a Full density operator; throws DimensionMismatch if a
    /// measurement acts on a different space and InvalidArgument when empty.
    Test(DensityOperator rho, std::vector<MeasurementPtr> measurements);

    const DensityOperator &rho() const noexcept {
        return rho_;
    }
    const std::vector<MeasurementPtr> &measurements() const noexcept {
        return measurements_;
    }
    /// 1-based.
    const MeasurementPtr &measurement(size_t i) const;
    size_t size() const noexcept {
        return measurements_.size();
    }
    size_t dim() const noexcept {
        return rho_.dim();
    }

   private:
    DensityOperator rho_;
    std::vector<MeasurementPtr> measurements_;
};

/// Strictly increasing sequence of 1-based measurement positions.
class IndexSet {
   public:
    IndexSet() = default;
    /// Throws InvalidIndexSet unless strictly increasing and positive.
    IndexSet(std::initializer_list<size_t> indices);
    explicit IndexSet(std::vector<size_t> indices);

    /// The initial segment 1, 2, ..., k.
    static IndexSet prefix(size_t k);
    /// lo, lo+1, ..., hi (empty when lo > hi).
    static IndexSet range(size_t lo, size_t hi);

    const std::vector<size_t> &indices() const noexcept {
        return indices_;
    }
    bool empty() const noexcept {
        return indices_.empty();
    }
    size_t size() const noexcept {
        return indices_.size();
    }
    /// 0 for the empty set.
    size_t max() const noexcept {
        return indices_.empty() ? 0 : indices_.back();
    }
    size_t min() const;
    bool contains(size_t i) const;
    bool is_initial_segment() const;
    bool is_subsequence_of(const IndexSet &other) const;

    /// Set difference, order preserved.
    IndexSet without(const IndexSet &other) const;
    /// Sorted union of two index sets.
    IndexSet merged(const IndexSet &other) const;

    auto begin() const noexcept {
        return indices_.begin();
    }
    auto end() const noexcept {
        return indices_.end();
    }

    friend bool operator==(const IndexSet &, const IndexSet &) = default;

   private:
    std::vector<size_t> indices_;
};

/// K < L: every element of K precedes every element of L. Vacuous if either
/// side is empty.
bool precedes(const IndexSet &k, const IndexSet &l);

/// Concatenation K,L. Throws BadOrdering unless K < L.
IndexSet concat(const IndexSet &k, const IndexSet &l);

std::string to_string(const IndexSet &k);
/// "1,3,4" or "" -> IndexSet. Throws ParseError.
IndexSet parse_index_set(std::string_view text);

/// A test together with events E_i defined by the test's own measurement M_i,
/// for some subset of positions i.
class TestEventAssignment {
   public:
    explicit TestEventAssignment(Test test);
    /// Throws InvalidEvent if an event is not defined by the measurement at its key.
    TestEventAssignment(Test test, std::map<size_t, Event> events);
    /// Assigns events[k] to position k+1.
    TestEventAssignment(Test test, const std::vector<Event> &events);

    const Test &test() const noexcept {
        return test_;
    }
    size_t size() const noexcept {
        return test_.size();
    }
    bool has(size_t i) const;
    /// Throws MissingAssignment.
    const Event &event(size_t i) const;
    const std::map<size_t, Event> &events() const noexcept {
        return events_;
    }
    /// True when every position 1..n has an event.
    bool is_complete() const;

    /// Copy with position i reassigned.
    TestEventAssignment with_event(size_t i, Event e) const;
    /// Copy with the event at every position in K replaced by its complement.
    TestEventAssignment complemented(const IndexSet &k) const;

   private:
    Test test_;
    std::map<size_t, Event> events_;
};

/// Clamps values within tol.prob of [0, 1]; anything further out is an
/// InternalConsistency error.
double checked_probability(double value, const ToleranceConfig &tol);

/// tr(E_k(...E_1(rho)...)), events applied first to last.
double pr_state(const DensityOperator &rho, std::span<const Event> seq, const ToleranceConfig &tol = {});

/// pr_state(rho, given ++ then) / pr_state(rho, given). Throws ConditionOnZero.
double pr_state_cond(const DensityOperator &rho, std::span<const Event> given, std::span<const Event> then,
                     const ToleranceConfig &tol = {});

/// Joint probability of E_1, ..., E_k in the test. k = 0 gives 1.
double pr_test_joint(const TestEventAssignment &a, size_t k, const ToleranceConfig &tol = {});

/// Marginal probability of E_K: complete events are performed at every
/// position up to max K that is not in K.
double pr_test_marginal(const TestEventAssignment &a, const IndexSet &k, const ToleranceConfig &tol = {});

/// pr_test_marginal(K,L) / pr_test_marginal(K). An empty K means no
/// conditioning. Throws BadOrdering unless K < L, ConditionOnZero when the
/// denominator is at most tol.prob.
double pr_test_cond(const TestEventAssignment &a, const IndexSet &k, const IndexSet &l,
                    const ToleranceConfig &tol = {});

/// Right-hand side of the total probability rule in a test:
///   sum_l Pr[E_J, {M_i in A_l}, E_K] * Pr[E_L | E_J, {M_i in A_l}, E_K]
/// for J < i < K < L and a partition {A_l} of spec(M_i). Branches whose
/// weight is at most tol.prob contribute 0.
double pr_test_total(const TestEventAssignment &a, const IndexSet &j, size_t i,
                     const std::vector<std::vector<OutcomeLabel>> &partition, const IndexSet &k,
                     const IndexSet &l, const ToleranceConfig &tol = {});

}  // namespace qlll

#endif
