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
#include "qlll/probability.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "qlll/errors.h"

namespace qlll {

Test::Test(DensityOperator rho, std::vector<MeasurementPtr> measurements)
    : rho_(std::move(rho)), measurements_(std::move(measurements)) {
    if (rho_.kind() != DensityKind::Full) {
        throw Error(ErrorKind::BadTrace, "a test starts from a full density operator");
    }
    if (measurements_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "a test needs at least one measurement");
    }
    for (size_t i = 0; i < measurements_.size(); ++i) {
        if (!measurements_[i]) {
            throw Error(ErrorKind::InvalidArgument, "null measurement at position " + std::to_string(i + 1));
        }
        if (measurements_[i]->dim() != rho_.dim()) {
            throw Error(ErrorKind::DimensionMismatch, "measurement " + std::to_string(i + 1) + " acts on dimension " +
                                                          std::to_string(measurements_[i]->dim()) + ", state has " +
                                                          std::to_string(rho_.dim()));
        }
    }
}

const MeasurementPtr &Test::measurement(size_t i) const {
    if (i < 1 || i > measurements_.size()) {
        throw Error(ErrorKind::InvalidArgument, "measurement position " + std::to_string(i) + " out of range");
    }
    return measurements_[i - 1];
}

IndexSet::IndexSet(std::initializer_list<size_t> indices) : IndexSet(std::vector<size_t>(indices)) {
}

IndexSet::IndexSet(std::vector<size_t> indices) : indices_(std::move(indices)) {
    for (size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] == 0) {
            throw Error(ErrorKind::InvalidIndexSet, "indices are 1-based");
        }
        if (k > 0 && indices_[k] <= indices_[k - 1]) {
            throw Error(ErrorKind::InvalidIndexSet, "indices must be strictly increasing");
        }
    }
}

IndexSet IndexSet::prefix(size_t k) {
    return range(1, k);
}

IndexSet IndexSet::range(size_t lo, size_t hi) {
    std::vector<size_t> v;
    for (size_t i = lo; i <= hi; ++i) {
        v.push_back(i);
    }
    return IndexSet(std::move(v));
}

size_t IndexSet::min() const {
    if (indices_.empty()) {
        throw Error(ErrorKind::InvalidIndexSet, "min of an empty index set");
    }
    return indices_.front();
}

bool IndexSet::contains(size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::is_initial_segment() const {
    return indices_.empty() || indices_.back() == indices_.size();
}

bool IndexSet::is_subsequence_of(const IndexSet &other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

IndexSet IndexSet::without(const IndexSet &other) const {
    std::vector<size_t> out;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet IndexSet::merged(const IndexSet &other) const {
    std::vector<size_t> out;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
}

bool precedes(const IndexSet &k, const IndexSet &l) {
    return k.empty() || l.empty() || k.max() < l.min();
}

IndexSet concat(const IndexSet &k, const IndexSet &l) {
    if (!precedes(k, l)) {
        throw Error(ErrorKind::BadOrdering, "expected " + to_string(k) + " < " + to_string(l));
    }
    return k.merged(l);
}

std::string to_string(const IndexSet &k) {
    std::string out = "{";
    for (size_t i = 0; i < k.size(); ++i) {
        out += (i ? "," : "") + std::to_string(k.indices()[i]);
    }
    return out + "}";
}

IndexSet parse_index_set(std::string_view text) {
    std::vector<size_t> v;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    };
    skip();
    if (pos == text.size()) {
        return {};
    }
    while (true) {
        skip();
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos) {
            throw Error(ErrorKind::ParseError, "bad index list '" + std::string(text) + "'");
        }
        v.push_back(value);
        pos = static_cast<size_t>(ptr - text.data());
        skip();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw Error(ErrorKind::ParseError, "bad index list '" + std::string(text) + "'");
        }
        ++pos;
    }
    try {
        return IndexSet(std::move(v));
    } catch (const Error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

TestEventAssignment::TestEventAssignment(Test test) : test_(std::move(test)) {
}

TestEventAssignment::TestEventAssignment(Test test, std::map<size_t, Event> events)
    : test_(std::move(test)), events_(std::move(events)) {
    for (const auto &[i, e] : events_) {
        const auto &m = test_.measurement(i);
        if (!same_measurement(*m, *e.measurement())) {
            throw Error(ErrorKind::InvalidEvent, "event at position " + std::to_string(i) + " is defined by '" +
                                                     e.measurement()->name() + "', not by '" + m->name() + "'");
        }
    }
}

namespace {

std::map<size_t, Event> number_events(const std::vector<Event> &events) {
    std::map<size_t, Event> out;
    for (size_t k = 0; k < events.size(); ++k) {
        out.emplace(k + 1, events[k]);
    }
    return out;
}

}  // namespace

TestEventAssignment::TestEventAssignment(Test test, const std::vector<Event> &events)
    : TestEventAssignment(std::move(test), number_events(events)) {
}

bool TestEventAssignment::has(size_t i) const {
    return events_.count(i) != 0;
}

const Event &TestEventAssignment::event(size_t i) const {
    auto it = events_.find(i);
    if (it == events_.end()) {
        throw Error(ErrorKind::MissingAssignment, "no event assigned at position " + std::to_string(i),
                    std::nullopt, i);
    }
    return it->second;
}

bool TestEventAssignment::is_complete() const {
    for (size_t i = 1; i <= size(); ++i) {
        if (!has(i)) {
            return false;
        }
    }
    return true;
}

TestEventAssignment TestEventAssignment::with_event(size_t i, Event e) const {
    auto events = events_;
    events.insert_or_assign(i, std::move(e));
    return TestEventAssignment(test_, std::move(events));
}

TestEventAssignment TestEventAssignment::complemented(const IndexSet &k) const {
    auto events = events_;
    for (size_t i : k) {
        events.insert_or_assign(i, complement(event(i)));
    }
    return TestEventAssignment(test_, std::move(events));
}

double checked_probability(double value, const ToleranceConfig &tol) {
    if (!(value >= -tol.prob && value <= 1.0 + tol.prob)) {
        throw Error(ErrorKind::InternalConsistency, "probability " + std::to_string(value) + " outside [0, 1]",
                    value);
    }
    return std::clamp(value, 0.0, 1.0);
}

namespace {

/// The unnormalized state after the super-operators of seq, in order.
ComplexMatrix evolve(const ComplexMatrix &rho, std::span<const Event> seq) {
    ComplexMatrix cur = rho;
    for (const auto &e : seq) {
        if (e.dim() != rho.dim()) {
            throw Error(ErrorKind::DimensionMismatch, "event on '" + e.measurement()->name() + "' has dimension " +
                                                          std::to_string(e.dim()) + ", state has " +
                                                          std::to_string(rho.dim()));
        }
        cur = super_operator_of(e)(cur);
    }
    return cur;
}

/// E'_1..E'_{max K}: E_i at i in K, the complete event elsewhere.
EventSequence padded_sequence(const TestEventAssignment &a, const IndexSet &k) {
    if (k.max() > a.size()) {
        throw Error(ErrorKind::InvalidIndexSet,
                    "index " + std::to_string(k.max()) + " beyond test length " + std::to_string(a.size()));
    }
    EventSequence seq;
    seq.reserve(k.max());
    for (size_t i = 1; i <= k.max(); ++i) {
        if (k.contains(i)) {
            seq.push_back(a.event(i));
        } else {
            seq.push_back(Event::complete(a.test().measurement(i)));
        }
    }
    return seq;
}

}  // namespace

double pr_state(const DensityOperator &rho, std::span<const Event> seq, const ToleranceConfig &tol) {
    return checked_probability(trace(evolve(rho.matrix(), seq)).real(), tol);
}

double pr_state_cond(const DensityOperator &rho, std::span<const Event> given, std::span<const Event> then,
                     const ToleranceConfig &tol) {
    const ComplexMatrix after_given = evolve(rho.matrix(), given);
    const double denom = checked_probability(trace(after_given).real(), tol);
    if (denom <= tol.prob) {
        throw Error(ErrorKind::ConditionOnZero, "conditioning sequence has probability " + std::to_string(denom),
                    denom);
    }
    const double num = checked_probability(trace(evolve(after_given, then)).real(), tol);
    return checked_probability(num / denom, tol);
}

double pr_test_joint(const TestEventAssignment &a, size_t k, const ToleranceConfig &tol) {
    if (k > a.size()) {
        throw Error(ErrorKind::InvalidIndexSet, "prefix " + std::to_string(k) + " beyond test length");
    }
    EventSequence seq;
    for (size_t i = 1; i <= k; ++i) {
        seq.push_back(a.event(i));
    }
    return pr_state(a.test().rho(), seq, tol);
}

double pr_test_marginal(const TestEventAssignment &a, const IndexSet &k, const ToleranceConfig &tol) {
    const EventSequence seq = padded_sequence(a, k);
    return pr_state(a.test().rho(), seq, tol);
}

double pr_test_cond(const TestEventAssignment &a, const IndexSet &k, const IndexSet &l,
                    const ToleranceConfig &tol) {
    const IndexSet kl = concat(k, l);
    const double denom = pr_test_marginal(a, k, tol);
    if (denom <= tol.prob) {
        throw Error(ErrorKind::ConditionOnZero,
                    "Pr[E_" + to_string(k) + "] = " + std::to_string(denom) + " is not above tolerance", denom);
    }
    return checked_probability(pr_test_marginal(a, kl, tol) / denom, tol);
}

double pr_test_total(const TestEventAssignment &a, const IndexSet &j, size_t i,
                     const std::vector<std::vector<OutcomeLabel>> &partition, const IndexSet &k,
                     const IndexSet &l, const ToleranceConfig &tol) {
    const IndexSet single{i};
    if (!precedes(j, single) || !precedes(single, k) || !precedes(k, l) || !precedes(j, k) || !precedes(j, l) ||
        !precedes(single, l)) {
        throw Error(ErrorKind::BadOrdering, "total probability needs J < i < K < L");
    }
    const auto &m = a.test().measurement(i);
    std::vector<OutcomeLabel> covered;
    for (const auto &part : partition) {
        covered.insert(covered.end(), part.begin(), part.end());
    }
    std::sort(covered.begin(), covered.end());
    auto spectrum = m->labels();
    std::sort(spectrum.begin(), spectrum.end());
    if (covered != spectrum) {
        throw Error(ErrorKind::InvalidArgument, "blocks do not partition spec(" + m->name() + ")");
    }

    const IndexSet head = j.merged(single).merged(k);
    double total = 0.0;
    for (const auto &part : partition) {
        const TestEventAssignment branch = a.with_event(i, Event(m, part));
        const double weight = pr_test_marginal(branch, head, tol);
        if (weight <= tol.prob) {
            continue;
        }
        total += weight * pr_test_cond(branch, head, l, tol);
    }
    return checked_probability(total, tol);
}

}  // namespace qlll
