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
#include "qlll/events.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "qlll/errors.h"

namespace qlll {

Measurement::Measurement(std::string name, std::vector<OutcomeLabel> labels, std::vector<ComplexMatrix> kraus,
                         const ToleranceConfig &tol)
    : name_(std::move(name)), dim_(0), labels_(std::move(labels)), kraus_(std::move(kraus)) {
    if (labels_.empty()) {
        throw Error(ErrorKind::InvalidMeasurement, "measurement '" + name_ + "' has an empty spectrum");
    }
    if (labels_.size() != kraus_.size()) {
        throw Error(ErrorKind::InvalidMeasurement, "measurement '" + name_ + "' has " +
                                                       std::to_string(labels_.size()) + " labels but " +
                                                       std::to_string(kraus_.size()) + " Kraus operators");
    }
    std::set<OutcomeLabel> seen;
    for (const auto &l : labels_) {
        if (l.empty()) {
            throw Error(ErrorKind::InvalidMeasurement, "measurement '" + name_ + "' has an empty outcome label");
        }
        if (!seen.insert(l).second) {
            throw Error(ErrorKind::InvalidMeasurement, "measurement '" + name_ + "' repeats outcome '" + l + "'");
        }
    }
    dim_ = kraus_.front().dim();
    if (dim_ > dimension_cap()) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(dim_) + " exceeds cap " + std::to_string(dimension_cap()));
    }
    for (const auto &k : kraus_) {
        if (k.dim() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "measurement '" + name_ + "' mixes Kraus dimensions");
        }
    }
    const double residual = completeness_residual();
    if (residual > tol.complete) {
        throw Error(ErrorKind::NotComplete,
                    "measurement '" + name_ + "': ||sum M^dagger M - I||_max = " + std::to_string(residual), residual);
    }

    projective_ = std::all_of(kraus_.begin(), kraus_.end(),
                              [&](const ComplexMatrix &k) { return is_orthogonal_projector(k, tol.herm); });
    for (size_t a = 0; projective_ && a < kraus_.size(); ++a) {
        for (size_t b = a + 1; projective_ && b < kraus_.size(); ++b) {
            projective_ = (kraus_[a].eigen() * kraus_[b].eigen()).cwiseAbs().maxCoeff() <= tol.herm;
        }
    }
}

Measurement Measurement::projective(std::string name, std::vector<OutcomeLabel> labels,
                                    std::vector<ComplexMatrix> projectors, const ToleranceConfig &tol) {
    Measurement m(std::move(name), std::move(labels), std::move(projectors), tol);
    if (!m.is_projective()) {
        throw Error(ErrorKind::InvalidMeasurement, "operators of '" + m.name() + "' are not orthogonal projectors");
    }
    return m;
}

std::optional<size_t> Measurement::index_of(const OutcomeLabel &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - labels_.begin());
}

const ComplexMatrix &Measurement::kraus(const OutcomeLabel &label) const {
    auto idx = index_of(label);
    if (!idx) {
        throw Error(ErrorKind::InvalidEvent, "outcome '" + label + "' not in spec(" + name_ + ")");
    }
    return kraus_[*idx];
}

double Measurement::completeness_residual() const {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (const auto &k : kraus_) {
        sum += k.eigen().adjoint() * k.eigen();
    }
    sum -= Eigen::MatrixXcd::Identity(sum.rows(), sum.cols());
    return sum.cwiseAbs().maxCoeff();
}

bool operator==(const Measurement &a, const Measurement &b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.kraus_ == b.kraus_;
}

MeasurementPtr make_measurement(Measurement m) {
    return std::make_shared<const Measurement>(std::move(m));
}

bool same_measurement(const Measurement &a, const Measurement &b) {
    return &a == &b || a == b;
}

SuperOperator::SuperOperator(size_t dim, std::vector<ComplexMatrix> kraus_subset)
    : dim_(dim), kraus_(std::move(kraus_subset)) {
    for (const auto &k : kraus_) {
        if (k.dim() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "super-operator Kraus dimension mismatch");
        }
    }
}

ComplexMatrix SuperOperator::operator()(const ComplexMatrix &rho) const {
    if (rho.dim() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "super-operator on dimension " + std::to_string(dim_) +
                                                      " applied to dimension " + std::to_string(rho.dim()));
    }
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (const auto &k : kraus_) {
        out.noalias() += k.eigen() * rho.eigen() * k.eigen().adjoint();
    }
    return ComplexMatrix(std::move(out));
}

Event::Event(MeasurementPtr measurement, std::vector<OutcomeLabel> outcomes)
    : measurement_(std::move(measurement)), outcomes_(std::move(outcomes)) {
    if (!measurement_) {
        throw Error(ErrorKind::InvalidEvent, "event without a measurement");
    }
    std::sort(outcomes_.begin(), outcomes_.end());
    outcomes_.erase(std::unique(outcomes_.begin(), outcomes_.end()), outcomes_.end());
    for (const auto &o : outcomes_) {
        if (!measurement_->index_of(o)) {
            throw Error(ErrorKind::InvalidEvent, "outcome '" + o + "' not in spec(" + measurement_->name() + ")");
        }
    }
}

Event Event::singleton(MeasurementPtr measurement, const OutcomeLabel &label) {
    return Event(std::move(measurement), {label});
}

Event Event::complete(MeasurementPtr measurement) {
    auto labels = measurement->labels();
    return Event(std::move(measurement), std::move(labels));
}

Event Event::empty(MeasurementPtr measurement) {
    return Event(std::move(measurement), {});
}

bool Event::contains(const OutcomeLabel &label) const {
    return std::binary_search(outcomes_.begin(), outcomes_.end(), label);
}

bool operator==(const Event &a, const Event &b) {
    return same_measurement(*a.measurement_, *b.measurement_) && a.outcomes_ == b.outcomes_;
}

SuperOperator super_operator_of(const Event &e) {
    std::vector<ComplexMatrix> ks;
    ks.reserve(e.outcomes().size());
    // Spectrum order, not label order, so the summation order is fixed by the
    // measurement alone.
    const auto &m = *e.measurement();
    for (size_t idx = 0; idx < m.size(); ++idx) {
        if (e.contains(m.labels()[idx])) {
            ks.push_back(m.kraus()[idx]);
        }
    }
    return SuperOperator(m.dim(), std::move(ks));
}

Event complement(const Event &e) {
    std::vector<OutcomeLabel> rest;
    for (const auto &l : e.measurement()->labels()) {
        if (!e.contains(l)) {
            rest.push_back(l);
        }
    }
    return Event(e.measurement(), std::move(rest));
}

Event event_union(const Event &a, const Event &b) {
    if (!same_measurement(*a.measurement(), *b.measurement())) {
        throw Error(ErrorKind::DifferentMeasurements, "union of events defined by '" + a.measurement()->name() +
                                                          "' and '" + b.measurement()->name() + "'");
    }
    std::vector<OutcomeLabel> all = a.outcomes();
    all.insert(all.end(), b.outcomes().begin(), b.outcomes().end());
    return Event(a.measurement(), std::move(all));
}

DensityOperator apply(const SuperOperator &s, const DensityOperator &rho, const ToleranceConfig &tol) {
    return validate_density(s(rho.matrix()), DensityKind::Partial, tol);
}

Event resolve(const IndexedEvent &e, std::span<const MeasurementPtr> measurements) {
    if (e.measurement_index < 1 || e.measurement_index > measurements.size()) {
        throw Error(ErrorKind::InvalidEvent, "measurement index " + std::to_string(e.measurement_index) +
                                                 " out of range 1.." + std::to_string(measurements.size()));
    }
    const auto &m = measurements[e.measurement_index - 1];
    if (e.complete) {
        return Event::complete(m);
    }
    return Event(m, e.outcomes);
}

namespace {

class EventParser {
   public:
    explicit EventParser(std::string_view text) : text_(text) {
    }

    IndexedEvent parse() {
        skip_ws();
        IndexedEvent ev;
        if (consume_word("full")) {
            expect('(');
            ev.measurement_index = parse_measurement_ref();
            expect(')');
            ev.complete = true;
        } else if (consume_word("empty")) {
            expect('(');
            ev.measurement_index = parse_measurement_ref();
            expect(')');
        } else {
            ev.measurement_index = parse_measurement_ref();
            skip_ws();
            if (peek() == '=') {
                ++pos_;
                ev.outcomes.push_back(parse_label());
            } else if (consume_word("in")) {
                expect('{');
                skip_ws();
                if (peek() != '}') {
                    ev.outcomes.push_back(parse_label());
                    skip_ws();
                    while (peek() == ',') {
                        ++pos_;
                        ev.outcomes.push_back(parse_label());
                        skip_ws();
                    }
                }
                expect('}');
            } else {
                fail("expected '=' or 'in'");
            }
        }
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return ev;
    }

   private:
    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) {
            return false;
        }
        size_t after = pos_ + w.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
            return false;
        }
        pos_ = after;
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    size_t parse_measurement_ref() {
        skip_ws();
        if (peek() != 'M') {
            fail("expected measurement reference M<i>");
        }
        ++pos_;
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected measurement number after 'M'");
        }
        size_t v = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (v == 0) {
            fail("measurement numbers start at 1");
        }
        return v;
    }

    OutcomeLabel parse_label() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '}' || c == '{' || c == ';' ||
                c == '(' || c == ')' || c == '=') {
                break;
            }
            ++pos_;
        }
        if (start == pos_) {
            fail("expected outcome label");
        }
        return OutcomeLabel(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw Error(ErrorKind::ParseError, "event '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                               ": " + why);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

IndexedEvent parse_event(std::string_view text) {
    return EventParser(text).parse();
}

std::vector<IndexedEvent> parse_event_sequence(std::string_view text) {
    std::vector<IndexedEvent> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view part = text.substr(start, end - start);
        if (part.find_first_not_of(" \t\n\r") != std::string_view::npos) {
            out.push_back(parse_event(part));
        } else if (end != text.size() || !out.empty()) {
            throw Error(ErrorKind::ParseError, "empty event in sequence '" + std::string(text) + "'");
        }
        start = end + 1;
    }
    return out;
}

std::string format_event(const IndexedEvent &e) {
    const std::string ref = "M" + std::to_string(e.measurement_index);
    if (e.complete) {
        return "full(" + ref + ")";
    }
    std::string out = ref + " in {";
    for (size_t i = 0; i < e.outcomes.size(); ++i) {
        out += (i ? "," : "") + e.outcomes[i];
    }
    return out + "}";
}

}  // namespace qlll
