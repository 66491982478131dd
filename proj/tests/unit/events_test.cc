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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "error_matchers.h"
#include "qlll/instance_gen.h"
#include "qlll/random.h"

namespace qlll {
namespace {

const MeasurementPtr kM1 = computational_basis_measurement("M1");
const MeasurementPtr kM2 = hadamard_basis_measurement("M2");

ComplexMatrix ket_projector(std::initializer_list<Complex> v) {
    const std::vector<Complex> ket(v);
    return ComplexMatrix::projector(ket);
}

TEST(Measurement, RejectsIncompleteFamily) {
    const ComplexMatrix p0 = ket_projector({1.0, 0.0});
    EXPECT_QLLL_ERROR(Measurement("bad", {"0"}, {p0}), ErrorKind::NotComplete);
}

TEST(Measurement, RejectsBadSpectra) {
    const ComplexMatrix p0 = ket_projector({1.0, 0.0});
    const ComplexMatrix p1 = ket_projector({0.0, 1.0});
    EXPECT_QLLL_ERROR(Measurement("m", {}, {}), ErrorKind::InvalidMeasurement);
    EXPECT_QLLL_ERROR(Measurement("m", {"a", "a"}, {p0, p1}), ErrorKind::InvalidMeasurement);
    EXPECT_QLLL_ERROR(Measurement("m", {"", "b"}, {p0, p1}), ErrorKind::InvalidMeasurement);
    EXPECT_QLLL_ERROR(Measurement("m", {"a"}, {p0, p1}), ErrorKind::InvalidMeasurement);
    EXPECT_QLLL_ERROR(Measurement("m", {"a", "b"}, {p0, ComplexMatrix::identity(3)}), ErrorKind::DimensionMismatch);
}

TEST(Measurement, ProjectiveTag) {
    EXPECT_TRUE(kM1->is_projective());
    EXPECT_TRUE(kM2->is_projective());
    // Trine-like POVM: sqrt(1/2) I twice is complete but not projective.
    const ComplexMatrix half = std::sqrt(0.5) * ComplexMatrix::identity(2);
    const Measurement povm("povm", {"a", "b"}, {half, half});
    EXPECT_FALSE(povm.is_projective());
    EXPECT_LE(povm.completeness_residual(), 1e-12);
}

TEST(Measurement, ProjectiveFactoryRejectsNonProjectors) {
    const ComplexMatrix half = std::sqrt(0.5) * ComplexMatrix::identity(2);
    EXPECT_ANY_THROW(Measurement::projective("bad", {"a", "b"}, {half, half}));
}

TEST(SuperOperator, EmptyEventIsNull) {
    const SuperOperator s = super_operator_of(Event::empty(kM2));
    EXPECT_TRUE(s.is_null());
    EXPECT_EQ(apply(s, plus_state()).matrix(), ComplexMatrix::zero(2));
    EXPECT_EQ(apply(s, zero_state()).matrix(), ComplexMatrix::zero(2));
}

TEST(SuperOperator, CompleteComputationalOnZeroState) {
    const DensityOperator out = apply(super_operator_of(Event::complete(kM1)), zero_state());
    EXPECT_LE(out.matrix().max_abs_diff(zero_state().matrix()), 1e-15);
}

TEST(SuperOperator, CompleteHadamardOnZeroStateIsMaximallyMixed) {
    const DensityOperator out = apply(super_operator_of(Event::complete(kM2)), zero_state());
    EXPECT_LE(out.matrix().max_abs_diff(0.5 * ComplexMatrix::identity(2)), 1e-15);
}

TEST(SuperOperator, ProjectiveEventOnPlus) {
    // |0><0| (1/2)[[1,1],[1,1]] |0><0| = (1/2)|0><0|.
    const DensityOperator out = apply(super_operator_of(Event::singleton(kM1, "0")), plus_state());
    const ComplexMatrix want{{0.5, 0.0}, {0.0, 0.0}};
    EXPECT_LE(out.matrix().max_abs_diff(want), 1e-15);
    EXPECT_EQ(out.kind(), DensityKind::Partial);
}

TEST(SuperOperator, Linearity) {
    std::mt19937_64 rng(3);
    const SuperOperator s = super_operator_of(Event::singleton(kM2, "1"));
    for (int k = 0; k < 20; ++k) {
        const ComplexMatrix r1 = random_density_matrix(2, rng);
        const ComplexMatrix r2 = random_density_matrix(2, rng);
        const double p = uniform01(rng);
        const ComplexMatrix mix = p * r1 + (1.0 - p) * r2;
        EXPECT_LE(s(mix).max_abs_diff(p * s(r1) + (1.0 - p) * s(r2)), 1e-14);
    }
}

TEST(SuperOperator, RejectsDimensionMismatch) {
    const DensityOperator rho4 = validate_density(0.25 * ComplexMatrix::identity(4), DensityKind::Full);
    EXPECT_QLLL_ERROR(apply(super_operator_of(Event::complete(kM1)), rho4), ErrorKind::DimensionMismatch);
}

TEST(EventAlgebra, Complement) {
    EXPECT_EQ(complement(Event::empty(kM1)), Event::complete(kM1));
    EXPECT_EQ(complement(Event::singleton(kM1, "0")), Event::singleton(kM1, "1"));
    const Event e(kM2, {"1"});
    EXPECT_EQ(complement(complement(e)), e);
}

TEST(EventAlgebra, Union) {
    EXPECT_EQ(event_union(Event::singleton(kM1, "0"), Event::singleton(kM1, "1")), Event::complete(kM1));
    const Event e = Event::singleton(kM1, "1");
    EXPECT_EQ(event_union(e, Event::empty(kM1)), e);
    EXPECT_QLLL_ERROR(event_union(e, Event::singleton(kM2, "0")), ErrorKind::DifferentMeasurements);
}

TEST(EventAlgebra, OutcomesCanonicallySorted) {
    const MeasurementPtr m = make_measurement(Measurement::projective(
        "M", {"z", "a", "k"},
        {ket_projector({1.0, 0.0, 0.0}), ket_projector({0.0, 1.0, 0.0}), ket_projector({0.0, 0.0, 1.0})}));
    EXPECT_EQ(Event(m, {"z", "a"}), Event(m, {"a", "z"}));
    EXPECT_QLLL_ERROR(Event(m, {"q"}), ErrorKind::InvalidEvent);
}

// Random measurements for the algebraic invariants.
std::vector<MeasurementPtr> random_measurements(std::mt19937_64 &rng) {
    std::vector<MeasurementPtr> out;
    for (size_t dim = 2; dim <= 4; ++dim) {
        const ComplexMatrix u = random_unitary(dim, rng);
        std::vector<ComplexMatrix> projectors;
        std::vector<OutcomeLabel> labels;
        for (size_t c = 0; c < dim; ++c) {
            std::vector<Complex> col(dim);
            for (size_t r = 0; r < dim; ++r) {
                col[r] = u(r, c);
            }
            projectors.push_back(ComplexMatrix::projector(col));
            labels.push_back(std::to_string(c));
        }
        out.push_back(make_measurement(Measurement::projective("U" + std::to_string(dim), labels, projectors)));
    }
    return out;
}

TEST(EventInvariants, EventPlusComplementIsComplete) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        for (const auto &m : random_measurements(rng)) {
            std::vector<OutcomeLabel> subset;
            for (const auto &l : m->labels()) {
                if (rng() % 2 == 0) {
                    subset.push_back(l);
                }
            }
            const Event e(m, subset);
            const ComplexMatrix rho = random_density_matrix(m->dim(), rng);
            const ComplexMatrix sum = super_operator_of(e)(rho) + super_operator_of(complement(e))(rho);
            EXPECT_LE(sum.max_abs_diff(super_operator_of(Event::complete(m))(rho)), 1e-10);
            EXPECT_LE(trace(super_operator_of(e)(rho)).real(), 1.0 + ToleranceConfig{}.trace);
        }
    }
}

TEST(EventInvariants, DisjointUnionSuperOperatorIsSum) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 20; ++round) {
        for (const auto &m : random_measurements(rng)) {
            std::vector<OutcomeLabel> a, b;
            for (const auto &l : m->labels()) {
                (rng() % 2 == 0 ? a : b).push_back(l);
            }
            const Event e1(m, a), e2(m, b);
            const ComplexMatrix rho = random_density_matrix(m->dim(), rng);
            EXPECT_LE((super_operator_of(e1)(rho) + super_operator_of(e2)(rho))
                          .max_abs_diff(super_operator_of(event_union(e1, e2))(rho)),
                      1e-12);
        }
    }
}

TEST(EventSyntax, ParsesAllForms) {
    EXPECT_EQ(parse_event("M2=a"), (IndexedEvent{2, {"a"}, false}));
    EXPECT_EQ(parse_event(" M3 in {b, a} "), (IndexedEvent{3, {"b", "a"}, false}));
    EXPECT_EQ(parse_event("full(M1)"), (IndexedEvent{1, {}, true}));
    EXPECT_EQ(parse_event("empty(M4)"), (IndexedEvent{4, {}, false}));
    EXPECT_EQ(parse_event_sequence("M1=1;M2=0").size(), 2u);
    EXPECT_TRUE(parse_event_sequence("  ").empty());
}

TEST(EventSyntax, RejectsGarbage) {
    for (const char *bad : {"", "M=1", "M0=1", "X1=1", "M1 in {", "M1 in a", "full(M)", "M1=", "M1==1"}) {
        SCOPED_TRACE(bad);
        EXPECT_QLLL_ERROR(parse_event(bad), ErrorKind::ParseError);
    }
}

TEST(EventSyntax, FormatRoundTrips) {
    for (const char *text : {"M2=a", "M3 in {a,b}", "full(M1)", "empty(M4)"}) {
        const IndexedEvent e = parse_event(text);
        EXPECT_EQ(parse_event(format_event(e)), e) << text;
    }
}

TEST(EventSyntax, ResolveChecksRangeAndLabels) {
    const std::vector<MeasurementPtr> ms{kM1, kM2};
    EXPECT_EQ(resolve(parse_event("full(M2)"), ms), Event::complete(kM2));
    EXPECT_EQ(resolve(parse_event("M1 in {1}"), ms), Event::singleton(kM1, "1"));
    EXPECT_QLLL_ERROR(resolve(parse_event("M3=0"), ms), ErrorKind::InvalidEvent);
    EXPECT_QLLL_ERROR(resolve(parse_event("M1=7"), ms), ErrorKind::InvalidEvent);
}

}  // namespace
}  // namespace qlll
