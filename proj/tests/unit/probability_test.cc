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

#include <gtest/gtest.h>

#include "error_matchers.h"
#include "oracles.h"
#include "qlll/instance_gen.h"
#include "random_cases.h"

namespace qlll {
namespace {

using testing::naive_marginal;
using testing::naive_state;

const MeasurementPtr kM1 = computational_basis_measurement("M1");
const MeasurementPtr kM2 = hadamard_basis_measurement("M2");
const MeasurementPtr kM3 = computational_basis_measurement("M3");

Event eq(const MeasurementPtr &m, const char *label) {
    return Event::singleton(m, label);
}

// (|+><+|; M1, M2) with E_1 = I_{M1}, E_2 = {M2 = 0}.
TestEventAssignment plus_two_step() {
    return TestEventAssignment(qlll::Test(plus_state(), {kM1, kM2}),
                               std::vector<Event>{Event::complete(kM1), eq(kM2, "0")});
}

TEST(PrState, MeasureZThenX) {
    const EventSequence seq{eq(kM1, "1"), eq(kM2, "0")};
    EXPECT_NEAR(pr_state(plus_state(), seq), 0.25, 1e-12);
    EXPECT_NEAR(naive_state(plus_state(), seq), 0.25, 1e-12);
}

TEST(PrState, ReversedOrderDiffers) {
    // {M2=0} leaves |+> unchanged; {M1=1} then has probability 1/2.
    const EventSequence seq{eq(kM2, "0"), eq(kM1, "1")};
    EXPECT_NEAR(pr_state(plus_state(), seq), 0.5, 1e-12);
    EXPECT_NEAR(naive_state(plus_state(), seq), 0.5, 1e-12);
    // The zero belongs to the other outcome of M2.
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{eq(kM2, "1"), eq(kM1, "1")}), 0.0, 1e-12);
}

TEST(PrState, EmptyEventAnywhereGivesZero) {
    const EventSequence seq{eq(kM1, "1"), Event::empty(kM2), eq(kM1, "1")};
    EXPECT_EQ(pr_state(plus_state(), seq), 0.0);
    EXPECT_EQ(pr_state(zero_state(), EventSequence{Event::empty(kM1)}), 0.0);
}

TEST(PrState, EmptySequenceIsOne) {
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{}), 1.0, 1e-15);
}

TEST(PrState, RejectsDimensionMismatch) {
    const DensityOperator rho4 = validate_density(0.25 * ComplexMatrix::identity(4), DensityKind::Full);
    EXPECT_QLLL_ERROR(pr_state(rho4, EventSequence{eq(kM1, "0")}), ErrorKind::DimensionMismatch);
}

TEST(PrState, MiddleCompleteEventMatters) {
    // Negative control: inserting I_{M1} before {M2=0} changes the value.
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{Event::complete(kM1), eq(kM2, "0")}), 0.5, 1e-12);
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{eq(kM2, "0")}), 1.0, 1e-12);
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{Event::complete(kM1), eq(kM2, "1")}), 0.5, 1e-12);
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{eq(kM2, "1")}), 0.0, 1e-12);
}

TEST(PrState, TotalProbabilityFailsInAState) {
    const Event e1 = eq(kM1, "0"), e2 = eq(kM2, "0"), e3 = eq(kM3, "1");
    const auto &rho = plus_state();
    EXPECT_NEAR(pr_state(rho, EventSequence{e1, e3}), 0.0, 1e-12);
    EXPECT_NEAR(pr_state(rho, EventSequence{e1, e2, e3}) + pr_state(rho, EventSequence{e1, complement(e2), e3}), 0.25,
                1e-12);
}

TEST(PrStateCond, ConditioningExamples) {
    const Event e1 = eq(kM1, "0"), e2 = eq(kM2, "0"), e3 = eq(kM3, "1");
    EXPECT_NEAR(pr_state_cond(plus_state(), EventSequence{e1}, EventSequence{e2, e3}), 0.25, 1e-12);
    EXPECT_NEAR(pr_state_cond(plus_state(), EventSequence{e1}, EventSequence{e3}), 0.0, 1e-12);
}

TEST(PrStateCond, HeadMonotonicityFails) {
    // Negative control: a longer condition is not a smaller value. With
    // E = {M1=0}, F = {M2=0}, G = {M3=1}: Pr[F,G|E] = 1/4 > 0 = Pr[G|E].
    const Event e1 = eq(kM1, "0"), e2 = eq(kM2, "0"), e3 = eq(kM3, "1");
    EXPECT_GT(pr_state_cond(plus_state(), EventSequence{e1}, EventSequence{e2, e3}),
              pr_state_cond(plus_state(), EventSequence{e1}, EventSequence{e3}) + 0.2);
}

TEST(PrStateCond, RepeatedProjectiveIsCertain) {
    for (const char *label : {"0", "1"}) {
        const EventSequence e{eq(kM2, label)};
        const DensityOperator rho = validate_density(ComplexMatrix{{0.7, 0.2}, {0.2, 0.3}}, DensityKind::Full);
        EXPECT_NEAR(pr_state_cond(rho, e, e), 1.0, 1e-12);
    }
}

TEST(PrStateCond, ZeroConditionThrows) {
    EXPECT_QLLL_ERROR(pr_state_cond(zero_state(), EventSequence{eq(kM1, "1")}, EventSequence{eq(kM2, "0")}),
                      ErrorKind::ConditionOnZero);
}

TEST(IndexSet, ValidationAndOps) {
    EXPECT_QLLL_ERROR((IndexSet{2, 1}), ErrorKind::InvalidIndexSet);
    EXPECT_QLLL_ERROR((IndexSet{0}), ErrorKind::InvalidIndexSet);
    EXPECT_QLLL_ERROR((IndexSet{1, 1}), ErrorKind::InvalidIndexSet);
    const IndexSet k{1, 3, 4};
    EXPECT_EQ(k.max(), 4u);
    EXPECT_EQ(k.min(), 1u);
    EXPECT_FALSE(k.is_initial_segment());
    EXPECT_TRUE(IndexSet::prefix(3).is_initial_segment());
    EXPECT_TRUE(IndexSet{}.is_initial_segment());
    EXPECT_EQ(k.without(IndexSet{3}), (IndexSet{1, 4}));
    EXPECT_EQ(k.merged(IndexSet{2}), IndexSet::range(1, 4));
    EXPECT_TRUE((IndexSet{1, 4}).is_subsequence_of(k));
    EXPECT_TRUE(precedes(IndexSet{1, 2}, IndexSet{3}));
    EXPECT_FALSE(precedes(IndexSet{1, 3}, IndexSet{2}));
    EXPECT_QLLL_ERROR(concat(IndexSet{3}, IndexSet{2}), ErrorKind::BadOrdering);
    EXPECT_EQ(parse_index_set("1,3,4"), k);
    EXPECT_EQ(to_string(k), "{1,3,4}");
    EXPECT_TRUE(parse_index_set("").empty());
    EXPECT_QLLL_ERROR(parse_index_set("1,x"), ErrorKind::ParseError);
}

TEST(Assignment, RejectsForeignMeasurement) {
    const qlll::Test t(plus_state(), {kM1, kM2});
    EXPECT_QLLL_ERROR(TestEventAssignment(t, std::map<size_t, Event>{{1, eq(kM2, "0")}}), ErrorKind::InvalidEvent);
    EXPECT_QLLL_ERROR(TestEventAssignment(t, std::map<size_t, Event>{{3, eq(kM1, "0")}}), ErrorKind::InvalidArgument);
    const TestEventAssignment partial(t, std::map<size_t, Event>{{2, eq(kM2, "0")}});
    EXPECT_QLLL_ERROR(pr_test_joint(partial, 2), ErrorKind::MissingAssignment);
    EXPECT_NEAR(pr_test_marginal(partial, IndexSet{2}), 0.5, 1e-12);
}

TEST(PrTestJoint, EmptyPrefixAndPaddedExample) {
    const auto a = plus_two_step();
    EXPECT_EQ(pr_test_joint(a, 0), 1.0);
    EXPECT_NEAR(pr_test_joint(a, 2), 0.5, 1e-12);
}

TEST(PrTestJoint, TensorProductFactorizes) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::TensorProduct;
    spec.n = 3;
    spec.local_dim = 2;
    spec.seed = 21;
    const auto a = generate(spec);
    double product = 1.0;
    for (size_t i = 1; i <= a.size(); ++i) {
        product *= pr_test_marginal(a, IndexSet{i});
    }
    EXPECT_NEAR(pr_test_joint(a, a.size()), product, 1e-10);
    EXPECT_NEAR(pr_test_joint(a, a.size()), naive_marginal(a, IndexSet::prefix(a.size())), 1e-10);
}

TEST(PrTestMarginal, PaddingChangesTheValue) {
    const auto a = plus_two_step();
    EXPECT_NEAR(pr_test_marginal(a, IndexSet{2}), 0.5, 1e-12);
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{eq(kM2, "0")}), 1.0, 1e-12);
    const auto b = a.with_event(2, eq(kM2, "1"));
    EXPECT_NEAR(pr_test_marginal(b, IndexSet{2}), 0.5, 1e-12);
    EXPECT_NEAR(pr_state(plus_state(), EventSequence{eq(kM2, "1")}), 0.0, 1e-12);
}

TEST(PrTestMarginal, InitialSegmentEqualsJoint) {
    for (uint64_t s = 0; s < 50; ++s) {
        const auto a = testing::random_case(s);
        for (size_t k = 0; k <= a.size(); ++k) {
            EXPECT_NEAR(pr_test_marginal(a, IndexSet::prefix(k)), pr_test_joint(a, k), 1e-12);
        }
    }
}

TEST(PrTestCond, OrderingAndZero) {
    const auto a = plus_two_step();
    EXPECT_QLLL_ERROR(pr_test_cond(a, IndexSet{2}, IndexSet{1}), ErrorKind::BadOrdering);
    EXPECT_QLLL_ERROR(pr_test_cond(a, IndexSet{2}, IndexSet{2}), ErrorKind::BadOrdering);
    const auto z = TestEventAssignment(qlll::Test(zero_state(), {kM1, kM2}), std::vector<Event>{eq(kM1, "1"), eq(kM2, "0")});
    EXPECT_QLLL_ERROR(pr_test_cond(z, IndexSet{1}, IndexSet{2}), ErrorKind::ConditionOnZero);
}

TEST(PrTestCond, CompletePrefixGivesMarginal) {
    const auto a = plus_two_step();
    EXPECT_NEAR(pr_test_cond(a, IndexSet{1}, IndexSet{2}), pr_test_marginal(a, IndexSet{2}), 1e-12);
    EXPECT_NEAR(pr_test_cond(a, IndexSet{}, IndexSet{2}), pr_test_marginal(a, IndexSet{2}), 1e-12);
}

TEST(PrTestCond, RepeatedProjectiveMeasurement) {
    const qlll::Test t(plus_state(), {kM1, kM2, kM2});
    const auto a = TestEventAssignment(t, std::vector<Event>{eq(kM1, "1"), eq(kM2, "1"), eq(kM2, "1")});
    EXPECT_NEAR(pr_test_cond(a, IndexSet{2}, IndexSet{3}), 1.0, 1e-12);
}

TEST(PrTestTotal, ZeroWeightBranchesContributeNothing) {
    // rho = |0><0|, M1 computational: the branch {M1=1} has weight 0.
    const qlll::Test t(zero_state(), {kM1, kM2});
    const auto a = TestEventAssignment(t, std::vector<Event>{eq(kM1, "0"), eq(kM2, "0")});
    const double total = pr_test_total(a, IndexSet{}, 1, {{"0"}, {"1"}}, IndexSet{}, IndexSet{2});
    EXPECT_NEAR(total, pr_test_marginal(a, IndexSet{2}), 1e-12);
    EXPECT_NEAR(total, 0.5, 1e-12);
}

TEST(PrTestTotal, RejectsBadPartition) {
    const auto a = plus_two_step();
    EXPECT_ANY_THROW(pr_test_total(a, IndexSet{}, 1, {{"0"}}, IndexSet{}, IndexSet{2}));
    EXPECT_ANY_THROW(pr_test_total(a, IndexSet{}, 1, {{"0", "1"}, {"1"}}, IndexSet{}, IndexSet{2}));
}

TEST(CheckedProbability, ClampsOnlyNearTheBoundary) {
    const ToleranceConfig tol;
    EXPECT_EQ(checked_probability(-1e-12, tol), 0.0);
    EXPECT_EQ(checked_probability(1.0 + 1e-12, tol), 1.0);
    EXPECT_EQ(checked_probability(0.3, tol), 0.3);
    EXPECT_QLLL_ERROR(checked_probability(-1e-6, tol), ErrorKind::InternalConsistency);
    EXPECT_QLLL_ERROR(checked_probability(1.0 + 1e-6, tol), ErrorKind::InternalConsistency);
}

}  // namespace
}  // namespace qlll
