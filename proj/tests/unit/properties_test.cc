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

#include <gtest/gtest.h>

#include "suites.h"

namespace qlll::testing {
namespace {

constexpr size_t kInstances = 200;

class PropertySuite : public ::testing::TestWithParam<NamedSuite> {};

TEST_P(PropertySuite, NoViolations) {
    const SuiteResult r = GetParam().run(kInstances, 1);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_GE(r.instances, kInstances) << r.summary();
}

std::string suite_test_name(const ::testing::TestParamInfo<NamedSuite> &info) {
    std::string out;
    for (char c : info.param.name) {
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    return out;
}

INSTANTIATE_TEST_SUITE_P(All, PropertySuite, ::testing::ValuesIn(property_suites()), suite_test_name);

#define EXPECT_SUITE_OK(expr)            \
    do {                                 \
        const SuiteResult r_ = (expr);   \
        EXPECT_TRUE(r_.ok()) << r_.summary(); \
    } while (false)

TEST(Consistency, TestMatchesStateOnInitialSegments) {
    EXPECT_SUITE_OK(test_matches_state_on_initial_segments(kInstances, 3));
}

TEST(Consistency, ProfileTable) {
    EXPECT_SUITE_OK(profile_consistency(kInstances, 5));
}

TEST(Oracles, MarginalMatchesEnumeration) {
    EXPECT_SUITE_OK(oracle_agreement(kInstances, 7));
}

TEST(Oracles, MatchesBruteForce) {
    EXPECT_SUITE_OK(naive_oracle_agreement(kInstances, 9));
}

TEST(Oracles, TrajectoriesComplete) {
    EXPECT_SUITE_OK(trajectory_completeness(kInstances, 11));
}

TEST(Oracles, SamplingSmallRun) {
    EXPECT_SUITE_OK(monte_carlo_consistency(10, 20000, 13));
    EXPECT_SUITE_OK(sampler_determinism(10, 15));
}

TEST(LLL, GeneralSoundness) {
    EXPECT_SUITE_OK(general_soundness(60, 17));
}

TEST(LLL, SymmetricSoundness) {
    EXPECT_SUITE_OK(symmetric_soundness(30, 19));
}

TEST(LLL, ChainInequality) {
    EXPECT_SUITE_OK(chain_inequality(64, 1e-12));
}

TEST(Serialization, RoundTrip) {
    EXPECT_SUITE_OK(round_trip(kInstances, 21));
}

}  // namespace
}  // namespace qlll::testing
