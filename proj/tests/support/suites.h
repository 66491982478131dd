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

#ifndef QLLL_TESTS_SUITES_H
#define QLLL_TESTS_SUITES_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qlll::testing {

/// Outcome of one seeded sweep.
struct SuiteResult {
    std::string name;
    size_t instances = 0;
    size_t checks = 0;
    /// Checks not applicable because a conditioning event had probability
    /// at most the tolerance (or a generator gave up).
    size_t skipped = 0;
    size_t violations = 0;
    double worst = 0.0;
    /// Fresh-seed reruns (Monte Carlo only).
    size_t retries = 0;
    std::string first_failure;

    bool ok() const {
        return violations == 0;
    }
    std::string summary() const;
};

inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kInequalitySlack = 1e-9;

// Sequence probabilities in a state.
SuiteResult state_permutation_invariance(size_t count, uint64_t seed = 1);
SuiteResult state_empty_event(size_t count, uint64_t seed = 1);
SuiteResult state_complete_tail(size_t count, uint64_t seed = 1);
SuiteResult state_complement_subtraction(size_t count, uint64_t seed = 1);
SuiteResult state_disjoint_union(size_t count, uint64_t seed = 1);
SuiteResult state_repeat_projective(size_t count, uint64_t seed = 1);
SuiteResult state_partial_monotonicity(size_t count, uint64_t seed = 1);
SuiteResult state_conditional_additivity(size_t count, uint64_t seed = 1);
SuiteResult state_chain_rule(size_t count, uint64_t seed = 1);

// Probabilities in a test.
SuiteResult test_repeat_projective(size_t count, uint64_t seed = 1);
SuiteResult test_full_monotonicity(size_t count, uint64_t seed = 1);
SuiteResult test_additivity(size_t count, uint64_t seed = 1);
SuiteResult test_chain_rule(size_t count, uint64_t seed = 1);
SuiteResult test_total_probability(size_t count, uint64_t seed = 1);
SuiteResult test_matches_state_on_initial_segments(size_t count, uint64_t seed = 1);

// Independence.
SuiteResult complete_event_independent(size_t count, uint64_t seed = 1);
SuiteResult complement_keeps_independence(size_t count, uint64_t seed = 1);
SuiteResult complemented_condition_keeps_independence(size_t count, uint64_t seed = 1);
SuiteResult disjoint_union_keeps_independence(size_t count, uint64_t seed = 1);
SuiteResult profile_consistency(size_t count, uint64_t seed = 1);

struct NamedSuite {
    std::string name;
    std::function<SuiteResult(size_t, uint64_t)> run;
};
/// The probability and independence property sweeps, by name.
std::vector<NamedSuite> property_suites();

// Oracles.
SuiteResult oracle_agreement(size_t queries, uint64_t seed = 1);
SuiteResult naive_oracle_agreement(size_t queries, uint64_t seed = 1);
SuiteResult trajectory_completeness(size_t instances, uint64_t seed = 1);
SuiteResult monte_carlo_consistency(size_t instances, uint64_t n_samples = 100000, uint64_t seed = 1);
SuiteResult sampler_determinism(size_t instances, uint64_t seed = 1);

// Local lemma.
SuiteResult general_soundness(size_t instances, uint64_t seed = 1);
SuiteResult symmetric_soundness(size_t instances, uint64_t seed = 1);
SuiteResult chain_inequality(size_t max_d = 64, double slack = 1e-12);

// Serialization.
SuiteResult round_trip(size_t instances, uint64_t seed = 1);

}  // namespace qlll::testing

#endif
