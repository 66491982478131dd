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
#ifndef QLLL_ORACLE_H
#define QLLL_ORACLE_H

#include <cstdint>
#include <string>
#include <vector>

#include "qlll/probability.h"

namespace qlll {

inline constexpr size_t kDefaultEnumerationCap = 1'000'000;

struct Trajectory {
    std::vector<OutcomeLabel> outcomes;
    double probability = 0.0;
};

/// Every outcome sequence of M_1..M_horizon with its Born probability
/// tr(K rho K^dagger), K = M_{m_k} ... M_{m_1}. Throws EnumerationCapExceeded.
std::vector<Trajectory> enumerate_trajectories(const Test &test, size_t horizon,
                                               size_t cap = kDefaultEnumerationCap);

/// Sum over trajectories with m_i in A_i for i in K, unconstrained elsewhere,
/// up to max K. Shares no code path with pr_test_marginal.
double enumerate_probability(const TestEventAssignment &a, const IndexSet &k, size_t cap = kDefaultEnumerationCap);

struct SampleEstimate {
    double estimate = 0.0;
    uint64_t n_samples = 0;
    double std_error = 0.0;
    uint64_t hits = 0;
    uint64_t seed = 0;
    std::string rng;
};

/// Name recorded in every SampleEstimate.
inline constexpr const char *kSamplerRng = "mt19937_64 streams seeded by splitmix64(seed, chunk)";

/// Born-rule sequential sampling of the test. Samples are split into fixed
/// chunks with independently derived seeds, so the estimate depends only on
/// (seed, n_samples) and not on the worker count. workers = 0 picks the
/// hardware concurrency.
SampleEstimate sample_trajectories(const TestEventAssignment &a, const IndexSet &k, uint64_t n_samples,
                                   uint64_t seed, unsigned workers = 1);

}  // namespace qlll

#endif
