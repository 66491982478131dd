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

#include "qlll/instance_gen.h"

#include <gtest/gtest.h>

#include <cmath>

#include "error_matchers.h"
#include "qlll/oracle.h"
#include "qlll/serialization.h"
#include "random_cases.h"

namespace qlll {
namespace {

GeneratorSpec make_spec(GeneratorKind kind, size_t n, uint64_t seed, size_t local_dim = 2, size_t window = 1) {
    GeneratorSpec s;
    s.kind = kind;
    s.n = n;
    s.local_dim = local_dim;
    s.window = window;
    s.seed = seed;
    return s;
}

const GeneratorKind kAllKinds[] = {GeneratorKind::PaperExamples, GeneratorKind::TensorProduct,
                                   GeneratorKind::SlidingWindow, GeneratorKind::RandomProjective,
                                   GeneratorKind::RandomPOVM,    GeneratorKind::DependentChain};

TEST(PaperExamples, EveryExpectationHolds) {
    size_t count = 0;
    for (const auto &ex : paper_examples()) {
        for (const auto &e : ex.expectations) {
            EXPECT_NEAR(e.compute(), e.expected, 1e-9) << ex.name << ": " << e.description;
            EXPECT_FALSE(e.claim.empty());
            ++count;
        }
    }
    EXPECT_GE(count, 10u);
}

TEST(PaperExamples, NamedExamplesPresent) {
    std::vector<std::string> names;
    for (const auto &ex : paper_examples()) {
        names.push_back(ex.name);
    }
    for (const char *want : {"reorder", "marginal-vs-state", "cond-monotonicity-failure"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    }
}

TEST(PaperExamples, StatedValuesOnlyWhereTheyDiffer) {
    for (const auto &ex : paper_examples()) {
        for (const auto &e : ex.expectations) {
            if (e.stated) {
                EXPECT_GT(std::abs(*e.stated - e.expected), 1e-9) << e.description;
            }
        }
    }
}

TEST(Generate, KindNamesRoundTrip) {
    for (GeneratorKind k : kAllKinds) {
        EXPECT_EQ(parse_generator_kind(to_string(k)), k);
    }
    EXPECT_QLLL_ERROR(parse_generator_kind("nope"), ErrorKind::InvalidArgument);
}

TEST(Generate, SpecValidation) {
    EXPECT_QLLL_ERROR(generate(make_spec(GeneratorKind::TensorProduct, 0, 1)), ErrorKind::InvalidArgument);
    EXPECT_QLLL_ERROR(generate(make_spec(GeneratorKind::TensorProduct, 2, 1, 1)), ErrorKind::InvalidArgument);
    EXPECT_QLLL_ERROR(generate(make_spec(GeneratorKind::SlidingWindow, 2, 1, 2, 3)), ErrorKind::InvalidArgument);
    EXPECT_QLLL_ERROR(generate(make_spec(GeneratorKind::TensorProduct, 7, 1, 2)), ErrorKind::DimensionCapExceeded);
}

TEST(Generate, MeasurementsAndStatesValid) {
    const ToleranceConfig tol;
    for (GeneratorKind k : kAllKinds) {
        for (uint64_t seed = 0; seed < 5; ++seed) {
            const auto a = generate(make_spec(k, 3, seed, 2, 2));
            EXPECT_NEAR(a.test().rho().trace(), 1.0, tol.trace);
            for (const auto &m : a.test().measurements()) {
                EXPECT_LE(m->completeness_residual(), tol.complete);
            }
            EXPECT_TRUE(a.is_complete());
        }
    }
}

TEST(Generate, SameSeedSameBytes) {
    for (GeneratorKind k : kAllKinds) {
        const auto spec = make_spec(k, 3, 99, 2, 2);
        EXPECT_EQ(serialize_instance(InstanceFile::from_assignment(generate(spec))),
                  serialize_instance(InstanceFile::from_assignment(generate(spec))));
    }
}

TEST(Generate, TensorProductIndependent) {
    const auto a = generate(make_spec(GeneratorKind::TensorProduct, 3, 4));
    EXPECT_EQ(compute_profile(a).d_min(), 0u);
    // Any event set factorizes; check against enumeration.
    for (uint64_t s = 0; s < 10; ++s) {
        std::mt19937_64 rng(s);
        auto b = a;
        for (size_t i = 1; i <= 3; ++i) {
            b = b.with_event(i, testing::random_event(b.test().measurement(i), rng));
        }
        double product = 1.0;
        for (size_t i = 1; i <= 3; ++i) {
            product *= pr_test_marginal(b, IndexSet{i});
        }
        EXPECT_NEAR(enumerate_probability(b, IndexSet{1, 2, 3}), product, 1e-9);
    }
}

TEST(Generate, DependentChainFailsEveryPrefix) {
    const auto a = generate(make_spec(GeneratorKind::DependentChain, 4, 6));
    for (size_t k = 2; k <= 4; ++k) {
        for (size_t l = 1; l < k; ++l) {
            EXPECT_FALSE(nind_index(a, k, l)) << k << "|" << l;
        }
    }
}

TEST(Generate, RandomPOVMIsComplete) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorSpec s = make_spec(GeneratorKind::RandomPOVM, 2, seed, 3);
        s.outcomes = 3;
        const auto a = generate(s);
        for (const auto &m : a.test().measurements()) {
            EXPECT_LE(m->completeness_residual(), 1e-9);
            EXPECT_EQ(m->size(), 3u);
        }
    }
}

TEST(AssumptionSatisfying, TensorProductAcceptsQuickly) {
    const GeneratedLLL g =
        generate_assumption_satisfying(make_spec(GeneratorKind::TensorProduct, 4, 8), std::vector<double>(4, 0.5));
    EXPECT_TRUE(check_general(g.instance).assumption_holds());
    EXPECT_LE(g.rejections, 4u);
}

TEST(AssumptionSatisfying, DependentChainWithLargeX) {
    const GeneratedLLL g =
        generate_assumption_satisfying(make_spec(GeneratorKind::DependentChain, 3, 2), std::vector<double>(3, 0.9));
    const LLLReport r = check_general(g.instance);
    EXPECT_TRUE(r.assumption_holds());
    for (size_t i = 1; i <= 3; ++i) {
        EXPECT_LE(r.marginals[i - 1], 0.9 * std::pow(0.1, static_cast<double>(i - 1 - r.s[i - 1])) + 1e-9);
    }
    EXPECT_TRUE(r.bound_ok);
}

TEST(AssumptionSatisfying, GivesUpWithTinyBudget) {
    // An outcome-removal budget of zero cannot fix a violating instance.
    EXPECT_QLLL_ERROR(generate_assumption_satisfying(make_spec(GeneratorKind::DependentChain, 4, 2),
                                                     std::vector<double>(4, 0.01), 0),
                      ErrorKind::GaveUp);
}

TEST(SymmetricSatisfying, ConditionHolds) {
    for (GeneratorKind k : kAllKinds) {
        const auto a = generate_symmetric_satisfying(make_spec(k, 3, 12, 2, 2));
        double p = 0.0;
        for (size_t i = 1; i <= a.size(); ++i) {
            p = std::max(p, pr_test_marginal(a, IndexSet{i}));
        }
        const SymmetricReport r = check_symmetric(a, p);
        EXPECT_LE(r.condition_value, 1.0) << to_string(k);
    }
}

}  // namespace
}  // namespace qlll
