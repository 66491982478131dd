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
#include "qlll/lll.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlll/errors.h"

namespace qlll {

LLLInstance::LLLInstance(TestEventAssignment assignment, std::vector<double> x)
    : assignment_(std::move(assignment)), x_(std::move(x)) {
    if (x_.size() != assignment_.size()) {
        throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(assignment_.size()) +
                                                    " weights, got " + std::to_string(x_.size()));
    }
    for (size_t i = 0; i < x_.size(); ++i) {
        if (!(x_[i] > 0.0 && x_[i] <= 1.0)) {
            throw Error(ErrorKind::InvalidArgument, "x_" + std::to_string(i + 1) + " = " + std::to_string(x_[i]) +
                                                        " is outside (0, 1]",
                        x_[i], i + 1);
        }
    }
    for (size_t i = 1; i <= assignment_.size(); ++i) {
        assignment_.event(i);
    }
}

double assumption_bound(std::span<const double> x, size_t i, size_t s_i) {
    double bound = x[i - 1];
    for (size_t j = s_i + 1; j <= i - 1; ++j) {
        bound *= 1.0 - x[j - 1];
    }
    return bound;
}

namespace {

std::vector<double> marginals_of(const TestEventAssignment &a, const ToleranceConfig &tol) {
    std::vector<double> out;
    for (size_t i = 1; i <= a.size(); ++i) {
        out.push_back(pr_test_marginal(a, IndexSet{i}, tol));
    }
    return out;
}

}  // namespace

std::vector<bool> check_assumption(const LLLInstance &inst, const DependenceProfile &profile,
                                   const ToleranceConfig &tol) {
    if (profile.n() != inst.size()) {
        throw Error(ErrorKind::InvalidArgument, "profile and instance lengths differ");
    }
    std::vector<bool> ok;
    for (size_t i = 1; i <= inst.size(); ++i) {
        const double pr = pr_test_marginal(inst.assignment(), IndexSet{i}, tol);
        ok.push_back(pr <= assumption_bound(inst.x(), i, profile.s(i)) + tol.prob);
    }
    return ok;
}

bool LemmaBound::holds(double slack) const {
    return !conditional.has_value() || *conditional <= x + slack;
}

std::vector<LemmaBound> check_lemma(const LLLInstance &inst, const ToleranceConfig &tol) {
    const TestEventAssignment &a = inst.assignment();
    std::vector<LemmaBound> out;
    for (size_t i = 1; i <= inst.size(); ++i) {
        const IndexSet prior = IndexSet::prefix(i - 1);
        try {
            const double c = pr_test_cond(a.complemented(prior), prior, IndexSet{i}, tol);
            out.push_back({c, inst.x()[i - 1]});
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::ConditionOnZero) {
                throw;
            }
            throw Error(ErrorKind::ConditionOnZero,
                        "complemented prefix before index " + std::to_string(i) + " has negligible probability",
                        e.residual(), i);
        }
    }
    return out;
}

std::string_view to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Satisfied:
            return "satisfied";
        case ConditionStatus::Violated:
            return "violated";
        case ConditionStatus::Boundary:
            return "boundary";
    }
    return "violated";
}

std::string_view to_string(PositivityStatus s) {
    switch (s) {
        case PositivityStatus::Pass:
            return "pass";
        case PositivityStatus::Fail:
            return "fail";
        case PositivityStatus::Inconclusive:
            return "inconclusive";
        case PositivityStatus::NotClaimed:
            return "not-claimed";
    }
    return "not-claimed";
}

bool LLLReport::assumption_holds() const {
    return std::all_of(assumption_ok.begin(), assumption_ok.end(), [](bool b) { return b; });
}

bool LLLReport::lemma_holds() const {
    return std::all_of(lemma_bounds.begin(), lemma_bounds.end(), [](const LemmaBound &b) { return b.holds(); });
}

bool LLLReport::inconsistent() const {
    return assumption_holds() && (!bound_ok || !lemma_holds());
}

LLLReport check_general(const LLLInstance &inst, const ToleranceConfig &tol) {
    const TestEventAssignment &a = inst.assignment();
    const DependenceProfile profile = compute_profile(a, tol);

    LLLReport r;
    r.marginals = marginals_of(a, tol);
    r.s = profile.s_values();
    for (size_t i = 1; i <= inst.size(); ++i) {
        const double bound = assumption_bound(inst.x(), i, profile.s(i));
        r.assumption_bounds.push_back(bound);
        r.assumption_ok.push_back(r.marginals[i - 1] <= bound + tol.prob);
    }

    const IndexSet all = IndexSet::prefix(inst.size());
    const TestEventAssignment negated = a.complemented(all);
    for (size_t i = 1; i <= inst.size(); ++i) {
        const IndexSet prior = IndexSet::prefix(i - 1);
        LemmaBound b{std::nullopt, inst.x()[i - 1]};
        try {
            b.conditional = pr_test_cond(a.complemented(prior), prior, IndexSet{i}, tol);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::ConditionOnZero) {
                throw;
            }
        }
        r.lemma_bounds.push_back(b);
    }

    r.lhs = pr_test_marginal(negated, all, tol);
    r.rhs = 1.0;
    for (double xi : inst.x()) {
        r.rhs *= 1.0 - xi;
    }
    r.bound_ok = r.lhs >= r.rhs - tol.prob;
    return r;
}

bool symmetric_chain_holds(size_t d, double slack) {
    const double dp1 = static_cast<double>(d) + 1.0;
    const double left = 1.0 / (dp1 * std::numbers::e);
    // std::pow(0.0, 0.0) == 1, matching the empty-product reading at d = 0.
    const double right = (1.0 / dp1) * std::pow(1.0 - 1.0 / dp1, static_cast<double>(d));
    return left <= right + slack;
}

SymmetricReport check_symmetric(const TestEventAssignment &a, double p, const ToleranceConfig &tol) {
    for (size_t i = 1; i <= a.size(); ++i) {
        a.event(i);
    }
    SymmetricReport r;
    r.p = p;
    const auto marg = marginals_of(a, tol);
    r.p_measured = *std::max_element(marg.begin(), marg.end());
    if (p < r.p_measured - tol.prob) {
        throw Error(ErrorKind::BadP,
                    "p = " + std::to_string(p) + " is below max Pr[E_i] = " + std::to_string(r.p_measured),
                    r.p_measured - p);
    }
    const DependenceProfile profile = compute_profile(a, tol);
    r.d_min = profile.d_min();
    const double dp1 = static_cast<double>(r.d_min) + 1.0;
    r.condition_value = p * std::numbers::e * dp1;
    if (std::abs(r.condition_value - 1.0) <= tol.prob) {
        r.condition = ConditionStatus::Boundary;
    } else if (r.condition_value < 1.0) {
        r.condition = ConditionStatus::Satisfied;
    } else {
        r.condition = ConditionStatus::Violated;
    }
    r.chain_ok = symmetric_chain_holds(r.d_min);

    const IndexSet all = IndexSet::prefix(a.size());
    r.lhs = pr_test_marginal(a.complemented(all), all, tol);
    r.lower_bound = std::pow(1.0 - 1.0 / dp1, static_cast<double>(a.size()));

    if (r.condition != ConditionStatus::Satisfied) {
        r.positivity = PositivityStatus::NotClaimed;
    } else if (r.lhs < r.lower_bound - tol.prob) {
        r.positivity = PositivityStatus::Fail;
    } else if (r.lhs <= tol.prob) {
        r.positivity = PositivityStatus::Inconclusive;
    } else {
        r.positivity = PositivityStatus::Pass;
    }
    return r;
}

}  // namespace qlll
