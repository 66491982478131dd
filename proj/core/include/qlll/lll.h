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
#ifndef QLLL_LLL_H
#define QLLL_LLL_H

#include <optional>
#include <vector>

#include "qlll/independence.h"

namespace qlll {

/// A fully assigned test together with weights x_i in (0, 1].
class LLLInstance {
   public:
    /// Throws MissingAssignment or InvalidArgument (wrong length, x outside (0,1]).
    LLLInstance(TestEventAssignment assignment, std::vector<double> x);

    const TestEventAssignment &assignment() const noexcept {
        return assignment_;
    }
    const std::vector<double> &x() const noexcept {
        return x_;
    }
    size_t size() const noexcept {
        return x_.size();
    }

   private:
    TestEventAssignment assignment_;
    std::vector<double> x_;
};

/// x_i * prod_{j=s_i+1}^{i-1} (1 - x_j), i 1-based.
double assumption_bound(std::span<const double> x, size_t i, size_t s_i);

/// Per index: Pr_Sigma[E_i] <= assumption_bound + tol.prob.
std::vector<bool> check_assumption(const LLLInstance &inst, const DependenceProfile &profile,
                                   const ToleranceConfig &tol = {});

struct LemmaBound {
    /// Pr[E_i | not E_1, ..., not E_{i-1}]; absent when the condition has
    /// probability at most tol.prob.
    std::optional<double> conditional;
    double x = 0.0;
    /// Vacuously true when the conditional is undefined.
    bool holds(double slack = ToleranceConfig{}.prob) const;
};

/// Throws ConditionOnZero with the offending index.
std::vector<LemmaBound> check_lemma(const LLLInstance &inst, const ToleranceConfig &tol = {});

enum class ConditionStatus { Satisfied, Violated, Boundary };
enum class PositivityStatus { Pass, Fail, Inconclusive, NotClaimed };

std::string_view to_string(ConditionStatus s);
std::string_view to_string(PositivityStatus s);

struct SymmetricReport {
    double p = 0.0;
    double p_measured = 0.0;  // max_i Pr_Sigma[E_i]
    size_t d_min = 0;
    double condition_value = 0.0;  // p * e * (d_min + 1)
    ConditionStatus condition = ConditionStatus::Violated;
    double lhs = 0.0;          // Pr_Sigma[not E_1, ..., not E_n]
    double lower_bound = 0.0;  // (1 - 1/(d_min+1))^n
    bool chain_ok = false;
    PositivityStatus positivity = PositivityStatus::NotClaimed;
};

struct LLLReport {
    std::vector<double> marginals;  // Pr_Sigma[E_i]
    std::vector<size_t> s;
    std::vector<double> assumption_bounds;
    std::vector<bool> assumption_ok;
    std::vector<LemmaBound> lemma_bounds;
    double lhs = 0.0;
    double rhs = 0.0;
    bool bound_ok = false;
    std::optional<SymmetricReport> symmetric;

    bool assumption_holds() const;
    bool lemma_holds() const;
    /// Assumption held but the conclusion (or a lemma bound) did not.
    bool inconsistent() const;
};

/// Never throws on assumption-violating instances; the report records which
/// indices fail and carries lhs and rhs regardless.
LLLReport check_general(const LLLInstance &inst, const ToleranceConfig &tol = {});

/// 1/((d+1)e) <= (1/(d+1)) (1 - 1/(d+1))^d, with 0^0 = 1.
bool symmetric_chain_holds(size_t d, double slack = 0.0);

/// Throws BadP when p is below the measured max_i Pr_Sigma[E_i] by more
/// than tol.prob.
SymmetricReport check_symmetric(const TestEventAssignment &a, double p, const ToleranceConfig &tol = {});

}  // namespace qlll

#endif
