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
#ifndef QLLL_INDEPENDENCE_H
#define QLLL_INDEPENDENCE_H

#include <map>
#include <utility>
#include <vector>

#include "qlll/probability.h"

namespace qlll {

/// "E_i is independent of E_J with respect to E_{K \ J}".
struct IndependenceQuery {
    const TestEventAssignment &assignment;
    size_t i = 0;
    IndexSet k;
    IndexSet j;
};

/// Both sides of an independence comparison.
struct IndependenceValues {
    double conditioned = 0.0;  // Pr[E_i | E_K]
    double reference = 0.0;    // Pr[E_i | E_{K\J}]
    double difference() const;
};

/// Throws InvalidArgument (K not < i, J not inside K), ConditionOnZero.
IndependenceValues independence_values(const IndependenceQuery &q, const ToleranceConfig &tol = {});

/// |Pr[E_i|E_K] - Pr[E_i|E_{K\J}]| <= tol.ind.
bool is_independent(const IndependenceQuery &q, const ToleranceConfig &tol = {});

/// E_i versus E_i conditioned on the complements of every event in K.
IndependenceValues negative_independence_values(const TestEventAssignment &a, size_t i, const IndexSet &k,
                                                const ToleranceConfig &tol = {});
bool is_neg_independent(const TestEventAssignment &a, size_t i, const IndexSet &k, const ToleranceConfig &tol = {});

/// NInd(k|l): E_k is negatively independent of E_1..E_j for every j <= l.
/// A ConditionOnZero is rethrown with the offending prefix length as index.
bool nind_index(const TestEventAssignment &a, size_t k, size_t l, const ToleranceConfig &tol = {});

enum class Relation { Independent, Dependent, Undefined };

std::string_view to_string(Relation r);

class DependenceProfile {
   public:
    size_t n() const noexcept {
        return n_;
    }
    /// s_i for 1 <= i <= n.
    size_t s(size_t i) const;
    const std::vector<size_t> &s_values() const noexcept {
        return s_;
    }
    /// NInd(k|l) for 1 <= l < k <= n.
    Relation nind(size_t k, size_t l) const;
    const std::map<std::pair<size_t, size_t>, Relation> &nind_table() const noexcept {
        return table_;
    }
    size_t d_min() const noexcept {
        return d_min_;
    }
    /// Every NDep(k|l) pair (Undefined counted as dependent) has l >= k - d.
    bool is_dependence_radius(size_t d) const;
    bool all_undefined() const;

   private:
    friend DependenceProfile compute_profile(const TestEventAssignment &a, const ToleranceConfig &tol);

    size_t n_ = 0;
    std::vector<size_t> s_;
    std::map<std::pair<size_t, size_t>, Relation> table_;
    size_t d_min_ = 0;
};

/// Materializes the NInd table, s_i and the minimal dependence radius.
/// Undefined prefixes (conditioning probability at most tol.prob) are
/// treated as dependent when deriving s_i and d_min. Requires an event at
/// every position; throws MissingAssignment otherwise.
DependenceProfile compute_profile(const TestEventAssignment &a, const ToleranceConfig &tol = {});

}  // namespace qlll

#endif
