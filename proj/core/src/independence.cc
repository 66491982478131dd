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
#include "qlll/independence.h"

#include <cmath>
#include <string>

#include "qlll/errors.h"

namespace qlll {

double IndependenceValues::difference() const {
    return std::abs(conditioned - reference);
}

IndependenceValues independence_values(const IndependenceQuery &q, const ToleranceConfig &tol) {
    const IndexSet target{q.i};
    if (!precedes(q.k, target)) {
        throw Error(ErrorKind::InvalidArgument, "independence needs K < i");
    }
    if (!q.j.is_subsequence_of(q.k)) {
        throw Error(ErrorKind::InvalidArgument, "J must be a subsequence of K");
    }
    IndependenceValues v;
    v.conditioned = pr_test_cond(q.assignment, q.k, target, tol);
    v.reference = pr_test_cond(q.assignment, q.k.without(q.j), target, tol);
    return v;
}

bool is_independent(const IndependenceQuery &q, const ToleranceConfig &tol) {
    return independence_values(q, tol).difference() <= tol.ind;
}

IndependenceValues negative_independence_values(const TestEventAssignment &a, size_t i, const IndexSet &k,
                                                const ToleranceConfig &tol) {
    const TestEventAssignment negated = a.complemented(k);
    return independence_values(IndependenceQuery{negated, i, k, k}, tol);
}

bool is_neg_independent(const TestEventAssignment &a, size_t i, const IndexSet &k, const ToleranceConfig &tol) {
    return negative_independence_values(a, i, k, tol).difference() <= tol.ind;
}

bool nind_index(const TestEventAssignment &a, size_t k, size_t l, const ToleranceConfig &tol) {
    if (l < 1 || l >= k || k > a.size()) {
        throw Error(ErrorKind::InvalidArgument, "NInd(k|l) needs 1 <= l < k <= n");
    }
    for (size_t j = 1; j <= l; ++j) {
        try {
            if (!is_neg_independent(a, k, IndexSet::prefix(j), tol)) {
                return false;
            }
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::ConditionOnZero) {
                throw;
            }
            throw Error(ErrorKind::ConditionOnZero,
                        "complemented prefix of length " + std::to_string(j) + " has negligible probability",
                        e.residual(), j);
        }
    }
    return true;
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::Independent:
            return "independent";
        case Relation::Dependent:
            return "dependent";
        case Relation::Undefined:
            return "undefined";
    }
    return "undefined";
}

size_t DependenceProfile::s(size_t i) const {
    if (i < 1 || i > n_) {
        throw Error(ErrorKind::InvalidArgument, "s_i index out of range");
    }
    return s_[i - 1];
}

Relation DependenceProfile::nind(size_t k, size_t l) const {
    auto it = table_.find({k, l});
    if (it == table_.end()) {
        throw Error(ErrorKind::InvalidArgument, "NInd(k|l) needs 1 <= l < k <= n");
    }
    return it->second;
}

bool DependenceProfile::is_dependence_radius(size_t d) const {
    for (const auto &[kl, rel] : table_) {
        const auto [k, l] = kl;
        if (rel != Relation::Independent && l + d < k) {
            return false;
        }
    }
    return true;
}

bool DependenceProfile::all_undefined() const {
    if (table_.empty()) {
        return false;
    }
    for (const auto &[kl, rel] : table_) {
        if (rel != Relation::Undefined) {
            return false;
        }
    }
    return true;
}

DependenceProfile compute_profile(const TestEventAssignment &a, const ToleranceConfig &tol) {
    DependenceProfile p;
    p.n_ = a.size();
    for (size_t i = 1; i <= p.n_; ++i) {
        a.event(i);
    }
    p.s_.assign(p.n_, 0);
    for (size_t k = 2; k <= p.n_; ++k) {
        // Running conjunction over prefixes 1..l; once a prefix is dependent or
        // undefined, every longer l inherits it.
        Relation running = Relation::Independent;
        for (size_t l = 1; l < k; ++l) {
            Relation step;
            try {
                step = is_neg_independent(a, k, IndexSet::prefix(l), tol) ? Relation::Independent
                                                                          : Relation::Dependent;
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::ConditionOnZero) {
                    throw;
                }
                step = Relation::Undefined;
            }
            if (running == Relation::Independent) {
                running = step;
            } else if (running == Relation::Undefined && step == Relation::Dependent) {
                running = Relation::Dependent;
            }
            p.table_[{k, l}] = running;
        }
        for (size_t l = 1; l < k; ++l) {
            const bool prev_ok = l == 1 || p.table_[{k, l - 1}] == Relation::Independent;
            if (p.table_[{k, l}] == Relation::Independent && !prev_ok) {
                throw Error(ErrorKind::InternalConsistency, "NInd table is not antitone in l", std::nullopt, k);
            }
            if (p.table_[{k, l}] == Relation::Independent) {
                p.s_[k - 1] = l;
            }
        }
    }
    for (const auto &[kl, rel] : p.table_) {
        if (rel != Relation::Independent) {
            p.d_min_ = std::max(p.d_min_, kl.first - kl.second);
        }
    }
    return p;
}

}  // namespace qlll
