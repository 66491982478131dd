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

#include "oracles.h"

namespace qlll::testing {

namespace {

double walk(const Eigen::MatrixXcd &rho, const std::vector<NaiveStep> &steps, size_t depth,
            const Eigen::MatrixXcd &k) {
    if (depth == steps.size()) {
        return (k * rho * k.adjoint()).trace().real();
    }
    double total = 0.0;
    const NaiveStep &s = steps[depth];
    for (size_t m = 0; m < s.kraus.size(); ++m) {
        if (s.allowed[m]) {
            total += walk(rho, steps, depth + 1, s.kraus[m] * k);
        }
    }
    return total;
}

}  // namespace

double naive_probability(const Eigen::MatrixXcd &rho, const std::vector<NaiveStep> &steps) {
    return walk(rho, steps, 0, Eigen::MatrixXcd::Identity(rho.rows(), rho.cols()));
}

NaiveStep naive_step(const Event &e) {
    NaiveStep s;
    const Measurement &m = *e.measurement();
    for (size_t idx = 0; idx < m.size(); ++idx) {
        s.kraus.push_back(m.kraus()[idx].eigen());
        s.allowed.push_back(e.contains(m.labels()[idx]));
    }
    return s;
}

double naive_state(const DensityOperator &rho, std::span<const Event> seq) {
    std::vector<NaiveStep> steps;
    for (const auto &e : seq) {
        steps.push_back(naive_step(e));
    }
    return naive_probability(rho.matrix().eigen(), steps);
}

double naive_marginal(const TestEventAssignment &a, const IndexSet &k) {
    std::vector<NaiveStep> steps;
    for (size_t i = 1; i <= k.max(); ++i) {
        if (k.contains(i)) {
            steps.push_back(naive_step(a.event(i)));
        } else {
            NaiveStep s = naive_step(Event::complete(a.test().measurement(i)));
            steps.push_back(std::move(s));
        }
    }
    return naive_probability(a.test().rho().matrix().eigen(), steps);
}

}  // namespace qlll::testing
