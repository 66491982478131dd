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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qlll/errors.h"
#include "qlll/random.h"

namespace qlll {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix ket_projector(std::initializer_list<Complex> amplitudes) {
    std::vector<Complex> v(amplitudes);
    return ComplexMatrix::projector(v);
}

std::vector<OutcomeLabel> numbered_labels(size_t k) {
    std::vector<OutcomeLabel> out;
    for (size_t i = 0; i < k; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

std::string measurement_name(size_t i) {
    return "M" + std::to_string(i);
}

}  // namespace

MeasurementPtr computational_basis_measurement(std::string name) {
    return make_measurement(Measurement::projective(std::move(name), {"0", "1"},
                                                    {ket_projector({1.0, 0.0}), ket_projector({0.0, 1.0})}));
}

MeasurementPtr hadamard_basis_measurement(std::string name) {
    return make_measurement(Measurement::projective(
        std::move(name), {"0", "1"}, {ket_projector({kInvSqrt2, kInvSqrt2}), ket_projector({kInvSqrt2, -kInvSqrt2})}));
}

DensityOperator plus_state() {
    return validate_density(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}, DensityKind::Full);
}

DensityOperator zero_state() {
    return validate_density(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, DensityKind::Full);
}

std::vector<PaperExample> paper_examples() {
    const auto m1 = computational_basis_measurement("M1");
    const auto m2 = hadamard_basis_measurement("M2");
    const auto m3 = computational_basis_measurement("M3");
    const DensityOperator plus = plus_state();
    const DensityOperator zero = zero_state();
    const Test two(plus, {m1, m2});
    const Test three(plus, {m1, m2, m3});

    auto state = [plus](std::vector<Event> seq) { return [plus, seq] { return pr_state(plus, seq); }; };

    std::vector<PaperExample> out;

    {
        const Event a = Event::singleton(m1, "1");
        const Event b = Event::singleton(m2, "0");
        PaperExample ex{"reorder", TestEventAssignment(two, std::vector<Event>{a, b}), {}};
        ex.expectations.push_back({"Pr_rho[{M1=1},{M2=0}]",
                                   "measuring M1 then M2 on |+> gives outcome pair (1, 0) with probability 1/4", 0.25,
                                   state({a, b})});
        // Printed as 0. {M2=0} leaves |+> untouched, after which {M1=1} has
        // probability 1/2; 0 is the value of Pr_rho[{M2=1},{M1=1}].
        ex.expectations.push_back({"Pr_rho[{M2=0},{M1=1}]",
                                   "performing the same two events in the opposite order gives a different value", 0.5,
                                   state({b, a}), 0.0});
        out.push_back(std::move(ex));
    }
    {
        const Event full1 = Event::complete(m1);
        const Event plus0 = Event::singleton(m2, "0");
        const Event minus1 = Event::singleton(m2, "1");
        const Event e = Event::singleton(m1, "0");
        PaperExample ex{"middle-complete", TestEventAssignment(two, std::vector<Event>{full1, plus0}), {}};
        ex.expectations.push_back({"Pr_rho[I_M1,{M2=0}]",
                                   "a complete event in front of {M2=0} lowers its probability to 1/2", 0.5,
                                   state({full1, plus0})});
        ex.expectations.push_back({"Pr_rho[{M2=0}]", "|+> yields M2 outcome 0 with certainty", 1.0, state({plus0})});
        ex.expectations.push_back({"Pr_rho[I_M1,{M2=1}]",
                                   "a complete event in front of {M2=1} raises its probability to 1/2", 0.5,
                                   state({full1, minus1})});
        ex.expectations.push_back({"Pr_rho[{M2=1}]", "|+> never yields M2 outcome 1", 0.0, state({minus1})});
        ex.expectations.push_back(
            {"Pr_rho[E,{M2=0}] + Pr_rho[not E,{M2=0}], E={M1=0}",
             "splitting the leading complete event into E and its complement reproduces Pr_rho[I_M1,{M2=0}]", 0.5,
             [plus, e, plus0] { return pr_state(plus, std::vector{e, plus0}) +
                                       pr_state(plus, std::vector{complement(e), plus0}); }});
        out.push_back(std::move(ex));
    }
    {
        const Event e1 = Event::singleton(m1, "0");
        const Event e2 = Event::singleton(m2, "0");
        const Event e3 = Event::singleton(m3, "1");
        PaperExample ex{"cond-monotonicity-failure", TestEventAssignment(three, std::vector<Event>{e1, e2, e3}), {}};
        ex.expectations.push_back({"Pr_rho[E2,E3|E1]",
                                   "conditioned on E1, the longer sequence E2,E3 has probability 1/4", 0.25,
                                   [plus, e1, e2, e3] {
                                       return pr_state_cond(plus, std::vector{e1}, std::vector{e2, e3});
                                   }});
        ex.expectations.push_back({"Pr_rho[E3|E1]",
                                   "conditioned on E1, its head E3 alone has probability 0, so deleting the head "
                                   "event E2 lowered the probability",
                                   0.0, [plus, e1, e3] { return pr_state_cond(plus, std::vector{e1}, std::vector{e3}); }});
        out.push_back(std::move(ex));
    }
    {
        const Event e1 = Event::singleton(m1, "0");
        const Event e2 = Event::singleton(m2, "0");
        const Event e3 = Event::singleton(m3, "1");
        PaperExample ex{"total-probability-failure", TestEventAssignment(three, std::vector<Event>{e1, e2, e3}), {}};
        ex.expectations.push_back({"Pr_rho[E1,E3]", "E1 followed directly by E3 is impossible", 0.0,
                                   state({e1, e3})});
        ex.expectations.push_back({"Pr_rho[E1,E2,E3] + Pr_rho[E1,not E2,E3]",
                                   "summing over both outcomes of an inserted M2 gives 1/4, not Pr_rho[E1,E3]", 0.25,
                                   [plus, e1, e2, e3] {
                                       return pr_state(plus, std::vector{e1, e2, e3}) +
                                              pr_state(plus, std::vector{e1, complement(e2), e3});
                                   }});
        ex.expectations.push_back(
            {"sum_i Pr_rho[E3|E1,{M2=i}] * Pr_rho[E1,{M2=i}]",
             "the state-level total probability sum over M2 outcomes also gives 1/4", 0.25, [plus, m2, e1, e3] {
                 double total = 0.0;
                 for (const auto &label : m2->labels()) {
                     const Event branch = Event::singleton(m2, label);
                     const std::vector<Event> head{e1, branch};
                     const double w = pr_state(plus, head);
                     if (w > ToleranceConfig{}.prob) {
                         total += w * pr_state_cond(plus, head, std::vector{e3});
                     }
                 }
                 return total;
             }});
        out.push_back(std::move(ex));
    }
    {
        const Event e2 = Event::singleton(m2, "0");
        const Event e2p = Event::singleton(m2, "1");
        const TestEventAssignment with_e2(two, std::map<size_t, Event>{{2, e2}});
        const TestEventAssignment with_e2p(two, std::map<size_t, Event>{{2, e2p}});
        PaperExample ex{"marginal-vs-state", with_e2, {}};
        ex.expectations.push_back({"Pr_rho[E2], E2={M2=0}", "in the state alone E2 is certain", 1.0, state({e2})});
        ex.expectations.push_back({"Pr_Sigma[E2]",
                                   "in the test, M1 is performed first, so E2 has marginal probability 1/2", 0.5,
                                   [with_e2] { return pr_test_marginal(with_e2, IndexSet{2}); }});
        ex.expectations.push_back({"Pr_rho[E2'], E2'={M2=1}", "in the state alone E2' is impossible", 0.0,
                                   state({e2p})});
        ex.expectations.push_back({"Pr_Sigma[E2']", "in the test E2' has marginal probability 1/2", 0.5,
                                   [with_e2p] { return pr_test_marginal(with_e2p, IndexSet{2}); }});
        out.push_back(std::move(ex));
    }
    {
        const Event e2 = Event::singleton(m2, "0");
        const TestEventAssignment a(two, std::vector<Event>{Event::complete(m1), e2});
        PaperExample ex{"independence-complete-prefix", a, {}};
        ex.expectations.push_back({"Pr_Sigma[{M2=0}|I_M1]",
                                   "conditioning {M2=0} on the complete M1 event gives 1/2", 0.5,
                                   [a] { return pr_test_cond(a, IndexSet{1}, IndexSet{2}); }});
        // The printed value for the right-hand side is 1, which is the state
        // probability Pr_rho[{M2=0}]; the test marginal is 1/2, so {M2=0} is in
        // fact independent of I_M1 here.
        ex.expectations.push_back({"Pr_Sigma[{M2=0}]",
                                   "the test marginal of {M2=0} is also 1/2 (the value 1 belongs to the state "
                                   "probability), so this pair is independent",
                                   0.5, [a] { return pr_test_marginal(a, IndexSet{2}); }, 1.0});
        out.push_back(std::move(ex));
    }
    {
        PaperExample ex{"complete-event-channels", TestEventAssignment(Test(zero, {m1, m2})), {}};
        ex.expectations.push_back({"||I_M1(|0><0|) - |0><0|||_max",
                                   "the complete M1 event leaves |0><0| unchanged", 0.0, [m1, zero] {
                                       return super_operator_of(Event::complete(m1))(zero.matrix())
                                           .max_abs_diff(zero.matrix());
                                   }});
        ex.expectations.push_back({"||I_M2(|0><0|) - I/2||_max",
                                   "the complete M2 event maps |0><0| to (|+><+| + |-><-|)/2 = I/2", 0.0, [m2, zero] {
                                       return super_operator_of(Event::complete(m2))(zero.matrix())
                                           .max_abs_diff(0.5 * ComplexMatrix::identity(2));
                                   }});
        out.push_back(std::move(ex));
    }
    return out;
}

std::string_view to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::PaperExamples:
            return "paper-examples";
        case GeneratorKind::TensorProduct:
            return "tensor-product";
        case GeneratorKind::SlidingWindow:
            return "sliding-window";
        case GeneratorKind::RandomProjective:
            return "random-projective";
        case GeneratorKind::RandomPOVM:
            return "random-povm";
        case GeneratorKind::DependentChain:
            return "dependent-chain";
    }
    return "random-projective";
}

GeneratorKind parse_generator_kind(std::string_view text) {
    for (auto k : {GeneratorKind::PaperExamples, GeneratorKind::TensorProduct, GeneratorKind::SlidingWindow,
                   GeneratorKind::RandomProjective, GeneratorKind::RandomPOVM, GeneratorKind::DependentChain}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator kind '" + std::string(text) + "'");
}

void GeneratorSpec::validate() const {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    if (local_dim < 2) {
        throw Error(ErrorKind::InvalidArgument, "local_dim must be at least 2");
    }
    if (window < 1 || window > n) {
        throw Error(ErrorKind::InvalidArgument, "window must lie in [1, n]");
    }
}

namespace {

size_t checked_power(size_t base, size_t exp) {
    size_t out = 1;
    const size_t cap = dimension_cap();
    for (size_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap) {
            throw Error(ErrorKind::DimensionCapExceeded, std::to_string(base) + "^" + std::to_string(exp) +
                                                             " exceeds dimension cap " + std::to_string(cap));
        }
    }
    return out;
}

ComplexMatrix basis_projector(const Eigen::MatrixXcd &basis, Eigen::Index col) {
    return ComplexMatrix(basis.col(col) * basis.col(col).adjoint());
}

/// Nonempty proper subset of labels (or the single label when only one exists).
std::vector<OutcomeLabel> random_proper_subset(const std::vector<OutcomeLabel> &labels, std::mt19937_64 &rng) {
    const size_t k = labels.size();
    if (k == 1) {
        return labels;
    }
    std::vector<OutcomeLabel> out;
    while (out.empty() || out.size() == k) {
        out.clear();
        for (const auto &l : labels) {
            if (uniform01(rng) < 0.5) {
                out.push_back(l);
            }
        }
    }
    return out;
}

std::vector<OutcomeLabel> random_subset(const std::vector<OutcomeLabel> &labels, std::mt19937_64 &rng) {
    std::vector<OutcomeLabel> out;
    for (const auto &l : labels) {
        if (uniform01(rng) < 0.5) {
            out.push_back(l);
        }
    }
    return out;
}

size_t pick_outcomes(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    if (spec.outcomes != 0) {
        return spec.outcomes;
    }
    return uniform01(rng) < 0.5 ? 2 : 3;
}

/// I (x) ... (x) op (x) ... (x) I, op acting on subsystem site.
ComplexMatrix embed(const ComplexMatrix &op, size_t site, size_t sites, size_t local_dim) {
    ComplexMatrix out = site == 0 ? op : ComplexMatrix::identity(local_dim);
    for (size_t s = 1; s < sites; ++s) {
        out = kron(out, s == site ? op : ComplexMatrix::identity(local_dim));
    }
    return out;
}

ComplexMatrix product_state(size_t sites, size_t local_dim, std::mt19937_64 &rng) {
    ComplexMatrix rho = random_density_matrix(local_dim, rng);
    for (size_t s = 1; s < sites; ++s) {
        rho = kron(rho, random_density_matrix(local_dim, rng));
    }
    return rho;
}

TestEventAssignment assemble(const ComplexMatrix &rho, std::vector<MeasurementPtr> ms,
                             const std::vector<std::vector<OutcomeLabel>> &subsets) {
    Test test(validate_density(rho, DensityKind::Full), std::move(ms));
    std::vector<Event> events;
    for (size_t i = 0; i < subsets.size(); ++i) {
        events.emplace_back(test.measurements()[i], subsets[i]);
    }
    return TestEventAssignment(std::move(test), events);
}

TestEventAssignment make_paper_instance() {
    const auto m1 = computational_basis_measurement("M1");
    const auto m2 = hadamard_basis_measurement("M2");
    const auto m3 = computational_basis_measurement("M3");
    Test test(plus_state(), {m1, m2, m3});
    return TestEventAssignment(std::move(test), std::vector<Event>{Event::singleton(m1, "0"),
                                                                   Event::singleton(m2, "0"),
                                                                   Event::singleton(m3, "1")});
}

TestEventAssignment make_tensor_product(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    const size_t d = spec.local_dim;
    checked_power(d, spec.n);
    const ComplexMatrix rho = product_state(spec.n, d, rng);
    std::vector<MeasurementPtr> ms;
    std::vector<std::vector<OutcomeLabel>> subsets;
    const auto labels = numbered_labels(d);
    for (size_t i = 0; i < spec.n; ++i) {
        const Eigen::MatrixXcd u = random_unitary(d, rng).eigen();
        std::vector<ComplexMatrix> projectors;
        for (size_t k = 0; k < d; ++k) {
            projectors.push_back(embed(basis_projector(u, static_cast<Eigen::Index>(k)), i, spec.n, d));
        }
        ms.push_back(make_measurement(Measurement(measurement_name(i + 1), labels, std::move(projectors))));
        subsets.push_back(random_proper_subset(labels, rng));
    }
    return assemble(rho, std::move(ms), subsets);
}

TestEventAssignment make_sliding_window(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    const size_t d = spec.local_dim;
    const size_t sites = spec.n + spec.window - 1;
    const size_t dim = checked_power(d, sites);
    const ComplexMatrix rho = product_state(sites, d, rng);
    ComplexMatrix frame = random_unitary(d, rng);
    for (size_t s = 1; s < sites; ++s) {
        frame = kron(frame, random_unitary(d, rng));
    }
    const auto labels = numbered_labels(d);
    std::vector<MeasurementPtr> ms;
    std::vector<std::vector<OutcomeLabel>> subsets;
    for (size_t i = 0; i < spec.n; ++i) {
        std::vector<Eigen::MatrixXcd> diag(d, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                                      static_cast<Eigen::Index>(dim)));
        for (size_t basis = 0; basis < dim; ++basis) {
            // Digits most-significant first: site 0 is the leftmost kron factor.
            size_t digit_sum = 0;
            size_t rest = basis;
            for (size_t s = sites; s-- > 0;) {
                const size_t digit = rest % d;
                rest /= d;
                if (s >= i && s < i + spec.window) {
                    digit_sum += digit;
                }
            }
            const auto b = static_cast<Eigen::Index>(basis);
            diag[digit_sum % d](b, b) = 1.0;
        }
        std::vector<ComplexMatrix> projectors;
        for (const auto &p : diag) {
            projectors.push_back(ComplexMatrix(frame.eigen() * p * frame.eigen().adjoint()));
        }
        ms.push_back(make_measurement(Measurement(measurement_name(i + 1), labels, std::move(projectors))));
        subsets.push_back(random_proper_subset(labels, rng));
    }
    return assemble(rho, std::move(ms), subsets);
}

TestEventAssignment make_dependent_chain(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    const size_t d = spec.local_dim;
    checked_power(d, 1);
    const ComplexMatrix rho = random_density_matrix(d, rng);
    // Orthonormalizing a perturbation of the identity keeps the second basis
    // far from mutually unbiased, so every measurement carries memory of the
    // previous outcomes.
    Eigen::MatrixXcd seed_matrix = 1.5 * Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d),
                                                                    static_cast<Eigen::Index>(d)) +
                                   0.5 * ginibre(d, rng).eigen();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(seed_matrix);
    const Eigen::MatrixXcd tilted = qr.householderQ();
    const Eigen::MatrixXcd standard = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d),
                                                                 static_cast<Eigen::Index>(d));
    const auto labels = numbered_labels(d);
    std::vector<MeasurementPtr> ms;
    std::vector<std::vector<OutcomeLabel>> subsets;
    for (size_t i = 0; i < spec.n; ++i) {
        const Eigen::MatrixXcd &basis = i % 2 == 0 ? standard : tilted;
        std::vector<ComplexMatrix> projectors;
        for (size_t k = 0; k < d; ++k) {
            projectors.push_back(basis_projector(basis, static_cast<Eigen::Index>(k)));
        }
        ms.push_back(make_measurement(Measurement(measurement_name(i + 1), labels, std::move(projectors))));
        subsets.push_back(random_proper_subset(labels, rng));
    }
    return assemble(rho, std::move(ms), subsets);
}

TestEventAssignment make_random_projective(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    const size_t d = spec.local_dim;
    checked_power(d, 1);
    const ComplexMatrix rho = random_density_matrix(d, rng);
    std::vector<MeasurementPtr> ms;
    std::vector<std::vector<OutcomeLabel>> subsets;
    for (size_t i = 0; i < spec.n; ++i) {
        const size_t k = std::min(pick_outcomes(spec, rng), d);
        const Eigen::MatrixXcd u = random_unitary(d, rng).eigen();
        std::vector<size_t> owner(d);
        for (size_t v = 0; v < d; ++v) {
            owner[v] = v < k ? v : static_cast<size_t>(uniform01(rng) * static_cast<double>(k));
        }
        std::vector<Eigen::MatrixXcd> acc(k, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                                    static_cast<Eigen::Index>(d)));
        for (size_t v = 0; v < d; ++v) {
            const auto c = static_cast<Eigen::Index>(v);
            acc[owner[v]] += u.col(c) * u.col(c).adjoint();
        }
        std::vector<ComplexMatrix> projectors;
        for (auto &p : acc) {
            projectors.emplace_back(std::move(p));
        }
        const auto labels = numbered_labels(k);
        ms.push_back(make_measurement(Measurement(measurement_name(i + 1), labels, std::move(projectors))));
        subsets.push_back(random_subset(labels, rng));
    }
    return assemble(rho, std::move(ms), subsets);
}

TestEventAssignment make_random_povm(const GeneratorSpec &spec, std::mt19937_64 &rng) {
    const size_t d = spec.local_dim;
    checked_power(d, 1);
    const ComplexMatrix rho = random_density_matrix(d, rng);
    std::vector<MeasurementPtr> ms;
    std::vector<std::vector<OutcomeLabel>> subsets;
    for (size_t i = 0; i < spec.n; ++i) {
        const size_t k = pick_outcomes(spec, rng);
        std::vector<Eigen::MatrixXcd> raw;
        Eigen::MatrixXcd inv_sqrt;
        while (true) {
            raw.clear();
            Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
            for (size_t m = 0; m < k; ++m) {
                raw.push_back(ginibre(d, rng).eigen());
                s += raw.back().adjoint() * raw.back();
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
            if (es.eigenvalues().minCoeff() < 1e-12) {
                continue;
            }
            inv_sqrt = es.operatorInverseSqrt();
            break;
        }
        std::vector<ComplexMatrix> kraus;
        for (const auto &a : raw) {
            kraus.emplace_back(a * inv_sqrt);
        }
        const auto labels = numbered_labels(k);
        ms.push_back(make_measurement(Measurement(measurement_name(i + 1), labels, std::move(kraus))));
        subsets.push_back(random_subset(labels, rng));
    }
    return assemble(rho, std::move(ms), subsets);
}

/// Drops the outcome of E_i whose singleton marginal is largest.
TestEventAssignment shrink_event(const TestEventAssignment &a, size_t i, const ToleranceConfig &tol) {
    const Event &e = a.event(i);
    size_t best = 0;
    double best_pr = -1.0;
    for (size_t idx = 0; idx < e.outcomes().size(); ++idx) {
        const auto probe = a.with_event(i, Event::singleton(e.measurement(), e.outcomes()[idx]));
        const double pr = pr_test_marginal(probe, IndexSet{i}, tol);
        if (pr > best_pr) {
            best_pr = pr;
            best = idx;
        }
    }
    auto kept = e.outcomes();
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(best));
    return a.with_event(i, Event(e.measurement(), std::move(kept)));
}

}  // namespace

TestEventAssignment generate(const GeneratorSpec &spec) {
    spec.validate();
    std::mt19937_64 rng(derive_seed(spec.seed, static_cast<uint64_t>(spec.kind)));
    switch (spec.kind) {
        case GeneratorKind::PaperExamples:
            return make_paper_instance();
        case GeneratorKind::TensorProduct:
            return make_tensor_product(spec, rng);
        case GeneratorKind::SlidingWindow:
            return make_sliding_window(spec, rng);
        case GeneratorKind::RandomProjective:
            return make_random_projective(spec, rng);
        case GeneratorKind::RandomPOVM:
            return make_random_povm(spec, rng);
        case GeneratorKind::DependentChain:
            return make_dependent_chain(spec, rng);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator kind");
}

GeneratedLLL generate_assumption_satisfying(const GeneratorSpec &spec, const std::vector<double> &x,
                                            size_t max_attempts, const ToleranceConfig &tol) {
    TestEventAssignment a = generate(spec);
    size_t rejections = 0;
    while (true) {
        LLLInstance inst(a, x);
        const auto ok = check_assumption(inst, compute_profile(a, tol), tol);
        auto failing = std::find(ok.begin(), ok.end(), false);
        if (failing == ok.end()) {
            return {std::move(inst), rejections};
        }
        if (rejections >= max_attempts) {
            throw Error(ErrorKind::GaveUp, "no assumption-satisfying instance after " + std::to_string(rejections) +
                                               " rejections");
        }
        ++rejections;
        a = shrink_event(a, static_cast<size_t>(failing - ok.begin()) + 1, tol);
    }
}

TestEventAssignment generate_symmetric_satisfying(const GeneratorSpec &spec, size_t max_attempts,
                                                  const ToleranceConfig &tol) {
    TestEventAssignment a = generate(spec);
    for (size_t attempt = 0;; ++attempt) {
        size_t worst = 1;
        double p = -1.0;
        for (size_t i = 1; i <= a.size(); ++i) {
            const double pr = pr_test_marginal(a, IndexSet{i}, tol);
            if (pr > p) {
                p = pr;
                worst = i;
            }
        }
        const auto d = static_cast<double>(compute_profile(a, tol).d_min());
        if (p * std::numbers::e * (d + 1.0) < 1.0 - tol.prob) {
            return a;
        }
        if (attempt >= max_attempts) {
            throw Error(ErrorKind::GaveUp, "symmetric condition not reached");
        }
        a = shrink_event(a, worst, tol);
    }
}

}  // namespace qlll
