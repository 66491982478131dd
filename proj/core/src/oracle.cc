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
#include "qlll/oracle.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "qlll/errors.h"
#include "qlll/random.h"

namespace qlll {
namespace {

void check_cap(const Test &test, size_t horizon, size_t cap) {
    if (horizon > test.size()) {
        throw Error(ErrorKind::InvalidIndexSet, "horizon beyond test length");
    }
    double count = 1.0;
    for (size_t i = 1; i <= horizon; ++i) {
        count *= static_cast<double>(test.measurement(i)->size());
    }
    if (count > static_cast<double>(cap)) {
        throw Error(ErrorKind::EnumerationCapExceeded,
                    std::to_string(static_cast<unsigned long long>(count)) + " trajectories exceed cap " +
                        std::to_string(cap),
                    count);
    }
}

/// Depth-first walk over outcome sequences carrying the Kraus product
/// K = M_{m_k} ... M_{m_1}; allowed[i] restricts the outcomes at step i.
class TrajectoryWalker {
   public:
    TrajectoryWalker(const Test &test, size_t horizon, std::vector<std::vector<size_t>> allowed)
        : test_(test), horizon_(horizon), allowed_(std::move(allowed)) {
    }

    template <typename Visit>
    void walk(Visit &&visit) {
        const auto d = static_cast<Eigen::Index>(test_.dim());
        std::vector<size_t> path;
        recurse(Eigen::MatrixXcd::Identity(d, d), path, visit);
    }

   private:
    template <typename Visit>
    void recurse(const Eigen::MatrixXcd &product, std::vector<size_t> &path, Visit &visit) {
        const size_t step = path.size();
        if (step == horizon_) {
            const Eigen::MatrixXcd &rho = test_.rho().matrix().eigen();
            visit(path, (product * rho * product.adjoint()).trace().real());
            return;
        }
        const Measurement &m = *test_.measurement(step + 1);
        for (size_t outcome : allowed_[step]) {
            path.push_back(outcome);
            recurse(m.kraus()[outcome].eigen() * product, path, visit);
            path.pop_back();
        }
    }

    const Test &test_;
    size_t horizon_;
    std::vector<std::vector<size_t>> allowed_;
};

std::vector<size_t> all_outcomes(const Measurement &m) {
    std::vector<size_t> v(m.size());
    for (size_t k = 0; k < v.size(); ++k) {
        v[k] = k;
    }
    return v;
}

}  // namespace

std::vector<Trajectory> enumerate_trajectories(const Test &test, size_t horizon, size_t cap) {
    check_cap(test, horizon, cap);
    std::vector<std::vector<size_t>> allowed;
    for (size_t i = 1; i <= horizon; ++i) {
        allowed.push_back(all_outcomes(*test.measurement(i)));
    }
    std::vector<Trajectory> out;
    TrajectoryWalker(test, horizon, std::move(allowed)).walk([&](const std::vector<size_t> &path, double p) {
        Trajectory t;
        for (size_t step = 0; step < path.size(); ++step) {
            t.outcomes.push_back(test.measurement(step + 1)->labels()[path[step]]);
        }
        t.probability = p;
        out.push_back(std::move(t));
    });
    return out;
}

double enumerate_probability(const TestEventAssignment &a, const IndexSet &k, size_t cap) {
    const Test &test = a.test();
    const size_t horizon = k.max();
    check_cap(test, horizon, cap);
    std::vector<std::vector<size_t>> allowed;
    for (size_t i = 1; i <= horizon; ++i) {
        const Measurement &m = *test.measurement(i);
        if (!k.contains(i)) {
            allowed.push_back(all_outcomes(m));
            continue;
        }
        const Event &e = a.event(i);
        std::vector<size_t> in;
        for (size_t idx = 0; idx < m.size(); ++idx) {
            if (e.contains(m.labels()[idx])) {
                in.push_back(idx);
            }
        }
        allowed.push_back(std::move(in));
    }
    double total = 0.0;
    TrajectoryWalker(test, horizon, std::move(allowed)).walk([&](const std::vector<size_t> &, double p) {
        total += p;
    });
    return total;
}

namespace {

constexpr uint64_t kChunkSize = 4096;
constexpr double kStepDriftLimit = 1e-6;

struct StepData {
    std::vector<Eigen::MatrixXcd> kraus;
    std::vector<Eigen::MatrixXcd> effects_transposed;  // (M^dagger M)^T
    std::vector<bool> accept;
};

uint64_t run_chunk(const Eigen::MatrixXcd &rho0, const std::vector<StepData> &steps, uint64_t count,
                   uint64_t chunk_seed) {
    std::mt19937_64 rng(chunk_seed);
    uint64_t hits = 0;
    std::vector<double> probs;
    for (uint64_t s = 0; s < count; ++s) {
        Eigen::MatrixXcd rho = rho0;
        bool hit = true;
        for (const StepData &step : steps) {
            probs.assign(step.kraus.size(), 0.0);
            double total = 0.0;
            for (size_t m = 0; m < step.kraus.size(); ++m) {
                // tr(E rho) = sum_ab E_ab rho_ba
                const double p = step.effects_transposed[m].cwiseProduct(rho).sum().real();
                probs[m] = std::max(p, 0.0);
                total += probs[m];
            }
            if (std::abs(total - 1.0) > kStepDriftLimit) {
                throw Error(ErrorKind::InternalConsistency,
                            "outcome probabilities sum to " + std::to_string(total) + " during sampling", total);
            }
            const double u = uniform01(rng) * total;
            size_t chosen = probs.size() - 1;
            double acc = 0.0;
            for (size_t m = 0; m < probs.size(); ++m) {
                acc += probs[m];
                if (u < acc) {
                    chosen = m;
                    break;
                }
            }
            while (probs[chosen] == 0.0 && chosen > 0) {
                --chosen;
            }
            if (!step.accept[chosen]) {
                hit = false;
                break;
            }
            const Eigen::MatrixXcd &k = step.kraus[chosen];
            rho = (k * rho * k.adjoint()) / probs[chosen];
        }
        hits += hit ? 1 : 0;
    }
    return hits;
}

}  // namespace

SampleEstimate sample_trajectories(const TestEventAssignment &a, const IndexSet &k, uint64_t n_samples,
                                   uint64_t seed, unsigned workers) {
    if (n_samples < 1) {
        throw Error(ErrorKind::InvalidArgument, "n_samples must be at least 1");
    }
    const Test &test = a.test();
    if (k.max() > test.size()) {
        throw Error(ErrorKind::InvalidIndexSet, "index set beyond test length");
    }
    std::vector<StepData> steps;
    for (size_t i = 1; i <= k.max(); ++i) {
        const Measurement &m = *test.measurement(i);
        StepData sd;
        for (size_t idx = 0; idx < m.size(); ++idx) {
            const Eigen::MatrixXcd &op = m.kraus()[idx].eigen();
            sd.kraus.push_back(op);
            sd.effects_transposed.push_back((op.adjoint() * op).transpose());
            sd.accept.push_back(!k.contains(i) || a.event(i).contains(m.labels()[idx]));
        }
        steps.push_back(std::move(sd));
    }

    const uint64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
    std::vector<uint64_t> chunk_hits(n_chunks, 0);
    const Eigen::MatrixXcd rho0 = test.rho().matrix().eigen();
    auto do_chunk = [&](uint64_t c) {
        const uint64_t count = std::min(kChunkSize, n_samples - c * kChunkSize);
        chunk_hits[c] = run_chunk(rho0, steps, count, derive_seed(seed, c));
    };

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, n_chunks));
    if (workers <= 1) {
        for (uint64_t c = 0; c < n_chunks; ++c) {
            do_chunk(c);
        }
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (uint64_t c = w; c < n_chunks; c += workers) {
                        do_chunk(c);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    SampleEstimate est;
    for (uint64_t h : chunk_hits) {
        est.hits += h;
    }
    est.n_samples = n_samples;
    est.estimate = static_cast<double>(est.hits) / static_cast<double>(n_samples);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(n_samples));
    est.seed = seed;
    est.rng = kSamplerRng;
    return est;
}

}  // namespace qlll
