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
#include "qlll/random.h"

#include <cmath>

namespace qlll {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_gaussian(std::mt19937_64 &rng) {
    // Box-Muller on our own uniforms keeps draws identical across standard
    // library implementations.
    double u1 = uniform01(rng);
    while (u1 <= 0.0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

ComplexMatrix ginibre(size_t dim, std::mt19937_64 &rng) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            g(r, c) = complex_gaussian(rng);
        }
    }
    return ComplexMatrix(std::move(g));
}

ComplexMatrix random_unitary(size_t dim, std::mt19937_64 &rng) {
    const Eigen::MatrixXcd g = ginibre(dim, rng).eigen();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const Complex d = r(k, k);
        const double a = std::abs(d);
        if (a > 0.0) {
            q.col(k) *= d / a;
        }
    }
    return ComplexMatrix(std::move(q));
}

ComplexMatrix random_density_matrix(size_t dim, std::mt19937_64 &rng) {
    const Eigen::MatrixXcd g = ginibre(dim, rng).eigen();
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermitian symmetry so validation never sees rounding asymmetry.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return ComplexMatrix(std::move(rho));
}

}  // namespace qlll
