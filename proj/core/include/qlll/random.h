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
#ifndef QLLL_RANDOM_H
#define QLLL_RANDOM_H

#include <cstdint>
#include <random>

#include "qlll/linalg.h"

namespace qlll {

uint64_t splitmix64(uint64_t x);
/// Seed for the stream-th substream of seed.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64 &rng);
/// Standard complex Gaussian (real and imaginary parts N(0, 1/2)).
Complex complex_gaussian(std::mt19937_64 &rng);

ComplexMatrix ginibre(size_t dim, std::mt19937_64 &rng);
/// Orthonormalized Ginibre matrix (QR with phase-fixed diagonal).
ComplexMatrix random_unitary(size_t dim, std::mt19937_64 &rng);
/// G G^dagger / tr(G G^dagger).
ComplexMatrix random_density_matrix(size_t dim, std::mt19937_64 &rng);

}  // namespace qlll

#endif
