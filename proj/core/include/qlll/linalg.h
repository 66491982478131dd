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
#ifndef QLLL_LINALG_H
#define QLLL_LINALG_H

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qlll/tolerance.h"

namespace qlll {

using Complex = std::complex<double>;

/// Dense square matrix of complex scalars with value semantics. Every
/// constructor rejects non-square shapes and non-finite entries, so a
/// ComplexMatrix in hand is always well formed. Operations return fresh
/// matrices; nothing mutates in place.
class ComplexMatrix {
   public:
    /// The 1x1 zero matrix.
    ComplexMatrix();
    explicit ComplexMatrix(Eigen::MatrixXcd data);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix zero(size_t dim);
    /// Rank-one outer product |v><v|.
    static ComplexMatrix projector(std::span<const Complex> ket);
    /// Outer product |u><v|.
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    size_t dim() const noexcept {
        return static_cast<size_t>(data_.rows());
    }
    Complex operator()(size_t row, size_t col) const {
        return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    const Eigen::MatrixXcd &eigen() const noexcept {
        return data_;
    }

    /// max_{ij} |a_ij - b_ij|; dimension mismatch throws.
    double max_abs_diff(const ComplexMatrix &other) const;
    double max_abs() const;

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
    friend ComplexMatrix operator*(double s, const ComplexMatrix &a);

    /// Exact entrywise equality.
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b);

   private:
    Eigen::MatrixXcd data_;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// M rho M^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix &m, const ComplexMatrix &rho);

/// max |a - a^dagger| entrywise.
double hermiticity_residual(const ComplexMatrix &a);
/// Eigenvalues (ascending) of the Hermitian part (A + A^dagger)/2.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);
/// True iff a is Hermitian, idempotent, within tol.
bool is_orthogonal_projector(const ComplexMatrix &a, double tol);

enum class DensityKind { Full, Partial };

/// Positive semidefinite operator with trace 1 (Full) or at most 1 (Partial).
/// Only obtainable through validate_density.
class DensityOperator {
   public:
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    DensityKind kind() const noexcept {
        return kind_;
    }
    size_t dim() const noexcept {
        return matrix_.dim();
    }
    double trace() const;

   private:
    friend DensityOperator validate_density(const ComplexMatrix &m, DensityKind kind, const ToleranceConfig &tol);
    DensityOperator(ComplexMatrix m, DensityKind kind) : matrix_(std::move(m)), kind_(kind) {
    }

    ComplexMatrix matrix_;
    DensityKind kind_;
};

/// Throws NotHermitian, NotPositive or BadTrace with the measured residual.
DensityOperator validate_density(const ComplexMatrix &m, DensityKind kind, const ToleranceConfig &tol = {});

}  // namespace qlll

#endif
