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
#include "qlll/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlll/errors.h"

namespace qlll {
namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                                                      std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix() : data_(Eigen::MatrixXcd::Zero(1, 1)) {
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
    if (data_.rows() != data_.cols() || data_.rows() == 0) {
        throw Error(ErrorKind::NotSquare, "matrix is " + std::to_string(data_.rows()) + "x" +
                                              std::to_string(data_.cols()));
    }
    if (!data_.allFinite()) {
        throw Error(ErrorKind::NonFinite, "matrix has NaN or infinite entries");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(n, n);
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw Error(ErrorKind::NotSquare, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                                  " entries, expected " + std::to_string(n));
        }
        Eigen::Index c = 0;
        for (const auto &v : row) {
            m(r, c++) = v;
        }
        ++r;
    }
    *this = ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
    return outer(ket, ket);
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "outer product of vectors of different length");
    }
    const auto n = static_cast<Eigen::Index>(u.size());
    Eigen::Map<const Eigen::VectorXcd> uu(u.data(), n);
    Eigen::Map<const Eigen::VectorXcd> vv(v.data(), n);
    return ComplexMatrix(uu * vv.adjoint());
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "max_abs_diff");
    return (data_ - other.data_).cwiseAbs().maxCoeff();
}

double ComplexMatrix::max_abs() const {
    return data_.cwiseAbs().maxCoeff();
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "add");
    return ComplexMatrix(a.data_ + b.data_);
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "subtract");
    return ComplexMatrix(a.data_ - b.data_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    return ComplexMatrix(s * a.data_);
}

ComplexMatrix operator*(double s, const ComplexMatrix &a) {
    return ComplexMatrix(s * a.data_);
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.dim() == b.dim() && a.data_ == b.data_;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    return ComplexMatrix(a.eigen() * b.eigen());
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    return ComplexMatrix(a.eigen().adjoint());
}

Complex trace(const ComplexMatrix &a) {
    return a.eigen().trace();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index na = a.eigen().rows();
    const Eigen::Index nb = b.eigen().rows();
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix conjugate_by(const ComplexMatrix &m, const ComplexMatrix &rho) {
    require_same_dim(m, rho, "conjugate_by");
    return ComplexMatrix(m.eigen() * rho.eigen() * m.eigen().adjoint());
}

double hermiticity_residual(const ComplexMatrix &a) {
    return (a.eigen() - a.eigen().adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    Eigen::MatrixXcd h = 0.5 * (a.eigen() + a.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

bool is_orthogonal_projector(const ComplexMatrix &a, double tol) {
    if (hermiticity_residual(a) > tol) {
        return false;
    }
    return (a.eigen() * a.eigen() - a.eigen()).cwiseAbs().maxCoeff() <= tol;
}

double DensityOperator::trace() const {
    return qlll::trace(matrix_).real();
}

DensityOperator validate_density(const ComplexMatrix &m, DensityKind kind, const ToleranceConfig &tol) {
    if (m.dim() > dimension_cap()) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(m.dim()) + " exceeds cap " + std::to_string(dimension_cap()));
    }
    const double herm = hermiticity_residual(m);
    if (herm > tol.herm) {
        throw Error(ErrorKind::NotHermitian, "||rho - rho^dagger||_max = " + std::to_string(herm), herm);
    }
    const Complex tr = trace(m);
    if (std::abs(tr.imag()) > tol.herm) {
        throw Error(ErrorKind::NotHermitian, "trace has imaginary part " + std::to_string(tr.imag()), tr.imag());
    }
    const double min_ev = hermitian_eigenvalues(m).front();
    if (min_ev < -tol.psd) {
        throw Error(ErrorKind::NotPositive, "minimum eigenvalue " + std::to_string(min_ev), min_ev);
    }
    const double t = tr.real();
    if (kind == DensityKind::Full && std::abs(t - 1.0) > tol.trace) {
        throw Error(ErrorKind::BadTrace, "trace " + std::to_string(t) + " is not 1", t - 1.0);
    }
    if (kind == DensityKind::Partial && t > 1.0 + tol.trace) {
        throw Error(ErrorKind::BadTrace, "trace " + std::to_string(t) + " exceeds 1", t - 1.0);
    }
    return DensityOperator(m, kind);
}

}  // namespace qlll
