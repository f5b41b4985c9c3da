// Copyright 2026 The QECI Authors
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

#include "qeci/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qeci/error.h"

namespace qeci {

namespace {

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw QeciError(ErrorKind::DimensionMismatch, message);
    }
}

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows * cols, "entry count does not match " + shape(*this));
    if (!all_finite()) {
        throw QeciError(ErrorKind::InvalidParameter, "matrix contains non-finite entries");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        require(row.size() == cols_, "ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite()) {
        throw QeciError(ErrorKind::InvalidParameter, "matrix contains non-finite entries");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix result(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        result(k, k) = values[k];
    }
    if (!result.all_finite()) {
        throw QeciError(ErrorKind::InvalidParameter, "matrix contains non-finite entries");
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::column(std::initializer_list<Complex> values) {
    return column(std::span<const Complex>(values.begin(), values.size()));
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        total += (*this)(k, k);
    }
    return total;
}

double ComplexMatrix::frobenius_norm() const {
    double total = 0;
    for (const auto &z : data_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

ComplexMatrix ComplexMatrix::col(size_t c) const {
    ComplexMatrix result(rows_, 1);
    for (size_t r = 0; r < rows_; r++) {
        result(r, 0) = (*this)(r, c);
    }
    return result;
}

std::vector<Complex> ComplexMatrix::col_values(size_t c) const {
    std::vector<Complex> result(rows_);
    for (size_t r = 0; r < rows_; r++) {
        result[r] = (*this)(r, c);
    }
    return result;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
    std::vector<double> result(std::min(rows_, cols_));
    for (size_t k = 0; k < result.size(); k++) {
        result[k] = (*this)(k, k).real();
    }
    return result;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "cannot add " + shape(*this) + " and " + shape(other));
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require(
        rows_ == other.rows_ && cols_ == other.cols_, "cannot subtract " + shape(other) + " from " + shape(*this));
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < rows_; r++) {
        out << (r ? "; " : "");
        for (size_t c = 0; c < cols_; c++) {
            const Complex &z = (*this)(r, c);
            out << (c ? " " : "");
            if (z.imag() == 0) {
                out << z.real();
            } else {
                out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
    }
    out << "]";
    return out.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.cols() == b.rows(), "cannot multiply " + shape(a) + " by " + shape(b));
    ComplexMatrix result(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                result(i, j) += aik * b(k, j);
            }
        }
    }
    return result;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix result(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            result(j, i) = std::conj(a(i, j));
        }
    }
    return result;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    result(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return result;
}

ComplexMatrix outer(const ComplexMatrix &ket) {
    require(ket.cols() == 1, "outer() expects a column vector, got " + shape(ket));
    return matmul(ket, dagger(ket));
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).frobenius_norm();
}

double hermiticity_residual(const ComplexMatrix &a) {
    require(a.is_square(), "hermiticity of non-square " + shape(a));
    return frobenius_distance(a, dagger(a));
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    size_t n = eigenvalues.size();
    ComplexMatrix result(eigenvectors.rows(), eigenvectors.rows());
    for (size_t k = 0; k < n; k++) {
        for (size_t i = 0; i < result.rows(); i++) {
            Complex vi = eigenvalues[k] * eigenvectors(i, k);
            for (size_t j = 0; j < result.cols(); j++) {
                result(i, j) += vi * std::conj(eigenvectors(j, k));
            }
        }
    }
    return result;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double total = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (i != j) {
                total += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(total);
}

/// Zeroes a(p, q) with the unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
/// acting on coordinates p < q: a <- G^dagger a G, v <- v G.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, size_t p, size_t q) {
    Complex apq = a(p, q);
    double r = std::abs(apq);
    if (r == 0) {
        return;
    }
    Complex phase = apq / r;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double tau = (aqq - app) / (2 * r);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
    double c = 1 / std::sqrt(1 + t * t);
    double s = t * c;

    Complex g_pp = c;
    Complex g_pq = s;
    Complex g_qp = -s * std::conj(phase);
    Complex g_qq = c * std::conj(phase);

    size_t n = a.rows();
    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * g_pp + akq * g_qp;
        a(k, q) = akp * g_pq + akq * g_qq;
    }
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
        a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * g_pp + vkq * g_qp;
        v(k, q) = vkp * g_pq + vkq * g_qq;
    }
}

void fix_gauge(ComplexMatrix &v, size_t col) {
    double largest = 0;
    for (size_t r = 0; r < v.rows(); r++) {
        largest = std::max(largest, std::abs(v(r, col)));
    }
    // Lowest index among (numerically) tied magnitudes keeps the choice stable.
    for (size_t r = 0; r < v.rows(); r++) {
        double mag = std::abs(v(r, col));
        if (mag >= largest - 1e-12) {
            Complex unphase = std::conj(v(r, col)) / mag;
            for (size_t k = 0; k < v.rows(); k++) {
                v(k, col) *= unphase;
            }
            v(r, col) = mag;
            return;
        }
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &a, double eig_tol, int max_sweeps) {
    if (!a.is_square()) {
        throw QeciError(ErrorKind::DimensionMismatch, "eigendecomposition of non-square " + shape(a));
    }
    size_t n = a.rows();
    double norm = a.frobenius_norm();
    double herm = hermiticity_residual(a);
    if (herm > kHermTol * norm) {
        throw QeciError(
            ErrorKind::NotHermitian, "||A - A^dagger||_F = " + std::to_string(herm) + " exceeds tolerance");
    }

    ComplexMatrix work = 0.5 * (a + dagger(a));
    ComplexMatrix vectors = ComplexMatrix::identity(n);
    double threshold = eig_tol * norm;

    int sweep = 0;
    while (off_diagonal_norm(work) > threshold) {
        if (sweep++ >= max_sweeps) {
            throw QeciError(
                ErrorKind::NoConvergence,
                "Jacobi did not converge within " + std::to_string(max_sweeps) + " sweeps");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                jacobi_rotate(work, vectors, p, q);
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return work(x, x).real() > work(y, y).real();
    });

    EigenDecomposition result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (size_t k = 0; k < n; k++) {
        result.eigenvalues[k] = work(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.eigenvectors(r, k) = vectors(r, order[k]);
        }
        fix_gauge(result.eigenvectors, k);
    }
    return result;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, size_t dim_a, size_t dim_b, Side traced_side) {
    require(
        rho.rows() == dim_a * dim_b && rho.cols() == dim_a * dim_b,
        "partial trace of " + shape(rho) + " with dims " + std::to_string(dim_a) + "," + std::to_string(dim_b));
    if (traced_side == Side::B) {
        ComplexMatrix out(dim_a, dim_a);
        for (size_t i = 0; i < dim_a; i++) {
            for (size_t j = 0; j < dim_a; j++) {
                Complex total = 0;
                for (size_t k = 0; k < dim_b; k++) {
                    total += rho(i * dim_b + k, j * dim_b + k);
                }
                out(i, j) = total;
            }
        }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (size_t k = 0; k < dim_b; k++) {
        for (size_t l = 0; l < dim_b; l++) {
            Complex total = 0;
            for (size_t i = 0; i < dim_a; i++) {
                total += rho(i * dim_b + k, i * dim_b + l);
            }
            out(k, l) = total;
        }
    }
    return out;
}

ComplexMatrix swap_subsystems(const ComplexMatrix &rho_ab, size_t dim_a, size_t dim_b) {
    require(
        rho_ab.rows() == dim_a * dim_b && rho_ab.cols() == dim_a * dim_b,
        "swap of " + shape(rho_ab) + " with dims " + std::to_string(dim_a) + "," + std::to_string(dim_b));
    ComplexMatrix out(dim_a * dim_b, dim_a * dim_b);
    for (size_t i = 0; i < dim_a; i++) {
        for (size_t k = 0; k < dim_b; k++) {
            for (size_t j = 0; j < dim_a; j++) {
                for (size_t l = 0; l < dim_b; l++) {
                    out(k * dim_a + i, l * dim_a + j) = rho_ab(i * dim_b + k, j * dim_b + l);
                }
            }
        }
    }
    return out;
}

}  // namespace qeci
